//! Adaptive composite Simpson quadrature with interval halving.
//!
//! The interval starts as `initial_panels` equal panels. Each panel carries
//! two Simpson estimates (whole and halved); their difference is the panel's
//! error bound. Refinement proceeds in rounds: every panel whose bound
//! exceeds its width-proportional share of the tolerance is halved, until the
//! summed bound drops below `abs_tolerance` or the subdivision budget is spent.
//!
//! Splitting whole rounds at a time, rather than one worst panel at a time,
//! keeps mirror-image panels refined identically. Integrands that are odd or
//! even about the interval midpoint then cancel to round-off, which the
//! Fourier coefficient code depends on.
//!
//! The bound |S2 - S1| is used unscaled. For panels straddling a jump it is
//! close to the true error; for smooth panels it overestimates.

use num_complex::Complex64;

use crate::error::{FourierError, Result};

pub const DEFAULT_QUAD_TOLERANCE: f64 = 1e-6;
pub const DEFAULT_MAX_SUBDIVISIONS: usize = 200_000;
pub const DEFAULT_INITIAL_PANELS: usize = 16;

/// Integration interval and refinement controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub lower: f64,
    pub upper: f64,
    /// Total number of panel halvings allowed.
    pub max_subdivisions: usize,
    pub abs_tolerance: f64,
    /// Regularisation constant k; integrands are weighted by exp(-k |t|).
    pub damping: f64,
    pub initial_panels: usize,
}

impl QuadratureSpec {
    pub fn new(lower: f64, upper: f64) -> Self {
        QuadratureSpec {
            lower,
            upper,
            max_subdivisions: DEFAULT_MAX_SUBDIVISIONS,
            abs_tolerance: DEFAULT_QUAD_TOLERANCE,
            damping: 0.0,
            initial_panels: DEFAULT_INITIAL_PANELS,
        }
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.abs_tolerance = tol;
        self
    }

    pub fn with_damping(mut self, k: f64) -> Self {
        self.damping = k;
        self
    }

    pub fn with_panels(mut self, panels: usize) -> Self {
        self.initial_panels = panels;
        self
    }

    pub fn with_max_subdivisions(mut self, n: usize) -> Self {
        self.max_subdivisions = n;
        self
    }

    pub fn with_bounds(mut self, lower: f64, upper: f64) -> Self {
        self.lower = lower;
        self.upper = upper;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.lower.is_finite() && self.upper.is_finite() && self.lower < self.upper) {
            return Err(FourierError::param(format!(
                "quadrature bounds must satisfy lower < upper, got [{}, {}]",
                self.lower, self.upper
            )));
        }
        if self.abs_tolerance.is_nan() || self.abs_tolerance <= 0.0 {
            return Err(FourierError::param("quadrature tolerance must be positive"));
        }
        if !(self.damping >= 0.0 && self.damping.is_finite()) {
            return Err(FourierError::param(
                "damping must be finite and non-negative",
            ));
        }
        if self.initial_panels == 0 {
            return Err(FourierError::param(
                "at least one initial panel is required",
            ));
        }
        Ok(())
    }
}

/// A converged integral and its error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadEstimate {
    pub value: Complex64,
    pub error_bound: f64,
    pub panels: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    fa: Complex64,
    f_lq: Complex64,
    fm: Complex64,
    f_rq: Complex64,
    fb: Complex64,
    whole: Complex64,
}

impl Panel {
    fn halves(&self) -> (Complex64, Complex64) {
        let h = self.b - self.a;
        let left = (self.fa + self.f_lq * 4.0 + self.fm) * (h / 12.0);
        let right = (self.fm + self.f_rq * 4.0 + self.fb) * (h / 12.0);
        (left, right)
    }

    fn refined(&self) -> Complex64 {
        let (l, r) = self.halves();
        l + r
    }

    fn error(&self) -> f64 {
        (self.refined() - self.whole).norm()
    }

    fn value(&self) -> Complex64 {
        let s2 = self.refined();
        s2 + (s2 - self.whole) / 15.0
    }
}

fn make_panel<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    fa: Complex64,
    fm: Complex64,
    fb: Complex64,
) -> Panel {
    let h = b - a;
    let f_lq = f(a + 0.25 * h);
    let f_rq = f(b - 0.25 * h);
    Panel {
        a,
        b,
        fa,
        f_lq,
        fm,
        f_rq,
        fb,
        whole: (fa + fm * 4.0 + fb) * (h / 6.0),
    }
}

/// Integrates `f` over `[spec.lower, spec.upper]` with the damping weight
/// exp(-spec.damping * |t|) applied.
///
/// When the budget runs out, the error carries the best estimate so far.
pub fn integrate<F>(f: F, spec: &QuadratureSpec) -> Result<QuadEstimate>
where
    F: Fn(f64) -> Complex64,
{
    spec.validate()?;
    let k = spec.damping;
    let g = |t: f64| {
        if k == 0.0 {
            f(t)
        } else {
            f(t) * (-k * t.abs()).exp()
        }
    };

    let span = spec.upper - spec.lower;
    let n0 = spec.initial_panels;
    let node = |i: usize| {
        // computed from the nearer end so symmetric intervals get mirrored nodes
        if 2 * i <= n0 {
            spec.lower + span * i as f64 / n0 as f64
        } else {
            spec.upper - span * (n0 - i) as f64 / n0 as f64
        }
    };
    let mut panels = Vec::with_capacity(n0);
    let mut f_left = g(node(0));
    for i in 0..n0 {
        let (a, b) = (node(i), node(i + 1));
        let fm = g(0.5 * (a + b));
        let fb = g(b);
        panels.push(make_panel(&g, a, b, f_left, fm, fb));
        f_left = fb;
    }

    let mut splits = 0usize;
    loop {
        let mut value = Complex64::new(0.0, 0.0);
        let mut bound = 0.0;
        for p in &panels {
            value += p.value();
            bound += p.error();
        }
        if !(value.re.is_finite() && value.im.is_finite() && bound.is_finite()) {
            return Err(FourierError::param("integrand produced a non-finite value"));
        }
        if bound <= spec.abs_tolerance {
            return Ok(QuadEstimate {
                value,
                error_bound: bound,
                panels: panels.len(),
            });
        }

        let share = spec.abs_tolerance / span;
        let mut wanted: Vec<bool> = panels
            .iter()
            .map(|p| p.error() > share * (p.b - p.a))
            .collect();
        if !wanted.iter().any(|&w| w) {
            // round-off only; split the worst panel
            let worst = (0..panels.len())
                .max_by(|&i, &j| panels[i].error().total_cmp(&panels[j].error()))
                .unwrap_or(0);
            wanted[worst] = true;
        }
        let count = wanted.iter().filter(|&&w| w).count();
        let too_narrow = panels
            .iter()
            .zip(&wanted)
            .any(|(p, &w)| w && (p.b - p.a) <= span * 1e-14);
        if splits + count > spec.max_subdivisions || too_narrow {
            return Err(FourierError::ToleranceNotReached {
                estimate: value,
                error_bound: bound,
            });
        }
        splits += count;

        let mut next = Vec::with_capacity(panels.len() + count);
        for (p, split) in panels.into_iter().zip(wanted) {
            if split {
                let m = 0.5 * (p.a + p.b);
                next.push(make_panel(&g, p.a, m, p.fa, p.f_lq, p.fm));
                next.push(make_panel(&g, m, p.b, p.fm, p.f_rq, p.fb));
            } else {
                next.push(p);
            }
        }
        panels = next;
    }
}

/// Real-valued convenience wrapper around [`integrate`].
pub fn integrate_real<F>(f: F, spec: &QuadratureSpec) -> Result<QuadEstimate>
where
    F: Fn(f64) -> f64,
{
    integrate(|t| Complex64::new(f(t), 0.0), spec)
}
