//! Fourier series: coefficients by quadrature, partial-sum synthesis, and
//! conversion between the real (cosine/sine) and complex exponential forms.
//!
//! Normalisation: a0 = (1/P) * integral, a_n and b_n = (2/P) * integral.
//! Synthesis applies no smoothing, so partial sums show the Gibbs overshoot
//! and converge to the midpoint at jumps.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{FourierError, Result};
use crate::exec::Execution;
use crate::transforms::{cis_cycles, integrate, HalfKind, QuadratureSpec};

/// Panels per period per harmonic used by [`series_spec`].
pub const PANELS_PER_HARMONIC: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoefficients {
    pub a0: f64,
    /// a_1..a_K
    pub cosine: Vec<f64>,
    /// b_1..b_K
    pub sine: Vec<f64>,
    pub period: f64,
}

impl SeriesCoefficients {
    pub fn new(a0: f64, cosine: Vec<f64>, sine: Vec<f64>, period: f64) -> Result<Self> {
        if !(period > 0.0 && period.is_finite()) {
            return Err(FourierError::param(format!(
                "period must be positive, got {period}"
            )));
        }
        if cosine.len() != sine.len() {
            return Err(FourierError::LengthMismatch {
                left: cosine.len(),
                right: sine.len(),
            });
        }
        Ok(SeriesCoefficients {
            a0,
            cosine,
            sine,
            period,
        })
    }

    pub fn zeros(harmonics: usize, period: f64) -> Result<Self> {
        Self::new(0.0, vec![0.0; harmonics], vec![0.0; harmonics], period)
    }

    pub fn harmonics(&self) -> usize {
        self.cosine.len()
    }

    pub fn eval(&self, t: f64) -> f64 {
        series_synthesize(self, t)
    }
}

/// Complex exponential form: x(t) = sum_m c_m exp(i2pi m t / P), m in -K..=K.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSeriesCoefficients {
    terms: Vec<Complex64>,
    pub period: f64,
}

impl ComplexSeriesCoefficients {
    /// `terms` lists c_{-K}..c_{K}; its length must be odd.
    pub fn new(terms: Vec<Complex64>, period: f64) -> Result<Self> {
        if terms.len().is_multiple_of(2) {
            return Err(FourierError::param("complex series needs 2K+1 terms"));
        }
        if !(period > 0.0 && period.is_finite()) {
            return Err(FourierError::param(format!(
                "period must be positive, got {period}"
            )));
        }
        Ok(ComplexSeriesCoefficients { terms, period })
    }

    pub fn harmonics(&self) -> usize {
        self.terms.len() / 2
    }

    /// c_m, or zero outside -K..=K.
    pub fn term(&self, m: i64) -> Complex64 {
        let k = self.harmonics() as i64;
        if m.abs() > k {
            return Complex64::new(0.0, 0.0);
        }
        self.terms[(m + k) as usize]
    }

    pub fn terms(&self) -> &[Complex64] {
        &self.terms
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        let k = self.harmonics() as i64;
        (-k..=k)
            .map(|m| self.term(m) * cis_cycles(-(m as f64) * t / self.period))
            .sum()
    }

    /// Largest |c_{-m} - conj(c_m)|; zero for series of real signals.
    pub fn conjugate_asymmetry(&self) -> f64 {
        let k = self.harmonics() as i64;
        (1..=k)
            .map(|m| (self.term(-m) - self.term(m).conj()).norm())
            .fold(0.0, f64::max)
    }
}

/// Quadrature defaults for a K-harmonic analysis over one period starting
/// at zero: max(64 K, 16) initial panels, default tolerance.
pub fn series_spec(period: f64, harmonics: usize) -> QuadratureSpec {
    QuadratureSpec::new(0.0, period).with_panels((PANELS_PER_HARMONIC * harmonics).max(16))
}

/// One analysed harmonic with its quadrature status.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicReport {
    pub n: usize,
    pub a: f64,
    pub b: f64,
    pub error_bound: f64,
    pub converged: bool,
}

/// Per-harmonic analysis that never fails on tolerance: each harmonic reports
/// its best estimate and a convergence flag.
///
/// Integrates over [spec.lower, spec.lower + period]; `spec.upper` is ignored.
pub fn series_report<F>(
    map: F,
    period: f64,
    harmonics: usize,
    spec: &QuadratureSpec,
    exec: Execution,
) -> Result<Vec<HarmonicReport>>
where
    F: Fn(f64) -> f64 + Sync,
{
    if !(period > 0.0 && period.is_finite()) {
        return Err(FourierError::param(format!(
            "period must be positive, got {period}"
        )));
    }
    let spec = spec.with_bounds(spec.lower, spec.lower + period);
    spec.validate()?;
    exec.try_map_range(harmonics + 1, |n| {
        let est = integrate(|t| map(t) * cis_cycles(n as f64 * t / period), &spec);
        let (value, bound, converged) = match est {
            Ok(e) => (e.value, e.error_bound, true),
            Err(FourierError::ToleranceNotReached {
                estimate,
                error_bound,
            }) => (estimate, error_bound, false),
            Err(e) => return Err(e),
        };
        let scale = if n == 0 { 1.0 / period } else { 2.0 / period };
        Ok(HarmonicReport {
            n,
            a: scale * value.re,
            b: -scale * value.im,
            error_bound: scale * bound,
            converged,
        })
    })
}

fn assemble(reports: &[HarmonicReport], period: f64) -> Result<SeriesCoefficients> {
    if let Some(bad) = reports.iter().find(|r| !r.converged) {
        return Err(FourierError::ToleranceNotReached {
            estimate: Complex64::new(bad.a, bad.b),
            error_bound: bad.error_bound,
        });
    }
    SeriesCoefficients::new(
        reports[0].a,
        reports[1..].iter().map(|r| r.a).collect(),
        reports[1..].iter().map(|r| r.b).collect(),
        period,
    )
}

/// Coefficients of the full series of a period-`period` map.
pub fn series_coefficients<F>(
    map: F,
    period: f64,
    harmonics: usize,
    spec: &QuadratureSpec,
) -> Result<SeriesCoefficients>
where
    F: Fn(f64) -> f64 + Sync,
{
    series_coefficients_with(map, period, harmonics, spec, Execution::default())
}

pub fn series_coefficients_with<F>(
    map: F,
    period: f64,
    harmonics: usize,
    spec: &QuadratureSpec,
    exec: Execution,
) -> Result<SeriesCoefficients>
where
    F: Fn(f64) -> f64 + Sync,
{
    let reports = series_report(map, period, harmonics, spec, exec)?;
    assemble(&reports, period)
}

/// Coefficients of the even (cosine) or odd (sine) extension of a map given
/// on [0, half_period]. The resulting period is 2 * half_period.
pub fn half_series_coefficients<F>(
    map: F,
    half_period: f64,
    kind: HalfKind,
    harmonics: usize,
    spec: &QuadratureSpec,
) -> Result<SeriesCoefficients>
where
    F: Fn(f64) -> f64 + Sync,
{
    if !(half_period > 0.0 && half_period.is_finite()) {
        return Err(FourierError::param(format!(
            "half period must be positive, got {half_period}"
        )));
    }
    let r = half_period;
    let spec = spec.with_bounds(0.0, r);
    let reports = Execution::default().try_map_range(harmonics + 1, |n| {
        let est = integrate(|x| map(x) * cis_cycles(n as f64 * x / (2.0 * r)), &spec)?;
        let scale = if n == 0 { 1.0 / r } else { 2.0 / r };
        Ok::<_, FourierError>(match kind {
            HalfKind::Cosine => scale * est.value.re,
            HalfKind::Sine => -scale * est.value.im,
        })
    })?;
    let rest = reports[1..].to_vec();
    match kind {
        HalfKind::Cosine => {
            SeriesCoefficients::new(reports[0], rest, vec![0.0; harmonics], 2.0 * r)
        }
        HalfKind::Sine => SeriesCoefficients::new(0.0, vec![0.0; harmonics], rest, 2.0 * r),
    }
}

/// Partial sum a0 + sum_n [a_n cos(2pi n t/P) + b_n sin(2pi n t/P)].
pub fn series_synthesize(c: &SeriesCoefficients, t: f64) -> f64 {
    let mut acc = c.a0;
    for (i, (&a, &b)) in c.cosine.iter().zip(&c.sine).enumerate() {
        let cycles = ((i + 1) as f64 * t / c.period).rem_euclid(1.0);
        let (s, co) = (2.0 * PI * cycles).sin_cos();
        acc += a * co + b * s;
    }
    acc
}

/// c_0 = a0, c_m = (a_m - i b_m)/2, c_{-m} = (a_m + i b_m)/2.
pub fn to_complex(c: &SeriesCoefficients) -> ComplexSeriesCoefficients {
    let k = c.harmonics();
    let mut terms = vec![Complex64::new(0.0, 0.0); 2 * k + 1];
    terms[k] = Complex64::new(c.a0, 0.0);
    for m in 1..=k {
        let (a, b) = (c.cosine[m - 1], c.sine[m - 1]);
        terms[k + m] = Complex64::new(0.5 * a, -0.5 * b);
        terms[k - m] = Complex64::new(0.5 * a, 0.5 * b);
    }
    ComplexSeriesCoefficients {
        terms,
        period: c.period,
    }
}

/// Inverse of [`to_complex`]. Any imaginary part in c_0 and any conjugate
/// asymmetry are dropped (they belong to the imaginary part of the signal).
pub fn from_complex(c: &ComplexSeriesCoefficients) -> SeriesCoefficients {
    let k = c.harmonics() as i64;
    let mut cosine = Vec::with_capacity(k as usize);
    let mut sine = Vec::with_capacity(k as usize);
    for m in 1..=k {
        let (p, q) = (c.term(m), c.term(-m));
        cosine.push(p.re + q.re);
        sine.push(q.im - p.im);
    }
    SeriesCoefficients {
        a0: c.term(0).re,
        cosine,
        sine,
        period: c.period,
    }
}
