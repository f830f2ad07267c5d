//! Sampling, aliasing, rect windowing, truncated sinc reconstruction,
//! convolution and spectrum sampling.

use num_complex::Complex64;

use crate::error::{FourierError, Result};
use crate::exec::Execution;
use crate::kernels::sinc;
use crate::signal::{Domain, Impulse, ImpulseTrain, SampleKind, Waveform};
use crate::transforms::cis_cycles;

/// Samples `map` at t0 + nT for n in 0..count.
///
/// The result is real-tagged when every imaginary part is exactly zero.
pub fn sample<F>(map: F, interval: f64, count: usize, t0: f64) -> Result<Waveform>
where
    F: Fn(f64) -> Complex64,
{
    if !(interval > 0.0 && interval.is_finite()) {
        return Err(FourierError::NonPositiveInterval(interval));
    }
    if count == 0 {
        return Err(FourierError::EmptySamples);
    }
    let mut samples = Vec::with_capacity(count);
    for n in 0..count {
        let z = map(t0 + n as f64 * interval);
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(FourierError::NonFiniteSample { index: n });
        }
        samples.push(z);
    }
    let kind = if samples.iter().all(|z| z.im == 0.0) {
        SampleKind::Real
    } else {
        SampleKind::Complex
    };
    Waveform::new(samples, interval, t0, kind)
}

/// Folds `f` into the base band [-fs/2, fs/2). The Nyquist edge maps to -fs/2.
pub fn alias_frequency(f: f64, fs: f64) -> f64 {
    let half = 0.5 * fs;
    let mut r = f - fs * ((f + half) / fs).floor();
    if r >= half {
        r -= fs;
    } else if r < -half {
        r += fs;
    }
    r
}

/// Full linear convolution, length |x| + |y| - 1. Empty input gives an
/// empty result.
pub fn convolve_linear(x: &[Complex64], y: &[Complex64]) -> Vec<Complex64> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Complex64::new(0.0, 0.0); x.len() + y.len() - 1];
    for (i, &a) in x.iter().enumerate() {
        for (j, &b) in y.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// Circular convolution of two equal-length sequences.
pub fn convolve_circular(x: &[Complex64], y: &[Complex64]) -> Result<Vec<Complex64>> {
    if x.len() != y.len() {
        return Err(FourierError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let n = x.len();
    Ok((0..n)
        .map(|k| (0..n).map(|m| x[m] * y[(k + n - m) % n]).sum())
        .collect())
}

/// Multiplies the record by a rect of width `width` centred at `center`.
///
/// Samples on the window edge (to within 1e-9 of the sample interval) are
/// halved, matching [`crate::kernels::rect`].
pub fn window_rect(w: &Waveform, width: f64, center: f64) -> Result<Waveform> {
    if !(width > 0.0 && width.is_finite()) {
        return Err(FourierError::param(format!(
            "window width must be positive, got {width}"
        )));
    }
    let edge = 0.5 * width;
    let snap = 1e-9 * w.sample_interval;
    let samples = w
        .samples
        .iter()
        .enumerate()
        .map(|(n, &x)| {
            let d = (w.time_at(n) - center).abs();
            let gain = if (d - edge).abs() <= snap {
                0.5
            } else if d < edge {
                1.0
            } else {
                0.0
            };
            x * gain
        })
        .collect();
    Ok(w.with_samples(samples))
}

/// Truncated Whittaker-Shannon interpolation at time `t`.
///
/// Uses the `taps` nearest samples on each side of `t` with no taper, so
/// the truncation error (roughly 1/(pi taps) for an inter-sample point) is
/// part of the result. At a sample instant every other sinc term is exactly
/// zero and the sample itself is returned.
pub fn sinc_reconstruct(w: &Waveform, t: f64, taps: usize) -> Complex64 {
    let u = (t - w.start_time) / w.sample_interval;
    let base = u.floor();
    let n = w.len() as i64;
    let lo = (base as i64 - taps as i64 + 1).max(0);
    let hi = (base as i64 + taps as i64).min(n - 1);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut k = lo;
    while k <= hi {
        acc += w.samples[k as usize] * sinc(u - k as f64);
        k += 1;
    }
    acc
}

/// [`sinc_reconstruct`] at many times.
pub fn sinc_reconstruct_many(
    w: &Waveform,
    times: &[f64],
    taps: usize,
    exec: Execution,
) -> Vec<Complex64> {
    exec.map_slice(times, |&t| sinc_reconstruct(w, t, taps))
}

/// A line spectrum at multiples of a fundamental and the periodic waveform
/// it implies, x(t) = sum_m c_m exp(i2pi m F t).
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicSynthesis {
    pub lines: ImpulseTrain,
    pub fundamental: f64,
}

impl PeriodicSynthesis {
    pub fn period(&self) -> f64 {
        1.0 / self.fundamental
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        self.lines
            .impulses()
            .iter()
            .map(|imp| imp.weight * cis_cycles(-imp.location * t))
            .sum()
    }

    /// One period sampled at `count` evenly spaced points starting at t = 0.
    pub fn one_period(&self, count: usize) -> Result<Waveform> {
        let dt = self.period() / count.max(1) as f64;
        sample(|t| self.eval(t), dt, count, 0.0)
    }
}

/// Samples a continuous spectrum at m*F for m in -harmonics..=harmonics.
pub fn sample_spectrum<S>(
    spectrum: S,
    fundamental: f64,
    harmonics: usize,
) -> Result<PeriodicSynthesis>
where
    S: Fn(f64) -> Complex64,
{
    if !(fundamental > 0.0 && fundamental.is_finite()) {
        return Err(FourierError::param(format!(
            "fundamental must be positive, got {fundamental}"
        )));
    }
    let h = harmonics as i64;
    let impulses = (-h..=h)
        .map(|m| {
            let f = m as f64 * fundamental;
            Impulse {
                location: f,
                weight: spectrum(f),
            }
        })
        .collect();
    Ok(PeriodicSynthesis {
        lines: ImpulseTrain::new(impulses, Domain::Frequency)?,
        fundamental,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::{dft_slice, dtft_scan};
    use std::f64::consts::PI;

    fn cosine(f: f64) -> impl Fn(f64) -> Complex64 {
        move |t| Complex64::new((2.0 * PI * f * t).cos(), 0.0)
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn sample_examples() {
        let w = sample(cosine(1.0), 0.25, 4, 0.0).unwrap();
        let want = [1.0, 0.0, -1.0, 0.0];
        for (z, &v) in w.samples.iter().zip(&want) {
            assert!((z - v).norm() < 1e-15);
        }
        assert!(w.is_real());
        let dc = sample(|_| c(1.0), 0.1, 5, 0.0).unwrap();
        assert!(dc.samples.iter().all(|&z| z == c(1.0)));
        let aliased = sample(cosine(3.0), 0.25, 4, 0.0).unwrap();
        for (a, b) in aliased.samples.iter().zip(&w.samples) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn sample_rejects_non_finite() {
        let r = sample(|t| c(1.0 / t), 1.0, 3, 0.0);
        assert_eq!(r, Err(FourierError::NonFiniteSample { index: 0 }));
    }

    #[test]
    fn alias_examples() {
        assert_eq!(alias_frequency(1.5, 4.0), 1.5);
        assert_eq!(alias_frequency(3.0, 4.0), -1.0);
        assert_eq!(alias_frequency(2.0, 4.0), -2.0);
        assert_eq!(alias_frequency(-2.0, 4.0), -2.0);
        assert_eq!(alias_frequency(-6.5, 4.0), 1.5);
    }

    #[test]
    fn identity_kernel() {
        let (a, b, cc) = (c(2.0), Complex64::new(0.0, 1.0), c(-3.0));
        let z = convolve_linear(&[c(1.0), c(0.0), c(0.0)], &[a, b, cc]);
        assert_eq!(z, vec![a, b, cc, c(0.0), c(0.0)]);
    }

    #[test]
    fn circular_requires_equal_lengths() {
        assert_eq!(
            convolve_circular(&[c(1.0)], &[c(1.0), c(2.0)]),
            Err(FourierError::LengthMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn circular_convolution_theorem_n4() {
        let x = [c(1.0), Complex64::new(2.0, -1.0), c(0.5), c(-1.0)];
        let y = [Complex64::new(0.0, 1.0), c(3.0), c(-2.0), c(0.25)];
        let lhs = dft_slice(&convolve_circular(&x, &y).unwrap());
        let (fx, fy) = (dft_slice(&x), dft_slice(&y));
        for k in 0..4 {
            assert!((lhs[k] - fx[k] * fy[k]).norm() <= 1e-9 * lhs[k].norm().max(1.0));
        }
    }

    #[test]
    fn product_of_cosines() {
        let (a, b) = (5.0, 2.0);
        for n in 0..50 {
            let t = n as f64 * 0.037;
            let lhs = (a * t).cos() * (b * t).cos();
            let rhs = 0.5 * (((a - b) * t).cos() + ((a + b) * t).cos());
            assert!((lhs - rhs).abs() < 1e-14);
        }
    }

    #[test]
    fn wide_window_is_identity() {
        let w = sample(cosine(0.3), 0.5, 20, -3.0).unwrap();
        assert_eq!(window_rect(&w, 100.0, 0.0).unwrap(), w);
    }

    #[test]
    fn edge_samples_are_halved() {
        // samples at 0..=10, window [2, 8]: 5 interior samples + 2 on the edges
        let w = Waveform::from_real(&[1.0; 11], 1.0).unwrap();
        let out = window_rect(&w, 6.0, 5.0).unwrap();
        let total: f64 = out.samples.iter().map(|z| z.re).sum();
        assert_eq!(total, 6.0);
        assert_eq!(out.samples[2].re, 0.5);
        assert_eq!(out.samples[8].re, 0.5);
    }

    #[test]
    fn windowed_tone_lobe() {
        // 2 Hz tone sampled at 64 Hz for 16 s, cut to S = 4 s
        let fs = 64.0;
        let w = sample(cosine(2.0), 1.0 / fs, 1024, 0.0).unwrap();
        let s_width = 4.0;
        let cut = window_rect(&w, s_width, 8.0).unwrap();
        let freqs: Vec<f64> = (0..=2000).map(|i| 1.0 + i as f64 * 0.001).collect();
        let mags: Vec<f64> = dtft_scan(&cut, &freqs, Execution::default())
            .iter()
            .map(|z| z.norm())
            .collect();
        let peak = (0..mags.len())
            .max_by(|&i, &j| mags[i].total_cmp(&mags[j]))
            .unwrap();
        // the -2 Hz image leaks into the lobe; allow 2% of the lobe width
        assert!((freqs[peak] - 2.0).abs() <= 0.01, "peak {}", freqs[peak]);
        // first nulls either side of the peak
        let mut r = peak;
        while r + 1 < mags.len() && mags[r + 1] < mags[r] {
            r += 1;
        }
        let mut l = peak;
        while l > 0 && mags[l - 1] < mags[l] {
            l -= 1;
        }
        let lobe = freqs[r] - freqs[l];
        assert!(
            (lobe - 2.0 / s_width).abs() <= 0.05 * 2.0 / s_width,
            "lobe {lobe}"
        );
    }

    #[test]
    fn reconstruct_at_sample_instant_is_exact() {
        let xs: Vec<f64> = (0..40).map(|n| ((n * 13) % 7) as f64 - 3.0).collect();
        let w = Waveform::from_real(&xs, 0.25).unwrap();
        for n in [0usize, 5, 17, 39] {
            let t = n as f64 * 0.25;
            assert_eq!(sinc_reconstruct(&w, t, 8), c(xs[n]));
        }
    }

    #[test]
    fn reconstruct_dc_matches_partial_sum() {
        // all-ones record, t midway between the two central samples
        let n = 1000;
        let w = Waveform::from_real(&vec![1.0; n], 1.0).unwrap();
        let t = 499.5;
        let taps = 64;
        let got = sinc_reconstruct(&w, t, taps).re;
        // independent partial sum: sum over k = -taps+1..=taps of sinc(0.5 - k)
        let oracle: f64 = (-(taps as i64) + 1..=taps as i64)
            .map(|k| {
                let x = PI * (0.5 - k as f64);
                x.sin() / x
            })
            .sum();
        assert!((got - oracle).abs() < 1e-12);
        // truncation leaves about 1/(pi taps) of error, no taper is applied
        let err = (got - 1.0).abs();
        assert!(err < 1.0 / (PI * taps as f64), "{err}");
    }

    #[test]
    fn spectrum_sampling_examples() {
        let dc = sample_spectrum(|f| c(if f == 0.0 { 1.0 } else { 0.0 }), 1.0, 3).unwrap();
        for t in [0.0, 0.3, 7.1] {
            assert!((dc.eval(t) - 1.0).norm() < 1e-15);
        }
        let cos = sample_spectrum(|f| c(if f.abs() == 1.0 { 0.5 } else { 0.0 }), 1.0, 4).unwrap();
        assert_eq!(cos.period(), 1.0);
        for i in 0..40 {
            let t = i as f64 * 0.0731;
            assert!((cos.eval(t) - (2.0 * PI * t).cos()).norm() < 1e-12);
        }
    }

    #[test]
    fn synthesized_waveform_is_periodic() {
        let f0 = 2.5;
        let s = sample_spectrum(|f| Complex64::new((-f * f / 20.0).exp(), 0.1 * f), f0, 6).unwrap();
        for i in 0..100 {
            let t = -1.0 + i as f64 * 0.0213;
            assert!((s.eval(t + 1.0 / f0) - s.eval(t)).norm() <= 1e-12);
        }
        let w = s.one_period(16).unwrap();
        assert_eq!(w.len(), 16);
        assert!((w.sample_interval - 0.4 / 16.0).abs() < 1e-15);
    }
}
