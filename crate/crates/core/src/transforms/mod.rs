//! The transform family: DFT/IDFT, the FFT fast path, DTFT evaluation,
//! quadrature-based continuous transforms and the cosine/sine
//! half-transforms.
//!
//! Forward transforms are unscaled; the 1/N factor lives on the inverse.
//! Bins are stored 0..N-1 with the upper half read as negative frequencies.

mod bins;
mod dft;
mod fft;
mod quad;

use std::f64::consts::PI;

use num_complex::Complex64;

pub use bins::{bin_to_frequency, frequency_to_bin};
pub use dft::{dft, dft_slice, idft, idft_slice};
pub use fft::{
    fft, fft_slice, fft_with_strategy, ifft, ifft_slice, ifft_with_strategy, FftPlan, FftStrategy,
};
pub use quad::{
    integrate, integrate_real, QuadEstimate, QuadratureSpec, DEFAULT_INITIAL_PANELS,
    DEFAULT_MAX_SUBDIVISIONS, DEFAULT_QUAD_TOLERANCE,
};

use crate::error::Result;
use crate::exec::Execution;
use crate::signal::Waveform;

/// exp(-i 2 pi cycles), with the cycle count reduced to [0, 1) first.
#[inline]
pub(crate) fn cis_cycles(cycles: f64) -> Complex64 {
    Complex64::from_polar(1.0, -2.0 * PI * cycles.rem_euclid(1.0))
}

/// Evaluates sum_n x(nT) exp(-i2pi f nT) over the record.
///
/// The phase reference is the first sample (n = 0), so at f = k/(NT) this
/// equals DFT bin k. The result is periodic in `f` with period 1/T.
pub fn dtft_eval(w: &Waveform, f: f64) -> Complex64 {
    let step = f * w.sample_interval;
    w.samples
        .iter()
        .enumerate()
        .map(|(n, &x)| x * cis_cycles(step * n as f64))
        .sum()
}

/// [`dtft_eval`] at many frequencies.
pub fn dtft_scan(w: &Waveform, freqs: &[f64], exec: Execution) -> Vec<Complex64> {
    exec.map_slice(freqs, |&f| dtft_eval(w, f))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Kernel exp(-i2pi f t).
    Forward,
    /// Kernel exp(+i2pi f t).
    Inverse,
}

/// Numerical continuous Fourier transform of `map` at frequency `f` (Hz):
/// the integral of map(t) exp(-/+ i2pi f t) exp(-k|t|) over the spec bounds.
pub fn quad_ft<F>(
    map: F,
    f: f64,
    spec: &QuadratureSpec,
    direction: Direction,
) -> Result<QuadEstimate>
where
    F: Fn(f64) -> Complex64,
{
    let sign = match direction {
        Direction::Forward => 1.0,
        Direction::Inverse => -1.0,
    };
    integrate(|t| map(t) * cis_cycles(sign * f * t), spec)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfKind {
    Cosine,
    Sine,
}

/// Half-line transform: the integral over [0, spec.upper] of map(x) cos(qx)
/// or map(x) sin(qx), with q in rad/s.
///
/// `spec.lower` is ignored; the half-line always starts at 0. Cosine expects
/// an even map and sine an odd one, which is not checked.
pub fn half_transform<F>(map: F, q: f64, kind: HalfKind, spec: &QuadratureSpec) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let spec = spec.with_bounds(0.0, spec.upper);
    let est = integrate(|x| map(x) * Complex64::from_polar(1.0, -q * x), &spec)?;
    Ok(match kind {
        HalfKind::Cosine => est.value.re,
        HalfKind::Sine => -est.value.im,
    })
}
