use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{FourierError, Result};
use crate::signal::{Spectrum, Waveform};

/// exp(sign * i2pi j / n) for j in 0..n.
pub(crate) fn unit_roots(n: usize, sign: f64) -> Vec<Complex64> {
    (0..n)
        .map(|j| Complex64::from_polar(1.0, sign * 2.0 * PI * j as f64 / n as f64))
        .collect()
}

/// Direct O(N^2) summation, X(k) = sum_n x(n) exp(-i2pi kn/N).
///
/// The exponent index kn is reduced mod N before the table lookup, so the
/// phase never loses precision for large k*n.
pub fn dft_slice(x: &[Complex64]) -> Vec<Complex64> {
    direct_sum(x, -1.0)
}

/// Unscaled inverse sum followed by the 1/N factor.
pub fn idft_slice(bins: &[Complex64]) -> Vec<Complex64> {
    let n = bins.len() as f64;
    direct_sum(bins, 1.0).into_iter().map(|z| z / n).collect()
}

fn direct_sum(x: &[Complex64], sign: f64) -> Vec<Complex64> {
    let n = x.len();
    let roots = unit_roots(n, sign);
    (0..n)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            let mut idx = 0usize;
            for &v in x {
                acc += v * roots[idx];
                idx += k;
                if idx >= n {
                    idx -= n;
                }
            }
            acc
        })
        .collect()
}

/// Forward DFT of a waveform, unscaled. Bin spacing is 1/(N T).
pub fn dft(w: &Waveform) -> Result<Spectrum> {
    if w.is_empty() {
        return Err(FourierError::EmptySamples);
    }
    let n = w.len();
    Spectrum::new(dft_slice(&w.samples), 1.0 / (n as f64 * w.sample_interval))
}

/// Inverse DFT carrying the 1/N factor. The output starts at t = 0 with
/// interval 1/(N * bin_spacing).
pub fn idft(s: &Spectrum) -> Result<Waveform> {
    if s.is_empty() {
        return Err(FourierError::EmptyBins);
    }
    let s = s.wrapped();
    let samples = idft_slice(&s.bins);
    Waveform::from_complex(samples, 1.0 / s.sample_rate())
}
