//! Fast path for the DFT.
//!
//! Power-of-two lengths use an iterative radix-2 decimation-in-time kernel
//! with a precomputed twiddle table. Every other length goes through
//! Bluestein's chirp-z identity, which rewrites the DFT as a circular
//! convolution evaluated with two power-of-two transforms.
//!
//! The naive sum in [`super::dft`] is deliberately kept separate so that it
//! can serve as an independent oracle for this module.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::dft::{dft_slice, unit_roots};
use crate::error::{FourierError, Result};
use crate::signal::{Spectrum, Waveform};

/// Which kernel a plan uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FftStrategy {
    /// Radix-2 for powers of two, Bluestein otherwise.
    #[default]
    Auto,
    /// Bluestein for every length, including powers of two.
    Bluestein,
    /// Direct O(N^2) summation.
    Naive,
}

#[derive(Debug, Clone)]
enum Kernel {
    Radix2 {
        twiddles: Vec<Complex64>,
        bit_reverse: Vec<usize>,
    },
    Bluestein {
        chirp: Vec<Complex64>,
        kernel_spectrum: Vec<Complex64>,
        inner: Box<FftPlan>,
    },
    Naive,
}

/// Precomputed tables for forward transforms of one length. Immutable once
/// built, so a single plan can be shared across threads.
#[derive(Debug, Clone)]
pub struct FftPlan {
    len: usize,
    kernel: Kernel,
}

impl FftPlan {
    pub fn new(len: usize) -> Result<Self> {
        Self::with_strategy(len, FftStrategy::Auto)
    }

    pub fn with_strategy(len: usize, strategy: FftStrategy) -> Result<Self> {
        if len == 0 {
            return Err(FourierError::EmptySamples);
        }
        let kernel = match strategy {
            FftStrategy::Naive => Kernel::Naive,
            FftStrategy::Auto if len.is_power_of_two() => radix2_kernel(len),
            FftStrategy::Auto | FftStrategy::Bluestein => bluestein_kernel(len),
        };
        Ok(FftPlan { len, kernel })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// In-place forward transform, unscaled.
    pub fn forward(&self, buf: &mut [Complex64]) {
        assert_eq!(buf.len(), self.len, "buffer length does not match plan");
        match &self.kernel {
            Kernel::Radix2 {
                twiddles,
                bit_reverse,
            } => radix2_in_place(buf, twiddles, bit_reverse),
            Kernel::Bluestein {
                chirp,
                kernel_spectrum,
                inner,
            } => bluestein_in_place(buf, chirp, kernel_spectrum, inner),
            Kernel::Naive => {
                let out = dft_slice(buf);
                buf.copy_from_slice(&out);
            }
        }
    }

    /// In-place inverse transform including the 1/N factor.
    pub fn inverse(&self, buf: &mut [Complex64]) {
        // conj(F(conj(X))) / N
        for z in buf.iter_mut() {
            *z = z.conj();
        }
        self.forward(buf);
        let scale = 1.0 / self.len as f64;
        for z in buf.iter_mut() {
            *z = z.conj() * scale;
        }
    }
}

fn radix2_kernel(n: usize) -> Kernel {
    let bits = n.trailing_zeros();
    let bit_reverse = (0..n)
        .map(|i| {
            if bits == 0 {
                0
            } else {
                i.reverse_bits() >> (usize::BITS - bits)
            }
        })
        .collect();
    let twiddles = unit_roots(n, -1.0).into_iter().take(n / 2).collect();
    Kernel::Radix2 {
        twiddles,
        bit_reverse,
    }
}

fn radix2_in_place(buf: &mut [Complex64], twiddles: &[Complex64], bit_reverse: &[usize]) {
    let n = buf.len();
    for (i, &j) in bit_reverse.iter().enumerate() {
        if i < j {
            buf.swap(i, j);
        }
    }
    let mut half = 1;
    while half < n {
        let span = half * 2;
        let stride = n / span;
        for block in buf.chunks_exact_mut(span) {
            let (lo, hi) = block.split_at_mut(half);
            for (j, (a, b)) in lo.iter_mut().zip(hi.iter_mut()).enumerate() {
                let t = *b * twiddles[j * stride];
                *b = *a - t;
                *a += t;
            }
        }
        half = span;
    }
}

fn bluestein_kernel(n: usize) -> Kernel {
    let m = (2 * n - 1).next_power_of_two();
    // w_k = exp(-i pi k^2 / n); k^2 is reduced mod 2n to keep the phase exact
    let two_n = 2 * n as u128;
    let chirp: Vec<Complex64> = (0..n)
        .map(|k| {
            let k2 = (k as u128 * k as u128 % two_n) as f64;
            Complex64::from_polar(1.0, -PI * k2 / n as f64)
        })
        .collect();
    let mut kernel = vec![Complex64::new(0.0, 0.0); m];
    kernel[0] = chirp[0].conj();
    for k in 1..n {
        kernel[k] = chirp[k].conj();
        kernel[m - k] = chirp[k].conj();
    }
    let inner = FftPlan {
        len: m,
        kernel: radix2_kernel(m),
    };
    inner.forward(&mut kernel);
    Kernel::Bluestein {
        chirp,
        kernel_spectrum: kernel,
        inner: Box::new(inner),
    }
}

fn bluestein_in_place(
    buf: &mut [Complex64],
    chirp: &[Complex64],
    kernel_spectrum: &[Complex64],
    inner: &FftPlan,
) {
    let m = inner.len();
    let mut work = vec![Complex64::new(0.0, 0.0); m];
    for ((w, &x), &c) in work.iter_mut().zip(buf.iter()).zip(chirp) {
        *w = x * c;
    }
    inner.forward(&mut work);
    for (w, &k) in work.iter_mut().zip(kernel_spectrum) {
        *w *= k;
    }
    inner.inverse(&mut work);
    for ((out, &w), &c) in buf.iter_mut().zip(&work).zip(chirp) {
        *out = w * c;
    }
}

pub fn fft_slice(x: &[Complex64]) -> Vec<Complex64> {
    let mut buf = x.to_vec();
    if !buf.is_empty() {
        FftPlan::new(buf.len())
            .expect("nonzero length")
            .forward(&mut buf);
    }
    buf
}

pub fn ifft_slice(x: &[Complex64]) -> Vec<Complex64> {
    let mut buf = x.to_vec();
    if !buf.is_empty() {
        FftPlan::new(buf.len())
            .expect("nonzero length")
            .inverse(&mut buf);
    }
    buf
}

/// Same contract as [`super::dft`], computed on the fast path.
pub fn fft(w: &Waveform) -> Result<Spectrum> {
    fft_with_strategy(w, FftStrategy::Auto)
}

pub fn fft_with_strategy(w: &Waveform, strategy: FftStrategy) -> Result<Spectrum> {
    if w.is_empty() {
        return Err(FourierError::EmptySamples);
    }
    let plan = FftPlan::with_strategy(w.len(), strategy)?;
    let mut bins = w.samples.clone();
    plan.forward(&mut bins);
    Spectrum::new(bins, 1.0 / (w.len() as f64 * w.sample_interval))
}

/// Same contract as [`super::idft`], computed on the fast path.
pub fn ifft(s: &Spectrum) -> Result<Waveform> {
    ifft_with_strategy(s, FftStrategy::Auto)
}

pub fn ifft_with_strategy(s: &Spectrum, strategy: FftStrategy) -> Result<Waveform> {
    if s.is_empty() {
        return Err(FourierError::EmptyBins);
    }
    let s = s.wrapped();
    let plan = FftPlan::with_strategy(s.len(), strategy)?;
    let mut samples = s.bins.clone();
    plan.inverse(&mut samples);
    Waveform::from_complex(samples, 1.0 / s.sample_rate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn random(n: usize, seed: u64) -> Vec<Complex64> {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        (0..n)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect()
    }

    fn rel_err(a: &[Complex64], b: &[Complex64]) -> f64 {
        let scale = b.iter().fold(0.0f64, |m, z| m.max(z.norm())).max(1e-300);
        a.iter()
            .zip(b)
            .fold(0.0f64, |m, (x, y)| m.max((x - y).norm()))
            / scale
    }

    #[test]
    fn radix2_matches_naive_for_eight() {
        let x = random(8, 1);
        assert!(rel_err(&fft_slice(&x), &dft_slice(&x)) <= 1e-9);
    }

    #[test]
    fn bluestein_matches_naive_for_six() {
        let x = random(6, 2);
        assert!(rel_err(&fft_slice(&x), &dft_slice(&x)) <= 1e-9);
    }

    #[test]
    fn single_point_is_identity() {
        let x = vec![Complex64::new(0.7, -0.3)];
        assert_eq!(fft_slice(&x), x);
        assert_eq!(ifft_slice(&x), x);
    }

    #[test]
    fn forced_bluestein_on_power_of_two() {
        let x = random(16, 3);
        let plan = FftPlan::with_strategy(16, FftStrategy::Bluestein).unwrap();
        let mut buf = x.clone();
        plan.forward(&mut buf);
        assert!(rel_err(&buf, &dft_slice(&x)) <= 1e-9);
        plan.inverse(&mut buf);
        assert!(rel_err(&buf, &x) <= 1e-9);
    }

    #[test]
    fn strategies_agree_on_waveforms() {
        let w = Waveform::from_complex(random(12, 4), 0.5).unwrap();
        let a = fft_with_strategy(&w, FftStrategy::Auto).unwrap();
        let b = fft_with_strategy(&w, FftStrategy::Naive).unwrap();
        assert!(rel_err(&a.bins, &b.bins) <= 1e-9);
        assert_eq!(a.bin_spacing, b.bin_spacing);
        let back = ifft(&a).unwrap();
        assert!(rel_err(&back.samples, &w.samples) <= 1e-9);
    }

    #[test]
    fn zero_length_plan_rejected() {
        assert!(FftPlan::new(0).is_err());
    }
}
