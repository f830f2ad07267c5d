use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{FourierError, Result};
use crate::exec::Execution;
use crate::signal::{TfDistribution, TfKind, Waveform};
use crate::transforms::{bin_to_frequency, FftPlan};

/// Gaussian analysis window for a frame of `frame` samples at interval `dt`.
///
/// Centred on the frame midpoint and cut to zero beyond 4/alpha (tail mass
/// below 1e-6) or at the frame edge, whichever is nearer. `alpha = 0` gives a
/// rectangular window.
pub fn gaussian_window(frame: usize, dt: f64, alpha: f64) -> Vec<f64> {
    let centre = 0.5 * (frame as f64 - 1.0) * dt;
    let reach = if alpha > 0.0 {
        4.0 / alpha
    } else {
        f64::INFINITY
    };
    (0..frame)
        .map(|j| {
            let d = j as f64 * dt - centre;
            if d.abs() > reach {
                0.0
            } else {
                (-(alpha * d).powi(2)).exp()
            }
        })
        .collect()
}

/// Gaussian-window short-time Fourier transform.
///
/// Frames start every `hop` samples and run while they fit in the record.
/// Rows are indexed by frame-centre time; columns follow the wrapped bin
/// ordering of a length-`frame` DFT.
pub fn stft(w: &Waveform, alpha: f64, hop: usize, frame: usize) -> Result<TfDistribution> {
    stft_with(w, alpha, hop, frame, Execution::default())
}

pub fn stft_with(
    w: &Waveform,
    alpha: f64,
    hop: usize,
    frame: usize,
    exec: Execution,
) -> Result<TfDistribution> {
    if frame == 0 || hop == 0 {
        return Err(FourierError::param("frame and hop must be at least 1"));
    }
    if !(alpha >= 0.0 && alpha.is_finite()) {
        return Err(FourierError::param(format!(
            "window sharpness must be finite and non-negative, got {alpha}"
        )));
    }
    let n = w.len();
    if frame > n {
        return Err(FourierError::FrameTooLong { frame, len: n });
    }
    let dt = w.sample_interval;
    let window = gaussian_window(frame, dt, alpha);
    let plan = FftPlan::new(frame)?;
    let rows = (n - frame) / hop + 1;

    let spectra = exec.map_range(rows, |r| {
        let start = r * hop;
        let mut buf: Vec<Complex64> = w.samples[start..start + frame]
            .iter()
            .zip(&window)
            .map(|(&x, &g)| x * g)
            .collect();
        plan.forward(&mut buf);
        buf
    });

    let mut values = Array2::zeros((rows, frame));
    for (r, row) in spectra.into_iter().enumerate() {
        for (k, z) in row.into_iter().enumerate() {
            values[[r, k]] = z;
        }
    }
    let half = 0.5 * (frame as f64 - 1.0);
    let time_axis = (0..rows)
        .map(|r| w.start_time + ((r * hop) as f64 + half) * dt)
        .collect();
    let fs = w.sample_rate();
    let freq_axis = (0..frame)
        .map(|k| bin_to_frequency(k, frame, fs))
        .collect::<Result<Vec<_>>>()?;
    TfDistribution::new(values, time_axis, freq_axis, TfKind::StftComplex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::dft_slice;
    use std::f64::consts::PI;

    fn tone(n: usize, k: f64, len: usize) -> Vec<Complex64> {
        (0..n)
            .map(|i| Complex64::from_polar(1.0, 2.0 * PI * k * i as f64 / len as f64))
            .collect()
    }

    #[test]
    fn tone_peaks_at_its_bin_in_every_frame() {
        let frame = 64;
        let w = Waveform::from_complex(tone(1000, 9.0, frame), 1.0 / 8000.0).unwrap();
        let tf = stft(&w, 2000.0, 37, frame).unwrap();
        assert!(tf.rows() > 20);
        assert!(tf.magnitude_ridge().iter().all(|&k| k == 9));
        assert!((tf.freq_axis[9] - 9.0 * 8000.0 / 64.0).abs() < 1e-9);
    }

    #[test]
    fn zero_signal() {
        let w = Waveform::from_real(&[0.0; 256], 1.0).unwrap();
        let tf = stft(&w, 0.1, 16, 32).unwrap();
        assert!(tf.values.iter().all(|z| *z == Complex64::new(0.0, 0.0)));
    }

    #[test]
    fn frame_too_long() {
        let w = Waveform::from_real(&[1.0; 8], 1.0).unwrap();
        assert_eq!(
            stft(&w, 1.0, 1, 16),
            Err(FourierError::FrameTooLong { frame: 16, len: 8 })
        );
        assert!(stft(&w, 1.0, 0, 4).is_err());
        assert!(stft(&w, -1.0, 1, 4).is_err());
    }

    #[test]
    fn rectangular_limit_is_blockwise_dft() {
        let xs: Vec<Complex64> = (0..96)
            .map(|i| Complex64::new(((i * 17) % 13) as f64 - 6.0, ((i * 5) % 7) as f64))
            .collect();
        let w = Waveform::from_complex(xs.clone(), 0.5).unwrap();
        let tf = stft(&w, 1e-9, 32, 32).unwrap();
        assert_eq!(tf.rows(), 3);
        for r in 0..3 {
            let block = dft_slice(&xs[r * 32..(r + 1) * 32]);
            for (k, z) in block.iter().enumerate() {
                let scale = z.norm().max(1.0);
                assert!((tf.values[[r, k]] - z).norm() <= 1e-9 * scale);
            }
        }
        assert_eq!(tf.time_axis[0], 15.5 * 0.5);
    }

    #[test]
    fn window_truncation() {
        let g = gaussian_window(101, 0.01, 10.0);
        assert_eq!(g[50], 1.0);
        // 4/alpha = 0.4 s = 40 samples from the centre
        assert!(g[11] > 0.0);
        assert_eq!(g[9], 0.0);
        assert_eq!(g[0], 0.0);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let w = Waveform::from_complex(tone(700, 3.0, 32), 1.0).unwrap();
        let a = stft_with(&w, 0.05, 11, 32, Execution::Sequential).unwrap();
        let b = stft_with(&w, 0.05, 11, 32, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
