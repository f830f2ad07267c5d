//! Discrete pseudo Wigner-Ville distribution.
//!
//! For row n the lag kernel is K(n, m) = conj(psi(n - m)) psi(n + m) for
//! |m| <= L, where psi is the analytic signal, L = (M - 1)/2 and M = N/2 is
//! the lag window (half the record). Samples outside the record count as
//! zero, so rows within L of either end see a shortened window; rows 0 and
//! N-1 keep only the zero lag and carry no frequency information.
//!
//! K(n, -m) = conj(K(n, m)), so the length-M DFT over lag is real up to
//! round-off. A tone exp(i2pi f t) gives K = exp(i2pi 2f mT), peaking at bin
//! k = 2 f M T; the frequency axis is therefore k * fs / (2M) and spans
//! [0, fs/2).
//!
//! The sum over k of row n equals M |psi(n)|^2 exactly (only m = 0 survives).

use ndarray::Array2;
use num_complex::Complex64;

use super::analytic_signal;
use crate::error::{FourierError, Result};
use crate::exec::Execution;
use crate::signal::{TfDistribution, TfKind, Waveform};
use crate::transforms::FftPlan;

/// Lag window length for a record of `n` samples.
pub fn wvd_lag_window(n: usize) -> usize {
    (n / 2).max(1)
}

pub fn wvd(w: &Waveform) -> Result<TfDistribution> {
    wvd_with(w, Execution::default())
}

pub fn wvd_with(w: &Waveform, exec: Execution) -> Result<TfDistribution> {
    let n = w.len();
    if n % 2 == 1 {
        return Err(FourierError::OddLength(n));
    }
    let psi = analytic_signal(w)?;
    let psi = &psi.samples;
    let m_len = wvd_lag_window(n);
    let reach = (m_len - 1) / 2;
    let plan = FftPlan::new(m_len)?;

    let rows = exec.map_range(n, |row| {
        let mut kernel = vec![Complex64::new(0.0, 0.0); m_len];
        let span = reach.min(row).min(n - 1 - row);
        kernel[0] = psi[row].norm_sqr().into();
        for m in 1..=span {
            let v = psi[row - m].conj() * psi[row + m];
            kernel[m] = v;
            kernel[m_len - m] = v.conj();
        }
        plan.forward(&mut kernel);
        kernel
    });

    let mut values = Array2::zeros((n, m_len));
    for (r, row) in rows.into_iter().enumerate() {
        for (k, z) in row.into_iter().enumerate() {
            values[[r, k]] = z;
        }
    }
    let fs = w.sample_rate();
    let freq_axis = (0..m_len)
        .map(|k| k as f64 * fs / (2.0 * m_len as f64))
        .collect();
    TfDistribution::new(values, w.times().collect(), freq_axis, TfKind::WvdReal)
}
