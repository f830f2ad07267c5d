use crate::error::{FourierError, Result};
use crate::signal::wrapped_frequency;

/// Signed frequency of DFT bin `k` for a length-`n` transform at rate `fs`.
///
/// Bins below ceil(n/2) map to k*fs/n; the rest are read as negative
/// frequencies (k - n)*fs/n.
pub fn bin_to_frequency(k: usize, n: usize, fs: f64) -> Result<f64> {
    if k >= n {
        return Err(FourierError::IndexOutOfRange { index: k, len: n });
    }
    Ok(wrapped_frequency(k, n, fs))
}

/// Nearest bin for a signed frequency, wrapping negatives to the top half.
pub fn frequency_to_bin(f: f64, n: usize, fs: f64) -> usize {
    let k = (f * n as f64 / fs).round() as i64;
    k.rem_euclid(n as i64) as usize
}
