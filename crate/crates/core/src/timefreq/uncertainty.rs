use num_complex::Complex64;

use super::analytic_signal;
use crate::error::{FourierError, Result};
use crate::signal::Waveform;
use crate::transforms::{bin_to_frequency, FftPlan};

/// Zero-padding factor for the frequency-domain moments.
pub const SPECTRAL_PADDING: usize = 8;

/// RMS durations in time and frequency. For a Gaussian envelope the product
/// reaches its minimum, 1/(4 pi).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Uncertainty {
    pub sigma_t: f64,
    pub sigma_f: f64,
    pub product: f64,
}

fn weighted_spread(points: impl Iterator<Item = (f64, f64)> + Clone) -> f64 {
    let total: f64 = points.clone().map(|(_, w)| w).sum();
    let mean = points.clone().map(|(x, w)| x * w).sum::<f64>() / total;
    let var = points.map(|(x, w)| (x - mean).powi(2) * w).sum::<f64>() / total;
    var.sqrt()
}

/// RMS widths of |psi(t)|^2 and |Psi(f)|^2 about their centroids.
///
/// Real records are first converted to their analytic signal so that the
/// spectrum is one-sided and the frequency centroid sits on the carrier.
/// The spectrum is taken from an 8x zero-padded FFT.
pub fn uncertainty_product(w: &Waveform) -> Result<Uncertainty> {
    if w.energy() == 0.0 {
        return Err(FourierError::ZeroEnergy);
    }
    let psi = if w.is_real() {
        analytic_signal(w)?
    } else {
        w.clone()
    };
    let sigma_t = weighted_spread(
        psi.samples
            .iter()
            .enumerate()
            .map(|(n, z)| (psi.time_at(n), z.norm_sqr())),
    );

    let padded_len = SPECTRAL_PADDING * psi.len();
    let mut bins = psi.samples.clone();
    bins.resize(padded_len, Complex64::new(0.0, 0.0));
    FftPlan::new(padded_len)?.forward(&mut bins);
    let fs = psi.sample_rate();
    let freqs = (0..padded_len)
        .map(|k| bin_to_frequency(k, padded_len, fs))
        .collect::<Result<Vec<_>>>()?;
    let sigma_f = weighted_spread(freqs.iter().zip(&bins).map(|(&f, z)| (f, z.norm_sqr())));

    Ok(Uncertainty {
        sigma_t,
        sigma_f,
        product: sigma_t * sigma_f,
    })
}
