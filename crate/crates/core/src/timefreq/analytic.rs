use num_complex::Complex64;

use crate::error::{FourierError, Result};
use crate::signal::{validate_waveform, SampleKind, Waveform};
use crate::transforms::FftPlan;

/// Analytic signal of a real record, built in the frequency domain.
///
/// Bin 0 (and bin N/2 for even N) is kept, bins 1..ceil(N/2)-1 are doubled,
/// the negative half is zeroed, and the result is inverse transformed. The
/// real part reproduces the input.
pub fn analytic_signal(w: &Waveform) -> Result<Waveform> {
    let w = validate_waveform(w.clone())?;
    if w.kind != SampleKind::Real {
        let index = w.samples.iter().position(|z| z.im != 0.0).unwrap_or(0);
        return Err(FourierError::RealTagViolation { index });
    }
    let n = w.len();
    if n < 2 {
        return Err(FourierError::param(
            "analytic signal needs at least two samples",
        ));
    }
    let plan = FftPlan::new(n)?;
    let mut bins = w.samples.clone();
    plan.forward(&mut bins);
    let positive_end = n.div_ceil(2);
    for (k, z) in bins.iter_mut().enumerate() {
        if k == 0 || (n % 2 == 0 && k == n / 2) {
            continue;
        }
        if k < positive_end {
            *z *= 2.0;
        } else {
            *z = Complex64::new(0.0, 0.0);
        }
    }
    plan.inverse(&mut bins);
    Ok(Waveform {
        samples: bins,
        sample_interval: w.sample_interval,
        start_time: w.start_time,
        kind: SampleKind::Complex,
    })
}
