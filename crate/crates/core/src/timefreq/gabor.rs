use std::f64::consts::PI;

use num_complex::Complex64;

use crate::signal::GaborAtom;

/// exp(-alpha^2 (t - t0)^2) * exp(i (2pi f0 t + phase)).
pub fn gabor_atom_eval(g: &GaborAtom, t: f64) -> Complex64 {
    let d = t - g.t0;
    let envelope = (-(g.alpha * d).powi(2)).exp();
    Complex64::from_polar(envelope, 2.0 * PI * g.f0 * t + g.phase)
}

/// Unit-peak spectrum of the atom:
/// exp(-(pi/alpha)^2 (f - f0)^2) * exp(i (-2pi t0 (f - f0) + phase)).
///
/// The forward transform of [`gabor_atom_eval`] equals this value times
/// [`gabor_spectrum_scale`] times the constant phase exp(i 2pi f0 t0).
pub fn gabor_atom_spectrum(g: &GaborAtom, f: f64) -> Complex64 {
    let df = f - g.f0;
    let envelope = (-(PI / g.alpha * df).powi(2)).exp();
    Complex64::from_polar(envelope, -2.0 * PI * g.t0 * df + g.phase)
}

/// Peak magnitude of the atom's transform, sqrt(pi)/alpha.
pub fn gabor_spectrum_scale(g: &GaborAtom) -> f64 {
    PI.sqrt() / g.alpha
}
