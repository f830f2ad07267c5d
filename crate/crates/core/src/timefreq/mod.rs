//! Time-frequency layer: analytic signal, Gabor atoms, Gaussian STFT,
//! pseudo Wigner-Ville distribution and the time-bandwidth product.
//!
//! Frequencies are in Hz throughout. STFT frames and WVD rows are
//! independent and run through [`crate::exec::Execution`].

mod analytic;
mod gabor;
mod stft;
mod uncertainty;
mod wvd;

pub use analytic::analytic_signal;
pub use gabor::{gabor_atom_eval, gabor_atom_spectrum, gabor_spectrum_scale};
pub use stft::{gaussian_window, stft, stft_with};
pub use uncertainty::{uncertainty_product, Uncertainty, SPECTRAL_PADDING};
pub use wvd::{wvd, wvd_lag_window, wvd_with};
