//! Fourier analysis toolkit.
//!
//! Series (real and complex form), the discrete and fast transforms, DTFT
//! and quadrature-based continuous transforms, kernels (Dirichlet, rect,
//! sinc, step, combs), sampling and reconstruction, and a time-frequency
//! layer (analytic signal, Gabor atoms, STFT, Wigner-Ville).
//!
//! Conventions:
//! - complex samples are `Complex64`; real signals carry a [`SampleKind::Real`] tag
//! - forward transforms are unscaled, inverses carry 1/N
//! - bins are stored 0..N-1, the upper half read as negative frequencies
//! - jumps take the half value (rect edges, step(0), segment junctions)
//!
//! The `parallel` feature (on by default) runs the batch loops on rayon.

pub mod error;
pub mod exec;
pub mod kernels;
pub mod sampling;
pub mod series;
pub mod signal;
pub mod timefreq;
pub mod transforms;

pub use error::{FourierError, Result};
pub use exec::Execution;
pub use signal::{
    segmented_eval, validate_waveform, BinOrdering, Domain, GaborAtom, Impulse, ImpulseTrain,
    SampleKind, Segment, SegmentedFunction, Spectrum, TfDistribution, TfKind, Waveform,
};

/// Tolerance for discrete identities (round trips, Parseval, FFT vs DFT).
pub const DISCRETE_TOLERANCE: f64 = 1e-9;
/// Default absolute tolerance for quadrature.
pub const QUADRATURE_TOLERANCE: f64 = transforms::DEFAULT_QUAD_TOLERANCE;
