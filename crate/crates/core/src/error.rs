use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, FourierError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FourierError {
    #[error("sample interval must be positive and finite, got {0}")]
    NonPositiveInterval(f64),

    #[error("waveform has no samples")]
    EmptySamples,

    #[error("spectrum has no bins")]
    EmptyBins,

    #[error("real-tagged waveform has a nonzero imaginary part at sample {index}")]
    RealTagViolation { index: usize },

    #[error("bin index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("sampled map returned a non-finite value at sample {index}")]
    NonFiniteSample { index: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("frame length {frame} exceeds record length {len}")]
    FrameTooLong { frame: usize, len: usize },

    #[error("record length {0} is odd; an even length is required")]
    OddLength(usize),

    #[error("signal has zero energy")]
    ZeroEnergy,

    /// The subdivision budget ran out. Carries the best estimate and its error bound.
    #[error("quadrature tolerance not reached: estimate {estimate}, error bound {error_bound:e}")]
    ToleranceNotReached {
        estimate: Complex64,
        error_bound: f64,
    },

    #[error("impulse locations must be finite and strictly increasing (violated at impulse {0})")]
    UnsortedImpulses(usize),

    #[error("invalid segment layout at segment {0}")]
    InvalidSegments(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl FourierError {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        FourierError::InvalidParameter(msg.into())
    }
}
