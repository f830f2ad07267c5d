use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "fourierkit",
    version,
    about = "Fourier series, transforms, sampling and time-frequency analysis",
    long_about = "Reads a signal from a CSV or 16-bit PCM mono WAV file, or builds one \
                  with --gen, runs the requested analysis and writes CSV to stdout \
                  (or --output)."
)]
pub struct Cli {
    /// Settings file (key = value); defaults to $FOURIERKIT_CONFIG
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Write CSV here instead of stdout
    #[arg(short, long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Absolute quadrature tolerance
    #[arg(long, global = true, value_name = "TOL")]
    pub tolerance: Option<f64>,

    /// Quadrature panel budget
    #[arg(long, global = true, value_name = "N")]
    pub max_subdivisions: Option<usize>,

    /// FFT algorithm: auto, bluestein or naive
    #[arg(long, global = true, value_name = "NAME")]
    pub fft_strategy: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectrum of a signal, or the waveform of a spectrum with --inverse
    Transform(TransformArgs),
    /// Real Fourier series coefficients, or the synthesized partial sum
    Series(SeriesArgs),
    /// Sample table of a generator (a sine by default)
    Sample(SampleArgs),
    /// Truncated sinc reconstruction between the samples
    Reconstruct(ReconstructArgs),
    /// Gaussian-window short-time Fourier transform magnitude
    Stft(StftArgs),
    /// Pseudo Wigner-Ville distribution
    Wvd(WvdArgs),
    /// A Gabor atom in time, or its spectrum with --spectrum
    Atoms(AtomArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    Dc,
    Impulse,
    Sine,
    Square,
    Chirp,
    Gabor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Dft,
    Fft,
}

#[derive(Debug, Clone, Args)]
pub struct SourceArgs {
    /// CSV or WAV input file
    #[arg(value_name = "INPUT", conflicts_with = "gen")]
    pub input: Option<PathBuf>,

    /// Built-in signal generator
    #[arg(long, value_enum)]
    pub gen: Option<Generator>,

    /// Number of generated samples
    #[arg(long, default_value_t = 64)]
    pub n: usize,

    /// Sample rate in Hz (overrides the rate found in the input)
    #[arg(long)]
    pub fs: Option<f64>,

    /// Tone frequency in Hz for sine and square
    #[arg(
        long,
        visible_alias = "f",
        default_value_t = 1.0,
        allow_negative_numbers = true
    )]
    pub freq: f64,

    /// Phase in radians for sine, square and gabor
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phase: f64,

    /// Chirp start frequency, or gabor centre frequency (default fs/8)
    #[arg(long, allow_negative_numbers = true)]
    pub f0: Option<f64>,

    /// Chirp end frequency (default fs/4)
    #[arg(long, allow_negative_numbers = true)]
    pub f1: Option<f64>,

    /// Gabor centre time in seconds (default mid-record)
    #[arg(long, allow_negative_numbers = true)]
    pub t0: Option<f64>,

    /// Gabor envelope sharpness in 1/s (default 10 / duration)
    #[arg(long)]
    pub gabor_alpha: Option<f64>,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    /// Read a spectrum table (bin,freq_hz,re,im,...) and synthesize the waveform
    #[arg(long)]
    pub inverse: bool,

    #[arg(long, value_enum, default_value_t = Method::Fft)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    /// Period in seconds (default: one tone period for sine and square,
    /// otherwise the record length)
    #[arg(long)]
    pub period: Option<f64>,

    /// Number of harmonics
    #[arg(long, default_value_t = 10)]
    pub k: usize,

    /// Evaluate the partial sum at this many points over one period
    #[arg(long, value_name = "POINTS")]
    pub synthesize: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub source: SourceArgs,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    /// Samples used on each side of the evaluation point
    #[arg(long, default_value_t = 32)]
    pub taps: usize,

    /// Number of evenly spaced evaluation points across the record
    #[arg(long, default_value_t = 256)]
    pub grid: usize,
}

#[derive(Debug, Args)]
pub struct StftArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    /// Gaussian window sharpness in 1/s; 0 gives a rectangular window
    #[arg(long, default_value_t = 0.0)]
    pub alpha: f64,

    /// Frame step in samples (default frame/4)
    #[arg(long)]
    pub hop: Option<usize>,

    /// Frame length in samples
    #[arg(long, default_value_t = 32)]
    pub frame: usize,
}

#[derive(Debug, Args)]
pub struct WvdArgs {
    #[command(flatten)]
    pub source: SourceArgs,
}

#[derive(Debug, Args)]
pub struct AtomArgs {
    /// Centre time in seconds
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub t0: f64,

    /// Centre frequency in Hz
    #[arg(long, default_value_t = 8.0, allow_negative_numbers = true)]
    pub f0: f64,

    /// Envelope sharpness in 1/s
    #[arg(long, default_value_t = 10.0)]
    pub alpha: f64,

    /// Phase in radians
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phase: f64,

    /// Number of grid points
    #[arg(long, default_value_t = 128)]
    pub n: usize,

    /// Grid rate in Hz (time grid spacing 1/fs, frequency spacing fs/n)
    #[arg(long, default_value_t = 128.0)]
    pub fs: f64,

    /// Tabulate the spectrum instead of the time-domain atom
    #[arg(long)]
    pub spectrum: bool,
}
