//! Shared domain types: sampled waveforms, spectra, impulse trains,
//! piecewise (segmented) functions, Gabor atoms and time-frequency grids.

use std::fmt;
use std::sync::Arc;

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{FourierError, Result};

/// Whether a waveform's samples are constrained to the real axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleKind {
    Real,
    Complex,
}

/// A uniformly sampled time-domain sequence.
///
/// Real signals share the complex representation; the `kind` tag records
/// that every imaginary part is exactly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Waveform {
    pub samples: Vec<Complex64>,
    /// Seconds between samples.
    pub sample_interval: f64,
    /// Time of the first sample, in seconds.
    pub start_time: f64,
    pub kind: SampleKind,
}

impl Waveform {
    pub fn new(
        samples: Vec<Complex64>,
        sample_interval: f64,
        start_time: f64,
        kind: SampleKind,
    ) -> Result<Self> {
        validate_waveform(Waveform {
            samples,
            sample_interval,
            start_time,
            kind,
        })
    }

    /// Real-tagged waveform starting at t = 0.
    pub fn from_real(samples: &[f64], sample_interval: f64) -> Result<Self> {
        Self::new(
            samples.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
            sample_interval,
            0.0,
            SampleKind::Real,
        )
    }

    /// Complex-tagged waveform starting at t = 0.
    pub fn from_complex(samples: Vec<Complex64>, sample_interval: f64) -> Result<Self> {
        Self::new(samples, sample_interval, 0.0, SampleKind::Complex)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.kind == SampleKind::Real
    }

    pub fn sample_rate(&self) -> f64 {
        1.0 / self.sample_interval
    }

    /// Time of sample `n`.
    pub fn time_at(&self, n: usize) -> f64 {
        self.start_time + n as f64 * self.sample_interval
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(move |n| self.time_at(n))
    }

    pub fn real_parts(&self) -> Vec<f64> {
        self.samples.iter().map(|z| z.re).collect()
    }

    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Same timing, new samples. The tag is recomputed from the data.
    pub fn with_samples(&self, samples: Vec<Complex64>) -> Waveform {
        let kind = if samples.iter().all(|z| z.im == 0.0) && self.is_real() {
            SampleKind::Real
        } else {
            SampleKind::Complex
        };
        Waveform {
            samples,
            sample_interval: self.sample_interval,
            start_time: self.start_time,
            kind,
        }
    }
}

/// Checks every waveform invariant and hands the value back unchanged.
pub fn validate_waveform(w: Waveform) -> Result<Waveform> {
    if !(w.sample_interval > 0.0 && w.sample_interval.is_finite()) {
        return Err(FourierError::NonPositiveInterval(w.sample_interval));
    }
    if w.samples.is_empty() {
        return Err(FourierError::EmptySamples);
    }
    if w.kind == SampleKind::Real {
        if let Some(index) = w.samples.iter().position(|z| z.im != 0.0) {
            return Err(FourierError::RealTagViolation { index });
        }
    }
    Ok(w)
}

/// Layout of the bins in a [`Spectrum`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOrdering {
    /// Bins 0..N-1; indices at or above ceil(N/2) are negative frequencies.
    Wrapped,
    /// Negative frequencies first, DC in the middle. Display only.
    Centered,
}

/// Complex frequency bins on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub bins: Vec<Complex64>,
    /// Hz between adjacent bins (F/N for a DFT of N samples at rate F).
    pub bin_spacing: f64,
    pub ordering: BinOrdering,
}

impl Spectrum {
    pub fn new(bins: Vec<Complex64>, bin_spacing: f64) -> Result<Self> {
        if !(bin_spacing > 0.0 && bin_spacing.is_finite()) {
            return Err(FourierError::param(format!(
                "bin spacing must be positive, got {bin_spacing}"
            )));
        }
        if bins.is_empty() {
            return Err(FourierError::EmptyBins);
        }
        Ok(Spectrum {
            bins,
            bin_spacing,
            ordering: BinOrdering::Wrapped,
        })
    }

    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    /// Sampling rate implied by the spacing: N times the bin spacing.
    pub fn sample_rate(&self) -> f64 {
        self.bin_spacing * self.len() as f64
    }

    /// Signed frequency of each stored bin, in storage order.
    pub fn frequencies(&self) -> Vec<f64> {
        let n = self.len();
        let fs = self.sample_rate();
        match self.ordering {
            BinOrdering::Wrapped => (0..n).map(|k| wrapped_frequency(k, n, fs)).collect(),
            BinOrdering::Centered => {
                let shift = n / 2;
                (0..n)
                    .map(|i| (i as f64 - shift as f64) * fs / n as f64)
                    .collect()
            }
        }
    }

    /// Reorders bins so frequencies run from -floor(N/2) to ceil(N/2)-1.
    pub fn centered(&self) -> Spectrum {
        match self.ordering {
            BinOrdering::Centered => self.clone(),
            BinOrdering::Wrapped => {
                let mut bins = self.bins.clone();
                bins.rotate_right(self.len() / 2);
                Spectrum {
                    bins,
                    bin_spacing: self.bin_spacing,
                    ordering: BinOrdering::Centered,
                }
            }
        }
    }

    /// Inverse of [`centered`](Self::centered).
    pub fn wrapped(&self) -> Spectrum {
        match self.ordering {
            BinOrdering::Wrapped => self.clone(),
            BinOrdering::Centered => {
                let mut bins = self.bins.clone();
                bins.rotate_left(self.len() / 2);
                Spectrum {
                    bins,
                    bin_spacing: self.bin_spacing,
                    ordering: BinOrdering::Wrapped,
                }
            }
        }
    }

    pub fn magnitudes(&self) -> Vec<f64> {
        self.bins.iter().map(|z| z.norm()).collect()
    }
}

// Shared with transforms::bin_to_frequency; k < n is the caller's contract.
pub(crate) fn wrapped_frequency(k: usize, n: usize, fs: f64) -> f64 {
    let half = n.div_ceil(2);
    if k < half {
        k as f64 * fs / n as f64
    } else {
        (k as f64 - n as f64) * fs / n as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Time,
    Frequency,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Impulse {
    pub location: f64,
    pub weight: Complex64,
}

/// Weighted Dirac impulses: the only representation of deltas and combs.
/// They are never evaluated pointwise, only summed against a map.
#[derive(Debug, Clone, PartialEq)]
pub struct ImpulseTrain {
    impulses: Vec<Impulse>,
    domain: Domain,
}

impl ImpulseTrain {
    pub fn new(impulses: Vec<Impulse>, domain: Domain) -> Result<Self> {
        for (i, imp) in impulses.iter().enumerate() {
            if !imp.location.is_finite() {
                return Err(FourierError::UnsortedImpulses(i));
            }
            if i > 0 && imp.location <= impulses[i - 1].location {
                return Err(FourierError::UnsortedImpulses(i));
            }
        }
        Ok(ImpulseTrain { impulses, domain })
    }

    /// A single weighted delta at `location`.
    pub fn delta(location: f64, weight: Complex64, domain: Domain) -> Result<Self> {
        Self::new(vec![Impulse { location, weight }], domain)
    }

    pub fn impulses(&self) -> &[Impulse] {
        &self.impulses
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.impulses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.impulses.is_empty()
    }

    pub fn locations(&self) -> impl Iterator<Item = f64> + '_ {
        self.impulses.iter().map(|i| i.location)
    }
}

pub type RealMap = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// One piece of a [`SegmentedFunction`], defined on `[a, b]`.
#[derive(Clone)]
pub struct Segment {
    pub a: f64,
    pub b: f64,
    pub map: RealMap,
}

impl Segment {
    pub fn new(a: f64, b: f64, map: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Segment {
            a,
            b,
            map: Arc::new(map),
        }
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Segment")
            .field("a", &self.a)
            .field("b", &self.b)
            .finish_non_exhaustive()
    }
}

/// A function given piecewise on sorted, non-overlapping segments and zero
/// elsewhere. Junctions take the mean of the two one-sided values.
#[derive(Debug, Clone)]
pub struct SegmentedFunction {
    segments: Vec<Segment>,
}

impl SegmentedFunction {
    pub fn new(segments: Vec<Segment>) -> Result<Self> {
        for (i, s) in segments.iter().enumerate() {
            if s.a >= s.b || !s.a.is_finite() || !s.b.is_finite() {
                return Err(FourierError::InvalidSegments(i));
            }
            if i > 0 && s.a < segments[i - 1].b {
                return Err(FourierError::InvalidSegments(i));
            }
        }
        Ok(SegmentedFunction { segments })
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn eval(&self, x: f64) -> f64 {
        segmented_eval(self, x)
    }
}

/// Evaluates a segmented function with the half-value junction rule.
///
/// Inside a segment the segment's map applies. At an endpoint the result is
/// the mean of the left and right one-sided values, where a missing neighbour
/// contributes zero. Outside every segment the value is zero.
pub fn segmented_eval(s: &SegmentedFunction, x: f64) -> f64 {
    let segs = &s.segments;
    // first segment whose right end is >= x
    let i = segs.partition_point(|seg| seg.b < x);
    let Some(seg) = segs.get(i) else {
        return 0.0;
    };
    if seg.a < x && x < seg.b {
        return (seg.map)(x);
    }
    let mut left = 0.0;
    let mut right = 0.0;
    if x == seg.b {
        left = (seg.map)(x);
        if let Some(next) = segs.get(i + 1) {
            if next.a == x {
                right = (next.map)(x);
            }
        }
    } else if x == seg.a {
        right = (seg.map)(x);
    } else {
        // x < seg.a: in a gap or before the first segment
        return 0.0;
    }
    0.5 * (left + right)
}

/// Gaussian-enveloped complex sinusoid centred at (t0, f0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaborAtom {
    pub t0: f64,
    pub f0: f64,
    /// Envelope sharpness in 1/s; the envelope is exp(-alpha^2 (t - t0)^2).
    pub alpha: f64,
    pub phase: f64,
}

impl GaborAtom {
    pub fn new(t0: f64, f0: f64, alpha: f64, phase: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(FourierError::param(format!(
                "atom sharpness must be positive, got {alpha}"
            )));
        }
        Ok(GaborAtom {
            t0,
            f0,
            alpha,
            phase,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TfKind {
    StftComplex,
    WvdReal,
}

/// A matrix over a time x frequency grid. Rows are time frames, columns are
/// frequency bins.
#[derive(Debug, Clone, PartialEq)]
pub struct TfDistribution {
    pub values: Array2<Complex64>,
    pub time_axis: Vec<f64>,
    pub freq_axis: Vec<f64>,
    pub kind: TfKind,
}

impl TfDistribution {
    pub fn new(
        values: Array2<Complex64>,
        time_axis: Vec<f64>,
        freq_axis: Vec<f64>,
        kind: TfKind,
    ) -> Result<Self> {
        let (rows, cols) = values.dim();
        if rows != time_axis.len() {
            return Err(FourierError::LengthMismatch {
                left: rows,
                right: time_axis.len(),
            });
        }
        if cols != freq_axis.len() {
            return Err(FourierError::LengthMismatch {
                left: cols,
                right: freq_axis.len(),
            });
        }
        Ok(TfDistribution {
            values,
            time_axis,
            freq_axis,
            kind,
        })
    }

    pub fn rows(&self) -> usize {
        self.values.nrows()
    }

    pub fn cols(&self) -> usize {
        self.values.ncols()
    }

    /// Largest |Im| relative to the largest |value|; zero for an all-zero grid.
    pub fn max_relative_imag(&self) -> f64 {
        let max_abs = self.values.iter().fold(0.0f64, |m, z| m.max(z.norm()));
        if max_abs == 0.0 {
            return 0.0;
        }
        self.values.iter().fold(0.0f64, |m, z| m.max(z.im.abs())) / max_abs
    }

    /// Column index of the largest real value in each row. Ties go to the
    /// lowest index.
    pub fn ridge(&self) -> Vec<usize> {
        self.values
            .rows()
            .into_iter()
            .map(|row| {
                let mut best = 0;
                for (k, z) in row.iter().enumerate() {
                    if z.re > row[best].re {
                        best = k;
                    }
                }
                best
            })
            .collect()
    }

    /// Like [`ridge`](Self::ridge) but on magnitudes.
    pub fn magnitude_ridge(&self) -> Vec<usize> {
        self.values
            .rows()
            .into_iter()
            .map(|row| {
                let mut best = 0;
                for (k, z) in row.iter().enumerate() {
                    if z.norm() > row[best].norm() {
                        best = k;
                    }
                }
                best
            })
            .collect()
    }

    pub fn row_energy(&self, row: usize) -> f64 {
        self.values.row(row).iter().map(|z| z.norm_sqr()).sum()
    }
}
