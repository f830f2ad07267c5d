//! Signal sources: CSV and WAV files and the built-in generators.

use std::f64::consts::TAU;
use std::path::Path;

use fourierkit::{SampleKind, Waveform};
use num_complex::Complex64;

use crate::args::{Generator, SourceArgs};
use crate::error::{CliError, CliResult};

/// A fully specified generator. Tone phases are reduced to whole cycles
/// before the trig call, so frequencies that differ by a multiple of the
/// sample rate produce identical samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub kind: Generator,
    pub n: usize,
    pub fs: f64,
    pub freq: f64,
    pub phase: f64,
    pub f0: f64,
    pub f1: f64,
    pub t0: f64,
    pub alpha: f64,
}

impl GenSpec {
    pub fn from_args(kind: Generator, a: &SourceArgs) -> CliResult<GenSpec> {
        let fs = a.fs.unwrap_or(1.0);
        if !(fs > 0.0 && fs.is_finite()) {
            return Err(CliError::Usage(format!("--fs must be positive, got {fs}")));
        }
        if a.n == 0 {
            return Err(CliError::Usage("--n must be at least 1".into()));
        }
        let duration = a.n as f64 / fs;
        let alpha = a.gabor_alpha.unwrap_or(10.0 / duration);
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(CliError::Usage(format!(
                "--gabor-alpha must be positive, got {alpha}"
            )));
        }
        Ok(GenSpec {
            kind,
            n: a.n,
            fs,
            freq: a.freq,
            phase: a.phase,
            f0: a.f0.unwrap_or(fs / 8.0),
            f1: a.f1.unwrap_or(fs / 4.0),
            t0: a.t0.unwrap_or(0.5 * duration),
            alpha,
        })
    }

    fn duration(&self) -> f64 {
        self.n as f64 / self.fs
    }

    /// Phase in [0, 1) cycles; adding 0.0 turns a -0.0 remainder into +0.0.
    fn tone_cycles(&self, ft: f64) -> f64 {
        (ft + self.phase / TAU).rem_euclid(1.0) + 0.0
    }

    /// Value at time `t`, where `ft` is the tone phase f*t in cycles.
    fn value(&self, t: f64, ft: f64) -> f64 {
        match self.kind {
            Generator::Dc => 1.0,
            Generator::Impulse => {
                if t == 0.0 {
                    1.0
                } else {
                    0.0
                }
            }
            Generator::Sine => (TAU * self.tone_cycles(ft)).sin(),
            Generator::Square => {
                let c = self.tone_cycles(ft);
                if c == 0.0 || c == 0.5 {
                    0.0
                } else if c < 0.5 {
                    1.0
                } else {
                    -1.0
                }
            }
            Generator::Chirp => {
                let sweep = 0.5 * (self.f1 - self.f0) / self.duration();
                let cycles = (self.f0 * t + sweep * t * t).rem_euclid(1.0);
                (TAU * cycles).cos()
            }
            Generator::Gabor => {
                let env = (-(self.alpha * (t - self.t0)).powi(2)).exp();
                let cycles = (self.f0 * t + self.phase / TAU).rem_euclid(1.0);
                env * (TAU * cycles).cos()
            }
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.value(t, self.freq * t)
    }

    pub fn samples(&self) -> Vec<f64> {
        (0..self.n)
            .map(|i| {
                let t = i as f64 / self.fs;
                self.value(t, self.freq * i as f64 / self.fs)
            })
            .collect()
    }

    /// Whether [`eval`](Self::eval) is a meaningful function of continuous
    /// time (the impulse only exists on the sample grid).
    pub fn is_continuous(&self) -> bool {
        self.kind != Generator::Impulse
    }

    pub fn natural_period(&self) -> f64 {
        match self.kind {
            Generator::Sine | Generator::Square if self.freq != 0.0 => 1.0 / self.freq.abs(),
            _ => self.duration(),
        }
    }
}

/// A loaded signal and, for generators, the continuous source.
pub struct Signal {
    pub wave: Waveform,
    pub gen: Option<GenSpec>,
}

impl Signal {
    /// Continuous-time view: the generator itself, or periodic linear
    /// interpolation of the samples.
    pub fn map(&self) -> impl Fn(f64) -> f64 + Sync + '_ {
        move |t| match self.gen {
            Some(g) if g.is_continuous() => g.eval(t),
            _ => interpolate(&self.wave, t),
        }
    }

    pub fn natural_period(&self) -> f64 {
        match self.gen {
            Some(g) => g.natural_period(),
            None => self.wave.len() as f64 * self.wave.sample_interval,
        }
    }
}

fn interpolate(w: &Waveform, t: f64) -> f64 {
    let n = w.len();
    let u = ((t - w.start_time) / w.sample_interval).rem_euclid(n as f64);
    let i = (u.floor() as usize).min(n - 1);
    let frac = u - i as f64;
    let (a, b) = (w.samples[i].re, w.samples[(i + 1) % n].re);
    a + (b - a) * frac
}

/// Resolves the input file or generator. With neither given, `fallback`
/// decides (sample uses a sine); otherwise it is a usage error.
pub fn load_signal(a: &SourceArgs, fallback: Option<Generator>) -> CliResult<Signal> {
    match (&a.input, a.gen.or(fallback)) {
        (Some(path), _) => {
            let wave = load_file(path, a.fs)?;
            Ok(Signal { wave, gen: None })
        }
        (None, Some(kind)) => {
            let g = GenSpec::from_args(kind, a)?;
            let wave = Waveform::from_real(&g.samples(), 1.0 / g.fs)?;
            Ok(Signal { wave, gen: Some(g) })
        }
        (None, None) => Err(CliError::Usage(
            "no input: give a CSV/WAV file or --gen".into(),
        )),
    }
}

fn check_exists(path: &Path) -> CliResult<()> {
    if path.exists() {
        Ok(())
    } else {
        Err(CliError::FileNotFound(path.to_path_buf()))
    }
}

fn is_wav(path: &Path) -> bool {
    path.extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| e.eq_ignore_ascii_case("wav"))
}

pub fn load_file(path: &Path, fs: Option<f64>) -> CliResult<Waveform> {
    check_exists(path)?;
    if let Some(fs) = fs {
        if !(fs > 0.0 && fs.is_finite()) {
            return Err(CliError::Usage(format!("--fs must be positive, got {fs}")));
        }
    }
    if is_wav(path) {
        load_wav(path, fs)
    } else {
        load_csv(path, fs)
    }
}

/// 16-bit PCM mono only; samples are scaled into [-1, 1) by 1/32768.
pub fn load_wav(path: &Path, fs: Option<f64>) -> CliResult<Waveform> {
    let mut reader = hound::WavReader::open(path)?;
    let spec = reader.spec();
    if spec.channels != 1 {
        return Err(CliError::WavFormat(format!(
            "{} channels, only mono is supported",
            spec.channels
        )));
    }
    if spec.sample_format != hound::SampleFormat::Int || spec.bits_per_sample != 16 {
        return Err(CliError::WavFormat(format!(
            "{}-bit {:?} samples, only 16-bit PCM is supported",
            spec.bits_per_sample, spec.sample_format
        )));
    }
    let xs = reader
        .samples::<i16>()
        .map(|s| s.map(|v| v as f64 / 32768.0))
        .collect::<Result<Vec<_>, _>>()?;
    if xs.is_empty() {
        return Err(CliError::Parse(format!("{}: no samples", path.display())));
    }
    let rate = fs.unwrap_or(spec.sample_rate as f64);
    Ok(Waveform::from_real(&xs, 1.0 / rate)?)
}

/// A CSV file read into named numeric columns.
pub struct Columns {
    names: Vec<String>,
    data: Vec<Vec<f64>>,
    path: String,
}

impl Columns {
    pub fn read(path: &Path) -> CliResult<Columns> {
        check_exists(path)?;
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_path(path)?;
        let names: Vec<String> = reader
            .headers()?
            .iter()
            .map(|h| h.to_ascii_lowercase())
            .collect();
        let mut data = vec![Vec::new(); names.len()];
        for (line, record) in reader.records().enumerate() {
            let record = record?;
            for (col, field) in record.iter().enumerate() {
                let v: f64 = field.parse().map_err(|_| {
                    CliError::Parse(format!(
                        "{}: row {} column '{}': not a number: '{field}'",
                        path.display(),
                        line + 2,
                        names[col]
                    ))
                })?;
                data[col].push(v);
            }
        }
        if data.first().is_none_or(|c| c.is_empty()) {
            return Err(CliError::Parse(format!("{}: no data rows", path.display())));
        }
        Ok(Columns {
            names,
            data,
            path: path.display().to_string(),
        })
    }

    pub fn find(&self, candidates: &[&str]) -> Option<&[f64]> {
        candidates
            .iter()
            .find_map(|c| self.names.iter().position(|n| n == c))
            .map(|i| self.data[i].as_slice())
    }

    pub fn require(&self, candidates: &[&str]) -> CliResult<&[f64]> {
        self.find(candidates).ok_or_else(|| {
            CliError::Parse(format!("{}: missing column '{}'", self.path, candidates[0]))
        })
    }

    fn only_column(&self) -> Option<&[f64]> {
        (self.data.len() == 1).then(|| self.data[0].as_slice())
    }
}

const TIME_COLUMNS: [&str; 3] = ["time_s", "t", "time"];
const VALUE_COLUMNS: [&str; 4] = ["value", "re", "x", "sample"];

/// Samples from `value` (or `re`, `x`, `sample`, or a lone column), an
/// optional `im` column, and an optional time column that supplies the
/// sample rate and start time when `--fs` is not given.
pub fn load_csv(path: &Path, fs: Option<f64>) -> CliResult<Waveform> {
    let cols = Columns::read(path)?;
    let re = cols
        .find(&VALUE_COLUMNS)
        .or_else(|| cols.only_column())
        .ok_or_else(|| CliError::Parse(format!("{}: missing column 'value'", path.display())))?;
    let im = cols.find(&["im"]);
    let samples: Vec<Complex64> = match im {
        Some(im) => re
            .iter()
            .zip(im)
            .map(|(&a, &b)| Complex64::new(a, b))
            .collect(),
        None => re.iter().map(|&a| Complex64::new(a, 0.0)).collect(),
    };
    let time = cols.find(&TIME_COLUMNS);
    let start = time.map_or(0.0, |t| t[0]);
    let interval = match (fs, time) {
        (Some(fs), _) => 1.0 / fs,
        (None, Some(t)) if t.len() >= 2 => (t[t.len() - 1] - t[0]) / (t.len() - 1) as f64,
        _ => 1.0,
    };
    let kind = if samples.iter().all(|z| z.im == 0.0) {
        SampleKind::Real
    } else {
        SampleKind::Complex
    };
    Ok(Waveform::new(samples, interval, start, kind)?)
}

/// Sample rate implied by a spectrum table: `--fs` if given, else the bin
/// spacing times the bin count.
pub fn spectrum_rate(freqs: Option<&[f64]>, n: usize, fs: Option<f64>) -> f64 {
    match (fs, freqs) {
        (Some(fs), _) => fs,
        (None, Some(f)) if n >= 2 => (f[1] - f[0]).abs() * n as f64,
        _ => 1.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn spec(kind: Generator) -> GenSpec {
        GenSpec {
            kind,
            n: 8,
            fs: 4.0,
            freq: 1.0,
            phase: 0.0,
            f0: 0.5,
            f1: 1.0,
            t0: 1.0,
            alpha: 2.0,
        }
    }

    #[test]
    fn aliased_sines_are_bit_identical() {
        let a = GenSpec {
            freq: 3.0,
            ..spec(Generator::Sine)
        }
        .samples();
        let b = GenSpec {
            freq: -1.0,
            ..spec(Generator::Sine)
        }
        .samples();
        let bits = |v: &[f64]| v.iter().map(|x| x.to_bits()).collect::<Vec<_>>();
        assert_eq!(bits(&a), bits(&b));
    }

    #[test]
    fn square_has_half_values_at_jumps() {
        let g = spec(Generator::Square);
        assert_eq!(g.eval(0.0), 0.0);
        assert_eq!(g.eval(0.5), 0.0);
        assert_eq!(g.eval(0.25), 1.0);
        assert_eq!(g.eval(0.75), -1.0);
    }

    #[test]
    fn simple_generators() {
        assert!(spec(Generator::Dc).samples().iter().all(|&x| x == 1.0));
        let imp = spec(Generator::Impulse).samples();
        assert_eq!(imp[0], 1.0);
        assert!(imp[1..].iter().all(|&x| x == 0.0));
        let g = spec(Generator::Gabor);
        assert_eq!(g.eval(1.0), -1.0);
    }

    #[test]
    fn csv_with_time_column() {
        let mut f = tempfile::Builder::new().suffix(".csv").tempfile().unwrap();
        writeln!(f, "t,value\n0.5,1\n0.75,2\n1.0,3").unwrap();
        let w = load_file(f.path(), None).unwrap();
        assert_eq!(w.sample_interval, 0.25);
        assert_eq!(w.start_time, 0.5);
        assert!(w.is_real());
        let w = load_file(f.path(), Some(8.0)).unwrap();
        assert_eq!(w.sample_interval, 0.125);
    }

    #[test]
    fn csv_complex_and_single_column() {
        let mut f = tempfile::Builder::new().suffix(".csv").tempfile().unwrap();
        writeln!(f, "re,im\n1,0\n0,1").unwrap();
        assert!(!load_file(f.path(), None).unwrap().is_real());
        let mut g = tempfile::Builder::new().suffix(".csv").tempfile().unwrap();
        writeln!(g, "amplitude\n1\n2").unwrap();
        assert_eq!(load_file(g.path(), None).unwrap().len(), 2);
    }

    #[test]
    fn csv_errors() {
        assert!(matches!(
            load_file(Path::new("/nonexistent/x.csv"), None),
            Err(CliError::FileNotFound(_))
        ));
        let mut f = tempfile::Builder::new().suffix(".csv").tempfile().unwrap();
        writeln!(f, "value\n1\nabc").unwrap();
        assert!(matches!(load_file(f.path(), None), Err(CliError::Parse(_))));
    }

    #[test]
    fn wav_round_trip_and_rejection() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tone.wav");
        let spec = hound::WavSpec {
            channels: 1,
            sample_rate: 8000,
            bits_per_sample: 16,
            sample_format: hound::SampleFormat::Int,
        };
        let mut w = hound::WavWriter::create(&path, spec).unwrap();
        for v in [0i16, 16384, -32768, 32767] {
            w.write_sample(v).unwrap();
        }
        w.finalize().unwrap();
        let wave = load_file(&path, None).unwrap();
        assert_eq!(wave.sample_interval, 1.0 / 8000.0);
        assert_eq!(wave.real_parts(), vec![0.0, 0.5, -1.0, 32767.0 / 32768.0]);

        let stereo = dir.path().join("stereo.wav");
        let mut w = hound::WavWriter::create(
            &stereo,
            hound::WavSpec {
                channels: 2,
                ..spec
            },
        )
        .unwrap();
        w.write_sample(0i16).unwrap();
        w.write_sample(0i16).unwrap();
        w.finalize().unwrap();
        assert!(matches!(
            load_file(&stereo, None),
            Err(CliError::WavFormat(_))
        ));
    }

    #[test]
    fn interpolation_is_periodic() {
        let w = Waveform::from_real(&[0.0, 1.0, 0.0, -1.0], 0.25).unwrap();
        assert_eq!(interpolate(&w, 0.125), 0.5);
        assert_eq!(interpolate(&w, 0.875), -0.5);
        assert_eq!(interpolate(&w, 1.25), 1.0);
    }
}
