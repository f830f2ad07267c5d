use fourierkit::sampling::sinc_reconstruct_many;
use fourierkit::series::{series_coefficients, series_spec, series_synthesize};
use fourierkit::timefreq::{gabor_atom_eval, gabor_atom_spectrum, stft, wvd};
use fourierkit::transforms::{bin_to_frequency, dft, fft_with_strategy, idft, ifft_with_strategy};
use fourierkit::{Execution, GaborAtom, Spectrum, TfDistribution};
use num_complex::Complex64;

use crate::args::{
    AtomArgs, Cli, Command, Generator, Method, ReconstructArgs, SampleArgs, SeriesArgs, StftArgs,
    TransformArgs, WvdArgs,
};
use crate::config::{parse_strategy, Settings};
use crate::error::{CliError, CliResult};
use crate::input::{load_signal, spectrum_rate, Columns};
use crate::output::{float, Table};

pub fn run(cli: Cli) -> CliResult<()> {
    let mut settings = Settings::resolve(cli.config.as_deref())?;
    if let Some(tol) = cli.tolerance {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(CliError::Usage(format!(
                "--tolerance must be positive, got {tol}"
            )));
        }
        settings.quad_tolerance = tol;
    }
    if let Some(max) = cli.max_subdivisions {
        settings.max_subdivisions = max;
    }
    if let Some(name) = &cli.fft_strategy {
        settings.fft_strategy = parse_strategy(name).map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let table = match &cli.command {
        Command::Transform(a) => transform(a, &settings)?,
        Command::Series(a) => series(a, &settings)?,
        Command::Sample(a) => sample(a)?,
        Command::Reconstruct(a) => reconstruct(a)?,
        Command::Stft(a) => spectrogram(a)?,
        Command::Wvd(a) => wigner(a)?,
        Command::Atoms(a) => atoms(a)?,
    };
    table.emit(cli.output.as_deref())
}

fn transform(a: &TransformArgs, settings: &Settings) -> CliResult<Table> {
    if a.inverse {
        return inverse_transform(a, settings);
    }
    let signal = load_signal(&a.source, None)?;
    let w = &signal.wave;
    let spectrum = match a.method {
        Method::Dft => dft(w)?,
        Method::Fft => fft_with_strategy(w, settings.fft_strategy)?,
    };
    let n = spectrum.len();
    let fs = w.sample_rate();
    let mut table = Table::new(&["bin", "freq_hz", "re", "im", "mag", "phase"]);
    for (k, z) in spectrum.bins.iter().enumerate() {
        table.push(vec![
            k.to_string(),
            float(bin_to_frequency(k, n, fs)?),
            float(z.re),
            float(z.im),
            float(z.norm()),
            float(z.arg()),
        ]);
    }
    Ok(table)
}

fn inverse_transform(a: &TransformArgs, settings: &Settings) -> CliResult<Table> {
    let path = match (&a.source.input, a.source.gen) {
        (Some(p), None) => p,
        _ => {
            return Err(CliError::Usage(
                "--inverse reads a spectrum CSV file (bin,freq_hz,re,im)".into(),
            ))
        }
    };
    let cols = Columns::read(path)?;
    let re = cols.require(&["re"])?;
    let im = cols.require(&["im"])?;
    let bins: Vec<Complex64> = re
        .iter()
        .zip(im)
        .map(|(&x, &y)| Complex64::new(x, y))
        .collect();
    let n = bins.len();
    let fs = spectrum_rate(cols.find(&["freq_hz"]), n, a.source.fs);
    let spectrum = Spectrum::new(bins, fs / n as f64)?;
    let w = match a.method {
        Method::Dft => idft(&spectrum)?,
        Method::Fft => ifft_with_strategy(&spectrum, settings.fft_strategy)?,
    };
    let mut table = Table::new(&["index", "time_s", "re", "im"]);
    for (i, z) in w.samples.iter().enumerate() {
        table.push(vec![
            i.to_string(),
            float(w.time_at(i)),
            float(z.re),
            float(z.im),
        ]);
    }
    Ok(table)
}

fn series(a: &SeriesArgs, settings: &Settings) -> CliResult<Table> {
    let signal = load_signal(&a.source, None)?;
    let period = a.period.unwrap_or_else(|| signal.natural_period());
    if !(period > 0.0 && period.is_finite()) {
        return Err(CliError::Usage(format!(
            "--period must be positive, got {period}"
        )));
    }
    let spec = series_spec(period, a.k)
        .with_tolerance(settings.quad_tolerance)
        .with_max_subdivisions(settings.max_subdivisions);
    let c = series_coefficients(signal.map(), period, a.k, &spec)?;
    if let Some(points) = a.synthesize {
        let mut table = Table::new(&["t", "value"]);
        for i in 0..points {
            let t = period * i as f64 / points as f64;
            table.push(vec![float(t), float(series_synthesize(&c, t))]);
        }
        return Ok(table);
    }
    let mut table = Table::new(&["n", "a", "b"]);
    table.push(vec!["0".into(), float(c.a0), float(0.0)]);
    for (i, (&an, &bn)) in c.cosine.iter().zip(&c.sine).enumerate() {
        table.push(vec![(i + 1).to_string(), float(an), float(bn)]);
    }
    Ok(table)
}

fn sample(a: &SampleArgs) -> CliResult<Table> {
    let signal = load_signal(&a.source, Some(Generator::Sine))?;
    let w = &signal.wave;
    if w.is_real() {
        let mut table = Table::new(&["index", "time_s", "value"]);
        for (i, z) in w.samples.iter().enumerate() {
            table.push(vec![i.to_string(), float(w.time_at(i)), float(z.re)]);
        }
        Ok(table)
    } else {
        let mut table = Table::new(&["index", "time_s", "re", "im"]);
        for (i, z) in w.samples.iter().enumerate() {
            table.push(vec![
                i.to_string(),
                float(w.time_at(i)),
                float(z.re),
                float(z.im),
            ]);
        }
        Ok(table)
    }
}

fn reconstruct(a: &ReconstructArgs) -> CliResult<Table> {
    let signal = load_signal(&a.source, None)?;
    let w = &signal.wave;
    if a.grid == 0 {
        return Err(CliError::Usage("--grid must be at least 1".into()));
    }
    let span = (w.len() - 1) as f64 * w.sample_interval;
    let times: Vec<f64> = (0..a.grid)
        .map(|j| w.start_time + span * (j as f64 + 0.5) / a.grid as f64)
        .collect();
    let values = sinc_reconstruct_many(w, &times, a.taps, Execution::default());
    match signal.gen.filter(|g| g.is_continuous()) {
        Some(g) => {
            let mut table = Table::new(&["t", "re", "im", "exact", "error"]);
            for (&t, z) in times.iter().zip(&values) {
                let exact = g.eval(t);
                table.push(vec![
                    float(t),
                    float(z.re),
                    float(z.im),
                    float(exact),
                    float((z.re - exact).abs()),
                ]);
            }
            Ok(table)
        }
        None => {
            let mut table = Table::new(&["t", "re", "im"]);
            for (&t, z) in times.iter().zip(&values) {
                table.push(vec![float(t), float(z.re), float(z.im)]);
            }
            Ok(table)
        }
    }
}

fn long_form(d: &TfDistribution, value: impl Fn(Complex64) -> f64) -> Table {
    let mut table = Table::new(&["t", "f", "value"]);
    for (r, &t) in d.time_axis.iter().enumerate() {
        for (k, &f) in d.freq_axis.iter().enumerate() {
            table.push(vec![float(t), float(f), float(value(d.values[[r, k]]))]);
        }
    }
    table
}

fn spectrogram(a: &StftArgs) -> CliResult<Table> {
    let signal = load_signal(&a.source, None)?;
    let hop = a.hop.unwrap_or((a.frame / 4).max(1));
    let d = stft(&signal.wave, a.alpha, hop, a.frame)?;
    Ok(long_form(&d, |z| z.norm()))
}

fn wigner(a: &WvdArgs) -> CliResult<Table> {
    let signal = load_signal(&a.source, None)?;
    let d = wvd(&signal.wave)?;
    Ok(long_form(&d, |z| z.re))
}

fn atoms(a: &AtomArgs) -> CliResult<Table> {
    let g = GaborAtom::new(a.t0, a.f0, a.alpha, a.phase)?;
    if !(a.fs > 0.0 && a.fs.is_finite()) {
        return Err(CliError::Usage(format!(
            "--fs must be positive, got {}",
            a.fs
        )));
    }
    if a.spectrum {
        let mut table = Table::new(&["f", "re", "im", "mag"]);
        let half = (a.n / 2) as f64;
        for j in 0..a.n {
            let f = a.f0 + (j as f64 - half) * a.fs / a.n as f64;
            let z = gabor_atom_spectrum(&g, f);
            table.push(vec![float(f), float(z.re), float(z.im), float(z.norm())]);
        }
        Ok(table)
    } else {
        let mut table = Table::new(&["t", "re", "im", "envelope"]);
        for j in 0..a.n {
            let t = j as f64 / a.fs;
            let z = gabor_atom_eval(&g, t);
            table.push(vec![float(t), float(z.re), float(z.im), float(z.norm())]);
        }
        Ok(table)
    }
}
