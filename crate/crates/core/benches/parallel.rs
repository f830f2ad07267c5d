use std::f64::consts::PI;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fourierkit::sampling::sinc_reconstruct_many;
use fourierkit::series::{series_coefficients_with, series_spec};
use fourierkit::timefreq::{stft_with, wvd_with};
use fourierkit::transforms::dtft_scan;
use fourierkit::{Execution, Waveform};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn chirp(n: usize, fs: f64) -> Waveform {
    let span = n as f64 / fs;
    let xs: Vec<f64> = (0..n)
        .map(|i| {
            let t = i as f64 / fs;
            (2.0 * PI * (0.05 * fs * t + 0.1 * fs * t * t / span)).cos()
        })
        .collect();
    Waveform::from_real(&xs, 1.0 / fs).unwrap()
}

fn square(t: f64) -> f64 {
    if t.rem_euclid(1.0) < 0.5 {
        1.0
    } else {
        -1.0
    }
}

fn bench_stft(c: &mut Criterion) {
    let mut group = c.benchmark_group("stft");
    let w = chirp(1 << 16, 8000.0);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, w.len()), |b| {
            b.iter(|| stft_with(black_box(&w), 200.0, 64, 512, exec).unwrap())
        });
    }
    group.finish();
}

fn bench_wvd(c: &mut Criterion) {
    let mut group = c.benchmark_group("wvd");
    group.sample_size(20);
    for n in [512, 2048] {
        let w = chirp(n, 1.0);
        for (name, exec) in MODES {
            group.bench_function(BenchmarkId::new(name, n), |b| {
                b.iter(|| wvd_with(black_box(&w), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_series(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    group.sample_size(10);
    let k = 40;
    let spec = series_spec(1.0, k);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, k), |b| {
            b.iter(|| series_coefficients_with(square, 1.0, k, black_box(&spec), exec).unwrap())
        });
    }
    group.finish();
}

fn bench_reconstruct(c: &mut Criterion) {
    let mut group = c.benchmark_group("sinc_reconstruct");
    let w = chirp(1 << 14, 4.0);
    let times: Vec<f64> = (0..4096).map(|i| 100.0 + i as f64 * 0.9137).collect();
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, times.len()), |b| {
            b.iter(|| sinc_reconstruct_many(black_box(&w), &times, 128, exec))
        });
    }
    group.finish();
}

fn bench_dtft(c: &mut Criterion) {
    let mut group = c.benchmark_group("dtft_scan");
    let w = chirp(4096, 1000.0);
    let freqs: Vec<f64> = (0..2048).map(|i| i as f64 * 0.2441).collect();
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, freqs.len()), |b| {
            b.iter(|| dtft_scan(black_box(&w), &freqs, exec))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_stft,
    bench_wvd,
    bench_series,
    bench_reconstruct,
    bench_dtft
);
criterion_main!(benches);
