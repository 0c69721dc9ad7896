use multiscale::spectral::{
    dct2_forward, dct2_inverse, dct_forward, dct_inverse, fft2_forward, fft2_inverse, fft_forward,
    fft_inverse, fft_real, spectral_stage_split, SpectralCoefficients, SpectralDecomposition,
};
use ndarray::Array2;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

const LENGTHS: [usize; 6] = [1, 2, 15, 64, 768, 1024];

fn random(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.random_range(-1.0..1.0)).collect()
}

fn max_err(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn energy(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum()
}

fn naive_dct(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    (0..n)
        .map(|k| {
            let s: f64 = x
                .iter()
                .enumerate()
                .map(|(i, &v)| v * (PI * k as f64 * (2 * i + 1) as f64 / (2 * n) as f64).cos())
                .sum();
            s * if k == 0 { (1.0 / n as f64).sqrt() } else { (2.0 / n as f64).sqrt() }
        })
        .collect()
}

fn naive_dft(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    (0..n)
        .map(|k| {
            x.iter()
                .enumerate()
                .map(|(t, &v)| v * Complex64::from_polar(1.0, -2.0 * PI * (k * t) as f64 / n as f64))
                .sum()
        })
        .collect()
}

#[test]
fn dct_round_trip_and_parseval() {
    for (i, &n) in LENGTHS.iter().enumerate() {
        let x = random(n, i as u64);
        let c = dct_forward(&x);
        assert!(max_err(&dct_inverse(&c), &x) < 1e-10, "n={n}");
        assert!((energy(&c) - energy(&x)).abs() < 1e-10, "n={n}");
    }
    let x = random(1000, 99);
    assert!(max_err(&dct_inverse(&dct_forward(&x)), &x) < 1e-10);
}

#[test]
fn fft_round_trip_and_parseval() {
    for (i, &n) in LENGTHS.iter().chain(&[768]).enumerate() {
        let x = random(n, 50 + i as u64);
        let spec = fft_real(&x);
        let back: Vec<f64> = fft_inverse(&spec).iter().map(|v| v.re).collect();
        assert!(max_err(&back, &x) < 1e-10, "n={n}");
        let spec_energy: f64 = spec.iter().map(|v| v.norm_sqr()).sum::<f64>() / n as f64;
        assert!((spec_energy - energy(&x)).abs() < 1e-10, "n={n}");
    }
}

#[test]
fn dct_matches_symmetric_extension_fft() {
    for n in 1..=16 {
        let x = random(n, 200 + n as u64);
        // y = x followed by x reversed; its DFT carries the DCT-II
        let y: Vec<Complex64> = x
            .iter()
            .chain(x.iter().rev())
            .map(|&v| Complex64::new(v, 0.0))
            .collect();
        let spec = naive_dft(&y);
        let oracle: Vec<f64> = (0..n)
            .map(|k| {
                let half = Complex64::from_polar(1.0, -PI * k as f64 / (2 * n) as f64);
                let scale = if k == 0 { (1.0 / n as f64).sqrt() } else { (2.0 / n as f64).sqrt() };
                (spec[k] * half).re / 2.0 * scale
            })
            .collect();
        assert!(max_err(&dct_forward(&x), &oracle) < 1e-10, "n={n}");
        assert!(max_err(&dct_forward(&x), &naive_dct(&x)) < 1e-10, "n={n}");
    }
}

#[test]
fn fft_matches_naive_dft() {
    for n in [1usize, 2, 3, 7, 15, 16, 30] {
        let x: Vec<Complex64> = random(2 * n, n as u64)
            .chunks(2)
            .map(|p| Complex64::new(p[0], p[1]))
            .collect();
        let fast = fft_forward(&x);
        let slow = naive_dft(&x);
        assert!(fast.iter().zip(&slow).all(|(a, b)| (a - b).norm() < 1e-10), "n={n}");
    }
}

#[test]
fn dct_constant_and_fft_delta_and_tone() {
    let c = dct_forward(&[1.5; 64]);
    assert!((c[0] - 1.5 * 8.0).abs() < 1e-12);
    assert!(c[1..].iter().all(|v| v.abs() < 1e-12));

    let mut delta = vec![0.0; 20];
    delta[0] = 1.0;
    assert!(fft_real(&delta).iter().all(|v| (v - Complex64::new(1.0, 0.0)).norm() < 1e-12));

    let n = 64;
    let k = 5;
    let tone: Vec<f64> = (0..n).map(|t| (2.0 * PI * (k * t) as f64 / n as f64).cos()).collect();
    let spec = fft_real(&tone);
    for (bin, v) in spec.iter().enumerate() {
        if bin == k || bin == n - k {
            assert!((v.re - n as f64 / 2.0).abs() < 1e-9);
        } else {
            assert!(v.norm() < 1e-9, "bin {bin}");
        }
    }
}

#[test]
fn stage_split_reassembles() {
    let x = random(256, 7);
    for d in [SpectralDecomposition::dct(&x), SpectralDecomposition::fft(&x)] {
        assert_eq!(d.band_boundaries, [16, 32, 64, 128]);
        let split = spectral_stage_split(&d).unwrap();
        assert!(max_err(&split.reassemble().invert(), &x) < 1e-10, "{}", d.kind);
        let parts: f64 = std::iter::once(&split.approx_band)
            .chain(&split.detail_bands)
            .map(|b| energy(&b.invert()))
            .sum();
        assert!((parts - energy(&x)).abs() < 1e-9, "{}", d.kind);
    }
}

#[test]
fn dc_lives_in_the_approximation() {
    let x = vec![0.7; 128];
    for d in [SpectralDecomposition::dct(&x), SpectralDecomposition::fft(&x)] {
        let split = spectral_stage_split(&d).unwrap();
        assert!(max_err(&split.approx_band.invert(), &x) < 1e-12);
    }
}

#[test]
fn tone_at_a_third_lands_in_one_band() {
    let n = 240;
    let k = n / 3;
    let dct_tone = dct_inverse(&(0..n).map(|i| if i == k { 1.0 } else { 0.0 }).collect::<Vec<_>>());
    let d = SpectralDecomposition::dct(&dct_tone);
    let split = spectral_stage_split(&d).unwrap();
    let owner = d.band_of(k);
    assert_eq!(owner, 2);
    for (j, band) in split.detail_bands.iter().enumerate() {
        let e = energy(&band.invert());
        if j + 1 == owner {
            assert!((e - 1.0).abs() < 1e-10);
        } else {
            assert!(e < 1e-20);
        }
    }

    let fft_tone: Vec<f64> = (0..n).map(|t| (2.0 * PI * (k * t) as f64 / n as f64).cos()).collect();
    let d = SpectralDecomposition::fft(&fft_tone);
    let split = spectral_stage_split(&d).unwrap();
    let owner = d.band_of(k);
    assert_eq!(owner, d.band_of(n - k));
    for (j, band) in split.detail_bands.iter().enumerate() {
        let e = energy(&band.invert());
        if j + 1 == owner {
            assert!((e - energy(&fft_tone)).abs() < 1e-8);
        } else {
            assert!(e < 1e-18);
        }
    }
    assert!(matches!(d.coefficients, SpectralCoefficients::Complex(_)));
}

#[test]
fn separable_2d_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let img = Array2::from_shape_fn((24, 40), |_| rng.random_range(0.0..255.0));
    let back = dct2_inverse(&dct2_forward(&img));
    assert!((&back - &img).iter().all(|e| e.abs() < 1e-9));
    let c = dct2_forward(&Array2::from_elem((8, 8), 2.0));
    assert!((c[[0, 0]] - 16.0).abs() < 1e-12);

    let z = img.mapv(|v| Complex64::new(v, 0.0));
    let back = fft2_inverse(&fft2_forward(&z));
    assert!(back.iter().zip(&z).all(|(a, b)| (a - b).norm() < 1e-9));
}

proptest! {
    #[test]
    fn dct_is_orthonormal(x in prop::collection::vec(-100.0f64..100.0, 1..200)) {
        let c = dct_forward(&x);
        prop_assert!(max_err(&dct_inverse(&c), &x) < 1e-9);
        prop_assert!((energy(&c) - energy(&x)).abs() <= 1e-10 * energy(&x).max(1.0));
    }
}
