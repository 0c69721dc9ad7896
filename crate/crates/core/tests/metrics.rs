use multiscale::metrics::{
    entropy_bits, histogram_mean, mse, psnr_db, quality_report, snr_db, QualityConfig,
};
use multiscale::{decompose, reconstruct, ExtensionMode, WaveletId};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pair(n: usize, seed: u64) -> (Vec<f64>, Vec<f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a: Vec<f64> = (0..n).map(|_| rng.random_range(-10.0..10.0)).collect();
    let b = a.iter().map(|v| v + rng.random_range(-1.0..1.0)).collect();
    (a, b)
}

fn naive_mse(a: &[f64], b: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..a.len() {
        s += (a[i] - b[i]).powi(2);
    }
    s / a.len() as f64
}

fn naive_snr(a: &[f64], b: &[f64]) -> f64 {
    let mut sig = 0.0;
    let mut err = 0.0;
    for i in 0..a.len() {
        sig += a[i] * a[i];
        err += (a[i] - b[i]).powi(2);
    }
    10.0 * (sig / err).log10()
}

fn naive_entropy(v: &[f64], bins: usize, lo: f64, hi: f64) -> f64 {
    let mut counts = vec![0usize; bins];
    for &x in v {
        let mut k = ((x.max(lo).min(hi) - lo) / (hi - lo) * bins as f64) as usize;
        if k >= bins {
            k = bins - 1;
        }
        counts[k] += 1;
    }
    let mut h = 0.0;
    for c in counts {
        if c > 0 {
            let p = c as f64 / v.len() as f64;
            h -= p * p.log2();
        }
    }
    h
}

#[test]
fn metrics_match_naive_oracles() {
    for seed in 0..100 {
        let (a, b) = pair(50 + seed as usize, seed);
        assert!((mse(&a, &b).unwrap() - naive_mse(&a, &b)).abs() < 1e-9);
        assert!((snr_db(&a, &b).unwrap() - naive_snr(&a, &b)).abs() < 1e-9);
        let p = 10.0 * (20.0f64.powi(2) / naive_mse(&a, &b)).log10();
        assert!((psnr_db(&a, &b, 20.0).unwrap() - p).abs() < 1e-9);
        let e = naive_entropy(&b, 256, -10.0, 10.0);
        assert!((entropy_bits(&b, 256, (-10.0, 10.0)).unwrap() - e).abs() < 1e-9);
        let hm = histogram_mean(&b, 256, (-10.0, 10.0)).unwrap();
        assert!((hm - b.len() as f64 / 256.0).abs() < 1e-12);
    }
}

#[test]
fn uniform_histogram_has_eight_bits() {
    let data: Vec<f64> = (0..256 * 4).map(|k| (k % 256) as f64 + 0.5).collect();
    let h = entropy_bits(&data, 256, (0.0, 256.0)).unwrap();
    assert!((h - 8.0).abs() < 1e-12);
}

#[test]
fn eight_bit_psnr_at_unit_mse() {
    let a = vec![10.0; 64];
    let b: Vec<f64> = (0..64).map(|k| if k % 2 == 0 { 11.0 } else { 9.0 }).collect();
    let p = psnr_db(&a, &b, 255.0).unwrap();
    assert!((p - 48.130_803_608_679_1).abs() < 1e-9);
}

#[test]
fn round_trip_report_measures_fidelity() {
    let (x, _) = pair(1024, 5);
    let d = decompose(&x, WaveletId::Daubechies(4), 4, ExtensionMode::Periodic).unwrap();
    let y = reconstruct(&d).unwrap();
    let r = quality_report(&x, &y, &QualityConfig::default()).unwrap();
    assert!(r.mse < 1e-16);
    assert!(r.entropy_bits > 0.0 && r.entropy_bits <= 8.0);
    assert_eq!(r.histogram_mean, 4.0);
}

proptest! {
    #[test]
    fn mse_is_symmetric_and_nonnegative(seed in any::<u64>(), n in 1usize..100) {
        let (a, b) = pair(n, seed);
        let m = mse(&a, &b).unwrap();
        prop_assert!(m >= 0.0);
        prop_assert_eq!(m, mse(&b, &a).unwrap());
    }

    #[test]
    fn snr_and_psnr_fall_as_error_grows(seed in any::<u64>(), k in 1.01f64..10.0) {
        let (a, b) = pair(64, seed);
        let worse: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x + k * (y - x)).collect();
        prop_assert!(mse(&a, &worse).unwrap() > mse(&a, &b).unwrap());
        prop_assert!(snr_db(&a, &worse).unwrap() < snr_db(&a, &b).unwrap());
        prop_assert!(psnr_db(&a, &worse, 10.0).unwrap() < psnr_db(&a, &b, 10.0).unwrap());
    }

    #[test]
    fn entropy_is_bounded_and_order_free(seed in any::<u64>(), bins in 2usize..300) {
        let (a, _) = pair(200, seed);
        let h = entropy_bits(&a, bins, (-10.0, 10.0)).unwrap();
        prop_assert!(h >= 0.0 && h <= (bins as f64).log2() + 1e-12);
        let mut shuffled = a.clone();
        shuffled.reverse();
        shuffled.rotate_left((seed % 200) as usize);
        prop_assert_eq!(h, entropy_bits(&shuffled, bins, (-10.0, 10.0)).unwrap());
    }

    #[test]
    fn histogram_mean_ignores_values(seed in any::<u64>(), n in 1usize..500) {
        let (a, b) = pair(n, seed);
        prop_assert_eq!(
            histogram_mean(&a, 256, (-10.0, 10.0)).unwrap(),
            histogram_mean(&b, 256, (-10.0, 10.0)).unwrap()
        );
    }
}
