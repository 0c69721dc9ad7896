//! Synthetic fingerprint-like test image.
//!
//! Dark ridges roughly 9 pixels apart wind around a core inside an elliptical
//! pad on a light background, with a little sensor noise. The repository
//! ships one 256x256 rendering as `data/fingerprint256.pgm`; that file, not
//! a fresh rendering, is what the compression golden numbers refer to.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::io::{read_pgm, GrayImage};

/// Seed used for the bundled image.
pub const FINGERPRINT_SEED: u64 = 1_2021;

const BUNDLED: &[u8] = include_bytes!("../data/fingerprint256.pgm");

/// The bundled 256x256 test image.
pub fn bundled_fingerprint() -> GrayImage {
    read_pgm(BUNDLED).expect("bundled image is a valid PGM")
}

struct Warp {
    amp: f64,
    fx: f64,
    fy: f64,
    phase: f64,
}

/// Renders a fingerprint-like image. Same arguments, same pixels on any one
/// platform; across platforms `sin`/`exp` rounding may move a pixel by one
/// level.
pub fn fingerprint(rows: usize, cols: usize, seed: u64) -> GrayImage {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (h, w) = (rows as f64, cols as f64);
    let cy = h * (0.45 + 0.05 * rng.random::<f64>());
    let cx = w * (0.47 + 0.06 * rng.random::<f64>());
    let (ay, ax) = (0.46 * h, 0.38 * w);
    let period = 9.0 * (rows.min(cols) as f64 / 256.0).max(0.25);

    let warps: Vec<Warp> = (0..4)
        .map(|_| Warp {
            amp: period * (0.15 + 0.25 * rng.random::<f64>()),
            fx: 2.0 * PI * (0.5 + 1.5 * rng.random::<f64>()) / w,
            fy: 2.0 * PI * (0.5 + 1.5 * rng.random::<f64>()) / h,
            phase: 2.0 * PI * rng.random::<f64>(),
        })
        .collect();
    let noise = Normal::new(0.0, 4.0).expect("valid deviation");

    let mut pixels = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let (y, x) = (r as f64 - cy, c as f64 - cx);
            let warp: f64 = warps
                .iter()
                .map(|k| k.amp * (k.fx * x + k.fy * y + k.phase).sin())
                .sum();
            // loop-shaped ridges: stretched vertically, opening towards the bottom
            let theta = y.atan2(x);
            let radius = (x * x + (0.8 * y) * (0.8 * y)).sqrt();
            let arch = 0.35 * radius * (0.5 * (1.0 + theta.sin())).powi(2);
            let phase = 2.0 * PI * (radius + arch + warp) / period;
            let ridge = 128.0 - 95.0 * phase.cos();

            let rho = ((x / ax).powi(2) + (y / ay).powi(2)).sqrt();
            let pad = ((1.0 - rho) / 0.06).clamp(0.0, 1.0);
            let value = 228.0 * (1.0 - pad) + ridge * pad + noise.sample(&mut rng);
            pixels.push(value.clamp(0.0, 255.0).round() as u8);
        }
    }
    GrayImage::new(rows, cols, pixels).expect("positive dimensions")
}
