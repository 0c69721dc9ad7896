//! Single-level and cascaded 1D analysis/synthesis.
//!
//! One analysis level convolves the signal with `dec_lo` and `dec_hi` and
//! keeps every second output; synthesis upsamples both halves by two,
//! convolves with `rec_lo`/`rec_hi` and adds. Outputs are anchored so that the
//! Haar bank turns the pair `(x[2i], x[2i+1])` into approximation `i`.
//!
//! Under [`ExtensionMode::Periodic`] the pair is an exact inverse for every
//! supported bank. [`ExtensionMode::Symmetric`] mirrors the input at its ends
//! (half-sample symmetry) and is exact away from the borders only.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filters::{get_filterbank, FilterBank, WaveletId};
use crate::io::{rows_1d, CoeffRow, CoeffTable};

/// Boundary handling for the analysis convolution.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtensionMode {
    #[default]
    Periodic,
    Symmetric,
}

impl std::str::FromStr for ExtensionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "periodic" | "per" => Ok(ExtensionMode::Periodic),
            "symmetric" | "sym" => Ok(ExtensionMode::Symmetric),
            _ => Err(Error::InvalidParameter(format!("unknown extension mode `{s}`"))),
        }
    }
}

impl std::fmt::Display for ExtensionMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ExtensionMode::Periodic => "periodic",
            ExtensionMode::Symmetric => "symmetric",
        })
    }
}

impl ExtensionMode {
    #[inline]
    pub(crate) fn index(self, j: isize, n: usize) -> usize {
        let n = n as isize;
        match self {
            ExtensionMode::Periodic => j.rem_euclid(n) as usize,
            ExtensionMode::Symmetric => {
                let r = j.rem_euclid(2 * n);
                if r < n {
                    r as usize
                } else {
                    (2 * n - 1 - r) as usize
                }
            }
        }
    }
}

/// Stage-L pyramid of a 1D signal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Decomposition1D {
    pub wavelet: WaveletId,
    pub levels: usize,
    /// Level-`levels` approximation.
    pub approx: Vec<f64>,
    /// Detail coefficients, finest (level 1) first.
    pub details: Vec<Vec<f64>>,
    pub original_length: usize,
    pub extension: ExtensionMode,
}

impl Decomposition1D {
    /// Length after padding to a multiple of `2^levels`.
    pub fn padded_length(&self) -> usize {
        self.approx.len() << self.levels
    }

    /// Sum of squares over every stored coefficient.
    pub fn energy(&self) -> f64 {
        let sq = |v: &[f64]| v.iter().map(|c| c * c).sum::<f64>();
        sq(&self.approx) + self.details.iter().map(|d| sq(d)).sum::<f64>()
    }

    pub fn coefficient_count(&self) -> usize {
        self.approx.len() + self.details.iter().map(Vec::len).sum::<usize>()
    }
}

impl CoeffTable for Decomposition1D {
    /// Details finest first, then the approximation.
    fn coeff_rows(&self) -> Vec<CoeffRow> {
        let mut rows: Vec<CoeffRow> = self
            .details
            .iter()
            .enumerate()
            .flat_map(|(j, d)| rows_1d(j + 1, "detail", d))
            .collect();
        rows.extend(rows_1d(self.levels, "approx", &self.approx));
        rows
    }
}

fn correlate_down(
    signal: &[f64],
    taps: &[f64],
    lead: usize,
    frame: usize,
    ext: ExtensionMode,
) -> Vec<f64> {
    let n = signal.len();
    let base = frame as isize - 1 - lead as isize;
    (0..n.div_ceil(2))
        .map(|i| {
            let anchor = 2 * i as isize + base;
            taps.iter()
                .enumerate()
                .map(|(m, &t)| t * signal[ext.index(anchor - m as isize, n)])
                .sum()
        })
        .collect()
}

fn accumulate_up(out: &mut [f64], coeffs: &[f64], taps: &[f64], lead: usize) {
    let n = out.len();
    for (i, &c) in coeffs.iter().enumerate() {
        let start = 2 * i + lead;
        for (m, &t) in taps.iter().enumerate() {
            out[(start + m) % n] += c * t;
        }
    }
}

/// One analysis level: `(approx, detail)`, each half the input length.
pub fn analyze_level(
    signal: &[f64],
    fb: &FilterBank,
    ext: ExtensionMode,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = signal.len();
    if n < 2 {
        return Err(Error::SignalTooShort { len: n, min: 2 });
    }
    if ext == ExtensionMode::Periodic && !n.is_multiple_of(2) {
        return Err(Error::OddLengthPeriodic(n));
    }
    let a = fb.alignment();
    let approx = correlate_down(signal, fb.dec_lo(), a.dec_lo, a.frame, ext);
    let detail = correlate_down(signal, fb.dec_hi(), a.dec_hi, a.frame, ext);
    Ok((approx, detail))
}

/// Inverts [`analyze_level`]; `out_length` is the length of the analysed signal.
pub fn synthesize_level(
    approx: &[f64],
    detail: &[f64],
    fb: &FilterBank,
    ext: ExtensionMode,
    out_length: usize,
) -> Result<Vec<f64>> {
    if approx.len() != detail.len() {
        return Err(Error::LengthMismatch {
            approx: approx.len(),
            detail: detail.len(),
        });
    }
    if approx.is_empty() {
        return Err(Error::SignalTooShort { len: 0, min: 1 });
    }
    let fits = match ext {
        ExtensionMode::Periodic => out_length == 2 * approx.len(),
        ExtensionMode::Symmetric => out_length.div_ceil(2) == approx.len(),
    };
    if !fits {
        return Err(Error::InvalidParameter(format!(
            "output length {out_length} does not match {} coefficients per band",
            approx.len()
        )));
    }
    let a = fb.alignment();
    let mut out = vec![0.0; out_length];
    accumulate_up(&mut out, approx, fb.rec_lo(), a.rec_lo);
    accumulate_up(&mut out, detail, fb.rec_hi(), a.rec_hi);
    Ok(out)
}

/// Extends `signal` by periodic wrap to a multiple of `block`.
pub(crate) fn pad_periodic(signal: &[f64], block: usize) -> Vec<f64> {
    let n = signal.len();
    let padded = n.div_ceil(block) * block;
    (0..padded).map(|i| signal[i % n]).collect()
}

pub(crate) fn check_levels(levels: usize, len: usize) -> Result<()> {
    if levels == 0 {
        return Err(Error::InvalidParameter("levels must be at least 1".into()));
    }
    let max = if len == 0 { 0 } else { len.ilog2() as usize };
    if levels > max {
        return Err(Error::TooManyLevels { levels, len, max });
    }
    Ok(())
}

/// Cascades [`analyze_level`] `levels` times down the approximation branch.
///
/// Inputs whose length is not a multiple of `2^levels` are extended by
/// periodic wrap first; [`reconstruct`] trims the result back.
pub fn decompose(
    signal: &[f64],
    wavelet: WaveletId,
    levels: usize,
    ext: ExtensionMode,
) -> Result<Decomposition1D> {
    let fb = get_filterbank(wavelet)?;
    decompose_with(signal, &fb, levels, ext)
}

pub fn decompose_with(
    signal: &[f64],
    fb: &FilterBank,
    levels: usize,
    ext: ExtensionMode,
) -> Result<Decomposition1D> {
    if signal.is_empty() {
        return Err(Error::SignalTooShort { len: 0, min: 2 });
    }
    check_levels(levels, signal.len())?;
    let mut approx = pad_periodic(signal, 1 << levels);
    let mut details = Vec::with_capacity(levels);
    for _ in 0..levels {
        let (a, d) = analyze_level(&approx, fb, ext)?;
        details.push(d);
        approx = a;
    }
    Ok(Decomposition1D {
        wavelet: fb.id(),
        levels,
        approx,
        details,
        original_length: signal.len(),
        extension: ext,
    })
}

fn validate(d: &Decomposition1D) -> Result<()> {
    let bad = |msg: String| Err(Error::MalformedDecomposition(msg));
    if d.levels == 0 || d.details.len() != d.levels {
        return bad(format!(
            "{} detail bands for {} levels",
            d.details.len(),
            d.levels
        ));
    }
    if d.approx.is_empty() {
        return bad("empty approximation".into());
    }
    let mut expected = d.approx.len();
    for (j, band) in d.details.iter().enumerate().rev() {
        if band.len() != expected {
            return bad(format!(
                "level {} detail has {} coefficients, expected {expected}",
                j + 1,
                band.len()
            ));
        }
        expected *= 2;
    }
    if d.original_length == 0 || d.original_length > expected {
        return bad(format!(
            "original length {} does not fit padded length {expected}",
            d.original_length
        ));
    }
    Ok(())
}

/// Inverts [`decompose`], returning `original_length` samples.
pub fn reconstruct(d: &Decomposition1D) -> Result<Vec<f64>> {
    let fb = get_filterbank(d.wavelet)?;
    reconstruct_with(d, &fb)
}

pub fn reconstruct_with(d: &Decomposition1D, fb: &FilterBank) -> Result<Vec<f64>> {
    validate(d)?;
    let mut current = d.approx.clone();
    for detail in d.details.iter().rev() {
        current = synthesize_level(&current, detail, fb, d.extension, 2 * detail.len())?;
    }
    current.truncate(d.original_length);
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::SQRT_2;

    fn fb(name: &str) -> FilterBank {
        get_filterbank(name.parse().unwrap()).unwrap()
    }

    fn random(n: usize, seed: u64) -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n).map(|_| rng.random_range(-1.0..1.0)).collect()
    }

    fn max_err(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }

    #[test]
    fn haar_constant_signal() {
        let c = 3.5;
        let (a, d) = analyze_level(&[c; 8], &fb("haar"), ExtensionMode::Periodic).unwrap();
        for v in a {
            assert!((v - c * SQRT_2).abs() < 1e-14);
        }
        assert!(d.iter().all(|v| v.abs() < 1e-15));
    }

    #[test]
    fn haar_alternating_signal() {
        let x: Vec<f64> = (0..8).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
        let (a, d) = analyze_level(&x, &fb("haar"), ExtensionMode::Periodic).unwrap();
        assert!(a.iter().all(|v| v.abs() < 1e-15));
        // difference x[2i+1] - x[2i] scaled by 1/sqrt 2
        for v in d {
            assert!((v.abs() - SQRT_2).abs() < 1e-14);
        }
    }

    #[test]
    fn haar_pairs_are_anchored_at_even_samples() {
        let x = [1.0, 2.0, 10.0, 20.0];
        let (a, _) = analyze_level(&x, &fb("haar"), ExtensionMode::Periodic).unwrap();
        assert!((a[0] - 3.0 / SQRT_2).abs() < 1e-14);
        assert!((a[1] - 30.0 / SQRT_2).abs() < 1e-14);
    }

    #[test]
    fn db4_single_level_parseval() {
        let x = random(64, 1);
        let (a, d) = analyze_level(&x, &fb("db4"), ExtensionMode::Periodic).unwrap();
        let e = |v: &[f64]| v.iter().map(|c| c * c).sum::<f64>();
        assert!((e(&a) + e(&d) - e(&x)).abs() < 1e-10);
    }

    #[test]
    fn single_level_round_trips() {
        let x = random(128, 2);
        for (name, tol) in [("haar", 1e-12), ("bior4.4", 1e-10), ("db10", 1e-10)] {
            let b = fb(name);
            let (a, d) = analyze_level(&x, &b, ExtensionMode::Periodic).unwrap();
            let y = synthesize_level(&a, &d, &b, ExtensionMode::Periodic, 128).unwrap();
            assert!(max_err(&x, &y) < tol, "{name}");
        }
    }

    #[test]
    fn synthesis_of_constant_approximation() {
        let c = -2.0;
        let y = synthesize_level(
            &[c * SQRT_2; 4],
            &[0.0; 4],
            &fb("haar"),
            ExtensionMode::Periodic,
            8,
        )
        .unwrap();
        assert!(y.iter().all(|v| (v - c).abs() < 1e-14));
    }

    #[test]
    fn level_errors() {
        let b = fb("haar");
        assert!(matches!(
            analyze_level(&[1.0], &b, ExtensionMode::Periodic),
            Err(Error::SignalTooShort { .. })
        ));
        assert!(matches!(
            analyze_level(&[1.0, 2.0, 3.0], &b, ExtensionMode::Periodic),
            Err(Error::OddLengthPeriodic(3))
        ));
        assert!(analyze_level(&[1.0, 2.0, 3.0], &b, ExtensionMode::Symmetric).is_ok());
        assert!(matches!(
            synthesize_level(&[1.0, 2.0], &[1.0], &b, ExtensionMode::Periodic, 4),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn voice_frame_lengths() {
        let d = decompose(&random(1024, 3), WaveletId::Haar, 4, ExtensionMode::Periodic).unwrap();
        assert_eq!(d.approx.len(), 64);
        let lens: Vec<usize> = d.details.iter().map(Vec::len).collect();
        assert_eq!(lens, vec![512, 256, 128, 64]);
    }

    #[test]
    fn impulse_energy_and_support() {
        let mut x = vec![0.0; 16];
        x[0] = 1.0;
        let d = decompose(&x, WaveletId::Haar, 2, ExtensionMode::Periodic).unwrap();
        assert!((d.energy() - 1.0).abs() < 1e-12);
        // only the first dyadic block at each scale sees the impulse
        assert!(d.details[0][1..].iter().all(|&v| v == 0.0));
        assert!(d.details[1][1..].iter().all(|&v| v == 0.0));
        assert!(d.approx[1..].iter().all(|&v| v == 0.0));
        assert!(d.details[0][0] != 0.0 && d.details[1][0] != 0.0 && d.approx[0] != 0.0);
    }

    #[test]
    fn too_many_levels() {
        assert!(matches!(
            decompose(&[1.0; 8], WaveletId::Haar, 4, ExtensionMode::Periodic),
            Err(Error::TooManyLevels { .. })
        ));
        assert!(decompose(&[1.0; 8], WaveletId::Haar, 0, ExtensionMode::Periodic).is_err());
    }

    #[test]
    fn odd_length_is_padded_and_trimmed() {
        let x = random(100, 4);
        let d = decompose(&x, WaveletId::Symlet(4), 3, ExtensionMode::Periodic).unwrap();
        assert_eq!(d.padded_length(), 104);
        let y = reconstruct(&d).unwrap();
        assert_eq!(y.len(), 100);
        assert!(max_err(&x, &y) < 1e-10);
    }

    #[test]
    fn zeroed_details_keep_constant() {
        let mut d = decompose(&[0.75; 64], WaveletId::Haar, 4, ExtensionMode::Periodic).unwrap();
        d.details.iter_mut().for_each(|b| b.fill(0.0));
        let y = reconstruct(&d).unwrap();
        assert!(y.iter().all(|v| (v - 0.75).abs() < 1e-14));
    }

    #[test]
    fn malformed_decompositions_are_rejected() {
        let d = decompose(&random(64, 5), WaveletId::Haar, 3, ExtensionMode::Periodic).unwrap();
        let mut short = d.clone();
        short.details.pop();
        assert!(matches!(reconstruct(&short), Err(Error::MalformedDecomposition(_))));
        let mut wrong = d.clone();
        wrong.details[1].push(0.0);
        assert!(matches!(reconstruct(&wrong), Err(Error::MalformedDecomposition(_))));
        let mut long = d;
        long.original_length = 65;
        assert!(matches!(reconstruct(&long), Err(Error::MalformedDecomposition(_))));
    }

    #[test]
    fn symmetric_extension_is_exact_in_the_interior() {
        let x = random(256, 6);
        for name in ["db4", "bior4.4", "sym8"] {
            let b = fb(name);
            let (a, d) = analyze_level(&x, &b, ExtensionMode::Symmetric).unwrap();
            let y = synthesize_level(&a, &d, &b, ExtensionMode::Symmetric, 256).unwrap();
            let margin = 2 * b.support();
            assert!(max_err(&x[margin..256 - margin], &y[margin..256 - margin]) < 1e-10);
        }
    }

    #[test]
    fn symmetric_index_mirrors_half_sample() {
        let e = ExtensionMode::Symmetric;
        assert_eq!(e.index(-1, 4), 0);
        assert_eq!(e.index(-2, 4), 1);
        assert_eq!(e.index(4, 4), 3);
        assert_eq!(e.index(5, 4), 2);
        assert_eq!(e.index(9, 4), 1);
    }
}
