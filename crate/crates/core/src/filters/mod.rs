//! Analysis/synthesis filter quadruples for the discrete wavelet families.
//!
//! Every [`FilterBank`] carries four FIR filters in the usual toolbox
//! ordering: `dec_lo`/`dec_hi` are convolved with the signal during analysis
//! and `rec_lo`/`rec_hi` with the upsampled coefficients during synthesis.
//!
//! Orthogonal families (Haar, Daubechies, Symlet, Coiflet) are built from one
//! scaling filter `h`: the high-pass is its quadrature mirror and the
//! synthesis pair is the time reversal of the analysis pair. Biorthogonal
//! banks store the analysis and synthesis low-pass filters separately; their
//! lengths differ and the bank records where each filter sits so the
//! transform can line them up without zero padding.
//!
//! ```
//! use multiscale::filters::{get_filterbank, WaveletId};
//!
//! let db4 = get_filterbank("db4".parse::<WaveletId>()?)?;
//! assert_eq!(db4.dec_lo().len(), 8);
//! let sum: f64 = db4.dec_lo().iter().sum();
//! assert!((sum - std::f64::consts::SQRT_2).abs() < 1e-12);
//! # Ok::<(), multiscale::Error>(())
//! ```

mod tables;

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Wavelet family without its order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Haar,
    Daubechies,
    Symlet,
    Coiflet,
    Biorthogonal,
}

/// A discrete wavelet: family plus order.
///
/// The canonical text form is what [`fmt::Display`] prints and what
/// [`FromStr`] accepts: `haar`, `db4`, `sym8`, `coif2`, `bior4.4`. Parsing is
/// case-insensitive. Daubechies orders count vanishing moments, so `db4` has
/// eight taps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WaveletId {
    Haar,
    /// `dbN`, N in 1..=10.
    Daubechies(u8),
    /// `symN`, N in 2..=25.
    Symlet(u8),
    /// `coifN`, N in 1..=5.
    Coiflet(u8),
    /// `biorN.M` with N the synthesis and M the analysis order.
    Biorthogonal(u8, u8),
}

const BIOR_ORDERS: [(u8, u8); 5] = [(1, 1), (2, 2), (2, 4), (4, 4), (5, 5)];

impl WaveletId {
    pub fn family(&self) -> Family {
        match self {
            WaveletId::Haar => Family::Haar,
            WaveletId::Daubechies(_) => Family::Daubechies,
            WaveletId::Symlet(_) => Family::Symlet,
            WaveletId::Coiflet(_) => Family::Coiflet,
            WaveletId::Biorthogonal(..) => Family::Biorthogonal,
        }
    }

    pub fn is_orthogonal(&self) -> bool {
        self.family() != Family::Biorthogonal
    }

    /// Whether the order is one this crate has filters for.
    pub fn is_supported(&self) -> bool {
        match *self {
            WaveletId::Haar => true,
            WaveletId::Daubechies(n) => (1..=10).contains(&n),
            WaveletId::Symlet(n) => (2..=25).contains(&n),
            WaveletId::Coiflet(n) => (1..=5).contains(&n),
            WaveletId::Biorthogonal(nr, nd) => BIOR_ORDERS.contains(&(nr, nd)),
        }
    }

    /// Every supported wavelet, in a fixed order.
    pub fn all() -> Vec<WaveletId> {
        let mut out = vec![WaveletId::Haar];
        out.extend((1..=10).map(WaveletId::Daubechies));
        out.extend((2..=25).map(WaveletId::Symlet));
        out.extend((1..=5).map(WaveletId::Coiflet));
        out.extend(BIOR_ORDERS.iter().map(|&(a, b)| WaveletId::Biorthogonal(a, b)));
        out
    }
}

impl fmt::Display for WaveletId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WaveletId::Haar => write!(f, "haar"),
            WaveletId::Daubechies(n) => write!(f, "db{n}"),
            WaveletId::Symlet(n) => write!(f, "sym{n}"),
            WaveletId::Coiflet(n) => write!(f, "coif{n}"),
            WaveletId::Biorthogonal(a, b) => write!(f, "bior{a}.{b}"),
        }
    }
}

impl FromStr for WaveletId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let unsupported = || Error::UnsupportedWavelet(s.to_string());
        let order = |digits: &str| -> Result<u8> {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(unsupported());
            }
            digits.parse::<u8>().map_err(|_| unsupported())
        };

        let id = if lower == "haar" {
            WaveletId::Haar
        } else if let Some(rest) = lower.strip_prefix("bior") {
            let (a, b) = rest.split_once('.').ok_or_else(unsupported)?;
            WaveletId::Biorthogonal(order(a)?, order(b)?)
        } else if let Some(rest) = lower.strip_prefix("coif") {
            WaveletId::Coiflet(order(rest)?)
        } else if let Some(rest) = lower.strip_prefix("sym") {
            WaveletId::Symlet(order(rest)?)
        } else if let Some(rest) = lower.strip_prefix("db") {
            WaveletId::Daubechies(order(rest)?)
        } else {
            return Err(unsupported());
        };

        if id.is_supported() {
            Ok(id)
        } else {
            Err(unsupported())
        }
    }
}

impl Serialize for WaveletId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for WaveletId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Four FIR filters of one wavelet plus the alignment needed to run them.
#[derive(Clone, Debug, PartialEq)]
pub struct FilterBank {
    id: WaveletId,
    dec_lo: Vec<f64>,
    dec_hi: Vec<f64>,
    rec_lo: Vec<f64>,
    rec_hi: Vec<f64>,
    orthogonal: bool,
    align: Alignment,
}

/// Placement of the four filters inside a common even-length frame.
///
/// Tap `k` of a filter with lead `d` sits at frame position `k + d`. For
/// orthogonal banks the frame is the filter length and all leads are zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Alignment {
    pub frame: usize,
    pub dec_lo: usize,
    pub dec_hi: usize,
    pub rec_lo: usize,
    pub rec_hi: usize,
}

impl FilterBank {
    pub fn id(&self) -> WaveletId {
        self.id
    }

    pub fn dec_lo(&self) -> &[f64] {
        &self.dec_lo
    }

    pub fn dec_hi(&self) -> &[f64] {
        &self.dec_hi
    }

    pub fn rec_lo(&self) -> &[f64] {
        &self.rec_lo
    }

    pub fn rec_hi(&self) -> &[f64] {
        &self.rec_hi
    }

    pub fn is_orthogonal(&self) -> bool {
        self.orthogonal
    }

    /// Length of the common frame all four filters fit in.
    pub fn support(&self) -> usize {
        self.align.frame
    }

    pub(crate) fn alignment(&self) -> Alignment {
        self.align
    }

    fn orthogonal(id: WaveletId, scaling: &[f64]) -> Self {
        let dec_lo = scaling.to_vec();
        let dec_hi = qmf(&dec_lo);
        let rec_lo: Vec<f64> = dec_lo.iter().rev().copied().collect();
        let rec_hi: Vec<f64> = dec_hi.iter().rev().copied().collect();
        let frame = dec_lo.len();
        FilterBank {
            id,
            dec_lo,
            dec_hi,
            rec_lo,
            rec_hi,
            orthogonal: true,
            align: Alignment {
                frame,
                dec_lo: 0,
                dec_hi: 0,
                rec_lo: 0,
                rec_hi: 0,
            },
        }
    }

    /// Symmetric odd-length pair: `analysis` is the decomposition low-pass,
    /// `synthesis` the reconstruction low-pass. The high-pass filters are the
    /// modulated opposite low-pass filters, and the low-pass centres sit one
    /// sample apart inside the frame.
    fn biorthogonal(id: WaveletId, analysis: &[f64], synthesis: &[f64]) -> Self {
        if analysis.len().is_multiple_of(2) {
            // bior1.1 is the Haar pair and aligns like an orthogonal bank.
            let mut fb = FilterBank::orthogonal(id, analysis);
            fb.orthogonal = false;
            return fb;
        }
        let frame = analysis.len().max(synthesis.len()) + 1;
        let half = frame / 2;
        let lead_a = half - (analysis.len() - 1) / 2;
        let lead_s = half - 1 - (synthesis.len() - 1) / 2;
        let sign = |k: usize| if k.is_multiple_of(2) { 1.0 } else { -1.0 };

        let dec_hi = synthesis
            .iter()
            .enumerate()
            .map(|(m, &v)| sign(m + lead_s) * v)
            .collect();
        let rec_hi = analysis
            .iter()
            .enumerate()
            .map(|(m, &v)| -sign(m + lead_a) * v)
            .collect();

        FilterBank {
            id,
            dec_lo: analysis.to_vec(),
            dec_hi,
            rec_lo: synthesis.to_vec(),
            rec_hi,
            orthogonal: false,
            align: Alignment {
                frame,
                dec_lo: lead_a,
                dec_hi: lead_s,
                rec_lo: lead_s,
                rec_hi: lead_a,
            },
        }
    }
}

/// Builds the filter bank for `id`.
///
/// Taps come from tables solved at high precision and rounded to `f64`, so
/// the same id always yields bitwise-identical filters.
pub fn get_filterbank(id: WaveletId) -> Result<FilterBank> {
    use tables::*;

    if !id.is_supported() {
        return Err(Error::UnsupportedWavelet(id.to_string()));
    }
    let fb = match id {
        WaveletId::Haar => FilterBank::orthogonal(id, &[FRAC_1_SQRT_2, FRAC_1_SQRT_2]),
        WaveletId::Daubechies(n) => {
            let taps: &[f64] = match n {
                1 => &DB1,
                2 => &DB2,
                3 => &DB3,
                4 => &DB4,
                5 => &DB5,
                6 => &DB6,
                7 => &DB7,
                8 => &DB8,
                9 => &DB9,
                _ => &DB10,
            };
            FilterBank::orthogonal(id, taps)
        }
        WaveletId::Symlet(n) => FilterBank::orthogonal(id, symlet_taps(n)),
        WaveletId::Coiflet(n) => {
            let taps: &[f64] = match n {
                1 => &COIF1,
                2 => &COIF2,
                3 => &COIF3,
                4 => &COIF4,
                _ => &COIF5,
            };
            FilterBank::orthogonal(id, taps)
        }
        WaveletId::Biorthogonal(nr, nd) => {
            let (dec, rec): (&[f64], &[f64]) = match (nr, nd) {
                (1, 1) => (&BIOR11_DEC, &BIOR11_REC),
                (2, 2) => (&BIOR22_DEC, &BIOR22_REC),
                (2, 4) => (&BIOR24_DEC, &BIOR24_REC),
                (4, 4) => (&BIOR44_DEC, &BIOR44_REC),
                _ => (&BIOR55_DEC, &BIOR55_REC),
            };
            FilterBank::biorthogonal(id, dec, rec)
        }
    };
    Ok(fb)
}

fn symlet_taps(n: u8) -> &'static [f64] {
    use tables::*;
    match n {
        2 => &SYM2,
        3 => &SYM3,
        4 => &SYM4,
        5 => &SYM5,
        6 => &SYM6,
        7 => &SYM7,
        8 => &SYM8,
        9 => &SYM9,
        10 => &SYM10,
        11 => &SYM11,
        12 => &SYM12,
        13 => &SYM13,
        14 => &SYM14,
        15 => &SYM15,
        16 => &SYM16,
        17 => &SYM17,
        18 => &SYM18,
        19 => &SYM19,
        20 => &SYM20,
        21 => &SYM21,
        22 => &SYM22,
        23 => &SYM23,
        24 => &SYM24,
        _ => &SYM25,
    }
}

/// Quadrature mirror of a low-pass filter: `g[k] = (-1)^k h[L-1-k]`.
pub fn qmf(lowpass: &[f64]) -> Vec<f64> {
    let len = lowpass.len();
    (0..len)
        .map(|k| {
            let v = lowpass[len - 1 - k];
            if k % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect()
}

/// Moment `p` of a filter about its phase centre `(L-1)/2`.
pub fn centered_moment(taps: &[f64], p: u32) -> f64 {
    let centre = (taps.len() as f64 - 1.0) / 2.0;
    taps.iter()
        .enumerate()
        .map(|(k, &g)| (k as f64 - centre).powi(p as i32) * g)
        .sum()
}

/// Largest `m` with every centred moment of order `0..m` within `tolerance`.
pub fn count_vanishing_moments(dec_hi: &[f64], tolerance: f64) -> usize {
    (0..dec_hi.len())
        .take_while(|&p| centered_moment(dec_hi, p as u32).abs() <= tolerance)
        .count()
}

/// Worst deviations of an orthogonal scaling filter from orthonormality.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrthonormalityReport {
    /// `|sum h[k]^2 - 1|`.
    pub norm_violation: f64,
    /// Largest `|sum h[k] h[k+2m]|` over `m != 0`.
    pub shift_violation: f64,
    pub max_violation: f64,
    pub passed: bool,
}

pub fn check_orthonormality(fb: &FilterBank, tolerance: f64) -> Result<OrthonormalityReport> {
    if !fb.is_orthogonal() {
        return Err(Error::NotOrthogonalFamily(fb.id().to_string()));
    }
    let h = fb.dec_lo();
    let norm: f64 = h.iter().map(|v| v * v).sum();
    let norm_violation = (norm - 1.0).abs();
    let shift_violation = (1..h.len().div_ceil(2))
        .map(|m| {
            h.iter()
                .zip(&h[2 * m..])
                .map(|(a, b)| a * b)
                .sum::<f64>()
                .abs()
        })
        .fold(0.0, f64::max);
    let max_violation = norm_violation.max(shift_violation);
    Ok(OrthonormalityReport {
        norm_violation,
        shift_violation,
        max_violation,
        passed: max_violation <= tolerance,
    })
}
