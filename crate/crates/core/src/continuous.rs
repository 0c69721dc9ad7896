//! Octave-band analysis with Morlet, Cauchy and Shannon wavelets.
//!
//! These wavelets have no finite filter, so each stage is a zero-phase
//! filter applied in the frequency domain to one period of the signal. Band
//! `j` (1 = finest) keeps `Ψ̂(2^j |ω|)` of the spectrum, and a low-pass
//! residual catches what lies below the coarsest band. Nothing is decimated:
//! every band has the input's length.
//!
//! Synthesis is the adjoint divided by the frame sum
//! `S(ω) = Σ_j Ψ̂(2^j ω)² + φ̂(ω)²`. Shannon bands tile the spectrum, so
//! `S = 1` and the round trip is exact. For Morlet and Cauchy the sum is
//! floored at `1e-6 · max S`; content where `S` is below the floor is lost.
//!
//! ```
//! use multiscale::continuous::{dyadic_cwt_analyze, dyadic_cwt_synthesize, ContinuousWaveletId};
//!
//! let x: Vec<f64> = (0..256).map(|n| (0.3 * n as f64).sin()).collect();
//! let d = dyadic_cwt_analyze(&x, ContinuousWaveletId::Shannon, 4)?;
//! assert_eq!(d.bands.len(), 4);
//! let y = dyadic_cwt_synthesize(&d)?;
//! assert!(x.iter().zip(&y).all(|(a, b)| (a - b).abs() < 1e-9));
//! # Ok::<(), multiscale::Error>(())
//! ```

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::io::{rows_1d, CoeffRow, CoeffTable};
use crate::spectral::{fft_inverse, fft_real};

/// Mother wavelets realized as octave filters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ContinuousWaveletId {
    /// Gaussian bump centred on `omega0` radians per sample.
    Morlet { omega0: f64 },
    /// `(ω/p)^p e^{p-ω}` on positive frequencies.
    Cauchy { order: u32 },
    /// Ideal octave `(π, 2π]`.
    Shannon,
}

impl ContinuousWaveletId {
    pub const MORLET: ContinuousWaveletId = ContinuousWaveletId::Morlet { omega0: 5.0 };
    pub const CAUCHY: ContinuousWaveletId = ContinuousWaveletId::Cauchy { order: 1 };

    /// Peak-normalized mother response at `omega >= 0`.
    pub fn mother(&self, omega: f64) -> f64 {
        match *self {
            ContinuousWaveletId::Morlet { omega0 } => (-(omega - omega0).powi(2) / 2.0).exp(),
            ContinuousWaveletId::Cauchy { order } => {
                let p = order as f64;
                if omega <= 0.0 {
                    0.0
                } else {
                    (omega / p).powf(p) * (p - omega).exp()
                }
            }
            ContinuousWaveletId::Shannon => {
                if omega > PI && omega <= 2.0 * PI {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }

    fn centre(&self) -> f64 {
        match *self {
            ContinuousWaveletId::Morlet { omega0 } => omega0,
            ContinuousWaveletId::Cauchy { order } => order as f64,
            ContinuousWaveletId::Shannon => 1.5 * PI,
        }
    }

    /// Response of band `j` (1 = finest) at frequency `omega`.
    pub fn band_response(&self, j: usize, omega: f64) -> f64 {
        self.mother((1u64 << j) as f64 * omega.abs())
    }

    /// Response of the residual low-pass after `levels` bands.
    pub fn residual_response(&self, levels: usize, omega: f64) -> f64 {
        let scaled = (1u64 << levels) as f64 * omega.abs();
        match self {
            ContinuousWaveletId::Shannon => {
                if scaled <= PI {
                    1.0
                } else {
                    0.0
                }
            }
            // half height at the coarsest band's centre
            _ => (-(scaled / self.centre()).powi(2) / 2.0).exp(),
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            ContinuousWaveletId::Morlet { omega0 } if omega0.is_nan() || omega0 < 5.0 => Err(Error::InvalidParameter(
                format!("Morlet centre frequency must be at least 5, got {omega0}"),
            )),
            ContinuousWaveletId::Cauchy { order: 0 } => {
                Err(Error::InvalidParameter("Cauchy order must be at least 1".into()))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for ContinuousWaveletId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ContinuousWaveletId::Morlet { omega0: 5.0 } => f.write_str("morlet"),
            ContinuousWaveletId::Morlet { omega0 } => write!(f, "morlet:{omega0}"),
            ContinuousWaveletId::Cauchy { order: 1 } => f.write_str("cauchy"),
            ContinuousWaveletId::Cauchy { order } => write!(f, "cauchy:{order}"),
            ContinuousWaveletId::Shannon => f.write_str("shannon"),
        }
    }
}

/// Accepts `morlet`, `morlet:<omega0>`, `cauchy`, `cauchy:<order>` and
/// `shannon`, case-insensitively.
impl FromStr for ContinuousWaveletId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let (name, arg) = match lower.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (lower.as_str(), None),
        };
        let unsupported = || Error::UnsupportedWavelet(s.to_string());
        let id = match (name, arg) {
            ("morlet", None) => ContinuousWaveletId::MORLET,
            ("morlet", Some(a)) => ContinuousWaveletId::Morlet {
                omega0: a.parse().map_err(|_| unsupported())?,
            },
            ("cauchy", None) => ContinuousWaveletId::CAUCHY,
            ("cauchy", Some(a)) => ContinuousWaveletId::Cauchy {
                order: a.parse().map_err(|_| unsupported())?,
            },
            ("shannon", None) => ContinuousWaveletId::Shannon,
            _ => return Err(unsupported()),
        };
        id.validate()?;
        Ok(id)
    }
}

/// Undecimated octave bands of one signal period.
#[derive(Clone, Debug, PartialEq)]
pub struct DyadicCwtDecomposition {
    pub wavelet: ContinuousWaveletId,
    pub levels: usize,
    /// Finest first, each `length` samples.
    pub bands: Vec<Vec<f64>>,
    pub residual_lowpass: Vec<f64>,
    pub length: usize,
}

impl DyadicCwtDecomposition {
    pub fn energy(&self) -> f64 {
        let sq = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>();
        self.bands.iter().map(|b| sq(b)).sum::<f64>() + sq(&self.residual_lowpass)
    }
}

impl CoeffTable for DyadicCwtDecomposition {
    fn coeff_rows(&self) -> Vec<CoeffRow> {
        let mut rows: Vec<CoeffRow> = self
            .bands
            .iter()
            .enumerate()
            .flat_map(|(j, b)| rows_1d(j + 1, "band", b))
            .collect();
        rows.extend(rows_1d(self.levels, "residual", &self.residual_lowpass));
        rows
    }
}

/// `|ω|` of DFT bin `k` out of `n`.
fn bin_frequency(k: usize, n: usize) -> f64 {
    2.0 * PI * k.min(n - k) as f64 / n as f64
}

/// `S(ω_k)` for every DFT bin of a length-`n` signal.
pub fn frame_response(w: ContinuousWaveletId, levels: usize, n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| {
            let omega = bin_frequency(k, n);
            let bands: f64 = (1..=levels).map(|j| w.band_response(j, omega).powi(2)).sum();
            bands + w.residual_response(levels, omega).powi(2)
        })
        .collect()
}

fn filter(spectrum: &[Complex64], response: impl Fn(f64) -> f64) -> Vec<f64> {
    let n = spectrum.len();
    let shaped: Vec<Complex64> = spectrum
        .iter()
        .enumerate()
        .map(|(k, &x)| x * response(bin_frequency(k, n)))
        .collect();
    fft_inverse(&shaped).iter().map(|v| v.re).collect()
}

fn check(w: ContinuousWaveletId, levels: usize, len: usize) -> Result<()> {
    w.validate()?;
    if levels == 0 || levels >= 63 {
        return Err(Error::InvalidParameter(format!("levels must be in 1..63, got {levels}")));
    }
    let min = 1usize << levels;
    if len < min {
        return Err(Error::SignalTooShort { len, min });
    }
    Ok(())
}

/// Splits `signal` into `levels` octave bands plus a low-pass residual.
pub fn dyadic_cwt_analyze(signal: &[f64], w: ContinuousWaveletId, levels: usize) -> Result<DyadicCwtDecomposition> {
    check(w, levels, signal.len())?;
    let spectrum = fft_real(signal);
    let bands = (1..=levels)
        .into_par_iter()
        .map(|j| filter(&spectrum, |omega| w.band_response(j, omega)))
        .collect();
    let residual_lowpass = filter(&spectrum, |omega| w.residual_response(levels, omega));
    Ok(DyadicCwtDecomposition {
        wavelet: w,
        levels,
        bands,
        residual_lowpass,
        length: signal.len(),
    })
}

/// Frame-normalized adjoint of [`dyadic_cwt_analyze`].
pub fn dyadic_cwt_synthesize(d: &DyadicCwtDecomposition) -> Result<Vec<f64>> {
    let n = d.length;
    let malformed = d.bands.len() != d.levels
        || d.bands.iter().any(|b| b.len() != n)
        || d.residual_lowpass.len() != n;
    if malformed {
        return Err(Error::MalformedDecomposition(format!(
            "{} bands of length {:?} for {} levels of length {n}",
            d.bands.len(),
            d.bands.iter().map(Vec::len).collect::<Vec<_>>(),
            d.levels
        )));
    }
    check(d.wavelet, d.levels, n)?;
    let s = frame_response(d.wavelet, d.levels, n);
    let peak = s.iter().cloned().fold(0.0, f64::max);
    if peak <= 0.0 {
        return Err(Error::DegenerateFrame);
    }
    let floor = 1e-6 * peak;

    let w = d.wavelet;
    let mut acc = vec![Complex64::new(0.0, 0.0); n];
    let mut add = |coeffs: &[f64], response: &dyn Fn(f64) -> f64| {
        for (k, v) in fft_real(coeffs).into_iter().enumerate() {
            acc[k] += v * response(bin_frequency(k, n));
        }
    };
    for (j, band) in d.bands.iter().enumerate() {
        add(band, &|omega| w.band_response(j + 1, omega));
    }
    add(&d.residual_lowpass, &|omega| w.residual_response(d.levels, omega));
    for (a, &sk) in acc.iter_mut().zip(&s) {
        *a /= sk.max(floor);
    }
    Ok(fft_inverse(&acc).iter().map(|v| v.re).collect())
}
