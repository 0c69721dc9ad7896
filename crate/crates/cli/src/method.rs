//! Any transform the CLI can run a signal or image through.

use std::fmt;
use std::str::FromStr;

use multiscale::compress::{hard_threshold, ThresholdPolicy};
use multiscale::continuous::{dyadic_cwt_analyze, dyadic_cwt_synthesize, ContinuousWaveletId};
use multiscale::spectral::{
    dct2_forward, dct2_inverse, fft2_forward, fft2_inverse, SpectralCoefficients,
    SpectralDecomposition, SpectralKind,
};
use multiscale::{decompose2d, reconstruct, reconstruct2d, Error, ExtensionMode, Result, WaveletId};
use ndarray::{Array2, Axis};
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Method {
    Discrete(WaveletId),
    Continuous(ContinuousWaveletId),
    Spectral(SpectralKind),
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dct" => return Ok(Method::Spectral(SpectralKind::Dct)),
            "fft" => return Ok(Method::Spectral(SpectralKind::Fft)),
            _ => {}
        }
        if let Ok(w) = s.parse::<WaveletId>() {
            return Ok(Method::Discrete(w));
        }
        s.parse().map(Method::Continuous)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Discrete(w) => w.fmt(f),
            Method::Continuous(w) => w.fmt(f),
            Method::Spectral(k) => k.fmt(f),
        }
    }
}

/// Splits a comma-separated list, keeping order.
pub fn parse_list(list: &str) -> Result<Vec<Method>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub levels: usize,
    pub threshold: Option<f64>,
    pub policy: ThresholdPolicy,
    pub extension: ExtensionMode,
}

fn zero_small(v: &mut [f64], t: f64) {
    v.iter_mut().filter(|c| c.abs() <= t).for_each(|c| *c = 0.0);
}

fn check_threshold(t: f64) -> Result<()> {
    if t >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("threshold must be non-negative, got {t}")))
    }
}

/// Analysis, optional hard thresholding, synthesis. FFT magnitudes are
/// compared on the unitary scale so one threshold means the same thing for
/// every method.
pub fn process_signal(method: Method, x: &[f64], s: &Settings) -> Result<Vec<f64>> {
    let all = s.policy == ThresholdPolicy::AllBands;
    if let Some(t) = s.threshold {
        check_threshold(t)?;
    }
    match method {
        Method::Discrete(w) => {
            let mut d = multiscale::decompose(x, w, s.levels, s.extension)?;
            if let Some(t) = s.threshold {
                d.details.iter_mut().for_each(|b| zero_small(b, t));
                if all {
                    zero_small(&mut d.approx, t);
                }
            }
            reconstruct(&d)
        }
        Method::Continuous(w) => {
            let mut d = dyadic_cwt_analyze(x, w, s.levels)?;
            if let Some(t) = s.threshold {
                d.bands.iter_mut().for_each(|b| zero_small(b, t));
                if all {
                    zero_small(&mut d.residual_lowpass, t);
                }
            }
            dyadic_cwt_synthesize(&d)
        }
        Method::Spectral(kind) => {
            let mut d = match kind {
                SpectralKind::Dct => SpectralDecomposition::dct(x),
                SpectralKind::Fft => SpectralDecomposition::fft(x),
            };
            if let Some(t) = s.threshold {
                let coarse = x.len() >> s.levels.min(63);
                let unitary = (x.len() as f64).sqrt();
                let keep: Vec<bool> = (0..x.len())
                    .map(|k| !all && d.frequency_index(k) < coarse)
                    .collect();
                match &mut d.coefficients {
                    SpectralCoefficients::Real(c) => c
                        .iter_mut()
                        .zip(&keep)
                        .filter(|(c, &k)| !k && c.abs() <= t)
                        .for_each(|(c, _)| *c = 0.0),
                    SpectralCoefficients::Complex(c) => c
                        .iter_mut()
                        .zip(&keep)
                        .filter(|(c, &k)| !k && c.norm() / unitary <= t)
                        .for_each(|(c, _)| *c = 0.0.into()),
                }
            }
            Ok(d.invert())
        }
    }
}

fn fold(k: usize, n: usize, kind: SpectralKind) -> usize {
    match kind {
        SpectralKind::Dct => k,
        SpectralKind::Fft => 2 * k.min(n - k),
    }
}

/// The 2D counterpart of [`process_signal`]. Continuous wavelets run along
/// rows and then along columns.
pub fn process_image(method: Method, m: &Array2<f64>, s: &Settings) -> Result<Array2<f64>> {
    let all = s.policy == ThresholdPolicy::AllBands;
    if let Some(t) = s.threshold {
        check_threshold(t)?;
    }
    match method {
        Method::Discrete(w) => {
            let mut d = decompose2d(m, w, s.levels, s.extension)?;
            if let Some(t) = s.threshold {
                d = hard_threshold(&d, t, s.policy);
            }
            reconstruct2d(&d)
        }
        Method::Continuous(_) => {
            let pass = |m: &Array2<f64>, axis: Axis| -> Result<Array2<f64>> {
                let lines: Vec<Vec<f64>> = m.axis_iter(axis).map(|l| l.to_vec()).collect();
                let done = lines
                    .par_iter()
                    .map(|l| process_signal(method, l, s))
                    .collect::<Result<Vec<_>>>()?;
                let mut out = Array2::zeros(m.dim());
                for (mut lane, line) in out.axis_iter_mut(axis).zip(done) {
                    lane.iter_mut().zip(line).for_each(|(o, v)| *o = v);
                }
                Ok(out)
            };
            pass(&pass(m, Axis(0))?, Axis(1))
        }
        Method::Spectral(kind) => {
            let (rows, cols) = m.dim();
            let shift = s.levels.min(63);
            let coarse = |r: usize, c: usize| {
                !all && fold(r, rows, kind) < rows >> shift && fold(c, cols, kind) < cols >> shift
            };
            let t = s.threshold;
            match kind {
                SpectralKind::Dct => {
                    let mut c = dct2_forward(m);
                    if let Some(t) = t {
                        c.indexed_iter_mut()
                            .filter(|((r, k), v)| !coarse(*r, *k) && v.abs() <= t)
                            .for_each(|(_, v)| *v = 0.0);
                    }
                    Ok(dct2_inverse(&c))
                }
                SpectralKind::Fft => {
                    let unitary = ((rows * cols) as f64).sqrt();
                    let mut c = fft2_forward(&m.mapv(|v| v.into()));
                    if let Some(t) = t {
                        c.indexed_iter_mut()
                            .filter(|((r, k), v)| !coarse(*r, *k) && v.norm() / unitary <= t)
                            .for_each(|(_, v)| *v = 0.0.into());
                    }
                    Ok(fft2_inverse(&c).mapv(|v| v.re))
                }
            }
        }
    }
}
