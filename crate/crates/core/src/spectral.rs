//! DCT and FFT baselines, and an octave split that mimics a stage-4 pyramid.
//!
//! The DCT is the orthonormal DCT-II with the DCT-III as its inverse. The FFT
//! is unnormalized forward and scaled by `1/N` on the way back. Both accept
//! any length.
//!
//! ```
//! use multiscale::spectral::{dct_forward, dct_inverse};
//!
//! let c = dct_forward(&[2.0; 4]);
//! assert!((c[0] - 4.0).abs() < 1e-12);
//! assert!(c[1..].iter().all(|v| v.abs() < 1e-12));
//! let x = dct_inverse(&c);
//! assert!(x.iter().all(|v| (v - 2.0).abs() < 1e-12));
//! ```

use std::f64::consts::PI;

use ndarray::{Array2, Axis};
use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;

use crate::error::{Error, Result};

fn run_fft(data: &mut [Complex64], inverse: bool) {
    if data.is_empty() {
        return;
    }
    let mut planner = FftPlanner::new();
    let fft = if inverse {
        planner.plan_fft_inverse(data.len())
    } else {
        planner.plan_fft_forward(data.len())
    };
    fft.process(data);
}

/// `X[k] = Σ x[n] e^{-2πikn/N}`.
pub fn fft_forward(signal: &[Complex64]) -> Vec<Complex64> {
    let mut out = signal.to_vec();
    run_fft(&mut out, false);
    out
}

/// Inverse of [`fft_forward`], including the `1/N`.
pub fn fft_inverse(spectrum: &[Complex64]) -> Vec<Complex64> {
    let mut out = spectrum.to_vec();
    run_fft(&mut out, true);
    let scale = 1.0 / out.len().max(1) as f64;
    out.iter_mut().for_each(|v| *v *= scale);
    out
}

pub fn fft_real(signal: &[f64]) -> Vec<Complex64> {
    let data: Vec<Complex64> = signal.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft_forward(&data)
}

fn dct_scale(k: usize, n: usize) -> f64 {
    if k == 0 {
        (1.0 / n as f64).sqrt()
    } else {
        (2.0 / n as f64).sqrt()
    }
}

/// Orthonormal DCT-II.
// Even samples in order, then odd samples reversed: one N-point FFT of this
// permutation carries the whole transform.
pub fn dct_forward(signal: &[f64]) -> Vec<f64> {
    let n = signal.len();
    if n == 0 {
        return Vec::new();
    }
    let mut v = vec![Complex64::new(0.0, 0.0); n];
    for (k, slot) in v.iter_mut().enumerate() {
        let src = if 2 * k < n { 2 * k } else { 2 * (n - 1 - k) + 1 };
        *slot = Complex64::new(signal[src], 0.0);
    }
    run_fft(&mut v, false);
    v.iter()
        .enumerate()
        .map(|(k, &vk)| {
            let twiddle = Complex64::from_polar(1.0, -PI * k as f64 / (2 * n) as f64);
            (vk * twiddle).re * dct_scale(k, n)
        })
        .collect()
}

/// Orthonormal DCT-III, the inverse of [`dct_forward`].
pub fn dct_inverse(coefficients: &[f64]) -> Vec<f64> {
    let n = coefficients.len();
    if n == 0 {
        return Vec::new();
    }
    let y = |k: usize| if k < n { coefficients[k] / dct_scale(k, n) } else { 0.0 };
    let mut v: Vec<Complex64> = (0..n)
        .map(|k| {
            let twiddle = Complex64::from_polar(1.0, PI * k as f64 / (2 * n) as f64);
            let w = Complex64::new(y(k), if k == 0 { 0.0 } else { -y(n - k) });
            twiddle * w
        })
        .collect();
    run_fft(&mut v, true);
    let mut out = vec![0.0; n];
    for (k, vk) in v.iter().enumerate() {
        let dst = if 2 * k < n { 2 * k } else { 2 * (n - 1 - k) + 1 };
        out[dst] = vk.re / n as f64;
    }
    out
}

/// Separable orthonormal DCT-II: rows, then columns.
pub fn dct2_forward(image: &Array2<f64>) -> Array2<f64> {
    separable(image, dct_forward)
}

pub fn dct2_inverse(coefficients: &Array2<f64>) -> Array2<f64> {
    separable(coefficients, dct_inverse)
}

pub fn fft2_forward(image: &Array2<Complex64>) -> Array2<Complex64> {
    separable(image, fft_forward)
}

pub fn fft2_inverse(spectrum: &Array2<Complex64>) -> Array2<Complex64> {
    separable(spectrum, fft_inverse)
}

fn separable<T, F>(m: &Array2<T>, f: F) -> Array2<T>
where
    T: Clone + Default + Send + Sync,
    F: Fn(&[T]) -> Vec<T> + Sync,
{
    let pass = |m: &Array2<T>, axis: Axis| -> Array2<T> {
        let lines: Vec<Vec<T>> = m.axis_iter(axis).map(|l| l.to_vec()).collect();
        let done: Vec<Vec<T>> = lines.par_iter().map(|l| f(l)).collect();
        let mut out = Array2::<T>::default(m.dim());
        for (mut lane, line) in out.axis_iter_mut(axis).zip(done) {
            lane.iter_mut().zip(line).for_each(|(o, v)| *o = v);
        }
        out
    };
    pass(&pass(m, Axis(0)), Axis(1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpectralKind {
    Dct,
    Fft,
}

impl std::fmt::Display for SpectralKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SpectralKind::Dct => "dct",
            SpectralKind::Fft => "fft",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SpectralCoefficients {
    Real(Vec<f64>),
    Complex(Vec<Complex64>),
}

/// Transform coefficients plus the split points of the stage-4 stand-in.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralDecomposition {
    pub kind: SpectralKind,
    pub coefficients: SpectralCoefficients,
    pub length: usize,
    /// `[N/16, N/8, N/4, N/2]`.
    pub band_boundaries: [usize; 4],
}

fn boundaries(n: usize) -> [usize; 4] {
    [n / 16, n / 8, n / 4, n / 2]
}

impl SpectralDecomposition {
    pub fn dct(signal: &[f64]) -> Self {
        SpectralDecomposition {
            kind: SpectralKind::Dct,
            coefficients: SpectralCoefficients::Real(dct_forward(signal)),
            length: signal.len(),
            band_boundaries: boundaries(signal.len()),
        }
    }

    pub fn fft(signal: &[f64]) -> Self {
        SpectralDecomposition {
            kind: SpectralKind::Fft,
            coefficients: SpectralCoefficients::Complex(fft_real(signal)),
            length: signal.len(),
            band_boundaries: boundaries(signal.len()),
        }
    }

    /// Back to the time domain; the FFT path keeps the real part.
    pub fn invert(&self) -> Vec<f64> {
        match &self.coefficients {
            SpectralCoefficients::Real(c) => dct_inverse(c),
            SpectralCoefficients::Complex(c) => fft_inverse(c).iter().map(|v| v.re).collect(),
        }
    }

    /// Position of coefficient `k` on the DCT frequency scale. FFT bins above
    /// `N/2` are folded onto their mirror and doubled so both kinds share one
    /// axis running from DC to Nyquist over `0..N`.
    pub fn frequency_index(&self, k: usize) -> usize {
        match self.kind {
            SpectralKind::Dct => k,
            SpectralKind::Fft => 2 * k.min(self.length - k),
        }
    }

    /// 0 for the approximation band, `j` for detail level `j` (1 = finest).
    pub fn band_of(&self, k: usize) -> usize {
        let f = self.frequency_index(k);
        let b = self.band_boundaries;
        if f < b[0] {
            0
        } else if f < b[1] {
            4
        } else if f < b[2] {
            3
        } else if f < b[3] {
            2
        } else {
            1
        }
    }

    fn masked(&self, band: usize) -> SpectralDecomposition {
        let keep = |k: usize| self.band_of(k) == band;
        let coefficients = match &self.coefficients {
            SpectralCoefficients::Real(c) => SpectralCoefficients::Real(
                c.iter()
                    .enumerate()
                    .map(|(k, &v)| if keep(k) { v } else { 0.0 })
                    .collect(),
            ),
            SpectralCoefficients::Complex(c) => SpectralCoefficients::Complex(
                c.iter()
                    .enumerate()
                    .map(|(k, &v)| if keep(k) { v } else { Complex64::new(0.0, 0.0) })
                    .collect(),
            ),
        };
        SpectralDecomposition {
            coefficients,
            ..self.clone()
        }
    }
}

/// Full-length copies of a decomposition, each keeping one band.
#[derive(Clone, Debug, PartialEq)]
pub struct StageSplit {
    pub approx_band: SpectralDecomposition,
    /// Finest first.
    pub detail_bands: [SpectralDecomposition; 4],
}

impl StageSplit {
    /// Adds the bands back into one decomposition.
    pub fn reassemble(&self) -> SpectralDecomposition {
        let mut out = self.approx_band.clone();
        for band in &self.detail_bands {
            match (&mut out.coefficients, &band.coefficients) {
                (SpectralCoefficients::Real(a), SpectralCoefficients::Real(b)) => {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y)
                }
                (SpectralCoefficients::Complex(a), SpectralCoefficients::Complex(b)) => {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y)
                }
                _ => unreachable!("bands of one split share a kind"),
            }
        }
        out
    }
}

/// Partitions the coefficients at `N/16, N/8, N/4, N/2`.
pub fn spectral_stage_split(d: &SpectralDecomposition) -> Result<StageSplit> {
    if d.length < 16 {
        return Err(Error::SignalTooShort { len: d.length, min: 16 });
    }
    Ok(StageSplit {
        approx_band: d.masked(0),
        detail_bands: [d.masked(1), d.masked(2), d.masked(3), d.masked(4)],
    })
}
