//! SNR, MSE, PSNR, histogram entropy and histogram mean.
//!
//! Every function takes anything implementing [`Samples`]: slices, vectors,
//! `ndarray` arrays and [`GrayImage`]. Lossless pairs give
//! `f64::INFINITY` for SNR and PSNR.
//!
//! ```
//! use multiscale::metrics::{entropy_bits, mse, snr_db};
//!
//! assert_eq!(mse(&[0.0, 0.0][..], &[3.0, 4.0][..])?, 12.5);
//! assert_eq!(snr_db(&[1.0, 2.0][..], &[1.0, 2.0][..])?, f64::INFINITY);
//! let p = [0.0, 1.0, 1.0, 1.0];
//! assert!((entropy_bits(&p[..], 2, (0.0, 1.0))? - 0.811278).abs() < 1e-6);
//! # Ok::<(), multiscale::Error>(())
//! ```

use ndarray::{ArrayBase, Data, Dimension};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::io::GrayImage;

/// Read-only access to a block of samples and its shape.
pub trait Samples {
    fn shape(&self) -> Vec<usize>;
    fn values(&self) -> impl Iterator<Item = f64> + '_;
}

impl Samples for [f64] {
    fn shape(&self) -> Vec<usize> {
        vec![self.len()]
    }

    fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.iter().copied()
    }
}

impl Samples for Vec<f64> {
    fn shape(&self) -> Vec<usize> {
        vec![self.len()]
    }

    fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.iter().copied()
    }
}

impl<S: Data<Elem = f64>, D: Dimension> Samples for ArrayBase<S, D> {
    fn shape(&self) -> Vec<usize> {
        ArrayBase::shape(self).to_vec()
    }

    fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.iter().copied()
    }
}

impl Samples for GrayImage {
    fn shape(&self) -> Vec<usize> {
        vec![self.rows(), self.cols()]
    }

    fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.pixels().iter().map(|&p| p as f64)
    }
}

fn same_shape<A, B>(a: &A, b: &B) -> Result<usize>
where
    A: Samples + ?Sized,
    B: Samples + ?Sized,
{
    let (left, right) = (a.shape(), b.shape());
    if left != right {
        return Err(Error::ShapeMismatch { left, right });
    }
    let n = left.iter().product();
    if n == 0 {
        return Err(Error::EmptyData);
    }
    Ok(n)
}

fn squared_error<A, B>(a: &A, b: &B) -> f64
where
    A: Samples + ?Sized,
    B: Samples + ?Sized,
{
    a.values().zip(b.values()).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Mean of squared differences.
pub fn mse<A, B>(reference: &A, processed: &B) -> Result<f64>
where
    A: Samples + ?Sized,
    B: Samples + ?Sized,
{
    let n = same_shape(reference, processed)?;
    Ok(squared_error(reference, processed) / n as f64)
}

/// `10 log10(Σ ref² / Σ (ref - proc)²)`.
pub fn snr_db<A, B>(reference: &A, processed: &B) -> Result<f64>
where
    A: Samples + ?Sized,
    B: Samples + ?Sized,
{
    same_shape(reference, processed)?;
    let signal: f64 = reference.values().map(|x| x * x).sum();
    if signal == 0.0 {
        return Err(Error::ZeroReference);
    }
    let noise = squared_error(reference, processed);
    if noise == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(10.0 * (signal / noise).log10())
}

/// `10 log10(max_value² / mse)`.
pub fn psnr_db<A, B>(reference: &A, processed: &B, max_value: f64) -> Result<f64>
where
    A: Samples + ?Sized,
    B: Samples + ?Sized,
{
    if max_value.is_nan() || max_value <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "max_value must be positive, got {max_value}"
        )));
    }
    let m = mse(reference, processed)?;
    if m == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(10.0 * (max_value * max_value / m).log10())
}

/// Counts per equal-width bin over `[lo, hi]`; values outside are clipped
/// into the end bins.
pub fn histogram<A: Samples + ?Sized>(data: &A, bins: usize, range: (f64, f64)) -> Result<Vec<u64>> {
    let (lo, hi) = range;
    if bins < 2 {
        return Err(Error::InvalidParameter(format!("need at least 2 bins, got {bins}")));
    }
    if !lo.is_finite() || !hi.is_finite() || hi <= lo {
        return Err(Error::InvalidParameter(format!("empty range [{lo}, {hi}]")));
    }
    let mut counts = vec![0u64; bins];
    let width = (hi - lo) / bins as f64;
    let mut any = false;
    for v in data.values() {
        any = true;
        let k = ((v.clamp(lo, hi) - lo) / width).floor();
        let k = if k.is_nan() { 0 } else { (k as usize).min(bins - 1) };
        counts[k] += 1;
    }
    if !any {
        return Err(Error::EmptyData);
    }
    Ok(counts)
}

/// Shannon entropy of the normalized histogram, in bits.
pub fn entropy_bits<A: Samples + ?Sized>(data: &A, bins: usize, range: (f64, f64)) -> Result<f64> {
    let counts = histogram(data, bins, range)?;
    let total: u64 = counts.iter().sum();
    let h = counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / total as f64;
            -p * p.log2()
        })
        .sum::<f64>();
    Ok(h.max(0.0))
}

/// Mean bin count, which is `N / bins` whatever the data.
pub fn histogram_mean<A: Samples + ?Sized>(data: &A, bins: usize, range: (f64, f64)) -> Result<f64> {
    let counts = histogram(data, bins, range)?;
    Ok(counts.iter().sum::<u64>() as f64 / bins as f64)
}

/// Settings for [`quality_report`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QualityConfig {
    pub bins: usize,
    /// Histogram range; the reference's min and max when `None`.
    pub range: Option<(f64, f64)>,
    /// PSNR peak; the reference's largest magnitude when `None`.
    pub max_value: Option<f64>,
}

impl Default for QualityConfig {
    fn default() -> Self {
        QualityConfig {
            bins: 256,
            range: None,
            max_value: None,
        }
    }
}

impl QualityConfig {
    /// 256 bins over `[0, 255]` and peak 255.
    pub fn eight_bit() -> Self {
        QualityConfig {
            bins: 256,
            range: Some((0.0, 255.0)),
            max_value: Some(255.0),
        }
    }
}

/// Metrics for one reference/processed pair. Entropy and histogram mean
/// describe the processed data.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QualityReport {
    pub snr_db: f64,
    pub mse: f64,
    pub entropy_bits: f64,
    pub psnr_db: f64,
    pub histogram_mean: f64,
    pub bins: usize,
    pub max_value: f64,
}

pub fn quality_report<A, B>(reference: &A, processed: &B, config: &QualityConfig) -> Result<QualityReport>
where
    A: Samples + ?Sized,
    B: Samples + ?Sized,
{
    same_shape(reference, processed)?;
    let range = match config.range {
        Some(r) => r,
        None => {
            let (lo, hi) = reference
                .values()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
            if hi > lo {
                (lo, hi)
            } else {
                (lo - 0.5, hi + 0.5)
            }
        }
    };
    let max_value = match config.max_value {
        Some(m) => m,
        None => {
            let peak = reference.values().fold(0.0, |m: f64, v| m.max(v.abs()));
            if peak > 0.0 {
                peak
            } else {
                1.0
            }
        }
    };
    Ok(QualityReport {
        snr_db: snr_db(reference, processed)?,
        mse: mse(reference, processed)?,
        entropy_bits: entropy_bits(processed, config.bins, range)?,
        psnr_db: psnr_db(reference, processed, max_value)?,
        histogram_mean: histogram_mean(processed, config.bins, range)?,
        bins: config.bins,
        max_value,
    })
}

/// A [`QualityReport`] labelled with the transform that produced it, in the
/// JSON report shape. Infinite SNR/PSNR values are left out and flagged.
#[derive(Clone, Debug, PartialEq)]
pub struct QualityRecord {
    pub wavelet: String,
    pub levels: usize,
    pub report: QualityReport,
}

impl Serialize for QualityRecord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json<'a> {
            wavelet: &'a str,
            levels: usize,
            #[serde(skip_serializing_if = "Option::is_none")]
            snr_db: Option<f64>,
            mse: f64,
            entropy_bits: f64,
            #[serde(skip_serializing_if = "Option::is_none")]
            psnr_db: Option<f64>,
            histogram_mean: f64,
            infinite_snr: bool,
            infinite_psnr: bool,
        }
        let r = &self.report;
        let finite = |v: f64| v.is_finite().then_some(v);
        Json {
            wavelet: &self.wavelet,
            levels: self.levels,
            snr_db: finite(r.snr_db),
            mse: r.mse,
            entropy_bits: r.entropy_bits,
            psnr_db: finite(r.psnr_db),
            histogram_mean: r.histogram_mean,
            infinite_snr: r.snr_db.is_infinite(),
            infinite_psnr: r.psnr_db.is_infinite(),
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::Array2;

    #[test]
    fn examples() {
        assert_eq!(mse(&[1.0, 2.0][..], &[1.0, 2.0][..]).unwrap(), 0.0);
        assert_eq!(mse(&[0.0, 0.0][..], &[3.0, 4.0][..]).unwrap(), 12.5);
        let r = [10.0, 0.0];
        let p = [9.0, 0.0];
        assert!((snr_db(&r[..], &p[..]).unwrap() - 20.0).abs() < 1e-12);
        assert_eq!(psnr_db(&[0.0][..], &[255.0][..], 255.0).unwrap(), 0.0);
        assert_eq!(psnr_db(&[1.0][..], &[1.0][..], 255.0).unwrap(), f64::INFINITY);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            mse(&[1.0][..], &[1.0, 2.0][..]),
            Err(Error::ShapeMismatch { .. })
        ));
        assert!(matches!(
            snr_db(&[0.0, 0.0][..], &[1.0, 0.0][..]),
            Err(Error::ZeroReference)
        ));
        let empty: [f64; 0] = [];
        assert!(matches!(entropy_bits(&empty[..], 4, (0.0, 1.0)), Err(Error::EmptyData)));
        assert!(entropy_bits(&[1.0][..], 1, (0.0, 1.0)).is_err());
        assert!(entropy_bits(&[1.0][..], 4, (1.0, 1.0)).is_err());
        assert!(psnr_db(&[1.0][..], &[2.0][..], 0.0).is_err());
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(entropy_bits(&[0.3; 50][..], 256, (0.0, 1.0)).unwrap(), 0.0);
        let uniform: Vec<f64> = (0..256).map(|k| k as f64).collect();
        assert_eq!(entropy_bits(&uniform, 256, (0.0, 255.0)).unwrap(), 8.0);
        let h = entropy_bits(&[0.0, 1.0, 1.0, 1.0][..], 2, (0.0, 1.0)).unwrap();
        assert!((h - 0.811_278_124_459_132_8).abs() < 1e-12);
    }

    #[test]
    fn histogram_mean_is_count_over_bins() {
        let data: Vec<f64> = (0..256).map(|k| (k * 37 % 101) as f64).collect();
        assert_eq!(histogram_mean(&data, 256, (0.0, 100.0)).unwrap(), 1.0);
        let n = 1_871_690usize;
        assert!((n as f64 / 256.0 - 7311.29).abs() < 0.01);
    }

    #[test]
    fn works_on_matrices_and_images() {
        let a = Array2::from_elem((2, 3), 1.0);
        let b = Array2::from_elem((2, 3), 3.0);
        assert_eq!(mse(&a, &b).unwrap(), 4.0);
        assert!(matches!(
            mse(&a, &Array2::<f64>::zeros((3, 2))),
            Err(Error::ShapeMismatch { .. })
        ));
        let img = GrayImage::new(1, 2, vec![0, 255]).unwrap();
        assert_eq!(entropy_bits(&img, 256, (0.0, 255.0)).unwrap(), 1.0);
    }

    #[test]
    fn identical_pair_report() {
        let x: Vec<f64> = (0..64).map(|k| (k as f64 * 0.3).sin()).collect();
        let r = quality_report(&x, &x, &QualityConfig::default()).unwrap();
        assert_eq!(r.mse, 0.0);
        assert_eq!(r.snr_db, f64::INFINITY);
        assert_eq!(r.psnr_db, f64::INFINITY);
        let lo = x.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = x.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        assert_eq!(r.entropy_bits, entropy_bits(&x, 256, (lo, hi)).unwrap());
        assert_eq!(r.histogram_mean, 0.25);
    }

    #[test]
    fn record_json_omits_infinities() {
        let x = vec![1.0, 2.0];
        let rec = QualityRecord {
            wavelet: "haar".into(),
            levels: 1,
            report: quality_report(&x, &x, &QualityConfig::default()).unwrap(),
        };
        let v = serde_json::to_value(&rec).unwrap();
        assert_eq!(v["infinite_snr"], true);
        assert!(v.get("snr_db").is_none());
        assert!(v.get("psnr_db").is_none());
        assert_eq!(v["wavelet"], "haar");
        assert_eq!(v["mse"], 0.0);
    }
}
