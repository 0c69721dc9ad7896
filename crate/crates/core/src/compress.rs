//! Hard-threshold compression of 8-bit images.
//!
//! [`compress2d`] decomposes an image, zeroes every detail coefficient with
//! magnitude at most the threshold, reconstructs, and reports how many
//! coefficients are zero and how much the picture suffered.
//!
//! ```
//! use multiscale::compress::compress2d;
//! use multiscale::io::GrayImage;
//! use multiscale::WaveletId;
//!
//! let pixels = (0..64 * 64).map(|k| ((k % 64) * 4) as u8).collect();
//! let img = GrayImage::new(64, 64, pixels)?;
//! let lossless = compress2d(&img, WaveletId::Haar, 4, 0.0)?;
//! assert_eq!(lossless.psnr_db, f64::INFINITY);
//! assert_eq!(lossless.output, img);
//! # Ok::<(), multiscale::Error>(())
//! ```

use ndarray::Array2;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::filters::{get_filterbank, WaveletId};
use crate::io::GrayImage;
use crate::metrics::psnr_db;
use crate::transform1d::ExtensionMode;
use crate::transform2d::{decompose2d_with, reconstruct2d_with, Decomposition2D};

/// Which bands [`hard_threshold`] may touch.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ThresholdPolicy {
    #[default]
    #[serde(rename = "details")]
    DetailsOnly,
    #[serde(rename = "all")]
    AllBands,
}

impl std::str::FromStr for ThresholdPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "details" | "details-only" => Ok(ThresholdPolicy::DetailsOnly),
            "all" | "all-bands" => Ok(ThresholdPolicy::AllBands),
            _ => Err(Error::InvalidParameter(format!("unknown threshold policy `{s}`"))),
        }
    }
}

impl std::fmt::Display for ThresholdPolicy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ThresholdPolicy::DetailsOnly => "details",
            ThresholdPolicy::AllBands => "all",
        })
    }
}

fn zero_small(band: &mut Array2<f64>, threshold: f64) {
    band.mapv_inplace(|c| if c.abs() <= threshold { 0.0 } else { c });
}

/// Sets every coefficient with `|c| <= threshold` to zero in the bands the
/// policy selects; everything else is copied unchanged.
pub fn hard_threshold(d: &Decomposition2D, threshold: f64, policy: ThresholdPolicy) -> Decomposition2D {
    let mut out = d.clone();
    for level in &mut out.detail_levels {
        for band in level.bands_mut() {
            zero_small(band, threshold);
        }
    }
    if policy == ThresholdPolicy::AllBands {
        zero_small(&mut out.ll_final, threshold);
    }
    out
}

pub fn zero_count(d: &Decomposition2D) -> usize {
    d.all_bands().flatten().filter(|&&c| c == 0.0).count()
}

/// Percentage of stored coefficients, approximation included, equal to zero.
pub fn zero_percentage(d: &Decomposition2D) -> f64 {
    100.0 * zero_count(d) as f64 / d.coefficient_count() as f64
}

/// Everything [`compress2d_with`] needs besides the image.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CompressConfig {
    pub wavelet: WaveletId,
    pub levels: usize,
    pub threshold: f64,
    pub policy: ThresholdPolicy,
    pub extension: ExtensionMode,
}

impl CompressConfig {
    /// Four levels, threshold 30, details only, periodic.
    pub fn new(wavelet: WaveletId) -> Self {
        CompressConfig {
            wavelet,
            levels: 4,
            threshold: 30.0,
            policy: ThresholdPolicy::DetailsOnly,
            extension: ExtensionMode::Periodic,
        }
    }
}

/// Outcome of one compression run.
#[derive(Clone, Debug, PartialEq)]
pub struct CompressionReport {
    pub wavelet: WaveletId,
    pub levels: usize,
    pub threshold: f64,
    pub policy: ThresholdPolicy,
    pub zero_count: usize,
    pub coefficient_count: usize,
    pub zero_percentage: f64,
    /// Against the input image, peak 255.
    pub psnr_db: f64,
    pub retained_energy_percent: f64,
    pub output: GrayImage,
}

impl CompressionReport {
    /// All coefficients over the nonzero ones; `None` when nothing survives.
    pub fn implied_ratio(&self) -> Option<f64> {
        let kept = self.coefficient_count - self.zero_count;
        (kept > 0).then(|| self.coefficient_count as f64 / kept as f64)
    }
}

impl Serialize for CompressionReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json {
            wavelet: String,
            levels: usize,
            threshold: f64,
            policy: ThresholdPolicy,
            zero_count: usize,
            coefficient_count: usize,
            zero_percentage: f64,
            #[serde(skip_serializing_if = "Option::is_none")]
            psnr_db: Option<f64>,
            infinite_psnr: bool,
            retained_energy_percent: f64,
            #[serde(skip_serializing_if = "Option::is_none")]
            implied_ratio: Option<f64>,
            rows: usize,
            cols: usize,
        }
        Json {
            wavelet: self.wavelet.to_string(),
            levels: self.levels,
            threshold: self.threshold,
            policy: self.policy,
            zero_count: self.zero_count,
            coefficient_count: self.coefficient_count,
            zero_percentage: self.zero_percentage,
            psnr_db: self.psnr_db.is_finite().then_some(self.psnr_db),
            infinite_psnr: self.psnr_db.is_infinite(),
            retained_energy_percent: self.retained_energy_percent,
            implied_ratio: self.implied_ratio(),
            rows: self.output.rows(),
            cols: self.output.cols(),
        }
        .serialize(s)
    }
}

/// Decompose, threshold the detail bands, reconstruct and quantize.
pub fn compress2d(image: &GrayImage, wavelet: WaveletId, levels: usize, threshold: f64) -> Result<CompressionReport> {
    compress2d_with(
        image,
        &CompressConfig {
            levels,
            threshold,
            ..CompressConfig::new(wavelet)
        },
    )
}

pub fn compress2d_with(image: &GrayImage, config: &CompressConfig) -> Result<CompressionReport> {
    if config.threshold.is_nan() || config.threshold < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "threshold must be non-negative, got {}",
            config.threshold
        )));
    }
    let (rows, cols) = image.dims();
    let min = 1usize << config.levels.min(usize::BITS as usize - 1);
    if rows < min || cols < min {
        return Err(Error::ImageTooSmall { rows, cols, min });
    }
    let fb = get_filterbank(config.wavelet)?;
    let d = decompose2d_with(&image.to_matrix(), &fb, config.levels, config.extension)?;
    let kept = hard_threshold(&d, config.threshold, config.policy);
    let restored = reconstruct2d_with(&kept, &fb)?;
    let output = GrayImage::from_matrix(&restored)?;

    let before = d.energy();
    let retained_energy_percent = if before > 0.0 {
        100.0 * kept.energy() / before
    } else {
        100.0
    };
    let zeros = zero_count(&kept);
    Ok(CompressionReport {
        wavelet: config.wavelet,
        levels: config.levels,
        threshold: config.threshold,
        policy: config.policy,
        zero_count: zeros,
        coefficient_count: kept.coefficient_count(),
        zero_percentage: zero_percentage(&kept),
        psnr_db: psnr_db(image, &output, 255.0)?,
        retained_energy_percent,
        output,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform2d::decompose2d;

    fn ramp(n: usize) -> Array2<f64> {
        Array2::from_shape_fn((n, n), |(r, c)| ((r * 13 + c * 7) % 256) as f64 + 0.25)
    }

    #[test]
    fn zero_threshold_keeps_everything_nonzero() {
        let d = decompose2d(&ramp(32), WaveletId::Daubechies(2), 2, ExtensionMode::Periodic).unwrap();
        let t = hard_threshold(&d, 0.0, ThresholdPolicy::AllBands);
        assert_eq!(zero_count(&t), zero_count(&d));
        assert_eq!(t, d);
    }

    #[test]
    fn infinite_threshold_with_all_bands() {
        let d = decompose2d(&ramp(32), WaveletId::Haar, 3, ExtensionMode::Periodic).unwrap();
        let t = hard_threshold(&d, f64::MAX, ThresholdPolicy::AllBands);
        assert_eq!(zero_percentage(&t), 100.0);
        let t = hard_threshold(&d, f64::MAX, ThresholdPolicy::DetailsOnly);
        assert!(t.ll_final.iter().all(|&c| c != 0.0));
    }

    #[test]
    fn half_zeroed() {
        let mut d = decompose2d(&Array2::from_elem((4, 4), 1.0), WaveletId::Haar, 1, ExtensionMode::Periodic).unwrap();
        d.ll_final.fill(1.0);
        d.detail_levels[0].lh.fill(1.0);
        d.detail_levels[0].hl.fill(0.0);
        d.detail_levels[0].hh.fill(0.0);
        assert_eq!(zero_percentage(&d), 50.0);
    }

    #[test]
    fn idempotent() {
        let d = decompose2d(&ramp(64), WaveletId::Daubechies(4), 3, ExtensionMode::Periodic).unwrap();
        let once = hard_threshold(&d, 20.0, ThresholdPolicy::DetailsOnly);
        assert_eq!(hard_threshold(&once, 20.0, ThresholdPolicy::DetailsOnly), once);
    }

    #[test]
    fn policy_names() {
        assert_eq!("details".parse::<ThresholdPolicy>().unwrap(), ThresholdPolicy::DetailsOnly);
        assert_eq!("all".parse::<ThresholdPolicy>().unwrap(), ThresholdPolicy::AllBands);
        assert!("some".parse::<ThresholdPolicy>().is_err());
    }

    #[test]
    fn rejects_bad_inputs() {
        let img = GrayImage::filled(8, 8, 10).unwrap();
        assert!(matches!(
            compress2d(&img, WaveletId::Haar, 4, 30.0),
            Err(Error::ImageTooSmall { .. })
        ));
        assert!(compress2d(&img, WaveletId::Haar, 2, -1.0).is_err());
    }

    #[test]
    fn report_json() {
        let img = GrayImage::filled(16, 16, 100).unwrap();
        let r = compress2d(&img, WaveletId::Haar, 2, 30.0).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["infinite_psnr"], true);
        assert!(v.get("psnr_db").is_none());
        assert_eq!(v["wavelet"], "haar");
        assert_eq!(v["policy"], "details");
        // constant image: only the 4x4 approximation is nonzero
        assert_eq!(r.zero_count, 256 - 16);
        assert_eq!(r.implied_ratio(), Some(16.0));
    }
}
