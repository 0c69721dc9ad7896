//! Separable 2D analysis/synthesis and subband mosaics.
//!
//! One level filters every row with the 1D bank, then every column of the
//! low and high halves. Bands are named by the row filter first:
//!
//! | band | rows | columns |
//! |---|---|---|
//! | `ll` | low | low |
//! | `lh` | low | high |
//! | `hl` | high | low |
//! | `hh` | high | high |
//!
//! `lh` therefore responds to horizontal edges and `hl` to vertical ones.
//! Only `ll` is decomposed further.
//!
//! ```
//! use multiscale::transform2d::{decompose2d, reconstruct2d};
//! use multiscale::{ExtensionMode, WaveletId};
//! use ndarray::Array2;
//!
//! let img = Array2::from_shape_fn((64, 64), |(r, c)| ((r * 7 + c * 3) % 17) as f64);
//! let d = decompose2d(&img, WaveletId::Daubechies(2), 3, ExtensionMode::Periodic)?;
//! assert_eq!(d.ll_final.dim(), (8, 8));
//! let back = reconstruct2d(&d)?;
//! assert!((&back - &img).iter().all(|e| e.abs() < 1e-9));
//! # Ok::<(), multiscale::Error>(())
//! ```

use ndarray::{s, Array2, ArrayView1, Axis};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filters::{get_filterbank, FilterBank, WaveletId};
use crate::io::{quantize, rows_2d, CoeffRow, CoeffTable, GrayImage};
use crate::transform1d::{analyze_level, check_levels, synthesize_level, ExtensionMode};

/// The four subbands of one analysis level.
#[derive(Clone, Debug, PartialEq)]
pub struct SubbandSet {
    pub ll: Array2<f64>,
    pub lh: Array2<f64>,
    pub hl: Array2<f64>,
    pub hh: Array2<f64>,
}

/// Detail bands of one level.
#[derive(Clone, Debug, PartialEq)]
pub struct DetailBands {
    pub lh: Array2<f64>,
    pub hl: Array2<f64>,
    pub hh: Array2<f64>,
}

impl DetailBands {
    pub fn bands(&self) -> [(&'static str, &Array2<f64>); 3] {
        [("lh", &self.lh), ("hl", &self.hl), ("hh", &self.hh)]
    }

    pub fn bands_mut(&mut self) -> [&mut Array2<f64>; 3] {
        [&mut self.lh, &mut self.hl, &mut self.hh]
    }
}

/// Stage-L pyramid of an image.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition2D {
    pub wavelet: WaveletId,
    pub levels: usize,
    pub ll_final: Array2<f64>,
    /// Finest level first.
    pub detail_levels: Vec<DetailBands>,
    pub original_dims: (usize, usize),
    pub extension: ExtensionMode,
}

impl Decomposition2D {
    /// Image size after padding each axis to a multiple of `2^levels`.
    pub fn padded_dims(&self) -> (usize, usize) {
        let (r, c) = self.ll_final.dim();
        (r << self.levels, c << self.levels)
    }

    /// Every stored band, approximation first.
    pub fn all_bands(&self) -> impl Iterator<Item = &Array2<f64>> {
        std::iter::once(&self.ll_final).chain(
            self.detail_levels
                .iter()
                .flat_map(|l| [&l.lh, &l.hl, &l.hh]),
        )
    }

    pub fn coefficient_count(&self) -> usize {
        self.all_bands().map(Array2::len).sum()
    }

    pub fn energy(&self) -> f64 {
        self.all_bands().flatten().map(|c| c * c).sum()
    }
}

impl CoeffTable for Decomposition2D {
    fn coeff_rows(&self) -> Vec<CoeffRow> {
        let mut rows = Vec::with_capacity(self.coefficient_count());
        for (j, level) in self.detail_levels.iter().enumerate() {
            for (name, band) in level.bands() {
                rows.extend(rows_2d(j + 1, name, band));
            }
        }
        rows.extend(rows_2d(self.levels, "ll", &self.ll_final));
        rows
    }
}

fn analyze_lines(
    m: &Array2<f64>,
    axis: Axis,
    fb: &FilterBank,
    ext: ExtensionMode,
) -> Result<(Array2<f64>, Array2<f64>)> {
    let lines: Vec<ArrayView1<f64>> = m.axis_iter(axis).collect();
    let halves = lines
        .par_iter()
        .map(|line| analyze_level(&line.to_vec(), fb, ext))
        .collect::<Result<Vec<_>>>()?;
    let half = halves[0].0.len();
    let build = |high: bool| {
        let mut out = match axis {
            Axis(0) => Array2::zeros((lines.len(), half)),
            _ => Array2::zeros((half, lines.len())),
        };
        for (mut lane, h) in out.axis_iter_mut(axis).zip(&halves) {
            lane.assign(&ArrayView1::from(if high { &h.1 } else { &h.0 }));
        }
        out
    };
    Ok((build(false), build(true)))
}

fn synthesize_lines(
    lo: &Array2<f64>,
    hi: &Array2<f64>,
    axis: Axis,
    fb: &FilterBank,
    ext: ExtensionMode,
    out_len: usize,
) -> Result<Array2<f64>> {
    let pairs: Vec<(ArrayView1<f64>, ArrayView1<f64>)> =
        lo.axis_iter(axis).zip(hi.axis_iter(axis)).collect();
    let lines = pairs
        .par_iter()
        .map(|(a, d)| synthesize_level(&a.to_vec(), &d.to_vec(), fb, ext, out_len))
        .collect::<Result<Vec<_>>>()?;
    let mut out = match axis {
        Axis(0) => Array2::zeros((lines.len(), out_len)),
        _ => Array2::zeros((out_len, lines.len())),
    };
    for (mut lane, line) in out.axis_iter_mut(axis).zip(&lines) {
        lane.assign(&ArrayView1::from(line));
    }
    Ok(out)
}

/// One separable analysis level.
pub fn analyze_level2d(image: &Array2<f64>, fb: &FilterBank, ext: ExtensionMode) -> Result<SubbandSet> {
    let (rows, cols) = image.dim();
    if rows < 2 || cols < 2 {
        return Err(Error::ImageTooSmall { rows, cols, min: 2 });
    }
    if ext == ExtensionMode::Periodic {
        if rows % 2 != 0 {
            return Err(Error::OddLengthPeriodic(rows));
        }
        if cols % 2 != 0 {
            return Err(Error::OddLengthPeriodic(cols));
        }
    }
    let (lo, hi) = analyze_lines(image, Axis(0), fb, ext)?;
    let (ll, lh) = analyze_lines(&lo, Axis(1), fb, ext)?;
    let (hl, hh) = analyze_lines(&hi, Axis(1), fb, ext)?;
    Ok(SubbandSet { ll, lh, hl, hh })
}

/// Inverts [`analyze_level2d`] for an image of `out_dims`.
pub fn synthesize_level2d(
    s: &SubbandSet,
    fb: &FilterBank,
    ext: ExtensionMode,
    out_dims: (usize, usize),
) -> Result<Array2<f64>> {
    let fits = |dim: (usize, usize)| match ext {
        ExtensionMode::Periodic => {
            out_dims.0.is_multiple_of(2) && out_dims.1.is_multiple_of(2) && dim == (out_dims.0 / 2, out_dims.1 / 2)
        }
        ExtensionMode::Symmetric => dim == (out_dims.0.div_ceil(2), out_dims.1.div_ceil(2)),
    };
    for band in [&s.ll, &s.lh, &s.hl, &s.hh] {
        if band.is_empty() || !fits(band.dim()) {
            return Err(Error::DimensionMismatch {
                got: band.dim(),
                expected: out_dims,
            });
        }
    }
    let lo = synthesize_lines(&s.ll, &s.lh, Axis(1), fb, ext, out_dims.0)?;
    let hi = synthesize_lines(&s.hl, &s.hh, Axis(1), fb, ext, out_dims.0)?;
    synthesize_lines(&lo, &hi, Axis(0), fb, ext, out_dims.1)
}

fn pad_image(image: &Array2<f64>, block: usize) -> Array2<f64> {
    let (r, c) = image.dim();
    let (pr, pc) = (r.div_ceil(block) * block, c.div_ceil(block) * block);
    if (pr, pc) == (r, c) {
        return image.clone();
    }
    Array2::from_shape_fn((pr, pc), |(i, j)| image[[i % r, j % c]])
}

/// Cascades [`analyze_level2d`] down the `ll` branch.
///
/// Each axis is extended by periodic wrap to a multiple of `2^levels`;
/// [`reconstruct2d`] crops back to the original size.
pub fn decompose2d(
    image: &Array2<f64>,
    wavelet: WaveletId,
    levels: usize,
    ext: ExtensionMode,
) -> Result<Decomposition2D> {
    let fb = get_filterbank(wavelet)?;
    decompose2d_with(image, &fb, levels, ext)
}

pub fn decompose2d_with(
    image: &Array2<f64>,
    fb: &FilterBank,
    levels: usize,
    ext: ExtensionMode,
) -> Result<Decomposition2D> {
    let (rows, cols) = image.dim();
    if rows < 2 || cols < 2 {
        return Err(Error::ImageTooSmall { rows, cols, min: 2 });
    }
    check_levels(levels, rows.min(cols))?;
    let mut ll = pad_image(image, 1 << levels);
    let mut detail_levels = Vec::with_capacity(levels);
    for _ in 0..levels {
        let s = analyze_level2d(&ll, fb, ext)?;
        detail_levels.push(DetailBands {
            lh: s.lh,
            hl: s.hl,
            hh: s.hh,
        });
        ll = s.ll;
    }
    Ok(Decomposition2D {
        wavelet: fb.id(),
        levels,
        ll_final: ll,
        detail_levels,
        original_dims: (rows, cols),
        extension: ext,
    })
}

fn validate(d: &Decomposition2D) -> Result<()> {
    let bad = |msg: String| Err(Error::MalformedDecomposition(msg));
    if d.levels == 0 || d.detail_levels.len() != d.levels {
        return bad(format!(
            "{} detail levels for {} levels",
            d.detail_levels.len(),
            d.levels
        ));
    }
    let (mut r, mut c) = d.ll_final.dim();
    if r == 0 || c == 0 {
        return bad("empty approximation".into());
    }
    for (j, level) in d.detail_levels.iter().enumerate().rev() {
        for (name, band) in level.bands() {
            if band.dim() != (r, c) {
                return bad(format!(
                    "level {} {name} is {:?}, expected {:?}",
                    j + 1,
                    band.dim(),
                    (r, c)
                ));
            }
        }
        r *= 2;
        c *= 2;
    }
    let (or, oc) = d.original_dims;
    if or == 0 || oc == 0 || or > r || oc > c {
        return bad(format!("original dims {:?} do not fit {:?}", d.original_dims, (r, c)));
    }
    Ok(())
}

/// Inverts [`decompose2d`], returning an image of `original_dims`.
pub fn reconstruct2d(d: &Decomposition2D) -> Result<Array2<f64>> {
    let fb = get_filterbank(d.wavelet)?;
    reconstruct2d_with(d, &fb)
}

pub fn reconstruct2d_with(d: &Decomposition2D, fb: &FilterBank) -> Result<Array2<f64>> {
    validate(d)?;
    let mut ll = d.ll_final.clone();
    for level in d.detail_levels.iter().rev() {
        let (r, c) = level.lh.dim();
        let s = SubbandSet {
            ll,
            lh: level.lh.clone(),
            hl: level.hl.clone(),
            hh: level.hh.clone(),
        };
        ll = synthesize_level2d(&s, fb, d.extension, (2 * r, 2 * c))?;
    }
    let (or, oc) = d.original_dims;
    Ok(ll.slice(s![..or, ..oc]).to_owned())
}

/// How band values are mapped to gray levels in a mosaic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    /// Each band spans 0..=255 on its own.
    #[default]
    PerBand,
    /// One affine map for all bands.
    Global,
}

/// A rectangle of the mosaic and the band drawn there.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Tile {
    pub band: &'static str,
    /// 0 for the final approximation.
    pub level: usize,
    pub row: usize,
    pub col: usize,
    pub rows: usize,
    pub cols: usize,
}

/// Nested-quadrant layout: `ll_final` in the top-left corner, and for each
/// level `hl` to its right, `lh` below and `hh` diagonal.
pub fn mosaic_tiles(d: &Decomposition2D) -> Vec<Tile> {
    let (r, c) = d.ll_final.dim();
    let mut tiles = vec![Tile {
        band: "ll",
        level: 0,
        row: 0,
        col: 0,
        rows: r,
        cols: c,
    }];
    for (j, level) in d.detail_levels.iter().enumerate().rev() {
        let (r, c) = level.lh.dim();
        for (band, row, col) in [("hl", 0, c), ("lh", r, 0), ("hh", r, c)] {
            tiles.push(Tile {
                band,
                level: j + 1,
                row,
                col,
                rows: r,
                cols: c,
            });
        }
    }
    tiles
}

fn band_of<'a>(d: &'a Decomposition2D, tile: &Tile) -> &'a Array2<f64> {
    if tile.level == 0 {
        return &d.ll_final;
    }
    let level = &d.detail_levels[tile.level - 1];
    match tile.band {
        "lh" => &level.lh,
        "hl" => &level.hl,
        _ => &level.hh,
    }
}

fn range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

/// Renders the pyramid as one 8-bit image of the padded size.
///
/// Bands with no spread are drawn mid-gray (128).
pub fn render_mosaic(d: &Decomposition2D, normalization: Normalization) -> GrayImage {
    let (rows, cols) = d.padded_dims();
    let mut canvas = Array2::<f64>::zeros((rows, cols));
    let global = range(d.all_bands().flatten().copied());
    for tile in mosaic_tiles(d) {
        let band = band_of(d, &tile);
        let (lo, hi) = match normalization {
            Normalization::PerBand => range(band.iter().copied()),
            Normalization::Global => global,
        };
        let map = |v: f64| {
            if hi > lo {
                255.0 * (v - lo) / (hi - lo)
            } else {
                128.0
            }
        };
        canvas
            .slice_mut(s![tile.row..tile.row + tile.rows, tile.col..tile.col + tile.cols])
            .zip_mut_with(band, |out, &v| *out = map(v));
    }
    let pixels = canvas.iter().map(|&v| quantize(v)).collect();
    GrayImage::new(rows, cols, pixels).expect("mosaic dimensions are positive")
}
