//! WAV, PGM, coefficient CSV and JSON report codecs.
//!
//! Only 16-bit PCM WAV and binary 8-bit PGM (`P5`, maxval 255) are accepted;
//! anything else is rejected with a typed error rather than converted.
//!
//! ```
//! use multiscale::io::{read_pgm, write_pgm, GrayImage};
//!
//! let img = GrayImage::new(2, 3, vec![0, 10, 20, 30, 40, 255])?;
//! let bytes = write_pgm(&img);
//! assert!(bytes.starts_with(b"P5\n3 2\n255\n"));
//! assert_eq!(read_pgm(&bytes)?, img);
//! # Ok::<(), multiscale::Error>(())
//! ```

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use ndarray::Array2;
use serde::Serialize;

use crate::error::{Error, Result};

/// Mono audio with samples in `[-1, 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AudioBuffer {
    pub samples: Vec<f64>,
    pub sample_rate: u32,
    pub source_bit_depth: u16,
}

/// 8-bit grayscale image stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrayImage {
    rows: usize,
    cols: usize,
    pixels: Vec<u8>,
}

impl GrayImage {
    pub fn new(rows: usize, cols: usize, pixels: Vec<u8>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameter(format!(
                "image dimensions {rows}x{cols} must be positive"
            )));
        }
        if pixels.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                left: vec![rows, cols],
                right: vec![pixels.len()],
            });
        }
        Ok(GrayImage { rows, cols, pixels })
    }

    pub fn filled(rows: usize, cols: usize, value: u8) -> Result<Self> {
        GrayImage::new(rows, cols, vec![value; rows * cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.pixels[row * self.cols + col]
    }

    pub fn to_matrix(&self) -> Array2<f64> {
        Array2::from_shape_fn((self.rows, self.cols), |(r, c)| self.get(r, c) as f64)
    }

    /// Clamps to `[0, 255]` and rounds half away from zero.
    pub fn from_matrix(m: &Array2<f64>) -> Result<Self> {
        let (rows, cols) = m.dim();
        let pixels = m.iter().map(|&v| quantize(v)).collect();
        GrayImage::new(rows, cols, pixels)
    }
}

pub(crate) fn quantize(v: f64) -> u8 {
    if v.is_nan() {
        return 0;
    }
    v.clamp(0.0, 255.0).round() as u8
}

fn le_u16(b: &[u8], at: usize) -> u16 {
    u16::from_le_bytes([b[at], b[at + 1]])
}

fn le_u32(b: &[u8], at: usize) -> u32 {
    u32::from_le_bytes([b[at], b[at + 1], b[at + 2], b[at + 3]])
}

const WAVE_FORMAT_PCM: u16 = 1;
const WAVE_FORMAT_EXTENSIBLE: u16 = 0xFFFE;

/// Parses a RIFF/WAVE file holding 16-bit PCM, one or two channels.
///
/// Samples are divided by 32768; stereo frames are averaged.
pub fn read_wav(bytes: &[u8]) -> Result<AudioBuffer> {
    let bad = |m: &str| Error::MalformedWav(m.to_string());
    if bytes.len() < 12 || &bytes[0..4] != b"RIFF" || &bytes[8..12] != b"WAVE" {
        return Err(bad("missing RIFF/WAVE header"));
    }
    let riff_end = (le_u32(bytes, 4) as usize).saturating_add(8);
    if riff_end > bytes.len() {
        return Err(bad("RIFF size exceeds file length"));
    }
    let body = &bytes[..riff_end];

    let mut format: Option<(u16, u32, u16)> = None;
    let mut data: Option<&[u8]> = None;
    let mut at = 12;
    while at + 8 <= body.len() {
        let id = &body[at..at + 4];
        let size = le_u32(body, at + 4) as usize;
        let start = at + 8;
        let end = start
            .checked_add(size)
            .filter(|&e| e <= body.len())
            .ok_or_else(|| bad("chunk runs past end of file"))?;
        let chunk = &body[start..end];
        match id {
            b"fmt " => {
                if chunk.len() < 16 {
                    return Err(bad("fmt chunk too short"));
                }
                let mut tag = le_u16(chunk, 0);
                if tag == WAVE_FORMAT_EXTENSIBLE && chunk.len() >= 26 {
                    tag = le_u16(chunk, 24);
                }
                if tag != WAVE_FORMAT_PCM {
                    return Err(Error::UnsupportedEncoding(format!("format tag {tag:#06x}")));
                }
                let channels = le_u16(chunk, 2);
                let rate = le_u32(chunk, 4);
                let bits = le_u16(chunk, 14);
                format = Some((channels, rate, bits));
            }
            b"data" => data = Some(chunk),
            _ => {}
        }
        at = end + (size & 1);
    }

    let (channels, sample_rate, bits) = format.ok_or_else(|| bad("no fmt chunk"))?;
    let data = data.ok_or_else(|| bad("no data chunk"))?;
    if bits != 16 {
        return Err(Error::UnsupportedEncoding(format!("{bits}-bit samples")));
    }
    if !(1..=2).contains(&channels) {
        return Err(Error::UnsupportedEncoding(format!("{channels} channels")));
    }
    let frame = 2 * channels as usize;
    if data.len() % frame != 0 {
        return Err(bad("data chunk is not a whole number of frames"));
    }
    if data.is_empty() {
        return Err(bad("no samples"));
    }
    let samples = data
        .chunks_exact(frame)
        .map(|f| {
            let sum: f64 = f
                .chunks_exact(2)
                .map(|s| i16::from_le_bytes([s[0], s[1]]) as f64 / 32768.0)
                .sum();
            sum / channels as f64
        })
        .collect();
    Ok(AudioBuffer {
        samples,
        sample_rate,
        source_bit_depth: bits,
    })
}

/// Encodes mono 16-bit PCM with a canonical 44-byte header.
pub fn write_wav(buf: &AudioBuffer) -> Vec<u8> {
    let data_len = 2 * buf.samples.len() as u32;
    let mut out = Vec::with_capacity(44 + data_len as usize);
    out.extend_from_slice(b"RIFF");
    out.extend_from_slice(&(36 + data_len).to_le_bytes());
    out.extend_from_slice(b"WAVEfmt ");
    out.extend_from_slice(&16u32.to_le_bytes());
    out.extend_from_slice(&WAVE_FORMAT_PCM.to_le_bytes());
    out.extend_from_slice(&1u16.to_le_bytes());
    out.extend_from_slice(&buf.sample_rate.to_le_bytes());
    out.extend_from_slice(&(2 * buf.sample_rate).to_le_bytes());
    out.extend_from_slice(&2u16.to_le_bytes());
    out.extend_from_slice(&16u16.to_le_bytes());
    out.extend_from_slice(b"data");
    out.extend_from_slice(&data_len.to_le_bytes());
    for &s in &buf.samples {
        let v = (s * 32768.0).round().clamp(-32768.0, 32767.0) as i16;
        out.extend_from_slice(&v.to_le_bytes());
    }
    out
}

struct PgmHeader<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl PgmHeader<'_> {
    fn skip_space(&mut self) {
        while self.at < self.bytes.len() {
            match self.bytes[self.at] {
                b'#' => {
                    while self.at < self.bytes.len() && self.bytes[self.at] != b'\n' {
                        self.at += 1;
                    }
                }
                c if c.is_ascii_whitespace() => self.at += 1,
                _ => break,
            }
        }
    }

    fn number(&mut self, what: &str) -> Result<u32> {
        self.skip_space();
        let start = self.at;
        while self.at < self.bytes.len() && self.bytes[self.at].is_ascii_digit() {
            self.at += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.at])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::MalformedPgm(format!("bad {what}")))
    }
}

/// Parses a binary `P5` graymap with maxval 255. Header comments are skipped.
pub fn read_pgm(bytes: &[u8]) -> Result<GrayImage> {
    if bytes.len() < 2 || &bytes[..2] != b"P5" {
        return Err(Error::MalformedPgm("missing P5 magic".into()));
    }
    let mut h = PgmHeader { bytes, at: 2 };
    let cols = h.number("width")? as usize;
    let rows = h.number("height")? as usize;
    let maxval = h.number("maxval")?;
    if maxval != 255 {
        return Err(Error::UnsupportedMaxval(maxval));
    }
    if rows == 0 || cols == 0 {
        return Err(Error::MalformedPgm(format!("empty image {cols}x{rows}")));
    }
    match bytes.get(h.at) {
        Some(c) if c.is_ascii_whitespace() => {}
        _ => return Err(Error::MalformedPgm("no separator before raster".into())),
    }
    let start = h.at + 1;
    let need = rows
        .checked_mul(cols)
        .ok_or_else(|| Error::MalformedPgm("dimensions overflow".into()))?;
    let raster = bytes
        .get(start..start + need)
        .ok_or_else(|| Error::MalformedPgm(format!("raster shorter than {need} bytes")))?;
    GrayImage::new(rows, cols, raster.to_vec())
}

pub fn write_pgm(img: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.cols, img.rows).into_bytes();
    out.extend_from_slice(&img.pixels);
    out
}

pub fn read_wav_file(path: impl AsRef<Path>) -> Result<AudioBuffer> {
    read_wav(&fs::read(path)?)
}

pub fn write_wav_file(buf: &AudioBuffer, path: impl AsRef<Path>) -> Result<()> {
    Ok(fs::write(path, write_wav(buf))?)
}

pub fn read_pgm_file(path: impl AsRef<Path>) -> Result<GrayImage> {
    read_pgm(&fs::read(path)?)
}

pub fn write_pgm_file(img: &GrayImage, path: impl AsRef<Path>) -> Result<()> {
    Ok(fs::write(path, write_pgm(img))?)
}

/// Pretty JSON followed by a newline.
pub fn report_json<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report types serialize");
    s.push('\n');
    s
}

pub fn write_report<T: Serialize>(report: &T, path: impl AsRef<Path>) -> Result<()> {
    Ok(fs::write(path, report_json(report))?)
}

/// One coefficient in a CSV dump. `col` is present for 2D bands only.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffRow {
    pub level: usize,
    pub band: String,
    pub index: usize,
    pub col: Option<usize>,
    pub value: f64,
}

/// Anything that can be flattened into coefficient rows.
pub trait CoeffTable {
    fn coeff_rows(&self) -> Vec<CoeffRow>;
}

impl CoeffTable for [CoeffRow] {
    fn coeff_rows(&self) -> Vec<CoeffRow> {
        self.to_vec()
    }
}

impl CoeffTable for Vec<CoeffRow> {
    fn coeff_rows(&self) -> Vec<CoeffRow> {
        self.clone()
    }
}

pub(crate) fn rows_1d<'a>(level: usize, band: &str, v: &'a [f64]) -> impl Iterator<Item = CoeffRow> + 'a {
    let band = band.to_string();
    v.iter().enumerate().map(move |(index, &value)| CoeffRow {
        level,
        band: band.clone(),
        index,
        col: None,
        value,
    })
}

pub(crate) fn rows_2d(level: usize, band: &str, m: &Array2<f64>) -> Vec<CoeffRow> {
    m.indexed_iter()
        .map(|((r, c), &value)| CoeffRow {
            level,
            band: band.to_string(),
            index: r,
            col: Some(c),
            value,
        })
        .collect()
}

/// Renders rows as CSV. Values carry 17 significant digits so parsing them
/// back gives the same `f64`.
pub fn coeff_csv(rows: &[CoeffRow]) -> String {
    let two_d = rows.first().is_some_and(|r| r.col.is_some());
    let mut out = String::from(if two_d {
        "level,band,row,col,value\n"
    } else {
        "level,band,index,value\n"
    });
    for r in rows {
        match r.col {
            Some(c) => writeln!(out, "{},{},{},{},{:.16e}", r.level, r.band, r.index, c, r.value),
            None => writeln!(out, "{},{},{},{:.16e}", r.level, r.band, r.index, r.value),
        }
        .expect("writing to a String");
    }
    out
}

pub fn write_coeff_csv<T: CoeffTable + ?Sized>(table: &T, path: impl AsRef<Path>) -> Result<()> {
    Ok(fs::write(path, coeff_csv(&table.coeff_rows()))?)
}

/// Parses the output of [`coeff_csv`].
pub fn read_coeff_csv(text: &str) -> Result<Vec<CoeffRow>> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::MalformedCsv("empty file".into()))?;
    let two_d = match header {
        "level,band,index,value" => false,
        "level,band,row,col,value" => true,
        other => return Err(Error::MalformedCsv(format!("unexpected header `{other}`"))),
    };
    let width = if two_d { 5 } else { 4 };
    lines
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, line)| {
            let bad = || Error::MalformedCsv(format!("line {}: `{line}`", i + 2));
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != width {
                return Err(bad());
            }
            let int = |s: &str| s.parse::<usize>().map_err(|_| bad());
            Ok(CoeffRow {
                level: int(fields[0])?,
                band: fields[1].to_string(),
                index: int(fields[2])?,
                col: if two_d { Some(int(fields[3])?) } else { None },
                value: fields[width - 1].parse::<f64>().map_err(|_| bad())?,
            })
        })
        .collect()
}
