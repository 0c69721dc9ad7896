use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported wavelet `{0}`")]
    UnsupportedWavelet(String),

    #[error("filter bank `{0}` is biorthogonal; orthonormality does not apply")]
    NotOrthogonalFamily(String),

    #[error("signal of length {len} is too short (need at least {min})")]
    SignalTooShort { len: usize, min: usize },

    #[error("periodic extension needs an even length, got {0}")]
    OddLengthPeriodic(usize),

    #[error("coefficient vectors differ in length: {approx} vs {detail}")]
    LengthMismatch { approx: usize, detail: usize },

    #[error("{levels} levels requested but a length-{len} input supports at most {max}")]
    TooManyLevels { levels: usize, len: usize, max: usize },

    #[error("malformed decomposition: {0}")]
    MalformedDecomposition(String),

    #[error("image of {rows}x{cols} is too small (need at least {min}x{min})")]
    ImageTooSmall { rows: usize, cols: usize, min: usize },

    #[error("subband dimensions {got:?} do not fit output {expected:?}")]
    DimensionMismatch {
        got: (usize, usize),
        expected: (usize, usize),
    },

    #[error("frame response is identically zero")]
    DegenerateFrame,

    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch { left: Vec<usize>, right: Vec<usize> },

    #[error("reference has zero energy")]
    ZeroReference,

    #[error("no data")]
    EmptyData,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed WAV: {0}")]
    MalformedWav(String),

    #[error("unsupported WAV encoding: {0}")]
    UnsupportedEncoding(String),

    #[error("malformed PGM: {0}")]
    MalformedPgm(String),

    #[error("unsupported PGM maxval {0} (only 255 is accepted)")]
    UnsupportedMaxval(u32),

    #[error("malformed CSV: {0}")]
    MalformedCsv(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}
