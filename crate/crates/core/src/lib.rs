//! Multiresolution analysis with cascaded wavelet filter banks.
//!
//! The crate decomposes 1D signals and 2D images into approximation and
//! detail subbands across several dyadic stages, reconstructs them, and
//! measures what survives: SNR, MSE, entropy, PSNR and the share of
//! coefficients zeroed by hard thresholding.
//!
//! | module | contents |
//! |---|---|
//! | [`filters`] | analysis/synthesis filter banks for Haar, Daubechies, Symlet, Coiflet and biorthogonal wavelets |
//! | [`transform1d`] | single-level and stage-L 1D transforms |
//! | [`transform2d`] | separable 2D transforms, subband mosaics |
//! | [`continuous`] | octave-band analysis with Morlet, Cauchy and Shannon wavelets |
//! | [`spectral`] | DCT and FFT baselines |
//! | [`metrics`] | quality measures |
//! | [`compress`] | hard-threshold compression |
//! | [`io`] | WAV, PGM, CSV and JSON |
//! | [`synth`] | the bundled fingerprint-like test image |

pub mod compress;
pub mod continuous;
pub mod error;
pub mod filters;
pub mod io;
pub mod metrics;
pub mod spectral;
pub mod synth;
pub mod transform1d;
pub mod transform2d;

pub use error::{Error, Result};
pub use filters::{get_filterbank, FilterBank, WaveletId};
pub use io::GrayImage;
pub use transform1d::{decompose, reconstruct, Decomposition1D, ExtensionMode};
pub use transform2d::{decompose2d, reconstruct2d, Decomposition2D};
