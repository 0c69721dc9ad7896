//! Runs the code listings of the guide in `book/` as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/filters.md")]
pub mod filters {}
#[doc = include_str!("../../../book/src/transform1d.md")]
pub mod transform1d {}
#[doc = include_str!("../../../book/src/transform2d.md")]
pub mod transform2d {}
#[doc = include_str!("../../../book/src/continuous.md")]
pub mod continuous {}
#[doc = include_str!("../../../book/src/spectral.md")]
pub mod spectral {}
#[doc = include_str!("../../../book/src/metrics.md")]
pub mod metrics {}
#[doc = include_str!("../../../book/src/compression.md")]
pub mod compression {}
#[doc = include_str!("../../../book/src/files.md")]
pub mod files {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
