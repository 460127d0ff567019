//! Chapters of the trimark guide, compiled as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/matrices.md")]
pub mod matrices {}

#[doc = include_str!("../../../book/src/words.md")]
pub mod words {}

#[doc = include_str!("../../../book/src/classification.md")]
pub mod classification {}

#[doc = include_str!("../../../book/src/euclid.md")]
pub mod euclid {}

#[doc = include_str!("../../../book/src/snails.md")]
pub mod snails {}

#[doc = include_str!("../../../book/src/skeletons.md")]
pub mod skeletons {}

#[doc = include_str!("../../../book/src/arrows.md")]
pub mod arrows {}

#[doc = include_str!("../../../book/src/codes.md")]
pub mod codes {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
