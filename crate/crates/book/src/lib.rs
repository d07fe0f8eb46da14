//! The guide in `book/src`, compiled as doc modules so that
//! `cargo test --doc -p oneext-book` runs every listing.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("../../../book/src/extendability.md")]
pub mod extendability {}
#[doc = include_str!("../../../book/src/constructions.md")]
pub mod constructions {}
#[doc = include_str!("../../../book/src/hardness.md")]
pub mod hardness {}
#[doc = include_str!("../../../book/src/kernel.md")]
pub mod kernel {}
#[doc = include_str!("../../../book/src/throughput.md")]
pub mod throughput {}
#[doc = include_str!("../../../book/src/unitdisk.md")]
pub mod unitdisk {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
