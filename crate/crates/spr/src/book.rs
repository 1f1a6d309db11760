//! The user guide, one module per chapter.
//!
//! The book under `book/` is rendered with `mdbook`; each chapter is also
//! included here as module documentation so that `cargo test --doc` compiles
//! and runs every code block.  A failing doc-test names the chapter module,
//! which points back to the Markdown file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/insertion.md")]
pub mod insertion {}

#[doc = include_str!("../../../book/src/classes.md")]
pub mod classes {}

#[doc = include_str!("../../../book/src/algebras.md")]
pub mod algebras {}

#[doc = include_str!("../../../book/src/symmetric-functions.md")]
pub mod symmetric_functions {}

#[doc = include_str!("../../../book/src/peak-functions.md")]
pub mod peak_functions {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
