//! mdbook cannot run a chapter's examples against the workspace crates, so
//! each chapter is included here as a doc comment and `cargo test --doc`
//! does the work. One module per chapter keeps test failures attributable
//! to their file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/vectors-and-paths.md")]
pub mod vectors_and_paths {}

#[doc = include_str!("../../../book/src/rules-and-planners.md")]
pub mod rules_and_planners {}

#[doc = include_str!("../../../book/src/sphere-planner.md")]
pub mod sphere_planner {}

#[doc = include_str!("../../../book/src/transfer-and-annulus.md")]
pub mod transfer_and_annulus {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
