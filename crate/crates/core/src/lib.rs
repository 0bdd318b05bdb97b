//! Construction and girth analysis of double-cylinder (DC-LDPC) cycle codes.
//!
//! The crate is organised bottom-up:
//!
//! - [`construction`]: `H(a,b,c)` mother matrices, circulant lifting, alist and
//!   JSON persistence.
//! - [`bsg`]: block-structure graphs, closed walks and the two inevitable
//!   walks that bound the achievable girth.
//! - [`girth`]: Tanner-graph girth by plain BFS and by a search over the
//!   block-structure graph, plus the closed-form `g_max`.
//! - [`search`]: slope-sequence search for a target girth.
//! - [`table`]: the published code table as fixtures and its verification.

pub mod bsg;
pub mod construction;
pub mod error;
pub mod girth;
pub mod parallel;
pub mod search;
pub mod table;

pub use error::{Error, Result};
