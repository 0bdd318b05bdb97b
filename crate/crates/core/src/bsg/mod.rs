//! Block-structure graphs of column-weight-2 circulant matrices.
//!
//! Vertices are block rows; every block column contributes one edge between
//! the two block rows it touches. The edge carries the column index and the
//! slope `s_bottom - s_top (mod m)`; walking it backwards negates the slope.

mod graph;
mod inevitable;
mod walk;

pub use graph::{build_bsg, BlockShifts, BlockStructureGraph, BsgEdge, SlopeLabels, Step};
pub use inevitable::{inevitable_walks, InevitableWalks};
pub use walk::{validate_closed_walk, ClosedWalk, WalkVerdict};
