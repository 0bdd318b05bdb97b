//! Mother-matrix construction, circulant lifting and code persistence.

mod alist;
mod descriptor;
mod lift;
mod mother;
mod params;
mod sparse;

pub use alist::{export_alist, import_alist, read_alist, write_alist};
pub use descriptor::CodeDescriptor;
pub use lift::{lift, lift_with, Anchoring, LiftedCode, SlopeSequence};
pub use mother::{build_mother, MotherMatrix};
pub use params::{code_length, CodeParams};
pub use sparse::SparseMatrix;
