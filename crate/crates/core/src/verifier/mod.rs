//! Vertex-count thresholds, extremal polygons, exhaustive search on boxes, and
//! the bound pipelines for classified polygons.
//!
//! For a sublattice with invariant factors `(δ, n)` the threshold is
//! `ν(δ, n) = 2n + 2·min(δ, 3) − 3`: every convex lattice polygon with `ν`
//! vertices contains a point of the sublattice, and `(ν − 1)`-gons avoiding
//! it exist whenever `ν > 3`.

mod bounds;
mod extremal;
mod search;

pub use bounds::{
    check_parity_argument, check_subtheorem_c, type_ii_bound_pipeline, vertex_lattice_rank,
};
pub use extremal::{construct_extremal, nu};
pub use search::{
    verify_main_theorem, FreePolygonSearch, SearchBox, SearchTask, TaskOutcome, VerificationReport,
};
