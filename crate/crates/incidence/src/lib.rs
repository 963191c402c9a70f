//! Exact constructions of dense point-line incidence configurations on
//! integer lattices, with independent counting engines and analysis of the
//! constant of proportionality in the n^{2/3} l^{2/3} incidence bound.
//!
//! Two families are built exactly:
//!
//! - [`elekes`]: the k x km grid with every non-vertical line through
//!   exactly k of its points (constant >= 1), plus the classic variant
//!   whose constant is exactly 2^{-2/3}; and
//! - [`erdos`]: the k x k grid with all lines in canonical coprime
//!   directions of L1 norm at most m crossing its bounding square, whose
//!   constant tends to 3 / (2^{1/3} pi^{2/3}) ~ 1.11.
//!
//! [`counting`] provides two independent incidence counters (brute force
//! and direction-bucketed) and an exhaustive all-lines-through-pairs
//! oracle; [`analysis`] computes constants, checks the
//! sqrt(n) <= l <= n^2 regime, runs parameter sweeps, and verifies that no
//! regime-satisfying configuration exceeds the Szemeredi-Trotter ceiling
//! of 2.5. Everything is integer-exact: lines are deduplicated by
//! canonical-form equality and all arithmetic is overflow-checked.

pub mod analysis;
pub mod counting;
pub mod elekes;
pub mod erdos;
mod error;
pub mod geom;
pub mod numtheory;

pub use error::{Error, Result};
pub use geom::{
    canonicalize_line, point_on_line, CanonicalLine, Configuration, Construction, Direction,
    IncidenceStats, LatticePoint, Provenance,
};
