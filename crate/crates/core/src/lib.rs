//! Exact-rational engine for deciding canonicity of non-degenerate
//! hypersurface singularities via Newton polyhedra, computing weighted
//! blow-up discrepancies and plt-inducing weights, and classifying the
//! three-dimensional diagonal (Brieskorn-type) singularities whose every
//! log-canonical boundary carries at most one divisor of discrepancy -1.
//!
//! All arithmetic is exact: big integers and big rationals throughout,
//! no floating point anywhere.

pub mod blowup;
pub mod classifier;
pub mod complement;
mod dd;
pub mod error;
pub mod lattice;
pub mod ledger;
pub mod lp;
pub mod newton;
pub mod tables;
pub mod wps;

pub use error::{Error, Result};
pub use lattice::{Int, IntVec, Rat, Weight};
pub use newton::{MembershipVerdict, SupportSet};
