//! Truncated power-series arithmetic for the parity of singular overpartitions.
//!
//! The crate is organized around two coefficient domains:
//! - [`fps_gf2`]: bit-packed series over GF(2), where every congruence lives;
//! - [`fps_int`]: exact integer series, the independent oracle for the
//!   overpartition counts before reduction mod 2.
//!
//! On top of those sit [`qexpr`] (a small surface language for sums of
//! eta-monomials `q^c * prod f_t^e`), [`operators`] (named dissection
//! pipelines), [`theorems`] (the machine-readable identity catalog plus the
//! theorem checkers), and [`density`] (parity-density tables).

pub mod density;
pub mod fps_gf2;
pub mod fps_int;
pub mod operators;
pub mod qexpr;
pub mod theorems;


pub use density::{DensityError, DensityReport, DensitySample, DEFAULT_BUDGET};
pub use fps_gf2::{BitSeries, QuadraticForm, SeriesError};
pub use fps_int::{IntSeries, OracleError, SingularSpec};
pub use operators::{Pipeline, PipelineStep, RunOutcome, Start, ThetaTerm};
pub use qexpr::{Monomial, ParseError, QExpr};
pub use theorems::{
    Catalog, CaseReport, IdentityRecord, PowerDecomposition, RecordOutcome, Subsequence,
    SubsequenceReport, Theorem2Case, TheoremError,
};




