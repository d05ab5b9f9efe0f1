//! Verification kernel for infinitesimal Cherednik algebras of gl2.
//!
//! Elements are kept in PBW normal form with respect to a total order on
//! the generators `tau, h, e, f, x, y, x1, y1`; the relation table of `H_c`
//! drives the rewriting. On top of the engine sit the `F`/`G` calculus on
//! the center of `U(gl2)`, the admissibility (Jacobi) condition, the
//! central elements `B` and `D`, Verma-module checks and the
//! positive-characteristic p-center checks.

pub mod algebra;
pub mod calculus;
pub mod central;
pub mod centrality;
pub mod error;
pub mod field;
pub mod generator;
pub mod linalg;
pub mod modp;
pub mod ncpoly;
pub mod pbw;
pub mod rep;
pub mod rewrite;
pub mod table;

#[cfg(test)]
mod testutil;

pub use algebra::{embed_central, Distinguished, Gl2Cherednik};
pub use calculus::fg::{fg, fg_extract, FgTable};
pub use calculus::{
    center_scan, central_b, central_d_lift, jacobi_residual, solve_f, CenterScan, CentralityCheck,
    DLift, ScanBox,
};
pub use central::{CentralPoly, CentralVar};
pub use centrality::solve_centrality;
pub use error::{EngineError, Result};
pub use field::{Coeff, Fp, Rational};
pub use generator::{Gen, GenOrder};
pub use modp::{
    modp_suite, p_power_landing, p_square_central, restricted_powers_central, ModpEntry,
    ModpReport, Status,
};
pub use ncpoly::{NcPoly, Word};
pub use pbw::{pbw_check, PbwReport};
pub use rep::{
    alpha_m, finite_dim_test, maximal_vectors, verma_act, AlphaM, FiniteDimReport, Gl2Irrep,
    VermaElement, VermaModule,
};
pub use rewrite::{commutator, multiply, normalize, Normalizer};
pub use table::{RelationTable, DEFAULT_STEP_BUDGET};
