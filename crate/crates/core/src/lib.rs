//! Exact Laplacian spectral toolkit for dumbbell and theta graphs.
//!
//! The crate computes integer Laplacian characteristic polynomials, checks
//! the three-term recurrences and closed forms for the dumbbell family
//! `D(p,k,q)` and the theta family `Θ(r,s,t)` against direct matrix
//! computations, and verifies by exhaustive search on small vertex counts
//! that members of both families have no non-isomorphic Laplacian-cospectral
//! mate.
//!
//! Everything on the polynomial path is exact: coefficients are
//! arbitrary-precision integers and no floating point is used.

pub mod charpoly;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod poly;
pub mod random;
pub mod recurrence;
pub mod verify;

pub use charpoly::{charpoly, laplacian, submatrix_charpoly, u_matrix_charpoly, IntMatrix};
pub use error::{Error, Result};
pub use graph::{
    canonical_form, classify_bicyclic, make_cycle, make_dumbbell, make_path, make_theta,
    BicyclicClass, CanonicalForm, DumbbellParams, Graph, ThetaParams,
};
pub use invariants::{invariants_from_charpoly, is_l_cospectral, SpectralInvariants};
pub use poly::{IntPolynomial, LaurentPolynomial};
pub use verify::report::VerificationReport;
