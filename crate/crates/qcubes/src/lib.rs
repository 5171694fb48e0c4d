//! Exact-arithmetic verification of q-analogues of Nicomachus-type
//! sum-of-cubes identities.
//!
//! Both sides of every identity are constructed as exact Laurent polynomials
//! or rational functions in `q` over arbitrary-precision integers and
//! compared in canonical form, instance by instance over parameter grids.
//! An independent combinatorial oracle re-derives the central identities by
//! enumerating weighted lattice squares.
//!
//! Module map:
//! - [`qpoly`]: sparse exact Laurent polynomials and canonical rational
//!   functions — the arithmetic substrate.
//! - [`qcalc`]: q-integers in arbitrary power bases and Gaussian binomial
//!   coefficients computed by three mutually checking routes.
//! - [`telescope`]: generic telescoping-sum checks and the difference
//!   identities behind the induction proofs.
//! - [`lattice`]: weighted squares, hooks, and regions — the brute-force
//!   enumeration oracle.
//! - [`identities`]: the machine-readable catalog of all identities plus the
//!   verification engine and report types.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod identities;
pub mod lattice;
pub mod qcalc;
pub mod qpoly;
pub mod telescope;

pub use identities::{
    build_side, classical_limit_check, find_identity, list_identities, verify_grid,
    verify_instance, GridReport, IdentityDescriptor, IdentityError, Outcome, Params, Side,
    VerificationReport,
};
pub use qcalc::{gauss_binomial, q_int, triangular};
pub use qpoly::{poly_gcd, rf_normalize, LaurentPoly, PolyError, RationalFn};
