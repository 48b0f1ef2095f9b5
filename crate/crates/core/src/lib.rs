//! Exact-arithmetic invariants of Artinian Gorenstein algebras.
//!
//! A homogeneous polynomial `F` of degree `s` in the dual variables
//! `X1..Xn` determines, through the differentiation (apolarity) action of
//! `S = Q[x1..xn]`, the Artinian Gorenstein quotient `A = S / Ann(F)` with
//! socle degree `s`. This crate computes the classical invariants of that
//! correspondence with exact rational arithmetic throughout:
//!
//! * Hilbert functions via catalecticant ranks ([`apolarity`]);
//! * graded Betti tables via Koszul homology ([`resolution`]);
//! * weak and strong Lefschetz properties, decided both by multiplication
//!   maps ([`artin`]) and by higher Hessian determinants ([`hessian`]);
//! * Jordan types of multiplication by a linear form ([`artin`]);
//! * Macaulay growth bounds and Gotzmann persistence values ([`resolution`]);
//! * finite classification searches for the Betti tables of such algebras
//!   with Hilbert function `(1,4,k,k,4,1)` ([`classify`]).
//!
//! The `apolar` binary exposes the same functionality on the command line.

pub mod apolarity;
pub mod artin;
pub mod classify;
pub mod error;
pub mod exactla;
pub mod hessian;
pub mod polyring;
pub mod report;
pub mod resolution;

pub use error::{Error, Result};
