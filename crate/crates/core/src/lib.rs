//! Exact derivative polynomials of `arctan`: the families
//! `beta_n = Im((x+i)^(n+1))`, `alpha_n = Re((x+i)^n)`, the derivative
//! numerators `P_n` and the monic `pi_n = beta_n / (n+1)`, built by several
//! independent algorithms and checked against each other.

pub mod calculus;
pub mod chebyshev;
pub mod connections;
pub mod error;
pub mod hessenberg;
pub mod hp;
pub mod numerics;
pub mod poly;
pub mod sequences;
pub mod series;
pub mod text;

pub use error::{Error, Result};
pub use numerics::Rational;
pub use poly::Polynomial;
pub use sequences::{build, build_prefix, BuildMethod, Family, SequenceKind};
pub mod verify;
