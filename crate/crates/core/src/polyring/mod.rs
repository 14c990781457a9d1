//! Sparse Laurent polynomials over Q(i).

pub mod coeff;
pub mod parse;
pub mod poly;
pub mod vars;

pub use coeff::{Coeff, GaussianRational};
pub use parse::{parse, parse_or_zero};
pub use poly::{arith, map_rational, ArithKind, Grade, Image, Monomial, Polynomial};
pub use vars::{numbered, VarTable};
