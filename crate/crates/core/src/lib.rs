//! Exact algebra for blowdown computations: polynomial arithmetic over
//! Q(i), Groebner bases, the holomorphic-function search on transition
//! charts, superpotentials and matrix factorizations.

pub mod blowdown;
pub mod cases;
pub mod error;
pub mod ferrari;
pub mod groebner;
pub mod linalg;
pub mod matfact;
pub mod polyring;

pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, TermOrder};
pub use polyring::{Coeff, Monomial, Polynomial, VarTable};
