//! Term orders, normal forms and Buchberger's algorithm.

pub mod buchberger;
pub mod order;

pub use buchberger::{buchberger, divide, eliminate, leading_term, normal_form, GroebnerBasis};
pub use order::{compare, MatrixOrder, TermOrder};
