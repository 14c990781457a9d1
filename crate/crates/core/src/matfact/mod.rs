//! Polynomial matrices and the matrix factorizations of ADE equations.

mod charts;
mod distinguished;
mod families;
mod matrix;
mod plucker;
mod ring;

pub use charts::{residual_chart_checks, ChartReport, ResidualFamily};
pub use distinguished::{distinguished, tyurina_check, DistinguishedPolys, Pieces, TyurinaReport};
pub use families::{
    build_a_factorization, build_d_relations, build_length3_factorization, deformed_d_as_printed, DRelations,
    Factorization, Length3, PluckerContext,
};
pub use matrix::{verify_factorization, FactorizationCheck, Mismatch, PolyMatrix};
pub use plucker::{plucker, row_pair_minors, verify_plucker_relations, PluckerMinors, PluckerReport, RowPair};
pub use ring::MfRing;
