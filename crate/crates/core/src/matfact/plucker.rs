use super::families::PluckerContext;
use super::matrix::PolyMatrix;
use crate::error::{Error, Result};
use crate::polyring::{Coeff, Polynomial};

/// The six 2x2 minors `[ij]` of a 2x4 matrix. In the D-type labelling
/// `gamma=[12], beta=[13], delta=[14], alpha=[23], eps=[24], phi=[34]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PluckerMinors {
    pub p12: Polynomial,
    pub p13: Polynomial,
    pub p14: Polynomial,
    pub p23: Polynomial,
    pub p24: Polynomial,
    pub p34: Polynomial,
}

impl PluckerMinors {
    pub fn gamma(&self) -> &Polynomial {
        &self.p12
    }
    pub fn beta(&self) -> &Polynomial {
        &self.p13
    }
    pub fn delta(&self) -> &Polynomial {
        &self.p14
    }
    pub fn alpha(&self) -> &Polynomial {
        &self.p23
    }
    pub fn eps(&self) -> &Polynomial {
        &self.p24
    }
    pub fn phi(&self) -> &Polynomial {
        &self.p34
    }

    /// `p12 p34 + p14 p23 - p13 p24`.
    pub fn quadric(&self) -> Polynomial {
        &(&(&self.p12 * &self.p34) + &(&self.p14 * &self.p23)) - &(&self.p13 * &self.p24)
    }
}

pub fn plucker(top: &PolyMatrix) -> Result<PluckerMinors> {
    if top.rows() != 2 || top.cols() != 4 {
        return Err(Error::SizeMismatch(format!("need 2x4, got {}x{}", top.rows(), top.cols())));
    }
    let mn = |a: usize, b: usize| &(top.get(0, a) * top.get(1, b)) - &(top.get(0, b) * top.get(1, a));
    Ok(PluckerMinors { p12: mn(0, 1), p13: mn(0, 2), p14: mn(0, 3), p23: mn(1, 2), p24: mn(1, 3), p34: mn(2, 3) })
}

/// Which pair of rows of a 4x4 relations matrix the minors came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowPair {
    Top,
    Bottom,
}

impl RowPair {
    pub fn rows(self) -> [usize; 2] {
        match self {
            RowPair::Top => [0, 1],
            RowPair::Bottom => [2, 3],
        }
    }
}

/// Outcome of [`verify_plucker_relations`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerReport {
    /// The Grassmannian quadric vanishes.
    pub quadric: bool,
    /// `[14] = [23]`.
    pub delta_alpha: bool,
    /// `[13] = (-1)^m h' [24]`.
    pub beta_eps: bool,
    /// `[12] + Z[34] + 2 i^k delta' [24] = eqn`, with `k = m-1` on the top rows;
    /// on the bottom rows `k` is [`PluckerContext::bottom_exp`] and the right
    /// side is `Z eqn`.
    pub gamma_phi: bool,
    /// Top rows only: `alpha^2 - phi^2 Z + (-1)^(m+1) h' eps^2 + 2 i^(m+1) delta' eps phi = -eqn phi`.
    pub grassmannian: Option<bool>,
}

impl PluckerReport {
    pub fn holds(&self) -> bool {
        self.quadric && self.delta_alpha && self.beta_eps && self.gamma_phi && self.grassmannian.unwrap_or(true)
    }
}

pub fn verify_plucker_relations(minors: &PluckerMinors, rows: RowPair, ctx: &PluckerContext) -> PluckerReport {
    let vars = ctx.z.vars();
    let m = ctx.m as i64;
    let c = |k: i64| Polynomial::constant(vars, Coeff::i_pow(k));
    let two = Polynomial::int(vars, 2);
    let sign_m = c(2 * m);
    let quadric = minors.quadric().is_zero();
    let delta_alpha = minors.p14 == minors.p23;
    let beta_eps = minors.p13 == &(&sign_m * &ctx.h1) * &minors.p24;
    let exp = match rows {
        RowPair::Top => m - 1,
        RowPair::Bottom => ctx.bottom_exp,
    };
    let lin = &(&two * &c(exp)) * &(&ctx.delta1 * &minors.p24);
    let lhs = &(&minors.p12 + &(&ctx.z * &minors.p34)) + &lin;
    let gamma_phi = match rows {
        RowPair::Top => lhs == ctx.eqn,
        RowPair::Bottom => lhs == &ctx.z * &ctx.eqn,
    };
    let grassmannian = match rows {
        RowPair::Top => Some(grassmannian_residue(minors.alpha(), minors.eps(), minors.phi(), ctx).is_zero()),
        RowPair::Bottom => None,
    };
    PluckerReport { quadric, delta_alpha, beta_eps, gamma_phi, grassmannian }
}

/// `alpha^2 - phi^2 Z + (-1)^(m+1) h' eps^2 + 2 i^(m+1) delta' eps phi + eqn phi`.
pub(crate) fn grassmannian_residue(
    alpha: &Polynomial,
    eps: &Polynomial,
    phi: &Polynomial,
    ctx: &PluckerContext,
) -> Polynomial {
    let vars = ctx.z.vars();
    let m = ctx.m as i64;
    let c = |k: i64| Polynomial::constant(vars, Coeff::i_pow(k));
    let two = Polynomial::int(vars, 2);
    let a = alpha * alpha;
    let b = &(phi * phi) * &ctx.z;
    let e = &(&c(2 * (m + 1)) * &ctx.h1) * &(eps * eps);
    let d = &(&(&two * &c(m + 1)) * &ctx.delta1) * &(eps * phi);
    &(&(&(&a - &b) + &e) + &d) + &(&ctx.eqn * phi)
}

/// Minors of rows `rows` of a 4x4 relations matrix.
pub fn row_pair_minors(r: &PolyMatrix, rows: RowPair) -> Result<PluckerMinors> {
    if r.rows() != 4 || r.cols() != 4 {
        return Err(Error::SizeMismatch("need a 4x4 relations matrix".into()));
    }
    plucker(&r.submatrix(&rows.rows(), &[0, 1, 2, 3]))
}
