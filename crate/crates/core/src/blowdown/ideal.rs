use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::ferrari::{geometric_ring, CaseSpec, WeightAssignment};
use crate::groebner::{buchberger, GroebnerBasis, MatrixOrder, TermOrder};
use crate::polyring::{Coeff, Image, Monomial, Polynomial, VarTable};

/// Chart coordinates in a fixed order: `b, v1, v2, g, w1, w2`.
pub const CHART_VARS: [&str; 6] = ["b", "v1", "v2", "g", "w1", "w2"];
pub const BETA_SIDE: [usize; 3] = [0, 1, 2];
pub const GAMMA_SIDE: [usize; 3] = [3, 4, 5];

pub fn chart_ring() -> Arc<VarTable> {
    VarTable::new(&CHART_VARS).unwrap()
}

/// `[v2] > grevlex(w2, v1, w1, b, g)`.
pub fn transition_order(vars: &VarTable) -> TermOrder {
    TermOrder::block_named(vars, &[(&["v2"], TermOrder::Grevlex), (&["w2", "v1", "w1", "b", "g"], TermOrder::Grevlex)])
        .unwrap()
}

/// Pole order: weights `(1,1,1,-1,0,0)`, ties by lex on the chart order.
pub fn pole_order() -> TermOrder {
    TermOrder::weighted(vec![1, 1, 1, -1, 0, 0], TermOrder::Lex)
}

/// The gluing ideal of the two charts and its Groebner basis.
#[derive(Clone, Debug)]
pub struct TransitionIdeal {
    pub case: CaseSpec,
    pub vars: Arc<VarTable>,
    pub generators: Vec<Polynomial>,
    pub basis: GroebnerBasis,
    pub order: TermOrder,
    tp: MatrixOrder,
}

fn chart_power(vars: &Arc<VarTable>, k: i32) -> Polynomial {
    // g^k, with negative powers written through b
    let mut e = vec![0; 6];
    if k >= 0 {
        e[3] = k;
    } else {
        e[0] = -k;
    }
    Polynomial::term(vars, Monomial(e), Coeff::one())
}

impl TransitionIdeal {
    pub fn build(case: &CaseSpec) -> Result<TransitionIdeal> {
        if case.pterm.vars().as_ref() != geometric_ring().as_ref() {
            return Err(Error::Unsupported("perturbation must be a polynomial in g, w1 only".into()));
        }
        let vars = chart_ring();
        let v = |i: usize| Polynomial::var_index(&vars, i);
        let b = v(0);
        let g = v(3);
        let pterm = case.pterm.map_into(&vars, &[Image { pos: g.clone(), neg: Some(b.clone()) }, Image::of(v(4))])?;
        let gens = vec![
            &(&b * &g) - &Polynomial::one(&vars),
            &v(1) - &(&chart_power(&vars, -case.n) * &v(4)),
            &(&v(2) - &(&chart_power(&vars, -case.m) * &v(5))) - &pterm,
        ];
        let order = transition_order(&vars);
        let basis = buchberger(&gens, &order)?;
        let tp = pole_order().compile(&vars);
        Ok(TransitionIdeal { case: case.clone(), vars, generators: gens, basis, order, tp })
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.basis.normal_form(f).expect("chart ring polynomial")
    }

    /// Terms of `p` supported on `b, v1, v2` (constants included).
    pub fn pure_beta(&self, p: &Polynomial) -> Polynomial {
        p.set_zero(&GAMMA_SIDE)
    }

    /// Terms of `p` touching both charts.
    pub fn mixed(&self, p: &Polynomial) -> Polynomial {
        p.split_pure_mixed(&BETA_SIDE, &GAMMA_SIDE).2
    }

    /// The `(g, w1, w2)` form of `f` if `f` is a global holomorphic function.
    pub fn certify(&self, f: &Polynomial) -> Option<Polynomial> {
        if f.support().iter().any(|v| GAMMA_SIDE.contains(v)) {
            return None;
        }
        let nf = self.normal_form(f);
        let (a, _, mixed) = nf.split_pure_mixed(&BETA_SIDE, &GAMMA_SIDE);
        let a_nonconst = &a - &Polynomial::constant(&self.vars, a.constant_term());
        if mixed.is_zero() && a_nonconst.is_zero() {
            Some(nf)
        } else {
            None
        }
    }

    /// Largest term of `h` under the pole order.
    pub fn pole_lead(&self, h: &Polynomial) -> Option<(Monomial, Coeff)> {
        h.terms().max_by(|a, b| self.tp.cmp(&a.0 .0, &b.0 .0)).map(|(m, c)| (m.clone(), c.clone()))
    }

    pub fn pole_cmp(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.tp.cmp(&a.0, &b.0)
    }

    /// Parse a polynomial in the chart ring.
    pub fn parse(&self, s: &str) -> Result<Polynomial> {
        crate::polyring::parse(s, &self.vars)
    }

    /// Monic under the transition order.
    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match crate::groebner::leading_term(f, &self.order) {
            Some((_, c)) if !c.is_one() => f.scale(&c.inv()),
            _ => f.clone(),
        }
    }
}

/// All `b^i v1^j v2^k` of weighted degree `d`, ordered by `(i, j, k)`
/// descending. Exponents of zero-weight variables are capped at `cap`.
pub fn monomials_of_weight(weights: &WeightAssignment, d: i64, cap: i32) -> Result<Vec<Monomial>> {
    let w = [weights[0], weights[1], weights[2]];
    if w.iter().any(|&x| x < 0) {
        return Err(Error::BadParameters("negative weight on the b, v1, v2 side".into()));
    }
    if d < 0 {
        return Ok(Vec::new());
    }
    let bound = |wi: i64, rest: i64| -> i64 {
        if wi == 0 {
            cap as i64
        } else {
            rest / wi
        }
    };
    let mut out = Vec::new();
    for i in (0..=bound(w[0], d)).rev() {
        let r1 = d - i * w[0];
        for j in (0..=bound(w[1], r1)).rev() {
            let r2 = r1 - j * w[1];
            for k in (0..=bound(w[2], r2)).rev() {
                if r2 - k * w[2] == 0 {
                    out.push(Monomial(vec![i as i32, j as i32, k as i32, 0, 0, 0]));
                }
            }
        }
    }
    Ok(out)
}

/// Weighted degree of a chart-ring polynomial, if homogeneous.
pub fn chart_degree(f: &Polynomial, w: &WeightAssignment) -> Option<i64> {
    match f.grade(w) {
        crate::polyring::Grade::Homogeneous(d) => Some(d),
        crate::polyring::Grade::Zero => Some(0),
        _ => None,
    }
}
