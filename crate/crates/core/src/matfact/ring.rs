use num_traits::One;
use std::sync::Arc;

use crate::polyring::{Coeff, Image, Monomial, Polynomial, VarTable};

pub const X: usize = 0;
pub const Y: usize = 1;
pub const Z: usize = 2;
pub const U: usize = 3;
pub const MU: usize = 4;
pub const NU: usize = 5;
pub const ALPHA: usize = 6;
pub const EPS: usize = 7;
pub const PHI: usize = 8;
const FIXED: [&str; 9] = ["X", "Y", "Z", "U", "mu", "nu", "alpha", "eps", "phi"];

/// `X, Y, Z, U`, chart coordinates `mu, nu, alpha, eps, phi`, then
/// deformation parameters `t1..t{nt}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MfRing {
    pub vars: Arc<VarTable>,
    pub nt: usize,
}

impl MfRing {
    pub fn new(nt: usize) -> MfRing {
        let mut names: Vec<String> = FIXED.iter().map(|s| s.to_string()).collect();
        names.extend(crate::polyring::numbered("t", nt));
        MfRing { vars: VarTable::new(&names).unwrap(), nt }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var_index(&self.vars, i)
    }

    /// `t_i`, one-based.
    pub fn t(&self, i: usize) -> Polynomial {
        assert!(i >= 1 && i <= self.nt, "t{i} out of range");
        self.var(FIXED.len() + i - 1)
    }

    pub fn t_index(&self, i: usize) -> usize {
        FIXED.len() + i - 1
    }

    pub fn int(&self, n: i64) -> Polynomial {
        Polynomial::int(&self.vars, n)
    }

    pub fn c(&self, c: Coeff) -> Polynomial {
        Polynomial::constant(&self.vars, c)
    }

    /// `i^k`.
    pub fn ipow(&self, k: i64) -> Polynomial {
        self.c(Coeff::i_pow(k))
    }

    /// `(-1)^k`.
    pub fn sign(&self, k: i64) -> Polynomial {
        self.int(if k.rem_euclid(2) == 0 { 1 } else { -1 })
    }

    pub fn pow(&self, i: usize, k: u32) -> Polynomial {
        let mut e = vec![0; self.vars.len()];
        e[i] = k as i32;
        Polynomial::term(&self.vars, Monomial(e), Coeff::one())
    }

    /// Set every `t_i` to zero.
    pub fn at_origin(&self, p: &Polynomial) -> Polynomial {
        let ts: Vec<usize> = (1..=self.nt).map(|i| self.t_index(i)).collect();
        p.set_zero(&ts)
    }

    pub fn subst(&self, p: &Polynomial, bindings: &[(usize, Polynomial)]) -> Polynomial {
        let b: Vec<(usize, Image)> = bindings.iter().map(|(i, q)| (*i, Image::of(q.clone()))).collect();
        p.substitute(&b).expect("substitution within one ring")
    }
}
