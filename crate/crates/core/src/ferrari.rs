//! Geometric potential, superpotential and bundle data for a curve with
//! transition functions `v1 = b^n w1`, `v2 = g^(-m) w2 + dE/dw1`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::polyring::{Coeff, Image, Monomial, Polynomial, VarTable};

/// Ring of geometric potentials and perturbation terms: `g` (invertible), `w1`.
pub fn geometric_ring() -> Arc<VarTable> {
    VarTable::with_invertible(&["g", "w1"], &["g"]).unwrap()
}

/// Field names: `x` for one field, `x, y` for two, `x1..xM` otherwise.
pub fn field_names(m: usize) -> Vec<String> {
    match m {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        _ => crate::polyring::numbered("x", m),
    }
}

pub fn field_ring(m: usize) -> Arc<VarTable> {
    VarTable::new(&field_names(m)).unwrap()
}

/// Parse a perturbation term written in `b`, `g`, `w1`; `b` is read as `g^(-1)`.
pub fn parse_pterm(src: &str) -> Result<Polynomial> {
    let wide = VarTable::with_invertible(&["b", "g", "w1"], &["g"])?;
    let p = crate::polyring::parse(src, &wide)?;
    let ring = geometric_ring();
    let ginv = Polynomial::term(&ring, Monomial(vec![-1, 0]), Coeff::one());
    let images =
        vec![Image::of(ginv), Image::of(Polynomial::var_index(&ring, 0)), Image::of(Polynomial::var_index(&ring, 1))];
    p.map_into(&ring, &images)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Superpotential {
    pub w: Polynomial,
    pub m: usize,
}

/// A geometry: `M` fields, bundle exponents `(n, m)` and the perturbation
/// term `dE/dw1` in the geometric ring.
#[derive(Clone, Debug)]
pub struct CaseSpec {
    pub name: String,
    pub fields: usize,
    pub n: i32,
    pub m: i32,
    pub pterm: Polynomial,
}

impl CaseSpec {
    /// Standard two-field shape, `n = 1`, `m = -3`.
    pub fn two_field(name: &str, pterm: Polynomial) -> CaseSpec {
        CaseSpec { name: name.to_string(), fields: 2, n: 1, m: -3, pterm }
    }

    pub fn validate(&self) -> Result<()> {
        if self.fields as i32 != self.n + 1 || self.fields as i32 != -self.m - 1 {
            return Err(Error::BadParameters(format!(
                "need M = n+1 = -m-1, got M={}, n={}, m={}",
                self.fields, self.n, self.m
            )));
        }
        Ok(())
    }

    /// Pairs `(a, e)` for each monomial `g^a w1^e` of the perturbation.
    pub fn pterm_exponents(&self) -> Vec<(i32, i32)> {
        self.pterm.terms().map(|(m, _)| (m.0[0], m.0[1])).collect()
    }
}

/// Six weights `(b, v1, v2, g, w1, w2)`.
pub type WeightAssignment = [i64; 6];

/// `W = [g^M] E(g, sum x_i g^(i-1))`.
pub fn superpotential_from_geometric(e: &Polynomial, m: usize) -> Result<Superpotential> {
    if m == 0 {
        return Err(Error::BadParameters("M must be positive".into()));
    }
    let gi = e.vars().require("g")?;
    let wi = e.vars().require("w1")?;
    if e.vars().len() != 2 {
        return Err(Error::BadParameters("geometric potential must live in (g, w1)".into()));
    }
    let mut names = vec!["g".to_string()];
    names.extend(field_names(m));
    let big = VarTable::with_invertible(&names, &["g"])?;
    let g = Polynomial::var_index(&big, 0);
    let mut sum = Polynomial::zero(&big);
    for i in 0..m {
        sum = &sum + &(&Polynomial::var_index(&big, i + 1) * &g.pow(i as u32));
    }
    let mut images = vec![Image::of(Polynomial::zero(&big)); 2];
    images[gi] = Image::of(g);
    images[wi] = Image::of(sum);
    let expanded = e.map_into(&big, &images)?;
    let w = expanded.laurent_coeff(0, m as i32).embed(&field_ring(m))?;
    Ok(Superpotential { w, m })
}

fn rat(n: BigInt, d: BigInt) -> Coeff {
    Coeff::from_rational(BigRational::new(n, d))
}

/// Inverse dictionary for `M <= 2`.
pub fn perturbation_from_superpotential(w: &Superpotential) -> Result<Polynomial> {
    let ring = geometric_ring();
    let mut out = Polynomial::zero(&ring);
    match w.m {
        1 => {
            for (mono, c) in w.w.terms() {
                let p = mono.0[0];
                if p == 0 {
                    return Err(Error::BadParameters("constant term in W".into()));
                }
                out.add_term(Monomial(vec![1, p - 1]), &(c * &Coeff::from_int(p as i64)));
            }
        }
        2 => {
            for (mono, c) in w.w.terms() {
                let (j, k) = (mono.0[0], mono.0[1]);
                if j + k == 0 {
                    return Err(Error::BadParameters("constant term in W".into()));
                }
                let f = rat(BigInt::from(j + k), binomial(BigInt::from(j + k), BigInt::from(k)));
                out.add_term(Monomial(vec![2 - k, j + k - 1]), &(c * &f));
            }
        }
        m => return Err(Error::Unsupported(format!("perturbation dictionary for M = {m}"))),
    }
    Ok(out)
}

/// Whether `g^n w1^m` in `dE/dw1` changes the superpotential.
pub fn contributes(n: i32, m: i32, fields: usize) -> bool {
    match fields {
        1 => n == 1,
        2 => 1 - m <= n && n <= 2,
        _ => false,
    }
}

/// `g^n w1^m -> g^(3-n-m) w1^m`.
pub fn xy_swap(pterm: &Polynomial) -> Polynomial {
    Polynomial::from_terms(
        pterm.vars(),
        pterm.terms().map(|(m, c)| (Monomial(vec![3 - m.0[0] - m.0[1], m.0[1]]), c.clone())),
    )
}

/// Formal antiderivative in `w1`: the minimal `E` with `dE/dw1 = pterm`.
pub fn integrate_pterm(pterm: &Polynomial) -> Polynomial {
    Polynomial::from_terms(
        pterm.vars(),
        pterm.terms().map(|(m, c)| (Monomial(vec![m.0[0], m.0[1] + 1]), c * &Coeff::from_ratio(1, m.0[1] as i64 + 1))),
    )
}

/// Superpotential of a case.
pub fn case_superpotential(case: &CaseSpec) -> Result<Superpotential> {
    superpotential_from_geometric(&integrate_pterm(&case.pterm), case.fields)
}

/// `M - rank` of the Hessian of `W` at `point`.
pub fn hessian_corank(w: &Superpotential, point: &[Coeff]) -> Result<usize> {
    let n = w.w.vars().len();
    if point.len() != n {
        return Err(Error::SizeMismatch(format!("point has {} coordinates, ring has {n}", point.len())));
    }
    let h: Vec<Vec<Coeff>> =
        (0..n).map(|i| (0..n).map(|j| w.w.derivative(i).derivative(j).eval(point)).collect()).collect();
    Ok(n - linalg::rank(&h))
}

/// Result of the bundle change for a given `(M, r)`.
#[derive(Clone, Debug)]
pub struct BundleChange {
    pub fields: usize,
    pub r: i32,
    /// New bundle `O(r-1) + O(-r-1)` as the pair of degrees.
    pub bundle: (i32, i32),
    pub w_r: Superpotential,
    pub corank: usize,
    /// New transition functions, as `(v~1, v~2)` in terms of `(g, w~1, w~2)`.
    pub new_v: (Polynomial, Polynomial),
    /// Both new transition identities hold exactly.
    pub identities_hold: bool,
    /// `W_r` agrees with the residue of `g^(r+1) w1^2 / 2`.
    pub residue_agrees: bool,
}

/// Coordinate change taking `O(M-1) + O(-M-1)` with `E = g^(r+1) w1^2 / 2`
/// to `O(r-1) + O(-r-1)`.
pub fn bundle_change_transform(fields: usize, r: i32) -> Result<BundleChange> {
    let mm = fields as i32;
    if fields == 0 || r < -mm || r > mm {
        return Err(Error::BadParameters(format!("need -M <= r <= M, got M={fields}, r={r}")));
    }
    let ring = VarTable::with_invertible(&["g", "w1", "w2"], &["g"])?;
    let gp = |k: i32| Polynomial::term(&ring, Monomial(vec![k, 0, 0]), Coeff::one());
    let w1 = Polynomial::var_index(&ring, 1);
    let w2 = Polynomial::var_index(&ring, 2);
    let v1 = &gp(1 - mm) * &w1;
    let v2 = &(&gp(mm + 1) * &w2) + &(&gp(r + 1) * &w1);
    let nw1 = &w1 + &(&gp(mm - r) * &w2);
    let nw2 = w2.clone();
    let nv1 = v2.clone();
    let nv2 = &(-&v1) + &(&gp(-(mm + r)) * &v2);
    let identities_hold = nv1 == &gp(r + 1) * &nw1 && nv2 == &gp(1 - r) * &nw2;

    let fr = field_ring(fields);
    let mut w = Polynomial::zero(&fr);
    let half = Coeff::from_ratio(1, 2);
    let top = mm - r;
    for i in 1..=fields as i32 {
        let j = top + 1 - i;
        if j >= 1 && j <= mm {
            let t = &Polynomial::var_index(&fr, (i - 1) as usize) * &Polynomial::var_index(&fr, (j - 1) as usize);
            w = &w + &t.scale(&half);
        }
    }
    let w_r = Superpotential { w, m: fields };
    let e = Polynomial::term(&geometric_ring(), Monomial(vec![r + 1, 2]), half);
    let residue_agrees = superpotential_from_geometric(&e, fields)?.w == w_r.w;
    let zero = vec![Coeff::zero(); fields];
    let corank = hessian_corank(&w_r, &zero)?;
    Ok(BundleChange {
        fields,
        r,
        bundle: (r - 1, -r - 1),
        w_r,
        corank,
        new_v: (nv1, nv2),
        identities_hold,
        residue_agrees,
    })
}

/// Integer lattice of gradings making every transition function homogeneous.
pub fn solve_weights(case: &CaseSpec) -> Vec<WeightAssignment> {
    let (n, m) = (case.n as i64, case.m as i64);
    // columns: b, v1, v2, g, w1, w2
    let mut rows = vec![vec![1, 0, 0, 1, 0, 0], vec![0, 1, 0, n, -1, 0], vec![0, 0, 1, m, 0, -1]];
    for (a, e) in case.pterm_exponents() {
        rows.push(vec![0, 0, 1, -(a as i64), -(e as i64), 0]);
    }
    linalg::integer_kernel(&rows, 6).into_iter().map(|v| [v[0], v[1], v[2], v[3], v[4], v[5]]).collect()
}

/// Pole data in the `b` chart after `w1 -> x + g y`.
#[derive(Clone, Debug)]
pub struct PolarConstraints {
    /// `w2` in `(g, x, y)` chosen to cancel poles of order 3 and higher.
    pub w2: Polynomial,
    pub c2: Polynomial,
    pub c1: Polynomial,
}

pub fn polar_constraints(case: &CaseSpec) -> Result<PolarConstraints> {
    if case.fields != 2 {
        return Err(Error::Unsupported("polar constraints need M = 2".into()));
    }
    let ring = VarTable::with_invertible(&["g", "x", "y"], &["g"])?;
    let g = Polynomial::var_index(&ring, 0);
    let sub = &Polynomial::var_index(&ring, 1) + &(&g * &Polynomial::var_index(&ring, 2));
    let p = case.pterm.map_into(&ring, &[Image::of(g.clone()), Image::of(sub)])?;
    let xy = field_ring(2);
    let mut w2 = Polynomial::zero(&ring);
    for (k, c) in p.collect(0) {
        if k >= 3 {
            w2 = &w2 - &c.mul_monomial(&Monomial(vec![k - 3, 0, 0]), &Coeff::one());
        }
    }
    Ok(PolarConstraints { w2, c2: p.laurent_coeff(0, 2).embed(&xy)?, c1: p.laurent_coeff(0, 1).embed(&xy)? })
}
