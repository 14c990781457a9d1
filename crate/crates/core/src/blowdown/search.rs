use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::Zero;

use super::ideal::{TransitionIdeal, GAMMA_SIDE};
use crate::error::Result;
use crate::groebner::{buchberger, eliminate, GroebnerBasis, TermOrder};
use crate::polyring::{numbered, Coeff, Image, Monomial, Polynomial, VarTable};

/// One row of the per-degree reduction table.
#[derive(Clone, Debug)]
pub struct GhfEntry {
    pub poly: Polynomial,
    /// Pole-order leading mixed term of `normal_form(poly)`; `None` for a
    /// global holomorphic function.
    pub mixed_lead: Option<Monomial>,
    pub mixed_lead_coeff: Coeff,
    nf: Polynomial,
}

impl GhfEntry {
    pub fn normal_form(&self) -> &Polynomial {
        &self.nf
    }
}

/// A certified global holomorphic function.
#[derive(Clone, Debug, PartialEq)]
pub struct Ghf {
    pub degree: i64,
    /// Expression in `b, v1, v2`.
    pub beta: Polynomial,
    /// Expression in `g, w1, w2`.
    pub gamma: Polynomial,
}

/// Reduce `f` against `table`, returning the reduced polynomial and its normal form.
fn xreduce_nf(f: &Polynomial, table: &[GhfEntry], ideal: &TransitionIdeal) -> (Polynomial, Polynomial) {
    let mut nf = ideal.normal_form(f);
    let shift = nf.set_zero(&GAMMA_SIDE);
    let mut f = f - &shift;
    nf = &nf - &shift;
    let mut bound: Option<Monomial> = None;
    loop {
        let mixed = ideal.mixed(&nf);
        let next = mixed
            .terms()
            .filter(|(m, _)| bound.as_ref().map_or(true, |b| ideal.pole_cmp(m, b) == Ordering::Less))
            .max_by(|a, b| ideal.pole_cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()));
        let Some((lt, lc)) = next else { break };
        if let Some(e) = table.iter().rev().find(|e| e.mixed_lead.as_ref() == Some(&lt)) {
            let c = &lc * &e.mixed_lead_coeff.inv();
            f = &f - &e.poly.scale(&c);
            nf = &nf - &e.nf.scale(&c);
        }
        bound = Some(lt);
    }
    (f, nf)
}

/// Cancel mixed terms of `f` using the entries of `table`, largest pole-order
/// term first; terms no entry can cancel are passed over.
pub fn xreduce(f: &Polynomial, table: &[GhfEntry], ideal: &TransitionIdeal) -> Polynomial {
    xreduce_nf(f, table, ideal).0
}

/// State carried across weighted-degree slices.
#[derive(Clone, Debug, Default)]
pub struct SearchState {
    pub ghfs: Vec<Ghf>,
    /// Number of holomorphic candidates rejected as not new.
    pub rejected: usize,
    algebra: Option<Subalgebra>,
}

impl SearchState {
    /// Basis of `<y_i - ghf_i>` for the current list, rebuilt on growth.
    fn algebra(&mut self, weights: &[i64; 6]) -> Result<&Subalgebra> {
        let stale = self.algebra.as_ref().map_or(true, |a| a.len() != self.ghfs.len());
        if stale {
            self.algebra = Some(Subalgebra::new(&self.ghfs, weights)?);
        }
        Ok(self.algebra.as_ref().unwrap())
    }
}

/// Groebner basis of `<y_i - ghf_i>` in `b, v1, v2, y..` under an order
/// eliminating the chart variables.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    n: usize,
    ring: Arc<VarTable>,
    basis: Option<GroebnerBasis>,
}

impl Subalgebra {
    pub fn new(ghfs: &[Ghf], weights: &[i64; 6]) -> Result<Subalgebra> {
        let n = ghfs.len();
        let ring = lift_ring(["b", "v1", "v2"], n);
        if n == 0 {
            return Ok(Subalgebra { n, ring, basis: None });
        }
        let fs: Vec<&Polynomial> = ghfs.iter().map(|g| &g.beta).collect();
        let degs: Vec<i64> = ghfs.iter().map(|g| g.degree).collect();
        Ok(Subalgebra { n, basis: Some(lift_basis(&fs, &degs, weights)?), ring })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Whether `f` (in the chart ring, free of `g, w1, w2`) is a polynomial in the generators.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        let Some(gb) = &self.basis else { return Ok(f.is_constant()) };
        let lifted = f.map_into(&self.ring, &chart_images(&self.ring))?;
        let r = gb.normal_form(&lifted)?;
        Ok(r.support().iter().all(|&v| v >= 3))
    }

    /// `f` written as a polynomial in `y1..yN`, or `None` outside the algebra.
    pub fn express(&self, f: &Polynomial) -> Result<Option<Polynomial>> {
        let ys = y_ring(self.n);
        let Some(gb) = &self.basis else {
            return Ok(f.is_constant().then(|| Polynomial::constant(&ys, f.constant_term())));
        };
        let lifted = f.map_into(&self.ring, &chart_images(&self.ring))?;
        let r = gb.normal_form(&lifted)?;
        if r.support().iter().any(|&v| v < 3) {
            return Ok(None);
        }
        let mut images: Vec<Image> = (0..3).map(|_| Image::of(Polynomial::zero(&ys))).collect();
        images.extend((0..self.n).map(|i| Image::of(Polynomial::var_index(&ys, i))));
        Ok(Some(r.map_into(&ys, &images)?))
    }

    /// `y`-only elements of the basis, in `y1..yN`.
    pub fn relations(&self) -> Result<Vec<Polynomial>> {
        let Some(gb) = &self.basis else { return Ok(Vec::new()) };
        let keep: Vec<usize> = (3..3 + self.n).collect();
        let ys = y_ring(self.n);
        eliminate(gb, &keep)?.iter().map(|p| p.embed(&ys)).collect()
    }
}

fn chart_images(ring: &Arc<VarTable>) -> Vec<Image> {
    let mut images: Vec<Image> = (0..3).map(|i| Image::of(Polynomial::var_index(ring, i))).collect();
    images.extend((0..3).map(|_| Image::of(Polynomial::zero(ring))));
    images
}

/// Process one weighted-degree slice.
pub fn polysearch(
    monomials: &[Monomial],
    degree: i64,
    state: &mut SearchState,
    ideal: &TransitionIdeal,
    weights: &[i64; 6],
) -> Result<Vec<GhfEntry>> {
    let mut table: Vec<GhfEntry> = Vec::new();
    for m in monomials {
        let mono = Polynomial::term(&ideal.vars, m.clone(), Coeff::from_int(1));
        let (f, nf) = xreduce_nf(&mono, &table, ideal);
        if f.is_zero() {
            continue;
        }
        let mixed = ideal.mixed(&nf);
        match ideal.pole_lead(&mixed) {
            None => {
                if !state.algebra(weights)?.contains(&f)? {
                    let beta = ideal.monic(&f);
                    let gamma = ideal.normal_form(&beta);
                    state.ghfs.push(Ghf { degree, beta, gamma });
                } else {
                    state.rejected += 1;
                }
                table.push(GhfEntry { poly: f, mixed_lead: None, mixed_lead_coeff: Coeff::zero(), nf });
            }
            Some((lt, lc)) => {
                table.push(GhfEntry { poly: f, mixed_lead: Some(lt), mixed_lead_coeff: lc, nf });
            }
        }
    }
    Ok(table)
}

/// Ring `b, v1, v2, y1..yn` (or `g, w1, w2, y1..yn`).
pub fn lift_ring(chart: [&str; 3], n: usize) -> Arc<VarTable> {
    let mut names: Vec<String> = chart.iter().map(|s| s.to_string()).collect();
    names.extend(numbered("y", n));
    VarTable::new(&names).unwrap()
}

/// Ring `y1..yn`.
pub fn y_ring(n: usize) -> Arc<VarTable> {
    VarTable::new(&numbered("y", n)).unwrap()
}

/// Chart variables first (weighted by the case grading), then the `y`s
/// weighted by their degrees.
fn lift_order(weights: &[i64; 3], degrees: &[i64]) -> TermOrder {
    let n = degrees.len();
    TermOrder::Block(vec![
        (vec![2, 1, 0], TermOrder::weighted(vec![weights[2], weights[1], weights[0]], TermOrder::Grevlex)),
        ((3..3 + n).collect(), TermOrder::weighted(degrees.to_vec(), TermOrder::Grevlex)),
    ])
}

/// Groebner basis of `<y_i - f_i>` in `b, v1, v2, y..`.
fn lift_basis(fs: &[&Polynomial], degrees: &[i64], weights: &[i64; 6]) -> Result<GroebnerBasis> {
    let n = fs.len();
    let ring = lift_ring(["b", "v1", "v2"], n);
    let images = chart_images(&ring);
    let mut gens = Vec::with_capacity(n);
    for (i, f) in fs.iter().enumerate() {
        let lifted = f.map_into(&ring, &images)?;
        gens.push(&Polynomial::var_index(&ring, 3 + i) - &lifted);
    }
    buchberger(&gens, &lift_order(&[weights[0], weights[1], weights[2]], degrees))
}

/// Whether the holomorphic `f` is outside the algebra generated by `ghfs`.
pub fn is_new(f: &Polynomial, ghfs: &[Ghf], weights: &[i64; 6]) -> Result<bool> {
    Ok(!Subalgebra::new(ghfs, weights)?.contains(f)?)
}

/// [`is_new`] by direct elimination: every `y`-only element of
/// `<y_i - ghf_i, y_n - f>` must have vanishing `d/dy_n` at the origin.
pub fn is_new_by_elimination(f: &Polynomial, degree: i64, ghfs: &[Ghf], weights: &[i64; 6]) -> Result<bool> {
    let mut fs: Vec<&Polynomial> = ghfs.iter().map(|g| &g.beta).collect();
    fs.push(f);
    let mut degs: Vec<i64> = ghfs.iter().map(|g| g.degree).collect();
    degs.push(degree);
    let n = fs.len();
    let gb = lift_basis(&fs, &degs, weights)?;
    let keep: Vec<usize> = (3..3 + n).collect();
    let mut lin = vec![0; 3 + n];
    lin[2 + n] = 1;
    let lin = Monomial(lin);
    Ok(eliminate(&gb, &keep)?.iter().all(|p| p.coeff(&lin).is_zero()))
}

/// Reduced basis of the relation ideal among `ghfs`, in `y1..yN`.
pub fn find_relations(ghfs: &[Ghf], weights: &[i64; 6]) -> Result<Vec<Polynomial>> {
    if ghfs.len() < 2 {
        return Ok(Vec::new());
    }
    Subalgebra::new(ghfs, weights)?.relations()
}

/// Substitute `y_i -> ghf_i` into a relation and reduce in the chart ring.
pub fn relation_residue(rel: &Polynomial, ghfs: &[Ghf], ideal: &TransitionIdeal) -> Result<Polynomial> {
    let images: Vec<Image> = ghfs.iter().map(|g| Image::of(g.beta.clone())).collect();
    let sub = rel.map_into(&ideal.vars, &images)?;
    Ok(ideal.normal_form(&sub))
}
