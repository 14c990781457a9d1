use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::order::{check_keep, MatrixOrder, TermOrder};
use crate::error::{Error, Result};
use crate::polyring::{Coeff, Monomial, Polynomial, VarTable};

#[derive(Clone, Debug)]
pub(crate) struct Term {
    pub e: Vec<i32>,
    pub k: Vec<i64>,
    pub c: Coeff,
}

/// Polynomial as terms sorted ascending by order key; the leading term is last.
#[derive(Clone, Debug, Default)]
pub(crate) struct Sorted {
    pub t: Vec<Term>,
}

fn add_keys(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_exps(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn divides(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl Sorted {
    pub fn from_poly(p: &Polynomial, ord: &MatrixOrder) -> Sorted {
        let mut t: Vec<Term> =
            p.terms().map(|(m, c)| Term { e: m.0.clone(), k: ord.key(&m.0), c: c.clone() }).collect();
        t.sort_by(|a, b| a.k.cmp(&b.k));
        Sorted { t }
    }

    pub fn to_poly(&self, vars: &Arc<VarTable>) -> Polynomial {
        Polynomial::from_terms(vars, self.t.iter().map(|t| (Monomial(t.e.clone()), t.c.clone())))
    }

    pub fn lead(&self) -> Option<&Term> {
        self.t.last()
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_empty()
    }

    pub fn make_monic(&mut self) {
        if let Some(l) = self.t.last() {
            if !l.c.is_one() {
                let inv = l.c.inv();
                for t in &mut self.t {
                    t.c = &t.c * &inv;
                }
            }
        }
    }

    /// `self - c * x^e * g`, dropping cancelled terms.
    pub fn sub_mul(&self, c: &Coeff, e: &[i32], k: &[i64], g: &[Term]) -> Sorted {
        let mut out = Vec::with_capacity(self.t.len() + g.len());
        let mut i = 0;
        let mut j = 0;
        let a = &self.t;
        while i < a.len() || j < g.len() {
            let gk = if j < g.len() { Some(add_keys(&g[j].k, k)) } else { None };
            let ord = match (&gk, i < a.len()) {
                (None, _) => Ordering::Less,
                (Some(_), false) => Ordering::Greater,
                (Some(gk), true) => a[i].k.cmp(gk),
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let gt = &g[j];
                    out.push(Term {
                        e: gt.e.iter().zip(e).map(|(x, y)| x + y).collect(),
                        k: gk.unwrap(),
                        c: -(&gt.c * c),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let nc = &a[i].c - &(&g[j].c * c);
                    if !nc.is_zero() {
                        out.push(Term { e: a[i].e.clone(), k: gk.unwrap(), c: nc });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Sorted { t: out }
    }
}

/// Index of the first basis element whose leading monomial divides `e`.
fn find_divisor(e: &[i32], basis: &[&Sorted]) -> Option<usize> {
    basis.iter().position(|g| g.lead().map(|l| divides(&l.e, e)).unwrap_or(false))
}

/// Full reduction of `p` by `basis`; returns the remainder and, when
/// `quot` is given, accumulates quotient terms `(basis index, exps, coeff)`.
pub(crate) fn reduce(p: &Sorted, basis: &[&Sorted], mut quot: Option<&mut Vec<(usize, Vec<i32>, Coeff)>>) -> Sorted {
    let mut p = p.clone();
    let mut rem: Vec<Term> = Vec::new();
    while let Some(lt) = p.t.last() {
        match find_divisor(&lt.e, basis) {
            Some(i) => {
                let g = basis[i];
                let gl = g.lead().unwrap();
                let e = sub_exps(&lt.e, &gl.e);
                let k: Vec<i64> = lt.k.iter().zip(&gl.k).map(|(a, b)| a - b).collect();
                let c = &lt.c / &gl.c;
                let n = p.t.len();
                let head = Sorted { t: p.t[..n - 1].to_vec() };
                let tail = &g.t[..g.t.len() - 1];
                if let Some(q) = quot.as_deref_mut() {
                    q.push((i, e.clone(), c.clone()));
                }
                p = head.sub_mul(&c, &e, &k, tail);
            }
            None => {
                rem.push(p.t.pop().unwrap());
            }
        }
    }
    rem.reverse();
    Sorted { t: rem }
}

/// Reduced Groebner basis with its order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    vars: Arc<VarTable>,
    order: TermOrder,
    compiled: MatrixOrder,
    gens: Vec<Sorted>,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.same_table(&Polynomial::zero(&self.vars)) {
            return Err(Error::TableMismatch);
        }
        let refs: Vec<&Sorted> = self.gens.iter().collect();
        Ok(reduce(&Sorted::from_poly(f, &self.compiled), &refs, None).to_poly(&self.vars))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().map(|g| Monomial(g.lead().unwrap().e.clone())).collect()
    }

    /// True for the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.t.len() == 1 && g.t[0].e.iter().all(|&x| x == 0))
    }
}

/// Leading monomial and coefficient of `f` under `order`.
pub fn leading_term(f: &Polynomial, order: &TermOrder) -> Option<(Monomial, Coeff)> {
    let ord = order.compile(f.vars());
    f.terms().max_by(|a, b| ord.cmp(&a.0 .0, &b.0 .0)).map(|(m, c)| (m.clone(), c.clone()))
}

fn check_inputs(gens: &[Polynomial], order: &TermOrder, vars: &Arc<VarTable>) -> Result<()> {
    if !order.is_admissible(vars.len()) {
        return Err(Error::InadmissibleOrder);
    }
    for g in gens {
        if !g.same_table(&Polynomial::zero(vars)) {
            return Err(Error::TableMismatch);
        }
        if g.has_negative_exponents() {
            return Err(Error::NegativeExponent(format!("{g}")));
        }
    }
    Ok(())
}

/// Remainder of dividing `f` by `g` (not necessarily a Groebner basis).
pub fn normal_form(f: &Polynomial, g: &[Polynomial], order: &TermOrder) -> Result<Polynomial> {
    Ok(divide(f, g, order)?.1)
}

/// Division with quotients: `f = sum q_i g_i + r`.
pub fn divide(f: &Polynomial, g: &[Polynomial], order: &TermOrder) -> Result<(Vec<Polynomial>, Polynomial)> {
    let vars = f.vars().clone();
    check_inputs(g, order, &vars)?;
    check_inputs(std::slice::from_ref(f), order, &vars)?;
    let ord = order.compile(&vars);
    let gs: Vec<Sorted> = g.iter().map(|p| Sorted::from_poly(p, &ord)).collect();
    let refs: Vec<&Sorted> = gs.iter().filter(|s| !s.is_zero()).collect();
    let idx: Vec<usize> = gs.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, _)| i).collect();
    let mut q = Vec::new();
    let r = reduce(&Sorted::from_poly(f, &ord), &refs, Some(&mut q));
    let mut quots = vec![Polynomial::zero(&vars); g.len()];
    for (i, e, c) in q {
        quots[idx[i]].add_term(Monomial(e), &c);
    }
    Ok((quots, r.to_poly(&vars)))
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    key: Vec<i64>,
    j: usize,
    i: usize,
}

struct Lcm {
    e: Vec<i32>,
}

fn lcm_e(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

struct State<'a> {
    ord: &'a MatrixOrder,
    polys: Vec<Sorted>,
    active: Vec<usize>,
    pairs: BTreeSet<Pair>,
}

impl<'a> State<'a> {
    fn le(&self, i: usize) -> &[i32] {
        &self.polys[i].lead().unwrap().e
    }

    fn lcm(&self, i: usize, j: usize) -> Lcm {
        Lcm { e: lcm_e(self.le(i), self.le(j)) }
    }

    /// Gebauer-Moeller update with new element `h`.
    fn update(&mut self, h: usize) {
        let lh = self.le(h).to_vec();
        let mut c: Vec<usize> = self.active.clone();
        let mut d: Vec<usize> = Vec::new();
        while let Some(g1) = (!c.is_empty()).then(|| c.remove(0)) {
            let l1 = self.lcm(h, g1).e;
            let keep = coprime(&lh, self.le(g1))
                || (!c.iter().any(|&g2| divides(&self.lcm(h, g2).e, &l1))
                    && !d.iter().any(|&g2| divides(&self.lcm(h, g2).e, &l1)));
            if keep {
                d.push(g1);
            }
        }
        let e: Vec<usize> = d.into_iter().filter(|&g| !coprime(&lh, self.le(g))).collect();
        let old: Vec<Pair> = std::mem::take(&mut self.pairs).into_iter().collect();
        for p in old {
            let l = self.lcm(p.i, p.j).e;
            let drop = divides(&lh, &l) && lcm_e(self.le(p.i), &lh) != l && lcm_e(self.le(p.j), &lh) != l;
            if !drop {
                self.pairs.insert(p);
            }
        }
        for g in e {
            let l = self.lcm(h, g).e;
            self.pairs.insert(Pair { key: self.ord.key(&l), j: h.max(g), i: h.min(g) });
        }
        let act: Vec<usize> = self.active.iter().copied().filter(|&g| !divides(&lh, self.le(g))).collect();
        self.active = act;
        self.active.push(h);
    }

    fn spoly(&self, i: usize, j: usize) -> Sorted {
        let a = &self.polys[i];
        let b = &self.polys[j];
        let la = a.lead().unwrap();
        let lb = b.lead().unwrap();
        let l = lcm_e(&la.e, &lb.e);
        let ea = sub_exps(&l, &la.e);
        let eb = sub_exps(&l, &lb.e);
        let ka = self.ord.key(&ea);
        let kb = self.ord.key(&eb);
        // a, b monic: S = x^ea a - x^eb b, leading terms cancel
        let ta = Sorted { t: a.t[..a.t.len() - 1].to_vec() };
        let sa = Sorted::default().sub_mul(&-Coeff::one(), &ea, &ka, &ta.t);
        sa.sub_mul(&Coeff::one(), &eb, &kb, &b.t[..b.t.len() - 1])
    }
}

/// Reduced Groebner basis of `gens`; the order must be admissible.
pub fn buchberger(gens: &[Polynomial], order: &TermOrder) -> Result<GroebnerBasis> {
    let vars = match gens.first() {
        Some(g) => g.vars().clone(),
        None => return Err(Error::BadParameters("empty generator list".into())),
    };
    check_inputs(gens, order, &vars)?;
    let ord = order.compile(&vars);
    let mut st = State { ord: &ord, polys: Vec::new(), active: Vec::new(), pairs: BTreeSet::new() };

    let mut input: Vec<Sorted> = gens.iter().map(|g| Sorted::from_poly(g, &ord)).filter(|s| !s.is_zero()).collect();
    input.sort_by(|a, b| a.lead().unwrap().k.cmp(&b.lead().unwrap().k).then(a.t.len().cmp(&b.t.len())));
    for g in input {
        let refs: Vec<&Sorted> = st.active.iter().map(|&i| &st.polys[i]).collect();
        let mut h = reduce(&g, &refs, None);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        st.polys.push(h);
        let idx = st.polys.len() - 1;
        st.update(idx);
    }

    while let Some(p) = st.pairs.pop_first() {
        let s = st.spoly(p.i, p.j);
        let refs: Vec<&Sorted> = st.active.iter().map(|&i| &st.polys[i]).collect();
        let mut h = reduce(&s, &refs, None);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        st.polys.push(h);
        let idx = st.polys.len() - 1;
        st.update(idx);
    }

    // minimal basis, then interreduce
    let mut lead: Vec<usize> = st.active.clone();
    lead.sort_by(|&a, &b| st.polys[a].lead().unwrap().k.cmp(&st.polys[b].lead().unwrap().k));
    let mut minimal: Vec<usize> = Vec::new();
    for &i in &lead {
        if !minimal.iter().any(|&j| divides(st.le(j), st.le(i))) {
            minimal.push(i);
        }
    }
    let mut out: Vec<Sorted> = Vec::new();
    for &i in &minimal {
        let others: Vec<&Sorted> = minimal.iter().filter(|&&j| j != i).map(|&j| &st.polys[j]).collect();
        let g = &st.polys[i];
        let l = g.lead().unwrap().clone();
        let tail = Sorted { t: g.t[..g.t.len() - 1].to_vec() };
        let mut r = reduce(&tail, &others, None);
        r.t.push(l);
        r.make_monic();
        out.push(r);
    }
    out.sort_by(|a, b| a.lead().unwrap().k.cmp(&b.lead().unwrap().k));
    let polys = out.iter().map(|s| s.to_poly(&vars)).collect();
    Ok(GroebnerBasis { vars, order: order.clone(), compiled: ord.clone(), gens: out, polys })
}

/// Basis elements supported on `keep` only. The basis order must be a block
/// order ending in exactly `keep`.
pub fn eliminate(g: &GroebnerBasis, keep: &[usize]) -> Result<Vec<Polynomial>> {
    check_keep(&g.order, keep)?;
    Ok(g.polys.iter().filter(|p| p.support().iter().all(|v| keep.contains(v))).cloned().collect())
}
