use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::coeff::Coeff;
use super::vars::VarTable;
use crate::error::{Error, Result};

/// Exponent vector aligned with a [`VarTable`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd_is_one(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn dot(&self, w: &[i64]) -> i64 {
        self.0.iter().zip(w).map(|(&e, &w)| e as i64 * w).sum()
    }
}

/// Result of [`Polynomial::grade`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grade {
    Homogeneous(i64),
    /// Two terms with different weighted degree.
    NotHomogeneous(Monomial, Monomial),
    Zero,
}

/// Sparse polynomial over the Gaussian rationals.
#[derive(Clone)]
pub struct Polynomial {
    vars: Arc<VarTable>,
    terms: BTreeMap<Monomial, Coeff>,
}

/// Image of one variable under a ring map: `pos` for positive powers and,
/// optionally, `neg` for negative powers.
#[derive(Clone, Debug)]
pub struct Image {
    pub pos: Polynomial,
    pub neg: Option<Polynomial>,
}

impl Image {
    pub fn of(p: Polynomial) -> Image {
        Image { pos: p, neg: None }
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, o: &Polynomial) -> bool {
        (Arc::ptr_eq(&self.vars, &o.vars) || self.vars == o.vars) && self.terms == o.terms
    }
}
impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Polynomial {
    pub fn zero(vars: &Arc<VarTable>) -> Polynomial {
        Polynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Arc<VarTable>) -> Polynomial {
        Self::constant(vars, Coeff::one())
    }

    pub fn constant(vars: &Arc<VarTable>, c: Coeff) -> Polynomial {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn int(vars: &Arc<VarTable>, n: i64) -> Polynomial {
        Self::constant(vars, Coeff::from_int(n))
    }

    pub fn var(vars: &Arc<VarTable>, name: &str) -> Result<Polynomial> {
        let i = vars.require(name)?;
        Ok(Self::var_index(vars, i))
    }

    pub fn var_index(vars: &Arc<VarTable>, i: usize) -> Polynomial {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::term(vars, Monomial(e), Coeff::one())
    }

    /// Single term; panics if the exponent vector has the wrong length.
    pub fn term(vars: &Arc<VarTable>, m: Monomial, c: Coeff) -> Polynomial {
        assert_eq!(m.0.len(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Checked single term: negative exponents only on invertible variables.
    pub fn checked_term(vars: &Arc<VarTable>, m: Monomial, c: Coeff) -> Result<Polynomial> {
        if m.0.len() != vars.len() {
            return Err(Error::TableMismatch);
        }
        for (i, &e) in m.0.iter().enumerate() {
            if e < 0 && !vars.is_invertible(i) {
                return Err(Error::NegativeExponent(vars.name(i).to_string()));
            }
        }
        Ok(Self::term(vars, m, c))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(vars: &Arc<VarTable>, it: I) -> Polynomial {
        let mut p = Self::zero(vars);
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn same_table(&self, o: &Polynomial) -> bool {
        Arc::ptr_eq(&self.vars, &o.vars) || self.vars == o.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn term_map(&self) -> &BTreeMap<Monomial, Coeff> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_term(&self) -> Coeff {
        self.terms.get(&Monomial::one(self.vars.len())).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, o: &Polynomial) -> Result<()> {
        if self.same_table(o) {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    pub fn checked_add(&self, o: &Polynomial) -> Result<Polynomial> {
        self.check(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c);
        }
        Ok(r)
    }

    pub fn checked_sub(&self, o: &Polynomial) -> Result<Polynomial> {
        self.check(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), &-c);
        }
        Ok(r)
    }

    pub fn checked_mul(&self, o: &Polynomial) -> Result<Polynomial> {
        self.check(o)?;
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.len() * o.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(x) => *x += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Polynomial { vars: self.vars.clone(), terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial { vars: self.vars.clone(), terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Largest exponent of variable `i`, or `None` for the zero polynomial.
    pub fn degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    pub fn min_degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[i]).min()
    }

    /// Indices of variables that occur with nonzero exponent.
    pub fn support(&self) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    s.insert(i);
                }
            }
        }
        s
    }

    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] != 0)
    }

    /// Coefficient of `var^k` as a polynomial with `var` absent.
    pub fn laurent_coeff(&self, var: usize, k: i32) -> Polynomial {
        let mut r = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            if m.0[var] == k {
                let mut e = m.clone();
                e.0[var] = 0;
                r.add_term(e, c);
            }
        }
        r
    }

    /// Collect by powers of `var`: exponent -> coefficient polynomial.
    pub fn collect(&self, var: usize) -> BTreeMap<i32, Polynomial> {
        let mut out: BTreeMap<i32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.clone();
            let k = e.0[var];
            e.0[var] = 0;
            out.entry(k).or_insert_with(|| Self::zero(&self.vars)).add_term(e, c);
        }
        out
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut r = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let k = m.0[var];
            if k != 0 {
                let mut e = m.clone();
                e.0[var] -= 1;
                r.add_term(e, &(c * &Coeff::from_int(k as i64)));
            }
        }
        r
    }

    /// Common weighted degree of all terms.
    pub fn grade(&self, weights: &[i64]) -> Grade {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Grade::Zero,
            Some(m) => m,
        };
        let d = first.dot(weights);
        for m in it {
            if m.dot(weights) != d {
                return Grade::NotHomogeneous(first.clone(), m.clone());
            }
        }
        Grade::Homogeneous(d)
    }

    /// Weighted-homogeneous component of degree `d`.
    pub fn homogeneous_part(&self, weights: &[i64], d: i64) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.dot(weights) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Split into terms supported on `a` only (constants included), on `b`
    /// only (no constants) and the rest.
    pub fn split_pure_mixed(&self, a: &[usize], b: &[usize]) -> (Polynomial, Polynomial, Polynomial) {
        let mut pa = Self::zero(&self.vars);
        let mut pb = Self::zero(&self.vars);
        let mut mixed = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let in_set = |set: &[usize]| m.0.iter().enumerate().all(|(i, &e)| e == 0 || set.contains(&i));
            if in_set(a) {
                pa.terms.insert(m.clone(), c.clone());
            } else if in_set(b) {
                pb.terms.insert(m.clone(), c.clone());
            } else {
                mixed.terms.insert(m.clone(), c.clone());
            }
        }
        (pa, pb, mixed)
    }

    /// Set the listed variables to zero.
    pub fn set_zero(&self, vars: &[usize]) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&i| m.0[i] == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Ring map into `target`: variable `i` goes to `images[i]`.
    pub fn map_into(&self, target: &Arc<VarTable>, images: &[Image]) -> Result<Polynomial> {
        if images.len() != self.vars.len() {
            return Err(Error::TableMismatch);
        }
        for im in images {
            if !Arc::ptr_eq(im.pos.vars(), target) && im.pos.vars().as_ref() != target.as_ref() {
                return Err(Error::TableMismatch);
            }
        }
        let mut cache: HashMap<(usize, i32), Polynomial> = HashMap::new();
        let mut result = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let key = (i, e);
                if !cache.contains_key(&key) {
                    let p = power_image(&images[i], e, self.vars.name(i))?;
                    cache.insert(key, p);
                }
                t = &t * &cache[&key];
                if t.is_zero() {
                    break;
                }
            }
            for (k, x) in t.terms {
                result.add_term(k, &x);
            }
        }
        result.validate()?;
        Ok(result)
    }

    /// Simultaneous substitution of variables by polynomials over the same table.
    pub fn substitute(&self, bindings: &[(usize, Image)]) -> Result<Polynomial> {
        let mut images: Vec<Image> = (0..self.vars.len()).map(|i| Image::of(Self::var_index(&self.vars, i))).collect();
        for (i, im) in bindings {
            if !im.pos.same_table(self) || im.neg.as_ref().map(|n| !n.same_table(self)).unwrap_or(false) {
                return Err(Error::TableMismatch);
            }
            images[*i] = im.clone();
        }
        let vars = self.vars.clone();
        self.map_into(&vars, &images)
    }

    /// Substitute by variable name, positive powers only.
    pub fn subs(&self, bindings: &[(&str, &Polynomial)]) -> Result<Polynomial> {
        let b: Result<Vec<(usize, Image)>> =
            bindings.iter().map(|(n, p)| Ok((self.vars.require(n)?, Image::of((*p).clone())))).collect();
        self.substitute(&b?)
    }

    /// Re-express over another table by variable name.
    pub fn embed(&self, target: &Arc<VarTable>) -> Result<Polynomial> {
        let mut r = Self::zero(target);
        let idx: Vec<Option<usize>> = self.vars.names().iter().map(|n| target.index(n)).collect();
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.0.iter().enumerate() {
                if x != 0 {
                    let j = idx[i].ok_or_else(|| Error::UnknownVariable(self.vars.name(i).to_string()))?;
                    e[j] = x;
                }
            }
            r.add_term(Monomial(e), c);
        }
        r.validate()?;
        Ok(r)
    }

    /// Reject negative exponents on non-invertible variables.
    pub fn validate(&self) -> Result<()> {
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e < 0 && !self.vars.is_invertible(i) {
                    return Err(Error::NegativeExponent(self.vars.name(i).to_string()));
                }
            }
        }
        Ok(())
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|m| m.0.iter().any(|&e| e < 0))
    }

    /// Largest term under the internal (lex) storage order.
    pub fn max_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() || !self.same_table(d) {
            return None;
        }
        let (dm, dc) = d.max_term()?;
        let dc_inv = dc.inv();
        let mut rem = self.clone();
        let mut q = Self::zero(&self.vars);
        let limit = 1_000_000usize;
        let mut steps = 0;
        while let Some((m, c)) = rem.max_term() {
            if !dm.divides(m) {
                return None;
            }
            let qm = m.div(dm);
            let qc = c * &dc_inv;
            rem = &rem - &d.mul_monomial(&qm, &qc);
            q.add_term(qm, &qc);
            steps += 1;
            if steps > limit {
                return None;
            }
        }
        Some(q)
    }

    /// Evaluate every variable at a constant.
    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        let mut acc = Coeff::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &point[i].pow(e as u32);
                } else if e < 0 {
                    t = &t * &point[i].inv().pow((-e) as u32);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Divide out the leading coefficient of the largest stored term.
    pub fn monic_lex(&self) -> Polynomial {
        match self.max_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    pub fn is_scalar_multiple_of(&self, o: &Polynomial) -> Option<Coeff> {
        if self.is_zero() || o.is_zero() || self.len() != o.len() || !self.same_table(o) {
            return None;
        }
        let (m, c) = self.max_term()?;
        let oc = o.terms.get(m)?;
        let ratio = c / oc;
        if o.scale(&ratio) == *self {
            Some(ratio)
        } else {
            None
        }
    }

    /// Wire-format string.
    pub fn to_wire(&self) -> String {
        self.to_string()
    }
}

/// Ring map sending variable `i` to the fraction `num_i / den_i`, with
/// denominators cleared: returns `(N, D)` with `p(num/den) = N / D`, where
/// `D` is the product of `den_i^(deg_i p)`.
pub fn map_rational(
    p: &Polynomial,
    target: &Arc<VarTable>,
    images: &[(Polynomial, Polynomial)],
) -> Result<(Polynomial, Polynomial)> {
    if images.len() != p.vars().len() {
        return Err(Error::TableMismatch);
    }
    if p.has_negative_exponents() {
        return Err(Error::Unsupported("rational substitution into a Laurent polynomial".into()));
    }
    let n = images.len();
    let top: Vec<i32> = (0..n).map(|i| p.degree_in(i).unwrap_or(0).max(0)).collect();
    let mut num_pows: Vec<Vec<Polynomial>> = Vec::with_capacity(n);
    let mut den_pows: Vec<Vec<Polynomial>> = Vec::with_capacity(n);
    for (i, (a, b)) in images.iter().enumerate() {
        let mut np = vec![Polynomial::one(target)];
        let mut dp = vec![Polynomial::one(target)];
        for k in 1..=top[i] as usize {
            np.push(&np[k - 1] * a);
            dp.push(&dp[k - 1] * b);
        }
        num_pows.push(np);
        den_pows.push(dp);
    }
    let mut num = Polynomial::zero(target);
    for (m, c) in p.terms() {
        let mut t = Polynomial::constant(target, c.clone());
        for i in 0..n {
            let e = m.0[i] as usize;
            let d = top[i] as usize;
            if d == 0 {
                continue;
            }
            t = &t * &num_pows[i][e];
            t = &t * &den_pows[i][d - e];
        }
        num = &num + &t;
    }
    let mut den = Polynomial::one(target);
    for i in 0..n {
        den = &den * &den_pows[i][top[i] as usize];
    }
    Ok((num, den))
}

fn power_image(im: &Image, e: i32, name: &str) -> Result<Polynomial> {
    if e >= 0 {
        return Ok(im.pos.pow(e as u32));
    }
    if let Some(n) = &im.neg {
        return Ok(n.pow((-e) as u32));
    }
    if im.pos.len() == 1 {
        let (m, c) = im.pos.terms().next().unwrap();
        let inv = Polynomial::checked_term(im.pos.vars(), Monomial(m.0.iter().map(|x| -x).collect()), c.inv())?;
        return Ok(inv.pow((-e) as u32));
    }
    Err(Error::NegativeExponent(name.to_string()))
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        self.checked_add(o).expect("polynomial table mismatch")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        self.checked_sub(o).expect("polynomial table mismatch")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        self.checked_mul(o).expect("polynomial table mismatch")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, o: Polynomial) -> Polynomial {
        &self + &o
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, o: Polynomial) -> Polynomial {
        &self - &o
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, o: Polynomial) -> Polynomial {
        &self * &o
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Kind selector for [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

pub fn arith(a: &Polynomial, b: &Polynomial, kind: ArithKind) -> Result<Polynomial> {
    match kind {
        ArithKind::Add => a.checked_add(b),
        ArithKind::Sub => a.checked_sub(b),
        ArithKind::Mul => a.checked_mul(b),
    }
}

fn fmt_monomial(vars: &VarTable, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            e if e < 0 => parts.push(format!("{}^({})", vars.name(i), e)),
            e => parts.push(format!("{}^{}", vars.name(i), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative_real();
            let a = if neg { -c } else { c.clone() };
            let mono = fmt_monomial(&self.vars, m);
            let coef = a.to_string();
            let body = if mono.is_empty() {
                if a.is_real() && !a.re().is_integer() {
                    format!("({coef})")
                } else {
                    coef
                }
            } else if a.is_one() {
                mono
            } else if a.is_real() && !a.re().is_integer() {
                format!("({coef})*{mono}")
            } else {
                format!("{coef}*{mono}")
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        write!(f, "{out}")
    }
}
