use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::{Image, Polynomial, VarTable};

/// Dense matrix of polynomials over one variable table.
#[derive(Clone, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    vars: Arc<VarTable>,
    entries: Vec<Polynomial>,
}

impl std::fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// First entry where a product differs from `f * I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// `"RS"` or `"SR"`.
    pub product: &'static str,
    pub row: usize,
    pub col: usize,
    pub found: String,
    pub expected: String,
}

/// Result of [`verify_factorization`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationCheck {
    pub witness: Option<Mismatch>,
}

impl FactorizationCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

impl PolyMatrix {
    pub fn from_rows(vars: &Arc<VarTable>, rows: Vec<Vec<Polynomial>>) -> Result<PolyMatrix> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::SizeMismatch("ragged rows".into()));
            }
            for p in row {
                if p.vars().as_ref() != vars.as_ref() {
                    return Err(Error::TableMismatch);
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix { rows: r, cols: c, vars: vars.clone(), entries })
    }

    pub fn zero(vars: &Arc<VarTable>, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix { rows, cols, vars: vars.clone(), entries: vec![Polynomial::zero(vars); rows * cols] }
    }

    pub fn identity(vars: &Arc<VarTable>, n: usize) -> PolyMatrix {
        Self::scalar(&Polynomial::one(vars), n)
    }

    /// `f` times the `n x n` identity.
    pub fn scalar(f: &Polynomial, n: usize) -> PolyMatrix {
        let mut m = Self::zero(f.vars(), n, n);
        for i in 0..n {
            m.entries[i * n + i] = f.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &Polynomial> {
        self.entries.iter()
    }

    pub fn mul(&self, o: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != o.rows {
            return Err(Error::SizeMismatch(format!("{}x{} times {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        if self.vars.as_ref() != o.vars.as_ref() {
            return Err(Error::TableMismatch);
        }
        let mut out = Self::zero(&self.vars, self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = Polynomial::zero(&self.vars);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), o.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = Self::zero(&self.vars, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = Self::zero(&self.vars, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// `[[a, b], [c, d]]` from four blocks.
    pub fn block(a: &PolyMatrix, b: &PolyMatrix, c: &PolyMatrix, d: &PolyMatrix) -> Result<PolyMatrix> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::SizeMismatch("block shapes".into()));
        }
        let mut out = Self::zero(&a.vars, a.rows + c.rows, a.cols + b.cols);
        for (blk, r0, c0) in [(a, 0, 0), (b, 0, a.cols), (c, a.rows, 0), (d, a.rows, a.cols)] {
            for i in 0..blk.rows {
                for j in 0..blk.cols {
                    out.set(r0 + i, c0 + j, blk.get(i, j).clone());
                }
            }
        }
        Ok(out)
    }

    pub fn map<F: FnMut(&Polynomial) -> Result<Polynomial>>(&self, mut f: F) -> Result<PolyMatrix> {
        let entries: Result<Vec<Polynomial>> = self.entries.iter().map(&mut f).collect();
        let entries = entries?;
        let vars = entries.first().map(|p| p.vars().clone()).unwrap_or_else(|| self.vars.clone());
        Ok(PolyMatrix { rows: self.rows, cols: self.cols, vars, entries })
    }

    pub fn substitute(&self, bindings: &[(usize, Image)]) -> Result<PolyMatrix> {
        self.map(|p| p.substitute(bindings))
    }

    /// Determinant by expansion over column subsets.
    pub fn det(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::SizeMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one(&self.vars));
        }
        if n > 16 {
            return Err(Error::Unsupported("determinant above 16x16".into()));
        }
        // d[mask]: minor on the first |mask| rows and the columns in mask
        let mut d: Vec<Option<Polynomial>> = vec![None; 1 << n];
        d[0] = Some(Polynomial::one(&self.vars));
        for mask in 1usize..(1 << n) {
            let k = mask.count_ones() as usize;
            let row = k - 1;
            let mut acc = Polynomial::zero(&self.vars);
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let a = self.get(row, j);
                if a.is_zero() {
                    continue;
                }
                let rest = d[mask ^ (1 << j)].as_ref().unwrap();
                if rest.is_zero() {
                    continue;
                }
                let after = (mask >> (j + 1)).count_ones();
                let t = a * rest;
                acc = if after % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            d[mask] = Some(acc);
        }
        Ok(d[(1 << n) - 1].take().unwrap())
    }

    /// Matrix of signed cofactors `C_ij = (-1)^(i+j) det(minor_ij)`.
    pub fn cofactors(&self) -> Result<PolyMatrix> {
        if !self.is_square() {
            return Err(Error::SizeMismatch("cofactors of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut out = Self::zero(&self.vars, n, n);
        for i in 0..n {
            for j in 0..n {
                let rs: Vec<usize> = (0..n).filter(|&r| r != i).collect();
                let cs: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let m = self.submatrix(&rs, &cs).det()?;
                out.set(i, j, if (i + j) % 2 == 0 { m } else { -m });
            }
        }
        Ok(out)
    }
}

fn first_difference(p: &PolyMatrix, f: &Polynomial, product: &'static str) -> Option<Mismatch> {
    let zero = Polynomial::zero(f.vars());
    for i in 0..p.rows() {
        for j in 0..p.cols() {
            let want = if i == j { f } else { &zero };
            if p.get(i, j) != want {
                return Some(Mismatch {
                    product,
                    row: i,
                    col: j,
                    found: p.get(i, j).to_string(),
                    expected: want.to_string(),
                });
            }
        }
    }
    None
}

/// Checks `RS = SR = f * I` exactly.
pub fn verify_factorization(r: &PolyMatrix, s: &PolyMatrix, f: &Polynomial) -> Result<FactorizationCheck> {
    if !r.is_square() || !s.is_square() || r.rows() != s.rows() {
        return Err(Error::SizeMismatch(format!("{}x{} and {}x{}", r.rows(), r.cols(), s.rows(), s.cols())));
    }
    if r.vars().as_ref() != f.vars().as_ref() {
        return Err(Error::TableMismatch);
    }
    let rs = r.mul(s)?;
    if let Some(w) = first_difference(&rs, f, "RS") {
        return Ok(FactorizationCheck { witness: Some(w) });
    }
    let sr = s.mul(r)?;
    Ok(FactorizationCheck { witness: first_difference(&sr, f, "SR") })
}
