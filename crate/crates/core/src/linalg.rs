//! Dense exact linear algebra over Q(i) and integer lattice kernels.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::polyring::Coeff;

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut [Vec<Coeff>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let d = &m[r][j] * &f;
                    m[i][j] -= &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Coeff>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

/// Solve `x * A = b` for a row vector `x`, where `A` has one row per unknown.
pub fn solve_left(a: &[Vec<Coeff>], b: &[Coeff]) -> Option<Vec<Coeff>> {
    let n = a.len();
    let cols = b.len();
    // transpose into augmented system A^T x = b
    let mut m: Vec<Vec<Coeff>> = (0..cols)
        .map(|j| {
            let mut row: Vec<Coeff> = (0..n).map(|i| a[i][j].clone()).collect();
            row.push(b[j].clone());
            row
        })
        .collect();
    let piv = rref(&mut m);
    if piv.contains(&n) {
        return None;
    }
    let mut x = vec![Coeff::zero(); n];
    for (r, &c) in piv.iter().enumerate() {
        x[c] = m[r][n].clone();
    }
    Some(x)
}

/// Basis of `{x : A x = 0}` over Q(i).
pub fn kernel(a: &[Vec<Coeff>], ncols: usize) -> Vec<Vec<Coeff>> {
    let mut m = a.to_vec();
    let piv = rref(&mut m);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !piv.contains(c)) {
        let mut v = vec![Coeff::zero(); ncols];
        v[free] = Coeff::one();
        for (r, &c) in piv.iter().enumerate() {
            v[c] = -&m[r][free];
        }
        out.push(v);
    }
    out
}

/// Integer kernel basis of `A x = 0`, in Hermite normal form with positive
/// pivots (each vector primitive, first nonzero entry positive).
pub fn integer_kernel(a: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    // column operations on [A; I]
    let rows = a.len();
    let mut cols: Vec<Vec<i64>> = (0..ncols)
        .map(|j| {
            let mut c: Vec<i64> = a.iter().map(|r| r[j]).collect();
            c.extend((0..ncols).map(|i| (i == j) as i64));
            c
        })
        .collect();
    let mut start = 0;
    for r in 0..rows {
        loop {
            let nz: Vec<usize> = (start..ncols).filter(|&j| cols[j][r] != 0).collect();
            if nz.len() <= 1 {
                if let Some(&j) = nz.first() {
                    cols.swap(start, j);
                    start += 1;
                }
                break;
            }
            let (mut p, mut q) = (nz[0], nz[1]);
            if cols[q][r].abs() < cols[p][r].abs() {
                std::mem::swap(&mut p, &mut q);
            }
            let f = cols[q][r].div_euclid(cols[p][r]);
            let pc = cols[p].clone();
            for (x, y) in cols[q].iter_mut().zip(&pc) {
                *x -= f * y;
            }
        }
    }
    let mut basis: Vec<Vec<i64>> = cols[start..].iter().map(|c| c[rows..].to_vec()).collect();
    hermite_rows(&mut basis);
    basis
}

/// Row Hermite normal form in place, dropping zero rows.
pub fn hermite_rows(b: &mut Vec<Vec<i64>>) {
    let n = b.first().map(|r| r.len()).unwrap_or(0);
    let mut r = 0;
    for c in 0..n {
        loop {
            let nz: Vec<usize> = (r..b.len()).filter(|&i| b[i][c] != 0).collect();
            if nz.len() <= 1 {
                if let Some(&i) = nz.first() {
                    b.swap(r, i);
                    if b[r][c] < 0 {
                        for x in b[r].iter_mut() {
                            *x = -*x;
                        }
                    }
                    for i in 0..r {
                        let f = b[i][c].div_euclid(b[r][c]);
                        let pr = b[r].clone();
                        for (x, y) in b[i].iter_mut().zip(&pr) {
                            *x -= f * y;
                        }
                    }
                    r += 1;
                }
                break;
            }
            let (mut p, mut q) = (nz[0], nz[1]);
            if b[q][c].abs() < b[p][c].abs() {
                std::mem::swap(&mut p, &mut q);
            }
            let f = b[q][c].div_euclid(b[p][c]);
            let pr = b[p].clone();
            for (x, y) in b[q].iter_mut().zip(&pr) {
                *x -= f * y;
            }
        }
    }
    b.truncate(r);
    for row in b.iter_mut() {
        let g = row.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g > 1 {
            for x in row.iter_mut() {
                *x /= g;
            }
        }
    }
}
