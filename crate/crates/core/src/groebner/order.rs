use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, VarTable};

/// Monomial order. `Lex` and `Grevlex` rank variables by position (earlier is
/// larger); inside a block, position means position in the block's list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    Lex,
    Grevlex,
    /// Weighted degree first, ties broken by `tiebreak`.
    Weighted {
        weights: Vec<i64>,
        tiebreak: Box<TermOrder>,
    },
    /// Earlier blocks dominate. Each block lists variable indices, largest first.
    Block(Vec<(Vec<usize>, TermOrder)>),
}

impl TermOrder {
    pub fn weighted(weights: Vec<i64>, tiebreak: TermOrder) -> TermOrder {
        TermOrder::Weighted { weights, tiebreak: Box::new(tiebreak) }
    }

    /// Block order from variable names.
    pub fn block_named(vars: &VarTable, blocks: &[(&[&str], TermOrder)]) -> Result<TermOrder> {
        let mut out = Vec::new();
        for (names, o) in blocks {
            out.push((vars.indices(names)?, o.clone()));
        }
        Ok(TermOrder::Block(out))
    }

    /// True when 1 is the minimum and the order is multiplicative.
    pub fn is_admissible(&self, nvars: usize) -> bool {
        self.admissible_on(&(0..nvars).collect::<Vec<_>>())
    }

    fn admissible_on(&self, pos: &[usize]) -> bool {
        match self {
            TermOrder::Lex | TermOrder::Grevlex => true,
            TermOrder::Weighted { weights, tiebreak } => {
                weights.len() == pos.len() && weights.iter().all(|&w| w >= 0) && tiebreak.admissible_on(pos)
            }
            TermOrder::Block(blocks) => {
                let mut seen: Vec<usize> = Vec::new();
                for (b, o) in blocks {
                    if b.iter().any(|v| !pos.contains(v) || seen.contains(v)) {
                        return false;
                    }
                    seen.extend(b);
                    if !o.admissible_on(b) {
                        return false;
                    }
                }
                seen.len() == pos.len()
            }
        }
    }

    /// Rows of the order matrix; monomials compare by `rows * e` lexicographically.
    pub fn matrix(&self, nvars: usize) -> Vec<Vec<i64>> {
        let pos: Vec<usize> = (0..nvars).collect();
        let mut rows = Vec::new();
        self.push_rows(&pos, nvars, &mut rows);
        rows
    }

    fn push_rows(&self, pos: &[usize], n: usize, rows: &mut Vec<Vec<i64>>) {
        match self {
            TermOrder::Lex => {
                for &p in pos {
                    let mut r = vec![0; n];
                    r[p] = 1;
                    rows.push(r);
                }
            }
            TermOrder::Grevlex => {
                let mut r = vec![0; n];
                for &p in pos {
                    r[p] = 1;
                }
                rows.push(r);
                for &p in pos.iter().skip(1).rev() {
                    let mut r = vec![0; n];
                    r[p] = -1;
                    rows.push(r);
                }
            }
            TermOrder::Weighted { weights, tiebreak } => {
                let mut r = vec![0; n];
                for (i, &p) in pos.iter().enumerate() {
                    r[p] = weights.get(i).copied().unwrap_or(0);
                }
                rows.push(r);
                tiebreak.push_rows(pos, n, rows);
            }
            TermOrder::Block(blocks) => {
                for (b, o) in blocks {
                    o.push_rows(b, n, rows);
                }
            }
        }
    }

    /// Variables of the last block, if this is a block order.
    pub fn last_block(&self) -> Option<&[usize]> {
        match self {
            TermOrder::Block(b) => b.last().map(|(v, _)| v.as_slice()),
            _ => None,
        }
    }

    pub fn compile(&self, vars: &Arc<VarTable>) -> MatrixOrder {
        MatrixOrder { rows: self.matrix(vars.len()) }
    }
}

/// Compiled order: sparse rows of (variable, weight).
#[derive(Clone, Debug)]
pub struct MatrixOrder {
    rows: Vec<Vec<i64>>,
}

impl MatrixOrder {
    pub fn key(&self, e: &[i32]) -> Vec<i64> {
        self.rows.iter().map(|r| r.iter().zip(e).map(|(&w, &x)| w * x as i64).sum()).collect()
    }

    pub fn cmp(&self, a: &[i32], b: &[i32]) -> Ordering {
        for r in &self.rows {
            let ka: i64 = r.iter().zip(a).map(|(&w, &x)| w * x as i64).sum();
            let kb: i64 = r.iter().zip(b).map(|(&w, &x)| w * x as i64).sum();
            match ka.cmp(&kb) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
}

pub fn compare(order: &TermOrder, a: &Monomial, b: &Monomial) -> Ordering {
    order.compile_len(a.0.len()).cmp(&a.0, &b.0)
}

impl TermOrder {
    fn compile_len(&self, n: usize) -> MatrixOrder {
        MatrixOrder { rows: self.matrix(n) }
    }
}

/// Check that `order` is a block order whose last block is exactly `keep`.
pub fn check_keep(order: &TermOrder, keep: &[usize]) -> Result<()> {
    let last = order.last_block().ok_or(Error::OrderKeepMismatch)?;
    let mut a = last.to_vec();
    let mut b = keep.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a == b {
        Ok(())
    } else {
        Err(Error::OrderKeepMismatch)
    }
}
