use std::sync::Arc;

use super::distinguished::{distinguished_in, DistinguishedPolys};
use super::matrix::PolyMatrix;
use super::ring::{MfRing, X, Y, Z};
use crate::error::{Error, Result};
use crate::polyring::{Polynomial, VarTable};

/// A square pair `(R, S)` with `RS = SR = f * I`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub ring: MfRing,
    pub r: PolyMatrix,
    pub s: PolyMatrix,
    pub f: Polynomial,
}

/// `A_{n-1}` factorization of `XY - Z^n` split as `Z^m * Z^(n-m)`.
///
/// The deformed variant replaces `Z^(n-m)` and `Z^m` by `f' = prod_{i<=n-m} (Z+t_i)`
/// and `f'' = prod_{i>n-m} (Z+t_i)` with `t_n = -(t_1 + ... + t_{n-1})`.
pub fn build_a_factorization(n: usize, m: usize, deformed: bool) -> Result<Factorization> {
    if n < 2 || m < 1 || m >= n {
        return Err(Error::BadParameters(format!("need 1 <= m <= n-1, got n={n}, m={m}")));
    }
    let ring = MfRing::new(if deformed { n - 1 } else { 0 });
    let (f1, f2) = a_factors(&ring, n, m, deformed);
    let (x, y) = (ring.var(X), ring.var(Y));
    let v = &ring.vars;
    let r = PolyMatrix::from_rows(v, vec![vec![y.clone(), -&f2], vec![f1.clone(), -&x]])?;
    let s = PolyMatrix::from_rows(v, vec![vec![x.clone(), -&f2], vec![f1.clone(), -&y]])?;
    let f = &(&x * &y) - &(&f1 * &f2);
    Ok(Factorization { ring, r, s, f })
}

/// `(f', f'')` for the A family.
pub(crate) fn a_factors(ring: &MfRing, n: usize, m: usize, deformed: bool) -> (Polynomial, Polynomial) {
    let z = ring.var(Z);
    if !deformed {
        return (z.pow((n - m) as u32), z.pow(m as u32));
    }
    let mut t: Vec<Polynomial> = (1..n).map(|i| ring.t(i)).collect();
    let last = t.iter().fold(ring.int(0), |acc, x| &acc - x);
    t.push(last);
    let prod = |ts: &[Polynomial]| ts.iter().fold(ring.int(1), |acc, ti| &acc * &(&z + ti));
    (prod(&t[..n - m]), prod(&t[n - m..]))
}

/// Data needed to state the minor relations of a D-type relations matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct PluckerContext {
    pub m: usize,
    /// `h'` (equal to `Z^(n-m)` when undeformed).
    pub h1: Polynomial,
    /// `delta'` (zero when undeformed).
    pub delta1: Polynomial,
    pub z: Polynomial,
    /// Power of `i` in the `delta'` term of the bottom-row relation.
    pub bottom_exp: i64,
    /// `X~^2 + Y~^2 Z - h'(Z P''^2 + Q''^2) + 2 delta'(Y~ Q'' + (-1)^(m+1) X~ P'')`.
    pub eqn: Polynomial,
}

/// A D-type relations matrix, its partner when known, and its equation.
#[derive(Clone, Debug, PartialEq)]
pub struct DRelations {
    pub ring: MfRing,
    pub n: usize,
    pub m: usize,
    pub r: PolyMatrix,
    /// Present for the undeformed matrices only.
    pub s: Option<PolyMatrix>,
    /// Undeformed: `-X^2 - Y^2 Z + Z^(n+1)`; deformed: the equation in the
    /// shifted coordinates.
    pub eqn: Polynomial,
    pub context: PluckerContext,
    /// The distinguished polynomials behind a deformed matrix.
    pub distinguished: Option<DistinguishedPolys>,
}

/// Relations (and, undeformed, syzygy) matrices for `D_{n+2}` split at `m`.
pub fn build_d_relations(n: usize, m: usize, deformed: bool) -> Result<DRelations> {
    if n < 1 || m < 1 || m > n {
        return Err(Error::BadParameters(format!("need 1 <= m <= n, got n={n}, m={m}")));
    }
    if deformed {
        deformed_d(n, m, false)
    } else {
        plain_d(n, m)
    }
}

/// The deformed relations matrix with the bottom rows written in the same
/// shifted coordinates as the top rows. Its determinant is
/// `(X~^2 + Y~^2 Z - h' g'')^2`, not the square of the deformed equation;
/// kept for comparison with [`build_d_relations`].
pub fn deformed_d_as_printed(n: usize, m: usize) -> Result<DRelations> {
    if n < 1 || m < 1 || m > n {
        return Err(Error::BadParameters(format!("need 1 <= m <= n, got n={n}, m={m}")));
    }
    deformed_d(n, m, true)
}

fn plain_d(n: usize, m: usize) -> Result<DRelations> {
    let ring = MfRing::new(0);
    let (x, y, z) = (ring.var(X), ring.var(Y), ring.var(Z));
    let ix = &ring.ipow(1) * &x;
    let yz = &y * &z;
    let zp = |k: usize| z.pow(k as u32);
    let o = ring.int(0);
    let (r, s) = if m % 2 == 1 {
        let a = (m + 1) / 2;
        let b = n + 1 - a;
        let r = vec![
            vec![-&ix, zp(a), -&y, o.clone()],
            vec![zp(b), ix.clone(), o.clone(), -&y],
            vec![-&yz, o.clone(), -&ix, zp(a)],
            vec![o.clone(), -&yz, zp(b), ix.clone()],
        ];
        let s = vec![
            vec![-&ix, zp(a), y.clone(), o.clone()],
            vec![zp(b), ix.clone(), o.clone(), y.clone()],
            vec![yz.clone(), o.clone(), -&ix, zp(a)],
            vec![o.clone(), yz.clone(), zp(b), ix.clone()],
        ];
        (r, s)
    } else {
        let a = m / 2;
        let r = vec![
            vec![-&ix, o.clone(), -&y, zp(a)],
            vec![o.clone(), ix.clone(), zp(n - a), -&y],
            vec![-&yz, zp(a + 1), -&ix, o.clone()],
            vec![zp(n + 1 - a), -&yz, o.clone(), ix.clone()],
        ];
        let s = vec![
            vec![-&ix, o.clone(), y.clone(), zp(a)],
            vec![o.clone(), ix.clone(), zp(n - a), y.clone()],
            vec![yz.clone(), zp(a + 1), -&ix, o.clone()],
            vec![zp(n + 1 - a), yz.clone(), o.clone(), ix.clone()],
        ];
        (r, s)
    };
    let eqn = &(&zp(n + 1) - &(&x * &x)) - &(&yz * &y);
    let context =
        PluckerContext { m, h1: zp(n - m), delta1: o.clone(), z: z.clone(), bottom_exp: m as i64 - 1, eqn: -&eqn };
    Ok(DRelations {
        r: PolyMatrix::from_rows(&ring.vars, r)?,
        s: Some(PolyMatrix::from_rows(&ring.vars, s)?),
        ring,
        n,
        m,
        eqn,
        context,
        distinguished: None,
    })
}

fn deformed_d(n: usize, m: usize, as_printed: bool) -> Result<DRelations> {
    let ring = MfRing::new(n + 2);
    let d = distinguished_in(&ring, n, m)?;
    let (x, y, z) = (ring.var(X), ring.var(Y), ring.var(Z));
    let mi = m as i64;
    let (p2, q2, s2) = (&d.dprimed.p, &d.dprimed.q, &d.dprimed.s);
    let (h1, d1) = (&d.primed.h, &d.primed.delta);
    let xt = &x + &(&ring.sign(mi) * &(d1 * p2));
    let yt = &y - &(d1 * s2);
    let ip = |k: i64, p: &Polynomial| &ring.ipow(k) * p;
    let h1q = h1 * q2;
    let h1p = h1 * p2;
    let ixt = ip(1, &xt);
    let ytz = &yt * &z;
    // bottom rows: X shifted the other way and an extra -2 delta' Q''
    let (ixb, ybz) = if as_printed {
        (ixt.clone(), ytz.clone())
    } else {
        let xb = &x - &(&ring.sign(mi) * &(d1 * p2));
        (ip(1, &xb), &ytz + &(&ring.int(2) * &(d1 * q2)))
    };
    let r = vec![
        vec![-&ixt, ip(-(mi + 1), q2), -&yt, ip(mi, p2)],
        vec![ip(mi + 1, &h1q), ixt.clone(), ip(-mi, &h1p), -&yt],
        vec![-&ybz, ip(mi, &(p2 * &z)), -&ixb, ip(-(mi + 1), q2)],
        vec![ip(-mi, &(&h1p * &z)), -&ybz, ip(mi + 1, &h1q), ixb.clone()],
    ];
    let g2 = &(&z * &(p2 * p2)) + &(q2 * q2);
    let lin = &(&yt * q2) + &(&ring.sign(mi + 1) * &(&xt * p2));
    let eqn = &(&(&(&xt * &xt) + &(&(&yt * &yt) * &z)) - &(h1 * &g2)) + &(&ring.int(2) * &(d1 * &lin));
    let bottom_exp = if as_printed { mi + 1 } else { mi - 1 };
    let context = PluckerContext { m, h1: h1.clone(), delta1: d1.clone(), z: z.clone(), bottom_exp, eqn: eqn.clone() };
    Ok(DRelations {
        r: PolyMatrix::from_rows(&ring.vars, r)?,
        s: None,
        ring,
        n,
        m,
        eqn,
        context,
        distinguished: Some(d),
    })
}

impl DRelations {
    /// `X^2 + Y^2 Z - h + 2 delta Y` in the unshifted coordinates.
    pub fn versal_equation(&self) -> Polynomial {
        let (x, y, z) = (self.ring.var(X), self.ring.var(Y), self.ring.var(Z));
        match &self.distinguished {
            Some(d) => {
                let two_dy = &(&self.ring.int(2) * &d.full.delta) * &y;
                &(&(&(&x * &x) + &(&(&y * &y) * &z)) - &d.full.h) + &two_dy
            }
            None => -&self.eqn,
        }
    }

    /// `det R = eqn^2` and every cofactor is divisible by `eqn`.
    pub fn determinant_certificate(&self) -> Result<(bool, bool)> {
        let det = self.r.det()?;
        let det_ok = det == &self.eqn * &self.eqn;
        let cof = self.r.cofactors()?;
        let cof_ok = cof.entries().all(|c| c.is_zero() || c.div_exact(&self.eqn).is_some());
        Ok((det_ok, cof_ok))
    }
}

/// Factorization of the length-3 equation `x^2 - y^3 + z^5 + 3tyz^2 + t^3 z`
/// built from the 3x3 pair `(phi, psi)` by Knorrer periodicity.
#[derive(Clone, Debug, PartialEq)]
pub struct Length3 {
    pub vars: Arc<VarTable>,
    pub phi: PolyMatrix,
    pub psi: PolyMatrix,
    /// `-y^3 + z^5 + 3tyz^2 + t^3 z`.
    pub g: Polynomial,
    pub a: PolyMatrix,
    pub b: PolyMatrix,
    pub f: Polynomial,
}

pub fn build_length3_factorization() -> Result<Length3> {
    let vars = VarTable::new(&["x", "y", "z", "t"])?;
    let p = |s: &str| crate::polyring::parse(s, &vars);
    let grid = |rows: [[&str; 3]; 3]| -> Result<PolyMatrix> {
        let rows: Result<Vec<Vec<Polynomial>>> = rows.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect();
        PolyMatrix::from_rows(&vars, rows?)
    };
    let phi = grid([["-y", "z^2", "t*z"], ["t", "-y", "z^2"], ["z", "t", "-y"]])?;
    let psi = grid([
        ["y^2-t*z^2", "y*z^2+t^2*z", "z^4+t*y*z"],
        ["z^3+t*y", "y^2-t*z^2", "y*z^2+t^2*z"],
        ["y*z+t^2", "z^3+t*y", "y^2-t*z^2"],
    ])?;
    let x = p("x")?;
    let xi = PolyMatrix::scalar(&x, 3);
    let mxi = PolyMatrix::scalar(&-&x, 3);
    let a = PolyMatrix::block(&psi, &mxi, &xi, &phi)?;
    let b = PolyMatrix::block(&phi, &xi, &mxi, &psi)?;
    let g = p("-y^3+z^5+3*t*y*z^2+t^3*z")?;
    let f = &(&x * &x) + &g;
    Ok(Length3 { vars, phi, psi, g, a, b, f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matfact::verify_factorization;
    use crate::polyring::parse;

    #[test]
    fn a_plain_small() {
        let fac = build_a_factorization(3, 1, false).unwrap();
        let want = PolyMatrix::from_rows(
            &fac.ring.vars,
            vec![vec![fac.ring.var(Y), -&fac.ring.var(Z)], vec![fac.ring.var(Z).pow(2), -&fac.ring.var(X)]],
        )
        .unwrap();
        assert_eq!(fac.r, want);
        assert!(verify_factorization(&fac.r, &fac.s, &fac.f).unwrap().holds());
    }

    #[test]
    fn a_deformed_limit() {
        let d = build_a_factorization(4, 2, true).unwrap();
        assert!(verify_factorization(&d.r, &d.s, &d.f).unwrap().holds());
        let r0 = d.r.map(|p| Ok(d.ring.at_origin(p))).unwrap();
        let p = build_a_factorization(4, 2, false).unwrap();
        let r0 = r0.map(|q| q.embed(&p.ring.vars)).unwrap();
        assert_eq!(r0, p.r);
    }

    #[test]
    fn d_plain_products() {
        for (n, m) in [(3, 1), (4, 2)] {
            let d = build_d_relations(n, m, false).unwrap();
            let s = d.s.as_ref().unwrap();
            let chk = verify_factorization(&d.r, s, &d.eqn).unwrap();
            assert!(chk.holds(), "n={n} m={m}: {:?}", chk.witness);
        }
        let d = build_d_relations(3, 1, false).unwrap();
        assert_eq!(d.eqn, parse("-X^2-Y^2*Z+Z^4", &d.ring.vars).unwrap());
    }

    #[test]
    fn d_deformed_small() {
        let d = build_d_relations(2, 1, true).unwrap();
        assert_eq!(d.eqn, d.versal_equation());
        assert_eq!(d.determinant_certificate().unwrap(), (true, true));
    }

    #[test]
    fn length3() {
        let l = build_length3_factorization().unwrap();
        assert!(verify_factorization(&l.phi, &l.psi, &l.g).unwrap().holds());
        assert!(verify_factorization(&l.a, &l.b, &l.f).unwrap().holds());
    }
}
