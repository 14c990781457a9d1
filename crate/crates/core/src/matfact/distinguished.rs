use super::ring::{MfRing, U, X, Y, Z};
use crate::error::{Error, Result};
use crate::polyring::Polynomial;

/// The polynomials attached to `f(U) = prod (U + t_i)` for a list of
/// parameter indices.
#[derive(Clone, Debug, PartialEq)]
pub struct Pieces {
    /// `f(U)`.
    pub f: Polynomial,
    /// `g(Z) = prod (Z + t_i^2)`.
    pub g: Polynomial,
    /// `f(U) = U P(-U^2) + Q(-U^2)`.
    pub p: Polynomial,
    pub q: Polynomial,
    /// `Q = S Z + delta`.
    pub s: Polynomial,
    /// `(g - delta^2) / Z`.
    pub h: Polynomial,
    /// `U P + Q = (Z + U^2) G + f`.
    pub gdiv: Polynomial,
    pub delta: Polynomial,
}

fn fail(what: &str) -> Error {
    Error::NotDivisible(what.to_string())
}

impl Pieces {
    pub fn build(r: &MfRing, ts: &[usize]) -> Result<Pieces> {
        let u = r.var(U);
        let z = r.var(Z);
        let mut f = r.int(1);
        let mut g = r.int(1);
        for &i in ts {
            let t = r.t(i);
            f = &f * &(&u + &t);
            g = &g * &(&z + &(&t * &t));
        }
        let mut p = r.int(0);
        let mut q = r.int(0);
        let minus_z = -&z;
        for (k, c) in f.collect(U) {
            let half = (k / 2) as u32;
            let term = &c * &minus_z.pow(half);
            if k % 2 == 0 {
                q = &q + &term;
            } else {
                p = &p + &term;
            }
        }
        let delta = r.at_origin_u(&f);
        let s = (&q - &delta).div_exact(&z).ok_or_else(|| fail("(Q - delta) / Z"))?;
        let h = (&g - &(&delta * &delta)).div_exact(&z).ok_or_else(|| fail("(g - delta^2) / Z"))?;
        let zu = &z + &(&u * &u);
        let gdiv = (&(&(&u * &p) + &q) - &f).div_exact(&zu).ok_or_else(|| fail("(UP + Q - f) / (Z + U^2)"))?;
        Ok(Pieces { f, g, p, q, s, h, gdiv, delta })
    }

    /// `g(-U^2) = f(U) f(-U)`, `g = Z P^2 + Q^2`, `Q = S Z + delta`,
    /// `h Z = g - delta^2` and `U P + Q = (Z + U^2) G + f`.
    pub fn identities_hold(&self, r: &MfRing) -> bool {
        let u = r.var(U);
        let z = r.var(Z);
        let g_neg = r.subst(&self.g, &[(Z, -&(&u * &u))]);
        let f_neg = r.subst(&self.f, &[(U, -&u)]);
        let lhs_ok = g_neg == &self.f * &f_neg;
        let sq_ok = self.g == &(&z * &(&self.p * &self.p)) + &(&self.q * &self.q);
        let q_ok = self.q == &(&self.s * &z) + &self.delta;
        let h_ok = &self.h * &z == &self.g - &(&self.delta * &self.delta);
        let zu = &z + &(&u * &u);
        let g_ok = &(&u * &self.p) + &self.q == &(&zu * &self.gdiv) + &self.f;
        lhs_ok && sq_ok && q_ok && h_ok && g_ok
    }

    /// `f(w)` for a polynomial `w` in place of `U`.
    pub fn f_at(&self, r: &MfRing, w: &Polynomial) -> Polynomial {
        r.subst(&self.f, &[(U, w.clone())])
    }

    /// `G(Z, w)`.
    pub fn gdiv_at(&self, r: &MfRing, w: &Polynomial) -> Polynomial {
        r.subst(&self.gdiv, &[(U, w.clone())])
    }
}

impl MfRing {
    fn at_origin_u(&self, f: &Polynomial) -> Polynomial {
        f.set_zero(&[U])
    }
}

/// All distinguished polynomials for `D_{n+2}` with split `m`: the full set
/// over `t1..t{n+2}`, the primed set over the first `n-m+1` parameters and
/// the double-primed set over the last `m+1`.
#[derive(Clone, Debug, PartialEq)]
pub struct DistinguishedPolys {
    pub n: usize,
    pub m: usize,
    pub ring: MfRing,
    pub full: Pieces,
    pub primed: Pieces,
    pub dprimed: Pieces,
}

pub fn distinguished(n: usize, m: usize) -> Result<DistinguishedPolys> {
    if n < 1 || m < 1 || m > n {
        return Err(Error::BadParameters(format!("need 1 <= m <= n, got n={n}, m={m}")));
    }
    distinguished_in(&MfRing::new(n + 2), n, m)
}

pub(crate) fn distinguished_in(ring: &MfRing, n: usize, m: usize) -> Result<DistinguishedPolys> {
    let all: Vec<usize> = (1..=n + 2).collect();
    let split = n - m + 1;
    let full = Pieces::build(ring, &all)?;
    let primed = Pieces::build(ring, &all[..split])?;
    let dprimed = Pieces::build(ring, &all[split..])?;
    let d = DistinguishedPolys { n, m, ring: ring.clone(), full, primed, dprimed };
    for (name, p) in [("full", &d.full), ("primed", &d.primed), ("double-primed", &d.dprimed)] {
        if !p.identities_hold(ring) {
            return Err(Error::NotDivisible(format!("{name} distinguished identities")));
        }
    }
    if !d.split_identity_holds() {
        return Err(Error::NotDivisible("h splitting".into()));
    }
    Ok(d)
}

impl DistinguishedPolys {
    /// `h = Z h' h'' + h' delta''^2 + h'' delta'^2` and `g = g' g''`.
    pub fn split_identity_holds(&self) -> bool {
        let z = self.ring.var(Z);
        let (a, b) = (&self.primed, &self.dprimed);
        let rhs = &(&(&z * &(&a.h * &b.h)) + &(&a.h * &(&b.delta * &b.delta))) + &(&b.h * &(&a.delta * &a.delta));
        self.full.h == rhs && self.full.g == &a.g * &b.g && self.full.delta == &a.delta * &b.delta
    }
}

/// Outcome of [`tyurina_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TyurinaReport {
    /// `(X+P)(X-P) + (Y-S)(YZ+SZ+2 delta) = X^2 + Y^2 Z - h + 2 delta Y`.
    pub factorization: bool,
    /// With `X - P = (Y-S) U` the equation is `(Y-S)` times the proper transform.
    pub blowup: bool,
    /// Proper transform `= (Z+U^2)(Y-S+2G) + 2f(U)`, so `Y~ Z~ = -2f` on it.
    pub proper_transform: bool,
    /// At `t = 0` the equation is `X^2 + Y^2 Z - Z^(n+1)`.
    pub undeformed: bool,
}

impl TyurinaReport {
    pub fn holds(&self) -> bool {
        self.factorization && self.blowup && self.proper_transform && self.undeformed
    }
}

/// Blow up `D_{n+2}` along `X - P = Y - S = 0` and identify the `A_{n+1}` node.
pub fn tyurina_check(n: usize) -> Result<TyurinaReport> {
    if n < 1 {
        return Err(Error::BadParameters("need n >= 1".into()));
    }
    let r = MfRing::new(n + 2);
    let all: Vec<usize> = (1..=n + 2).collect();
    let pc = Pieces::build(&r, &all)?;
    let (x, y, z, u) = (r.var(X), r.var(Y), r.var(Z), r.var(U));
    let two = r.int(2);
    let phi = &(&(&(&x * &x) + &(&(&y * &y) * &z)) - &pc.h) + &(&(&two * &pc.delta) * &y);
    let ys = &y - &pc.s;
    let second = &(&(&y * &z) + &(&pc.s * &z)) + &(&two * &pc.delta);
    let factorization = &(&(&x + &pc.p) * &(&x - &pc.p)) + &(&ys * &second) == phi;
    let x_sub = &pc.p + &(&ys * &u);
    let transform = &(&(&x + &pc.p) * &u) + &second;
    let transform = r.subst(&transform, &[(X, x_sub.clone())]);
    let blowup = r.subst(&phi, &[(X, x_sub)]) == &ys * &transform;
    let zt = &z + &(&u * &u);
    let yt = &ys + &(&two * &pc.gdiv);
    let proper_transform = transform == &(&zt * &yt) + &(&two * &pc.f);
    let undeformed = r.at_origin(&phi) == &(&(&x * &x) + &(&(&y * &y) * &z)) - &z.pow(n as u32 + 1);
    Ok(TyurinaReport { factorization, blowup, proper_transform, undeformed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse;

    #[test]
    fn n1_g_expansion() {
        let d = distinguished(1, 1).unwrap();
        let r = &d.ring;
        let want =
            parse("Z^3 + (t1^2+t2^2+t3^2)*Z^2 + (t1^2*t2^2+t1^2*t3^2+t2^2*t3^2)*Z + t1^2*t2^2*t3^2", &r.vars).unwrap();
        assert_eq!(d.full.g, want);
        assert_eq!(d.full.delta, parse("t1*t2*t3", &r.vars).unwrap());
    }

    #[test]
    fn origin_table() {
        for n in 1..=4usize {
            let d = distinguished(n, 1).unwrap();
            let r = &d.ring;
            let z = r.var(Z);
            let k = ((n + 2) / 2) as u32;
            let (p, q) = match n % 4 {
                0 => (r.int(0), -z.pow(k)),
                1 => (-z.pow(((n + 1) / 2) as u32), r.int(0)),
                2 => (r.int(0), z.pow(k)),
                _ => (z.pow(((n + 1) / 2) as u32), r.int(0)),
            };
            assert_eq!(r.at_origin(&d.full.p), p, "n={n}");
            assert_eq!(r.at_origin(&d.full.q), q, "n={n}");
            assert_eq!(r.at_origin(&d.primed.h), z.pow((n - 1) as u32));
        }
    }

    #[test]
    fn tyurina_small() {
        for n in 1..=2 {
            let t = tyurina_check(n).unwrap();
            assert!(t.holds(), "n={n}: {t:?}");
        }
    }
}
