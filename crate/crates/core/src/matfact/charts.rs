use super::families::{a_factors, build_d_relations, DRelations};
use super::plucker::{grassmannian_residue, row_pair_minors, RowPair};
use super::ring::{MfRing, ALPHA, EPS, MU, NU, PHI, X, Y, Z};
use crate::error::{Error, Result};
use crate::polyring::Polynomial;

/// Families whose blowup charts [`residual_chart_checks`] knows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidualFamily {
    A { n: usize, m: usize, deformed: bool },
    DPlain { n: usize, m: usize },
    DDeformed { n: usize, m: usize },
}

/// Individual chart identities, by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartReport {
    pub checks: Vec<(&'static str, bool)>,
}

impl ChartReport {
    pub fn holds(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|(_, ok)| *ok)
    }
}

pub fn residual_chart_checks(family: ResidualFamily) -> Result<ChartReport> {
    match family {
        ResidualFamily::A { n, m, deformed } => a_charts(n, m, deformed),
        ResidualFamily::DPlain { n, m } => d_plain_charts(n, m),
        ResidualFamily::DDeformed { n, m } => d_deformed_charts(n, m),
    }
}

fn a_charts(n: usize, m: usize, deformed: bool) -> Result<ChartReport> {
    if n < 2 || m < 1 || m >= n {
        return Err(Error::BadParameters(format!("need 1 <= m <= n-1, got n={n}, m={m}")));
    }
    let r = MfRing::new(if deformed { n - 1 } else { 0 });
    let (f1, f2) = a_factors(&r, n, m, deformed);
    let (x, y, z, mu, nu) = (r.var(X), r.var(Y), r.var(Z), r.var(MU), r.var(NU));
    let f = &(&x * &y) - &(&f1 * &f2);
    // mu = 1: Y = nu f'', proper transform X nu - f'
    let t1 = &(&x * &nu) - &f1;
    let mu_chart = r.subst(&f, &[(Y, &nu * &f2)]) == &f2 * &t1;
    // nu = 1: X = mu f', proper transform mu Y - f''
    let t2 = &(&mu * &y) - &f2;
    let nu_chart = r.subst(&f, &[(X, &mu * &f1)]) == &f1 * &t2;
    let a_left = r.at_origin(&t1) == &(&x * &nu) - &z.pow((n - m) as u32);
    let a_right = r.at_origin(&t2) == &(&mu * &y) - &z.pow(m as u32);
    Ok(ChartReport {
        checks: vec![
            ("mu=1 factors through X nu - f'", mu_chart),
            ("nu=1 factors through mu Y - f''", nu_chart),
            ("mu=1 is A_{n-m-1}", a_left),
            ("nu=1 is A_{m-1}", a_right),
        ],
    })
}

fn d_plain_charts(n: usize, m: usize) -> Result<ChartReport> {
    let d = build_d_relations(n, m, false)?;
    let r = &d.ring;
    let minors = row_pair_minors(&d.r, RowPair::Top)?;
    let (al, ep, ph) = (minors.alpha(), minors.eps(), minors.phi());
    let (y, z) = (r.var(Y), r.var(Z));
    let (a1, e1) = (r.var(ALPHA), r.var(EPS));
    let znm = z.pow((n - m) as u32);
    let grass = grassmannian_residue(al, ep, ph, &d.context).is_zero();
    let odd = m % 2 == 1;
    let k = if odd { (m + 1) / 2 } else { m / 2 } as u32;
    // linear relation among minors, homogeneous form
    let lin_hom = if odd { &(&z.pow(k) * ph) + &(ep * &y) } else { &(&z.pow(k) * al) + &(ep * &y) };
    // phi = 1 chart equation and G
    let sgn = if odd { r.int(1) } else { r.int(-1) };
    let chart = &(&(&a1 * &a1) - &z) + &(&sgn * &(&(&e1 * &e1) * &znm));
    let top = if odd { &z.pow(k) - &a1.pow(m as u32 + 1) } else { &z.pow(k) - &a1.pow(m as u32) };
    let zq = &z - &(&a1 * &a1);
    let g = top.div_exact(&zq).ok_or_else(|| Error::NotDivisible("G for the phi = 1 chart".into()))?;
    let lhs = -&a1.pow(m as u32 + 1);
    let identity = if odd {
        let lin = &z.pow(k) + &(&e1 * &y);
        let rhs = &e1 * &(&y + &(&(&e1 * &znm) * &g));
        &(&(&lhs - &rhs) + &(&chart * &g)) + &lin
    } else {
        let lin = &(&a1 * &z.pow(k)) + &(&e1 * &y);
        let rhs = &e1 * &(&y - &(&(&(&a1 * &e1) * &znm) * &g));
        &(&(&lhs - &rhs) + &(&(&a1 * &g) * &chart)) + &lin
    };
    // eps = 1 chart: the Grassmannian relation with eps = 1
    let eps_chart = eps_one_chart(&d, &r.var(ALPHA), &r.var(PHI));
    let expect_eps = &(&(&a1 * &a1) - &(&(&r.var(PHI) * &r.var(PHI)) * &z)) + &(&sgn * &znm);
    Ok(ChartReport {
        checks: vec![
            ("grassmannian relation", grass),
            ("linear minor relation", lin_hom.is_zero()),
            ("phi=1 reduces to A_m", identity.is_zero()),
            ("eps=1 is D_{n-m+1}", eps_chart == expect_eps),
        ],
    })
}

/// `alpha^2 - phi^2 Z + (-1)^(m+1) h' + 2 i^(m+1) delta' phi`.
fn eps_one_chart(d: &DRelations, a2: &Polynomial, p2: &Polynomial) -> Polynomial {
    let r = &d.ring;
    let c = &d.context;
    let m = d.m as i64;
    let two = r.int(2);
    let base = &(&(a2 * a2) - &(&(p2 * p2) * &c.z)) + &(&r.ipow(2 * (m + 1)) * &c.h1);
    &base + &(&(&two * &r.ipow(m + 1)) * &(&c.delta1 * p2))
}

fn d_deformed_charts(n: usize, m: usize) -> Result<ChartReport> {
    let d = build_d_relations(n, m, true)?;
    let r = &d.ring;
    let c = &d.context;
    let dp = d.distinguished.as_ref().expect("deformed");
    let minors = row_pair_minors(&d.r, RowPair::Top)?;
    let (al, ep, ph) = (minors.alpha(), minors.eps(), minors.phi());
    let mut checks = vec![("grassmannian relation", grassmannian_residue(al, ep, ph, c).is_zero())];
    // eps = 1: substitute the chart into the homogeneous relation
    let (a, e, p) = (r.var(ALPHA), r.var(EPS), r.var(PHI));
    let hom = grassmannian_residue(&a, &e, &p, c);
    let hom = &hom - &(&c.eqn * &p);
    let eps_chart = r.subst(&hom, &[(EPS, r.int(1))]);
    checks.push(("eps=1 chart", eps_chart == eps_one_chart(&d, &a, &p)));
    if m % 2 == 0 {
        let mi = m as i64;
        let (p2, q2) = (&dp.dprimed.p, &dp.dprimed.q);
        let yt = -d.r.get(0, 2);
        let y = r.var(Y);
        let z = &c.z;
        let i = r.ipow(1);
        // i alpha P'' + Q'' phi = i^(m+3) Y~ eps
        let lin_hom = &(&(&(&i * al) * p2) + &(q2 * ph)) - &(&(&r.ipow(mi + 3) * &yt) * ep);
        checks.push(("linear minor relation", lin_hom.is_zero()));
        let w = &i * &a;
        let g2 = dp.dprimed.gdiv_at(r, &w);
        let f2 = dp.dprimed.f_at(r, &w);
        let gdiv_ok = &(&w * p2) + q2 == &(&(z - &(&a * &a)) * &g2) + &f2;
        checks.push(("G'' division", gdiv_ok));
        let chart = r.subst(&hom, &[(PHI, r.int(1))]);
        let coef = &(&r.ipow(2 * (mi + 1)) * &(&c.h1 * &e)) + &(&(&r.int(2) * &r.ipow(mi + 1)) * &c.delta1);
        let yhat = &(&r.ipow(mi + 3) * &y) - &(&coef * &g2);
        let lin = &(&(&(&i * &a) * p2) + q2) - &(&(&r.ipow(mi + 3) * &y) * &e);
        let identity = &(&(&(&e * &yhat) - &f2) + &lin) + &(&chart * &g2);
        checks.push(("phi=1 reduces to A_m", identity.is_zero()));
    }
    Ok(ChartReport { checks })
}
