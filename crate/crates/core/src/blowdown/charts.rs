use std::sync::Arc;

use num_traits::One;

use super::ideal::TransitionIdeal;
use super::search::{lift_ring, y_ring, Ghf};
use crate::error::Result;
use crate::groebner::{buchberger, TermOrder};
use crate::polyring::{map_rational, Coeff, Image, Monomial, Polynomial, VarTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chart {
    Beta,
    Gamma,
}

impl Chart {
    pub fn coords(self) -> [&'static str; 3] {
        match self {
            Chart::Beta => ["b", "v1", "v2"],
            Chart::Gamma => ["g", "w1", "w2"],
        }
    }
}

/// A chart coordinate as a fraction of `y` polynomials.
#[derive(Clone, Debug, PartialEq)]
pub enum CoordSolution {
    Solved {
        /// `num / den` over the chart coordinates solved earlier and the `y`s.
        local: (Polynomial, Polynomial),
        /// `num / den` in the `y`s only.
        num: Polynomial,
        den: Polynomial,
    },
    Unsolved,
}

impl CoordSolution {
    pub fn is_solved(&self) -> bool {
        matches!(self, CoordSolution::Solved { .. })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChartInverse {
    pub chart: Chart,
    /// Same order as [`Chart::coords`].
    pub coords: Vec<(String, CoordSolution)>,
}

impl ChartInverse {
    pub fn is_complete(&self) -> bool {
        self.coords.iter().all(|(_, s)| s.is_solved())
    }

    /// `(num, den)` pairs in the `y` ring, if all coordinates are solved.
    pub fn fractions(&self) -> Option<Vec<(Polynomial, Polynomial)>> {
        self.coords
            .iter()
            .map(|(_, s)| match s {
                CoordSolution::Solved { num, den, .. } => Some((num.clone(), den.clone())),
                CoordSolution::Unsolved => None,
            })
            .collect()
    }
}

/// Drop a common monomial factor and make the denominator monic in its
/// largest term; cancel the denominator entirely when it divides.
fn tidy(num: Polynomial, den: Polynomial) -> (Polynomial, Polynomial) {
    let ring = den.vars().clone();
    if num.is_zero() {
        return (num, Polynomial::one(&ring));
    }
    if let Some(q) = num.div_exact(&den) {
        return (q, Polynomial::one(&ring));
    }
    let n = ring.len();
    let mut common: Vec<i32> = vec![i32::MAX; n];
    for (m, _) in num.terms().chain(den.terms()) {
        for (c, &e) in common.iter_mut().zip(&m.0) {
            *c = (*c).min(e);
        }
    }
    let (mut num, mut den) = (num, den);
    if common.iter().any(|&c| c > 0) {
        let inv = Monomial(common.iter().map(|&c| -c).collect());
        num = num.mul_monomial(&inv, &Coeff::one());
        den = den.mul_monomial(&inv, &Coeff::one());
    }
    // cancel a shared polynomial factor when one side divides the other
    if let Some(q) = den.div_exact(&num) {
        return (Polynomial::one(&ring), q);
    }
    let lc = den.max_term().map(|(_, c)| c.clone()).unwrap_or_else(Coeff::one);
    if !lc.is_one() {
        let inv = lc.inv();
        num = num.scale(&inv);
        den = den.scale(&inv);
    }
    (num, den)
}

/// Solve the chart coordinates as fractions of the global functions.
pub fn invert_chart(ghfs: &[Ghf], chart: Chart) -> Result<ChartInverse> {
    let n = ghfs.len();
    let coords = chart.coords();
    let ring = lift_ring(coords, n);
    let ys = y_ring(n);
    let mut coord_out: Vec<(String, CoordSolution)> =
        coords.iter().map(|c| (c.to_string(), CoordSolution::Unsolved)).collect();
    if n == 0 {
        return Ok(ChartInverse { chart, coords: coord_out });
    }
    // chart variables sit at 0..3 in both the lift ring and the chart ring slice
    let offset = match chart {
        Chart::Beta => 0,
        Chart::Gamma => 3,
    };
    let mut images: Vec<Image> = (0..6).map(|_| Image::of(Polynomial::zero(&ring))).collect();
    for i in 0..3 {
        images[offset + i] = Image::of(Polynomial::var_index(&ring, i));
    }
    let mut gens = Vec::with_capacity(n);
    for (i, g) in ghfs.iter().enumerate() {
        let f = match chart {
            Chart::Beta => &g.beta,
            Chart::Gamma => &g.gamma,
        };
        gens.push(&Polynomial::var_index(&ring, 3 + i) - &f.map_into(&ring, &images)?);
    }
    let degs: Vec<i64> = ghfs.iter().map(|g| g.degree).collect();
    // [v2, v1] > [b] > y's (resp. [w2, w1] > [g] > y's); a full lex split
    // of the chart variables is far slower on the gamma side
    let order = TermOrder::Block(vec![
        (vec![2, 1], TermOrder::Grevlex),
        (vec![0], TermOrder::Grevlex),
        ((3..3 + n).collect(), TermOrder::weighted(degs, TermOrder::Grevlex)),
    ]);
    let gb = buchberger(&gens, &order)?;

    // y-ring images of the chart variables solved so far
    let mut resolved: Vec<(Polynomial, Polynomial)> = Vec::new();
    for c in 0..3 {
        let allowed = |v: usize| v == c || v < c || v >= 3;
        let cand = gb
            .generators()
            .iter()
            .filter(|p| p.support().iter().all(|&v| allowed(v)) && p.degree_in(c) == Some(1))
            .min_by_key(|p| p.len());
        let Some(p) = cand else { break };
        let a = p.laurent_coeff(c, 1);
        let b = p.laurent_coeff(c, 0);
        if a.is_zero() {
            break;
        }
        let local = (-&b, a.clone());
        // rewrite in y only: earlier chart variables go to their fractions
        let mut imgs: Vec<(Polynomial, Polynomial)> = Vec::with_capacity(3 + n);
        for j in 0..3 {
            imgs.push(if j < c { resolved[j].clone() } else { (Polynomial::zero(&ys), Polynomial::one(&ys)) });
        }
        for j in 0..n {
            imgs.push((Polynomial::var_index(&ys, j), Polynomial::one(&ys)));
        }
        let (na, da) = map_rational(&a, &ys, &imgs)?;
        let (nb, db) = map_rational(&b, &ys, &imgs)?;
        let (num, den) = tidy(-&(&nb * &da), &db * &na);
        resolved.push((num.clone(), den.clone()));
        coord_out[c].1 = CoordSolution::Solved { local, num, den };
    }
    Ok(ChartInverse { chart, coords: coord_out })
}

/// Outcome of blowing the charts back up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTrip {
    /// `b, v1, v2` recovered from the `y`s evaluated on the beta chart.
    pub beta_identity: bool,
    /// The gamma solution, pulled back to the beta chart, satisfies every
    /// transition generator.
    pub transition: bool,
}

impl RoundTrip {
    pub fn passed(&self) -> bool {
        self.beta_identity && self.transition
    }
}

/// Substitute `y_i -> ghf_i` (in `b, v1, v2`) into fractions of `y`s.
fn pull_back(
    fr: &[(Polynomial, Polynomial)],
    ghfs: &[Ghf],
    target: &Arc<VarTable>,
) -> Result<Vec<(Polynomial, Polynomial)>> {
    let images: Vec<Image> = ghfs.iter().map(|g| Image::of(g.beta.clone())).collect();
    fr.iter().map(|(n, d)| Ok((n.map_into(target, &images)?, d.map_into(target, &images)?))).collect()
}

/// Re-substitute both chart inverses and check the transition functions.
pub fn chart_round_trip(
    ideal: &TransitionIdeal,
    ghfs: &[Ghf],
    beta: &ChartInverse,
    gamma: &ChartInverse,
) -> Result<RoundTrip> {
    let vars = ideal.vars.clone();
    let (Some(bf), Some(gf)) = (beta.fractions(), gamma.fractions()) else {
        return Ok(RoundTrip { beta_identity: false, transition: false });
    };
    let bf = pull_back(&bf, ghfs, &vars)?;
    let gf = pull_back(&gf, ghfs, &vars)?;
    let mut beta_identity = true;
    for (i, (n, d)) in bf.iter().enumerate() {
        if d.is_zero() || &(&Polynomial::var_index(&vars, i) * d) - n != Polynomial::zero(&vars) {
            beta_identity = false;
        }
    }
    let mut images: Vec<(Polynomial, Polynomial)> =
        (0..3).map(|i| (Polynomial::var_index(&vars, i), Polynomial::one(&vars))).collect();
    images.extend(gf.iter().cloned());
    let mut transition = gf.iter().all(|(_, d)| !d.is_zero());
    for g in &ideal.generators {
        let (num, _) = map_rational(g, &vars, &images)?;
        if !num.is_zero() {
            transition = false;
        }
    }
    Ok(RoundTrip { beta_identity, transition })
}
