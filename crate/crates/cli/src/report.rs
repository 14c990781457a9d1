//! Serializable reports and their text rendering.

use std::fmt::Write as _;

use blowdown_core::blowdown::{
    chart_round_trip, BlowdownResult, ChartInverse, CoordSolution, RoundTrip, TransitionIdeal,
};
use blowdown_core::cases::{Case, VerifyReport};
use blowdown_core::Result;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GhfOut {
    pub degree: i64,
    pub beta_chart: String,
    pub gamma_chart: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CoordOut {
    pub coord: String,
    /// `None` when the coordinate could not be solved.
    pub numerator: Option<String>,
    pub denominator: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RoundTripOut {
    pub beta_identity: bool,
    pub transition: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ChartsOut {
    pub beta: Vec<CoordOut>,
    pub gamma: Vec<CoordOut>,
    pub round_trip: Option<RoundTripOut>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RunReport {
    pub case: String,
    pub k: Option<u32>,
    pub weights: [i64; 6],
    pub max_degree: i64,
    pub ghfs: Vec<GhfOut>,
    pub relations: Vec<String>,
    pub charts: ChartsOut,
    /// Registry classification: `complete`, `partial`, or `unverified` for
    /// parameters without reference data.
    pub status: String,
}

fn coords(c: &ChartInverse) -> Vec<CoordOut> {
    c.coords
        .iter()
        .map(|(name, s)| match s {
            CoordSolution::Solved { num, den, .. } => {
                CoordOut { coord: name.clone(), numerator: Some(num.to_string()), denominator: Some(den.to_string()) }
            }
            CoordSolution::Unsolved => CoordOut { coord: name.clone(), numerator: None, denominator: None },
        })
        .collect()
}

impl RunReport {
    pub fn build(case: &Case, max_degree: i64, r: &BlowdownResult) -> Result<RunReport> {
        let rt: Option<RoundTrip> = if r.beta_chart.is_complete() && r.gamma_chart.is_complete() {
            let ideal = TransitionIdeal::build(&case.spec)?;
            Some(chart_round_trip(&ideal, &r.ghfs, &r.beta_chart, &r.gamma_chart)?)
        } else {
            None
        };
        Ok(RunReport {
            case: case.name.to_string(),
            k: case.k,
            weights: r.weights,
            max_degree,
            ghfs: r
                .ghfs
                .iter()
                .map(|g| GhfOut { degree: g.degree, beta_chart: g.beta.to_string(), gamma_chart: g.gamma.to_string() })
                .collect(),
            relations: r.relations.iter().map(|p| p.to_string()).collect(),
            charts: ChartsOut {
                beta: coords(&r.beta_chart),
                gamma: coords(&r.gamma_chart),
                round_trip: rt.map(|t| RoundTripOut { beta_identity: t.beta_identity, transition: t.transition }),
            },
            status: case.golden.as_ref().map_or_else(|| "unverified".to_string(), |g| g.status.to_string()),
        })
    }

    pub fn text(&self, label: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "case {label}");
        let _ = writeln!(s, "weights {}", fmt_weights(&self.weights));
        let _ = writeln!(s, "max degree {}", self.max_degree);
        let _ = writeln!(s, "global functions: {}", self.ghfs.len());
        for (i, g) in self.ghfs.iter().enumerate() {
            let _ = writeln!(s, "  y{} [{}] = {}", i + 1, g.degree, g.beta_chart);
            let _ =
                writeln!(s, "  {:width$}= {}", "", g.gamma_chart, width = format!("y{} [{}] ", i + 1, g.degree).len());
        }
        let _ = writeln!(s, "relations: {}", self.relations.len());
        for r in &self.relations {
            let _ = writeln!(s, "  {r} = 0");
        }
        for (name, cs) in [("beta", &self.charts.beta), ("gamma", &self.charts.gamma)] {
            let _ = writeln!(s, "{name} chart:");
            for c in cs {
                match (&c.numerator, &c.denominator) {
                    (Some(n), Some(d)) if d == "1" => {
                        let _ = writeln!(s, "  {} = {n}", c.coord);
                    }
                    (Some(n), Some(d)) => {
                        let _ = writeln!(s, "  {} = ({n})/({d})", c.coord);
                    }
                    _ => {
                        let _ = writeln!(s, "  {} unsolved", c.coord);
                    }
                }
            }
        }
        if let Some(rt) = &self.charts.round_trip {
            let _ = writeln!(s, "round trip: beta identity {}, transition {}", pf(rt.beta_identity), pf(rt.transition));
        }
        let _ = writeln!(s, "status {}", self.status);
        s
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CheckOut {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerifyOut {
    pub case: String,
    pub k: Option<u32>,
    pub weights: [i64; 6],
    pub checks: Vec<CheckOut>,
    pub run: Option<RunReport>,
    pub status: String,
}

impl VerifyOut {
    pub fn build(case: &Case, max_degree: i64, v: &VerifyReport) -> Result<VerifyOut> {
        let run = v.run.as_ref().map(|r| RunReport::build(case, max_degree, r)).transpose()?;
        Ok(VerifyOut {
            case: case.name.to_string(),
            k: case.k,
            weights: case.weights()?,
            checks: v
                .checks
                .iter()
                .map(|c| CheckOut { name: c.name.clone(), passed: c.passed, detail: c.detail.clone() })
                .collect(),
            run,
            status: pf(v.passed()).into(),
        })
    }

    pub fn text(&self, label: &str) -> String {
        let mut s = format!("verify {label}\n");
        for c in &self.checks {
            let _ = write!(s, "  [{}] {}", pf(c.passed), c.name);
            if !c.detail.is_empty() {
                let _ = write!(s, " ({})", c.detail);
            }
            s.push('\n');
        }
        let _ = writeln!(s, "status {}", self.status);
        s
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WeightsOut {
    pub case: String,
    pub k: Option<u32>,
    /// Weights on `b, v1, v2, g, w1, w2`.
    pub weights: [i64; 6],
    /// Basis of the lattice of gradings.
    pub lattice: Vec<[i64; 6]>,
}

impl WeightsOut {
    pub fn text(&self) -> String {
        let mut s = format!("weights (b, v1, v2, g, w1, w2) = {}\n", fmt_weights(&self.weights));
        if self.lattice.len() > 1 {
            let _ = writeln!(s, "lattice rank {}:", self.lattice.len());
            for l in &self.lattice {
                let _ = writeln!(s, "  {}", fmt_weights(l));
            }
        }
        s
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SuperpotentialOut {
    pub fields: usize,
    pub superpotential: String,
    pub pterm: String,
    /// The pterm after exchanging the two fields.
    pub swapped: Option<String>,
}

impl SuperpotentialOut {
    pub fn text(&self) -> String {
        let mut s = format!("W = {}\npterm = {}\n", self.superpotential, self.pterm);
        if let Some(sw) = &self.swapped {
            let _ = writeln!(s, "swapped = {sw}");
        }
        s
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MatfactOut {
    pub family: String,
    pub checks: Vec<CheckOut>,
    pub status: String,
}

impl MatfactOut {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn text(&self) -> String {
        let mut s = format!("matfact {}\n", self.family);
        for c in &self.checks {
            let _ = writeln!(s, "  [{}] {}", pf(c.passed), c.name);
        }
        let _ = writeln!(s, "status {}", self.status);
        s
    }
}

pub fn pf(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

pub fn fmt_weights(w: &[i64; 6]) -> String {
    let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}
