//! Builtin cases: the registry of perturbation terms, reference data for
//! each case and the verification runner that compares a search against it.

use std::fmt;
use std::sync::Arc;

use crate::blowdown::{
    chart_degree, chart_ring, chart_round_trip, relation_residue, resolve_weights, run_case, y_ring, BlowdownResult,
    Ghf, RoundTrip, RunOptions, Subalgebra, TransitionIdeal,
};
use crate::error::{Error, Result};
use crate::ferrari::{parse_pterm, CaseSpec, WeightAssignment};
use crate::groebner::{buchberger, GroebnerBasis, TermOrder};
use crate::polyring::{parse, Image, Polynomial, VarTable};

/// Registry names with their perturbation terms, verbatim. `k` is the case parameter.
pub const REGISTRY: [(&str, &str); 9] = [
    ("Ohat", "0"),
    ("Ahat", "g^2*w[1]"),
    ("Dhat", "g*w[1]^2"),
    ("Ehat", "g^2*w[1]^2"),
    ("Ak", "g^2*w[1]^k + w[1]"),
    ("Dk", "g^2*w[1]^k + w[1]^2"),
    ("E6", "b*w[1]^2 + g^2*w[1]^3"),
    ("E7", "b*w[1]^2 + g*w[1]^3"),
    ("E8", "b*w[1]^2 + g^2*w[1]^4"),
];

/// Parameter range covered by the reference data.
pub const AK_RANGE: std::ops::RangeInclusive<u32> = 1..=4;
pub const DK_RANGE: std::ops::RangeInclusive<u32> = 2..=4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Generators and relations are known in full.
    Complete,
    /// Only a prefix of the generators and some relations are known.
    Partial,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Complete => "complete",
            Status::Partial => "partial",
        })
    }
}

/// Free weight parameters for the hat cases. `d` is the weight of `w1`,
/// `e` the weight of `w2` (only used by `Ohat`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct WeightPick {
    pub d: Option<i64>,
    pub e: Option<i64>,
}

impl WeightPick {
    /// Parse `d=3` or `e=4`, merging into `self`.
    pub fn set(&mut self, s: &str) -> Result<()> {
        let (k, v) =
            s.split_once('=').ok_or_else(|| Error::BadParameters(format!("weight pick `{s}` is not key=value")))?;
        let v: i64 =
            v.trim().parse().map_err(|_| Error::BadParameters(format!("weight pick `{s}`: not an integer")))?;
        match k.trim() {
            "d" => self.d = Some(v),
            "e" => self.e = Some(v),
            _ => return Err(Error::BadParameters(format!("weight pick `{s}`: expected d or e"))),
        }
        Ok(())
    }
}

/// Reference generators and relations for a case.
#[derive(Clone, Debug)]
pub struct GoldenData {
    pub weights: WeightAssignment,
    /// Generators in `b, v1, v2` with their degrees under `weights`.
    pub ghfs: Vec<(i64, Polynomial)>,
    /// Relations in `y1..yN`, `y_i` standing for `ghfs[i-1]`.
    pub relations: Vec<Polynomial>,
    /// Whether `relations` generate the whole relation ideal.
    pub relations_complete: bool,
    pub status: Status,
}

/// A resolved registry entry.
#[derive(Clone, Debug)]
pub struct Case {
    pub name: &'static str,
    pub k: Option<u32>,
    pub spec: CaseSpec,
    pub weight_pick: Option<WeightAssignment>,
    pub default_max_degree: i64,
    pub golden: Option<GoldenData>,
}

impl Case {
    /// `A2`, `D5`, `Ehat`.
    pub fn label(&self) -> String {
        match (self.name, self.k) {
            ("Ak", Some(k)) => format!("A{k}"),
            ("Dk", Some(k)) => format!("D{}", k + 2),
            (n, _) => n.to_string(),
        }
    }

    pub fn weights(&self) -> Result<WeightAssignment> {
        resolve_weights(&self.spec, self.weight_pick)
    }

    pub fn run_options(&self, max_degree: Option<i64>) -> RunOptions {
        let mut o = RunOptions::new(max_degree.unwrap_or(self.default_max_degree));
        o.weights = self.weight_pick;
        o
    }
}

pub fn names() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|(n, _)| *n)
}

/// The registry pterm for `name`, with `k` still symbolic.
pub fn pterm_source(name: &str) -> Option<&'static str> {
    REGISTRY.iter().find(|(n, _)| n.eq_ignore_ascii_case(name)).map(|(_, p)| *p)
}

/// Look up a case. `k` is required for `Ak` and `Dk` and rejected otherwise.
pub fn lookup(name: &str, k: Option<u32>, pick: WeightPick) -> Result<Case> {
    let (name, src) = REGISTRY
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .copied()
        .ok_or_else(|| Error::UnknownCase(name.to_string()))?;
    let takes_k = matches!(name, "Ak" | "Dk");
    match (takes_k, k) {
        (true, None) => return Err(Error::BadParameters(format!("case {name} needs k"))),
        (false, Some(_)) => return Err(Error::BadParameters(format!("case {name} takes no k"))),
        (true, Some(0)) => return Err(Error::BadParameters("k must be positive".into())),
        (true, Some(1)) if name == "Dk" => return Err(Error::BadParameters("Dk needs k >= 2".into())),
        _ => {}
    }
    let is_hat = name.ends_with("hat");
    if !is_hat && (pick.d.is_some() || pick.e.is_some()) {
        return Err(Error::BadParameters(format!("case {name} has a unique grading; no weight pick")));
    }
    if pick.e.is_some() && name != "Ohat" {
        return Err(Error::BadParameters("e= only applies to Ohat".into()));
    }
    let src_k = match k {
        Some(k) => src.replace('k', &k.to_string()),
        None => src.to_string(),
    };
    let spec = CaseSpec::two_field(name, parse_pterm(&src_k)?);
    let weight_pick = if is_hat { Some(hat_weights(name, pick)?) } else { None };
    let golden = golden(name, k, weight_pick)?;
    let default_max_degree = default_max_degree(name, k, &spec, weight_pick, golden.as_ref())?;
    Ok(Case { name, k, spec, weight_pick, default_max_degree, golden })
}

fn hat_weights(name: &str, pick: WeightPick) -> Result<WeightAssignment> {
    let w = match name {
        "Ohat" => {
            let (d, e) = (pick.d.unwrap_or(0), pick.e.unwrap_or(4));
            [1, d + 1, e - 3, -1, d, e]
        }
        "Ahat" => {
            let d = pick.d.unwrap_or(3);
            [1, d + 1, d - 2, -1, d, d + 1]
        }
        "Dhat" => {
            let d = pick.d.unwrap_or(1);
            [1, d + 1, 2 * d - 1, -1, d, 2 * d + 2]
        }
        _ => {
            let d = pick.d.unwrap_or(2);
            [1, d + 1, 2 * d - 2, -1, d, 2 * d + 1]
        }
    };
    if w[..3].iter().any(|&x| x <= 0) {
        return Err(Error::BadParameters(format!("weight pick gives {w:?}; b, v1, v2 need positive weights")));
    }
    Ok(w)
}

fn default_max_degree(
    name: &str,
    k: Option<u32>,
    spec: &CaseSpec,
    pick: Option<WeightAssignment>,
    golden: Option<&GoldenData>,
) -> Result<i64> {
    match name {
        "E6" => return Ok(29),
        "E8" => return Ok(26),
        "E7" => return Ok(30),
        _ => {}
    }
    let Some(g) = golden else { return Ok(2 * k.unwrap_or(1) as i64 + 8) };
    let w = resolve_weights(spec, pick)?;
    let top = g.ghfs.iter().filter_map(|(_, p)| chart_degree(p, &w)).max().unwrap_or(1);
    Ok(2 * top.max(1))
}

fn chart(s: &str) -> Polynomial {
    parse(s, &chart_ring()).expect("reference generator parses")
}

fn ys(n: usize, s: &str) -> Polynomial {
    parse(s, &y_ring(n)).expect("reference relation parses")
}

/// Reference data. `Ak`, `Dk` only within [`AK_RANGE`], [`DK_RANGE`].
pub fn golden(name: &str, k: Option<u32>, pick: Option<WeightAssignment>) -> Result<Option<GoldenData>> {
    let g = match name {
        "Ak" => {
            let k = k.unwrap_or(0);
            if !AK_RANGE.contains(&k) {
                return Ok(None);
            }
            let ki = k as i64;
            let y4 =
                if k == 1 { "v1 - b^3*v2 + b^2*v1".to_string() } else { format!("v2^{}*v1 - b^3*v2 + b^2*v1", k - 1) };
            GoldenData {
                weights: [ki - 1, ki + 1, 2, 1 - ki, 2, 3 * ki - 1],
                ghfs: vec![
                    (2, chart("v2")),
                    (ki + 1, chart("b*v2 - v1")),
                    (2 * ki, chart("b^2*v2 - b*v1")),
                    (3 * ki - 1, chart(&y4)),
                ],
                relations: vec![ys(4, &format!("y2*y4 + y3^2 + y2^2*y1^{} - y3*y1^{k}", k - 1))],
                relations_complete: true,
                status: Status::Complete,
            }
        }
        "Dk" => {
            let k = k.unwrap_or(0);
            if !DK_RANGE.contains(&k) {
                return Ok(None);
            }
            let ki = k as i64;
            let (x, y) = ("v2", "(b^2*v2 - v1^2)");
            let (z, u, rel) = if k % 2 == 0 {
                let h = format!("({x}^{} - {y})", k / 2);
                (format!("b*{h}"), format!("v1*{h}"), format!("y4^2 - y1*y3^2 + y2*(y1^{} - y2)^2", k / 2))
            } else {
                (
                    format!("v1*{x}^{} - b*{y}", k / 2),
                    format!("b*{x}^{} - v1*{y}", k / 2 + 1),
                    format!("y4^2 - y1*y3^2 - y2*(y1^{k} - y2^2)"),
                )
            };
            GoldenData {
                weights: [ki - 2, ki, 4, 2 - ki, 2, 3 * ki - 2],
                ghfs: vec![(4, chart(x)), (2 * ki, chart(y)), (3 * ki - 2, chart(&z)), (3 * ki, chart(&u))],
                relations: vec![ys(4, &rel)],
                relations_complete: true,
                status: Status::Complete,
            }
        }
        "E7" => {
            let x = "(b*v2 - v1^2)";
            GoldenData {
                weights: [1, 3, 5, -1, 2, 8],
                ghfs: vec![
                    (6, chart(x)),
                    (8, chart(&format!("v1*v2 - b^2*{x}"))),
                    (10, chart(&format!("v2^2 - b*v1*{x}"))),
                    (15, chart(&format!("v2^3 - 2*v1^3*{x} + (b^3 - 3*v1)*{x}^2"))),
                ],
                relations: vec![ys(4, "y4^2 - y3^3 + y1^5 + 3*y1^2*y2*y3 + y1*y2^3")],
                relations_complete: true,
                status: Status::Complete,
            }
        }
        "E6" => {
            let y1 = "(b*v2 - v1^2)";
            GoldenData {
                weights: [1, 4, 7, -1, 3, 10],
                ghfs: vec![
                    (8, chart(y1)),
                    (9, chart(&format!("b*{y1}"))),
                    (12, chart(&format!("v1*{y1}"))),
                    (15, chart(&format!("v2*{y1}"))),
                    (19, chart(&format!("(v1*v2 - b^3*{y1})*{y1}"))),
                    (22, chart(&format!("(v2^2 - b^2*v1*{y1})*{y1}"))),
                    (29, chart(&format!("(v2^3 - 2*b*v1^3*{y1} + b^5*{y1}^2)*{y1}"))),
                ],
                relations: [
                    "y1^3 - y2*y4 + y3^2",
                    "y2^3 - y3*y4 + y1*y5",
                    "-y4^2 + y1*y6 + y3*y2^2",
                    "-y6*y2 + y1^2*y4 + y3*y5",
                    "-y3*y6 + y4*y5 + y1^2*y2^2",
                    "y6*y4 - y1*y7 - y5*y2^2 + 2*y2*y3*y1^2",
                    "-y2*y7 + y5^2 - 2*y1^2*y6 + 3*y1*y4^2",
                    "-y4^2*y2 + y4*y3^2 + y1*y6*y2 - y1*y3*y5",
                ]
                .iter()
                .map(|s| ys(7, s))
                .collect(),
                relations_complete: false,
                status: Status::Partial,
            }
        }
        "E8" => {
            let y1 = "(b*v2 - v1^2)";
            GoldenData {
                weights: [2, 5, 8, -2, 3, 14],
                ghfs: vec![
                    (10, chart(y1)),
                    (12, chart(&format!("b*{y1}"))),
                    (15, chart(&format!("v1*{y1}"))),
                    (18, chart(&format!("v2*{y1}"))),
                    (26, chart(&format!("(v2^2 - b^3*{y1})*{y1}"))),
                ],
                relations: vec![ys(5, "y1^3 - y2*y4 + y3^2"), ys(5, "y2^3 - y4^2 + y1*y5")],
                relations_complete: false,
                status: Status::Partial,
            }
        }
        "Ohat" => {
            let w = pick.expect("hat cases carry a pick");
            // X_ij = b^i v1^j v2, ordered by i+j then by i descending
            let mut idx = Vec::new();
            for s in 0..=3i64 {
                for i in (0..=s).rev() {
                    idx.push((i, s - i));
                }
            }
            let ghfs =
                idx.iter().map(|&(i, j)| (i * w[0] + j * w[1] + w[2], chart(&format!("b^{i}*v1^{j}*v2")))).collect();
            GoldenData {
                weights: w,
                ghfs,
                relations: veronese_binomials(&idx),
                relations_complete: true,
                status: Status::Complete,
            }
        }
        "Ahat" => {
            let w = pick.expect("hat cases carry a pick");
            let d = w[4];
            GoldenData {
                weights: w,
                ghfs: vec![
                    (d - 2, chart("v2")),
                    (d - 1, chart("b*v2")),
                    (d, chart("b^2*v2")),
                    (d + 1, chart("b^3*v2 - v1")),
                ],
                relations: vec![ys(4, "y2^2 - y1*y3")],
                relations_complete: true,
                status: Status::Complete,
            }
        }
        "Dhat" => {
            let w = pick.expect("hat cases carry a pick");
            let d = w[4];
            GoldenData {
                weights: w,
                ghfs: vec![
                    (2 * d - 1, chart("v2")),
                    (2 * d, chart("b*v2")),
                    (3 * d, chart("v1*v2")),
                    (2 * d + 2, chart("b^3*v2 - v1^2")),
                ],
                relations: vec![ys(4, "y3^2 - y2^3 + y1^2*y4")],
                relations_complete: true,
                status: Status::Complete,
            }
        }
        "Ehat" => {
            let w = pick.expect("hat cases carry a pick");
            let d = w[4];
            let v3 = "(b^4*v2 - v1^2)";
            GoldenData {
                weights: w,
                ghfs: vec![
                    (2 * d - 2, chart("v2")),
                    (2 * d - 1, chart("b*v2")),
                    (2 * d, chart("b^2*v2")),
                    (3 * d - 1, chart("v1*v2")),
                    (3 * d, chart("b*v1*v2")),
                    (4 * d, chart("v1^2*v2")),
                    (4 * d + 1, chart(&format!("b*{v3}*v2"))),
                    (5 * d + 1, chart(&format!("v1*{v3}*v2"))),
                    (6 * d + 2, chart(&format!("{v3}^2*v2"))),
                ],
                // a f = b^4 - c^2 multiplied through by a f
                relations: vec![ys(9, "y1*y9 - y2*y3*y7 + y4*y8")],
                relations_complete: false,
                status: Status::Complete,
            }
        }
        _ => return Ok(None),
    };
    Ok(Some(g))
}

/// All `y_p y_q - y_r y_s` whose products agree as monomials, for generators
/// with exponent pairs `idx`.
fn veronese_binomials(idx: &[(i64, i64)]) -> Vec<Polynomial> {
    let n = idx.len();
    let ring = y_ring(n);
    let mut pairs: Vec<((i64, i64), usize, usize)> = Vec::new();
    for p in 0..n {
        for q in p..n {
            pairs.push(((idx[p].0 + idx[q].0, idx[p].1 + idx[q].1), p, q));
        }
    }
    let mut out = Vec::new();
    for (a, &(ka, p, q)) in pairs.iter().enumerate() {
        for &(kb, r, s) in &pairs[a + 1..] {
            if ka == kb {
                let y = |i: usize| Polynomial::var_index(&ring, i);
                out.push(&(&y(p) * &y(q)) - &(&y(r) * &y(s)));
            }
        }
    }
    out
}

/// One named pass/fail line of a verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub case: String,
    pub checks: Vec<Check>,
    pub run: Option<BlowdownResult>,
    pub round_trip: Option<RoundTrip>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

/// Check the reference data against the case's transition ideal, then (if
/// `run` is set) search and compare the result with the reference.
pub fn verify(case: &Case, run: bool, max_degree: Option<i64>) -> Result<VerifyReport> {
    let golden = case.golden.as_ref().ok_or_else(|| Error::Missing(format!("reference data for {}", case.label())))?;
    let ideal = TransitionIdeal::build(&case.spec)?;
    let weights = case.weights()?;
    let mut checks = Vec::new();

    checks.push(Check::new(
        "weights",
        proportional(&weights, &golden.weights),
        format!("{weights:?} vs {:?}", golden.weights),
    ));

    let gold_ghfs = certify_all(&ideal, &golden.ghfs, &weights, &mut checks);
    let degrees_ok = golden.ghfs.iter().all(|(d, p)| chart_degree(p, &golden.weights) == Some(*d));
    checks.push(Check::new("reference degrees", degrees_ok, ""));

    let mut bad = Vec::new();
    for (i, r) in golden.relations.iter().enumerate() {
        match &gold_ghfs {
            Some(g) if relation_residue(r, g, &ideal)?.is_zero() => {}
            _ => bad.push(i + 1),
        }
    }
    checks.push(Check::new("reference relations vanish", bad.is_empty(), fmt_failures(&bad)));

    extra_checks(case, golden, &mut checks)?;

    let mut report = VerifyReport { case: case.label(), checks, run: None, round_trip: None };
    if !run {
        return Ok(report);
    }
    let Some(gold_ghfs) = gold_ghfs else { return Ok(report) };
    let result = run_case(&case.spec, &case.run_options(max_degree))?;
    compare(golden, &gold_ghfs, &result, &weights, &mut report.checks)?;
    if golden.status == Status::Complete {
        let complete = result.beta_chart.is_complete() && result.gamma_chart.is_complete();
        report.checks.push(Check::new("charts solved", complete, ""));
        if complete {
            let rt = chart_round_trip(&ideal, &result.ghfs, &result.beta_chart, &result.gamma_chart)?;
            report.checks.push(Check::new(
                "chart round trip",
                rt.passed(),
                format!("beta identity {}, transition {}", rt.beta_identity, rt.transition),
            ));
            report.round_trip = Some(rt);
        }
    }
    report.run = Some(result);
    Ok(report)
}

fn fmt_failures(bad: &[usize]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("failing: {bad:?}")
    }
}

fn proportional(a: &WeightAssignment, b: &WeightAssignment) -> bool {
    // a = (p/q) b with p/q > 0
    let (i, _) = match b.iter().enumerate().find(|(_, &x)| x != 0) {
        Some(p) => p,
        None => return false,
    };
    let (p, q) = (a[i], b[i]);
    p * q > 0 && a.iter().zip(b).all(|(&x, &y)| x * q == y * p)
}

fn certify_all(
    ideal: &TransitionIdeal,
    ghfs: &[(i64, Polynomial)],
    weights: &WeightAssignment,
    checks: &mut Vec<Check>,
) -> Option<Vec<Ghf>> {
    let mut out = Vec::new();
    let mut bad = Vec::new();
    for (i, (_, p)) in ghfs.iter().enumerate() {
        match (ideal.certify(p), chart_degree(p, weights)) {
            (Some(gamma), Some(degree)) => out.push(Ghf { degree, beta: p.clone(), gamma }),
            _ => bad.push(i + 1),
        }
    }
    checks.push(Check::new("reference generators certify", bad.is_empty(), fmt_failures(&bad)));
    bad.is_empty().then_some(out)
}

fn extra_checks(case: &Case, golden: &GoldenData, checks: &mut Vec<Check>) -> Result<()> {
    match case.name {
        "Ak" => {
            // y4~ = y4 + y2 y1^(k-1) turns the relation into y2 y4~ + y3 (y3 - y1^k)
            let k = case.k.unwrap_or(1);
            let r = y_ring(4);
            let y = |i: usize| Polynomial::var_index(&r, i);
            let back = &y(3) - &(&y(1) * &y(0).pow(k - 1));
            let sub = golden.relations[0].substitute(&[(3, Image::of(back))])?;
            let want = &(&y(1) * &y(3)) + &(&y(2) * &(&y(2) - &y(0).pow(k)));
            let g = &golden.ghfs;
            let lhs = &g[3].1 + &(&g[1].1 * &g[0].1.pow(k - 1));
            let tilde = chart(&format!("b*v2^{k} - b^3*v2 + b^2*v1"));
            checks.push(Check::new("documented substitution", sub == want && lhs == tilde, ""));
        }
        "Ahat" => {
            let free = golden.relations.iter().all(|r| !r.involves(3));
            checks.push(Check::new("y4 absent from relations", free, ""));
        }
        _ => {}
    }
    Ok(())
}

/// Order on `y1..yn` graded by the generator degrees when they are positive.
fn y_order(degrees: &[i64]) -> TermOrder {
    if degrees.iter().all(|&d| d > 0) {
        TermOrder::weighted(degrees.to_vec(), TermOrder::Grevlex)
    } else {
        TermOrder::Grevlex
    }
}

fn relation_basis(rels: &[Polynomial], degrees: &[i64]) -> Result<Option<GroebnerBasis>> {
    let nonzero: Vec<Polynomial> = rels.iter().filter(|r| !r.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(None);
    }
    Ok(Some(buchberger(&nonzero, &y_order(degrees))?))
}

/// Express each of `what` in terms of `basis`; `None` marks a failure.
fn express_all(what: &[Ghf], basis: &[Ghf], weights: &WeightAssignment) -> Result<Vec<Option<Polynomial>>> {
    let alg = Subalgebra::new(basis, weights)?;
    what.iter().map(|g| alg.express(&g.beta)).collect()
}

/// Push `rels` (in `y1..y_len(images)`) through `y_i -> images[i]` and test
/// membership in the ideal of `target`.
fn rels_in_ideal(
    rels: &[Polynomial],
    images: &[Polynomial],
    target: Option<&GroebnerBasis>,
    ring: &Arc<VarTable>,
) -> Result<Vec<usize>> {
    let imgs: Vec<Image> = images.iter().map(|p| Image::of(p.clone())).collect();
    let mut bad = Vec::new();
    for (i, r) in rels.iter().enumerate() {
        let m = r.map_into(ring, &imgs)?;
        let inside = match target {
            Some(gb) => gb.normal_form(&m)?.is_zero(),
            None => m.is_zero(),
        };
        if !inside {
            bad.push(i + 1);
        }
    }
    Ok(bad)
}

fn compare(
    golden: &GoldenData,
    gold: &[Ghf],
    result: &BlowdownResult,
    weights: &WeightAssignment,
    checks: &mut Vec<Check>,
) -> Result<()> {
    let found = &result.ghfs;
    let count_ok = match golden.status {
        Status::Complete => found.len() == gold.len(),
        Status::Partial => found.len() >= gold.len(),
    };
    checks.push(Check::new("generator count", count_ok, format!("found {}, reference {}", found.len(), gold.len())));

    let mut fd: Vec<i64> = found.iter().map(|g| g.degree).collect();
    let mut gd: Vec<i64> = gold.iter().map(|g| g.degree).collect();
    fd.sort_unstable();
    gd.sort_unstable();
    let degrees_ok = match golden.status {
        Status::Complete => fd == gd,
        Status::Partial => gd.iter().all(|d| fd.contains(d)),
    };
    checks.push(Check::new("generator degrees", degrees_ok, format!("found {fd:?}, reference {gd:?}")));

    // golden generators inside k[found]
    let q = express_all(gold, found, weights)?;
    let q_bad: Vec<usize> = q.iter().enumerate().filter(|(_, e)| e.is_none()).map(|(i, _)| i + 1).collect();
    checks.push(Check::new("reference generators in found algebra", q_bad.is_empty(), fmt_failures(&q_bad)));

    let found_basis = relation_basis(&result.relations, &fd_unsorted(found))?;
    if q_bad.is_empty() {
        let q: Vec<Polynomial> = q.into_iter().flatten().collect();
        let bad = rels_in_ideal(&golden.relations, &q, found_basis.as_ref(), &y_ring(found.len()))?;
        checks.push(Check::new("reference relations in found ideal", bad.is_empty(), fmt_failures(&bad)));
    }

    if golden.status == Status::Complete {
        let p = express_all(found, gold, weights)?;
        let p_bad: Vec<usize> = p.iter().enumerate().filter(|(_, e)| e.is_none()).map(|(i, _)| i + 1).collect();
        checks.push(Check::new("found generators in reference algebra", p_bad.is_empty(), fmt_failures(&p_bad)));
        if p_bad.is_empty() && golden.relations_complete {
            let p: Vec<Polynomial> = p.into_iter().flatten().collect();
            let gold_basis = relation_basis(&golden.relations, &fd_unsorted(gold))?;
            let bad = rels_in_ideal(&result.relations, &p, gold_basis.as_ref(), &y_ring(gold.len()))?;
            checks.push(Check::new("found relations in reference ideal", bad.is_empty(), fmt_failures(&bad)));
        }
    }
    Ok(())
}

fn fd_unsorted(g: &[Ghf]) -> Vec<i64> {
    g.iter().map(|g| g.degree).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pterms_verbatim() {
        assert_eq!(pterm_source("Ak"), Some("g^2*w[1]^k + w[1]"));
        assert_eq!(pterm_source("ehat"), Some("g^2*w[1]^2"));
        assert_eq!(pterm_source("F4"), None);
    }

    #[test]
    fn lookup_errors() {
        assert!(matches!(lookup("Zk", None, WeightPick::default()), Err(Error::UnknownCase(_))));
        assert!(lookup("Ak", None, WeightPick::default()).is_err());
        assert!(lookup("E7", Some(2), WeightPick::default()).is_err());
        assert!(lookup("E7", None, WeightPick { d: Some(1), e: None }).is_err());
        assert!(lookup("Ahat", None, WeightPick { d: Some(1), e: None }).is_err());
        assert!(lookup("Ahat", None, WeightPick { d: Some(3), e: Some(1) }).is_err());
    }

    #[test]
    fn weight_pick_parse() {
        let mut p = WeightPick::default();
        p.set("d=5").unwrap();
        p.set(" e = 7").unwrap();
        assert_eq!(p, WeightPick { d: Some(5), e: Some(7) });
        assert!(p.set("d").is_err());
        assert!(p.set("q=1").is_err());
        assert!(p.set("d=x").is_err());
    }

    #[test]
    fn proportional_weights() {
        assert!(proportional(&[1, 2, 1, -1, 1, 4], &[2, 4, 2, -2, 2, 8]));
        assert!(!proportional(&[1, 2, 1, -1, 1, 4], &[-1, -2, -1, 1, -1, -4]));
        assert!(!proportional(&[1, 2, 1, -1, 1, 5], &[1, 2, 1, -1, 1, 4]));
    }

    #[test]
    fn veronese_count() {
        let c = lookup("Ohat", None, WeightPick::default()).unwrap();
        let g = c.golden.unwrap();
        assert_eq!(g.ghfs.len(), 10);
        assert!(g.relations.iter().all(|r| r.len() == 2));
    }
}
