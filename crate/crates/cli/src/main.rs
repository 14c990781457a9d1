//! `blowdown`: run the holomorphic-function search on builtin cases, verify
//! it against reference data, and check matrix factorizations.

mod config;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use blowdown_core::blowdown::run_case;
use blowdown_core::cases::{self, Case, WeightPick};
use blowdown_core::ferrari::{
    case_superpotential, field_ring, parse_pterm, perturbation_from_superpotential, solve_weights, xy_swap, CaseSpec,
    Superpotential,
};
use blowdown_core::matfact::{
    build_a_factorization, build_d_relations, build_length3_factorization, distinguished, residual_chart_checks,
    row_pair_minors, tyurina_check, verify_factorization, verify_plucker_relations, ResidualFamily, RowPair,
};
use blowdown_core::polyring::parse;
use blowdown_core::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use config::Config;
use report::{CheckOut, MatfactOut, RunReport, SuperpotentialOut, VerifyOut, WeightsOut};

#[derive(Parser, Debug)]
#[command(name = "blowdown", version, about = "Global holomorphic functions and blow-downs of resolved curves")]
struct Cli {
    /// File of key=value pairs (case, k, max-degree, format, weight-pick); flags win.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Search for global functions, relations and chart inverses.
    Run(CaseArgs),
    /// Compare a case against its reference data.
    Verify {
        #[command(flatten)]
        case: CaseArgs,
        /// Only check the reference data; skip the search.
        #[arg(long)]
        no_run: bool,
    },
    /// Print the grading of a case.
    Weights(CaseArgs),
    /// Translate between superpotentials and perturbation terms.
    Superpotential(SuperArgs),
    /// Check matrix factorizations and their Pluecker relations.
    Matfact(MatfactArgs),
    /// List the builtin cases.
    Cases {
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone, Default)]
struct CaseArgs {
    /// Case name: Ohat, Ahat, Dhat, Ehat, Ak, Dk, E6, E7, E8.
    #[arg(long)]
    case: Option<String>,
    /// Parameter for Ak and Dk (Dk is D_{k+2}).
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    max_degree: Option<i64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Hat cases: `d=<int>` (and `e=<int>` for Ohat).
    #[arg(long, value_name = "KEY=INT")]
    weight_pick: Vec<String>,
}

#[derive(Args, Debug)]
struct SuperArgs {
    /// Superpotential in x, y (or x1..xM).
    #[arg(long, conflicts_with_all = ["pterm", "case"])]
    w: Option<String>,
    /// Number of fields for --w.
    #[arg(long, default_value_t = 2)]
    fields: usize,
    /// Perturbation term in b, g, w1.
    #[arg(long, conflicts_with = "case")]
    pterm: Option<String>,
    /// Registry case whose pterm to use.
    #[arg(long)]
    case: Option<String>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    A,
    D,
    Distinguished,
    Tyurina,
    Length3,
    All,
}

#[derive(Args, Debug)]
struct MatfactArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    /// Split point; all admissible values when omitted.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    deformed: bool,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

/// Exit-code classes.
enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::UnknownCase(_)
            | Error::BadParameters(_)
            | Error::Parse { .. }
            | Error::UnknownVariable(_)
            | Error::Missing(_)
            | Error::NegativeExponent(_) => Failure::Usage(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Failed(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Outcome {
    let cfg = match &cli.config {
        Some(p) => Config::load(p).map_err(Failure::Usage)?,
        None => Config::default(),
    };
    match cli.cmd {
        Cmd::Run(a) => cmd_run(merge(a, &cfg)?),
        Cmd::Verify { case, no_run } => cmd_verify(merge(case, &cfg)?, no_run),
        Cmd::Weights(a) => cmd_weights(merge(a, &cfg)?),
        Cmd::Superpotential(a) => cmd_superpotential(a),
        Cmd::Matfact(a) => cmd_matfact(a),
        Cmd::Cases { format } => cmd_cases(format.unwrap_or(Format::Text)),
    }
}

fn merge(mut a: CaseArgs, cfg: &Config) -> Result<CaseArgs, Failure> {
    if a.case.is_none() {
        a.case = cfg.get("case").map(str::to_string);
    }
    if a.k.is_none() {
        a.k = cfg.parsed("k").map_err(Failure::Usage)?;
    }
    if a.max_degree.is_none() {
        a.max_degree = cfg.parsed("max-degree").map_err(Failure::Usage)?;
    }
    if a.format.is_none() {
        a.format = match cfg.get("format") {
            None => None,
            Some(f) => {
                Some(Format::from_str(f, true).map_err(|_| Failure::Usage(format!("config: bad format `{f}`")))?)
            }
        };
    }
    if a.weight_pick.is_empty() {
        a.weight_pick = cfg.all("weight-pick").to_vec();
    }
    Ok(a)
}

fn resolve_case(a: &CaseArgs) -> Result<Case, Failure> {
    let name = a.case.as_deref().ok_or_else(|| Failure::Usage("--case is required".into()))?;
    let mut pick = WeightPick::default();
    for p in &a.weight_pick {
        pick.set(p)?;
    }
    Ok(cases::lookup(name, a.k, pick)?)
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(value).expect("reports serialize") + "\n",
        Format::Text => text(),
    };
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
}

fn check_max_degree(d: Option<i64>) -> Result<(), Failure> {
    match d {
        Some(d) if d < 1 => Err(Failure::Usage("--max-degree must be positive".into())),
        _ => Ok(()),
    }
}

fn cmd_run(a: CaseArgs) -> Outcome {
    check_max_degree(a.max_degree)?;
    let case = resolve_case(&a)?;
    let opts = case.run_options(a.max_degree);
    let result = run_case(&case.spec, &opts)?;
    let rep = RunReport::build(&case, opts.max_degree, &result)?;
    emit(a.format.unwrap_or(Format::Text), &rep, || rep.text(&case.label()));
    Ok(true)
}

fn cmd_verify(a: CaseArgs, no_run: bool) -> Outcome {
    check_max_degree(a.max_degree)?;
    let case = resolve_case(&a)?;
    let max_degree = a.max_degree.unwrap_or(case.default_max_degree);
    let v = cases::verify(&case, !no_run, Some(max_degree))?;
    let out = VerifyOut::build(&case, max_degree, &v)?;
    emit(a.format.unwrap_or(Format::Text), &out, || out.text(&case.label()));
    Ok(v.passed())
}

fn cmd_weights(a: CaseArgs) -> Outcome {
    let case = resolve_case(&a)?;
    let out = WeightsOut {
        case: case.name.to_string(),
        k: case.k,
        weights: case.weights()?,
        lattice: solve_weights(&case.spec),
    };
    emit(a.format.unwrap_or(Format::Text), &out, || out.text());
    Ok(true)
}

fn cmd_superpotential(a: SuperArgs) -> Outcome {
    let format = a.format.unwrap_or(Format::Text);
    let out = if let Some(src) = &a.w {
        if a.fields == 0 {
            return Err(Failure::Usage("--fields must be positive".into()));
        }
        let w = parse(src, &field_ring(a.fields))?;
        let pterm = perturbation_from_superpotential(&Superpotential { w: w.clone(), m: a.fields })?;
        SuperpotentialOut {
            fields: a.fields,
            superpotential: w.to_string(),
            swapped: (a.fields == 2).then(|| xy_swap(&pterm).to_string()),
            pterm: pterm.to_string(),
        }
    } else {
        let pterm = match (&a.pterm, &a.case) {
            (Some(p), _) => parse_pterm(p)?,
            (None, Some(c)) => cases::lookup(c, a.k, WeightPick::default())?.spec.pterm,
            (None, None) => return Err(Failure::Usage("give one of --w, --pterm, --case".into())),
        };
        let w = case_superpotential(&CaseSpec::two_field("input", pterm.clone()))?;
        SuperpotentialOut {
            fields: 2,
            superpotential: w.w.to_string(),
            swapped: Some(xy_swap(&pterm).to_string()),
            pterm: pterm.to_string(),
        }
    };
    emit(format, &out, || out.text());
    Ok(true)
}

fn cmd_cases(format: Format) -> Outcome {
    #[derive(Serialize)]
    struct Entry {
        name: &'static str,
        pterm: &'static str,
    }
    let list: Vec<Entry> = cases::REGISTRY.iter().map(|&(name, pterm)| Entry { name, pterm }).collect();
    emit(format, &list, || list.iter().map(|e| format!("{:<5} {}\n", e.name, e.pterm)).collect());
    Ok(true)
}

fn need(v: Option<usize>, what: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{what} is required for this family")))
}

fn splits(m: Option<usize>, lo: usize, hi: usize) -> Vec<usize> {
    match m {
        Some(m) => vec![m],
        None => (lo..=hi).collect(),
    }
}

fn push(checks: &mut Vec<CheckOut>, name: String, passed: bool) {
    checks.push(CheckOut { name, passed, detail: String::new() });
}

fn a_checks(n: usize, m: Option<usize>, deformed: bool, out: &mut Vec<CheckOut>) -> Result<(), Failure> {
    if n < 2 {
        return Err(Failure::Usage("A family needs n >= 2".into()));
    }
    for m in splits(m, 1, n - 1) {
        let f = build_a_factorization(n, m, deformed)?;
        let ok = verify_factorization(&f.r, &f.s, &f.f)?.holds();
        let tag = if deformed { "deformed " } else { "" };
        push(out, format!("A n={n} m={m} {tag}RS = SR = f I"), ok);
        let ch = residual_chart_checks(ResidualFamily::A { n, m, deformed })?;
        push(out, format!("A n={n} m={m} {tag}residual charts"), ch.holds());
    }
    Ok(())
}

fn d_checks(n: usize, m: Option<usize>, deformed: bool, out: &mut Vec<CheckOut>) -> Result<(), Failure> {
    if n < 1 {
        return Err(Failure::Usage("D family needs n >= 1".into()));
    }
    for m in splits(m, 1, n) {
        let d = build_d_relations(n, m, deformed)?;
        let tag = if deformed { "deformed " } else { "" };
        if let Some(s) = &d.s {
            push(out, format!("D n={n} m={m} {tag}RS = SR = f I"), verify_factorization(&d.r, s, &d.eqn)?.holds());
        } else {
            let (det, cof) = d.determinant_certificate()?;
            push(out, format!("D n={n} m={m} {tag}det R = eqn^2"), det);
            push(out, format!("D n={n} m={m} {tag}cofactors vanish mod eqn"), cof);
        }
        for rows in [RowPair::Top, RowPair::Bottom] {
            let mn = row_pair_minors(&d.r, rows)?;
            let ok = verify_plucker_relations(&mn, rows, &d.context).holds();
            push(out, format!("D n={n} m={m} {tag}Pluecker relations, {rows:?} rows"), ok);
        }
        let fam = if deformed { ResidualFamily::DDeformed { n, m } } else { ResidualFamily::DPlain { n, m } };
        push(out, format!("D n={n} m={m} {tag}residual charts"), residual_chart_checks(fam)?.holds());
    }
    Ok(())
}

fn distinguished_checks(n: usize, m: Option<usize>, out: &mut Vec<CheckOut>) -> Result<(), Failure> {
    for m in splits(m, 1, n) {
        let d = distinguished(n, m)?;
        let r = &d.ring;
        let ok = d.full.identities_hold(r)
            && d.primed.identities_hold(r)
            && d.dprimed.identities_hold(r)
            && d.split_identity_holds();
        push(out, format!("distinguished n={n} m={m} identities"), ok);
    }
    Ok(())
}

fn length3_checks(out: &mut Vec<CheckOut>) -> Result<(), Failure> {
    let l = build_length3_factorization()?;
    push(out, "length 3: phi psi = psi phi = g I".into(), verify_factorization(&l.phi, &l.psi, &l.g)?.holds());
    push(out, "length 3: A B = B A = f I (6x6)".into(), verify_factorization(&l.a, &l.b, &l.f)?.holds());
    Ok(())
}

fn cmd_matfact(a: MatfactArgs) -> Outcome {
    let mut checks = Vec::new();
    match a.family {
        Family::A => a_checks(need(a.n, "n")?, a.m, a.deformed, &mut checks)?,
        Family::D => d_checks(need(a.n, "n")?, a.m, a.deformed, &mut checks)?,
        Family::Distinguished => distinguished_checks(need(a.n, "n")?, a.m, &mut checks)?,
        Family::Tyurina => {
            let n = need(a.n, "n")?;
            push(&mut checks, format!("Tyurina n={n}"), tyurina_check(n)?.holds());
        }
        Family::Length3 => length3_checks(&mut checks)?,
        Family::All => {
            for n in 2..=6 {
                a_checks(n, None, false, &mut checks)?;
            }
            for n in 2..=5 {
                a_checks(n, None, true, &mut checks)?;
            }
            for n in 1..=6 {
                d_checks(n, None, false, &mut checks)?;
            }
            for n in 1..=4 {
                d_checks(n, None, true, &mut checks)?;
                distinguished_checks(n, None, &mut checks)?;
            }
            for n in 1..=3 {
                push(&mut checks, format!("Tyurina n={n}"), tyurina_check(n)?.holds());
            }
            length3_checks(&mut checks)?;
        }
    }
    let family = format!("{:?}", a.family).to_lowercase();
    let mut out = MatfactOut { family, checks, status: String::new() };
    out.status = report::pf(out.passed()).into();
    emit(a.format.unwrap_or(Format::Text), &out, || out.text());
    Ok(out.passed())
}
