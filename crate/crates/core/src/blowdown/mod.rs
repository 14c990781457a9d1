//! Global holomorphic functions on the two-chart resolved geometry, the
//! relations among them, and the inverse chart maps.

mod charts;
mod ideal;
mod search;

pub use charts::{chart_round_trip, invert_chart, Chart, ChartInverse, CoordSolution, RoundTrip};
pub use ideal::{
    chart_degree, chart_ring, monomials_of_weight, pole_order, transition_order, TransitionIdeal, BETA_SIDE,
    CHART_VARS, GAMMA_SIDE,
};
pub use search::{
    find_relations, is_new, is_new_by_elimination, lift_ring, polysearch, relation_residue, xreduce, y_ring, Ghf,
    GhfEntry, SearchState, Subalgebra,
};

use crate::error::{Error, Result};
use crate::ferrari::{solve_weights, CaseSpec, WeightAssignment};
use crate::polyring::Polynomial;

/// Search parameters.
#[derive(Clone, Debug)]
pub struct RunOptions {
    pub max_degree: i64,
    /// Required when the weight lattice has rank above one.
    pub weights: Option<WeightAssignment>,
    /// Exponent cap for zero-weight chart variables.
    pub zero_weight_cap: i32,
}

impl RunOptions {
    pub fn new(max_degree: i64) -> RunOptions {
        RunOptions { max_degree, weights: None, zero_weight_cap: 4 }
    }
}

#[derive(Clone, Debug)]
pub struct BlowdownResult {
    pub case: String,
    pub weights: WeightAssignment,
    pub ghfs: Vec<Ghf>,
    /// Polynomials in `y1..yN`, `y_i` standing for `ghfs[i-1]`.
    pub relations: Vec<Polynomial>,
    pub beta_chart: ChartInverse,
    pub gamma_chart: ChartInverse,
    /// Holomorphic candidates found but rejected as not new.
    pub rejected: usize,
}

/// Pick the grading: explicit, or the unique lattice generator.
pub fn resolve_weights(case: &CaseSpec, pick: Option<WeightAssignment>) -> Result<WeightAssignment> {
    let lattice = solve_weights(case);
    match pick {
        Some(w) => {
            let ok = transition_degrees(case, &w);
            if !ok {
                return Err(Error::BadParameters(format!("weights {w:?} do not grade the transition ideal")));
            }
            Ok(w)
        }
        None if lattice.len() == 1 => Ok(lattice[0]),
        None => Err(Error::BadParameters(format!(
            "weight lattice for {} has rank {}; a weight pick is required",
            case.name,
            lattice.len()
        ))),
    }
}

fn transition_degrees(case: &CaseSpec, w: &WeightAssignment) -> bool {
    let Ok(t) = TransitionIdeal::build(case) else { return false };
    t.generators.iter().all(|g| chart_degree(g, w).is_some())
}

/// Search weighted degrees `1..=max_degree`, then compute relations and charts.
pub fn run_case(case: &CaseSpec, opts: &RunOptions) -> Result<BlowdownResult> {
    let weights = resolve_weights(case, opts.weights)?;
    if weights[..3].iter().any(|&x| x < 0) || weights[..3].iter().all(|&x| x == 0) {
        return Err(Error::BadParameters(format!("weights {weights:?} are not positive on b, v1, v2")));
    }
    let ideal = TransitionIdeal::build(case)?;
    let mut state = SearchState::default();
    for d in 1..=opts.max_degree {
        let ms = monomials_of_weight(&weights, d, opts.zero_weight_cap)?;
        if ms.is_empty() {
            continue;
        }
        polysearch(&ms, d, &mut state, &ideal, &weights)?;
    }
    let relations = find_relations(&state.ghfs, &weights)?;
    let beta_chart = invert_chart(&state.ghfs, Chart::Beta)?;
    let gamma_chart = invert_chart(&state.ghfs, Chart::Gamma)?;
    Ok(BlowdownResult {
        case: case.name.clone(),
        weights,
        ghfs: state.ghfs,
        relations,
        beta_chart,
        gamma_chart,
        rejected: state.rejected,
    })
}
