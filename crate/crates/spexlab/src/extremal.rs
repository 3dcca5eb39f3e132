//! Brute-force EX(n, F) and SPEX(n, F) over enumerated graphs, with
//! prediction matching against the extremal constructions
//! (S_{n,kappa}+ when some k_i >= 3, F_{n,t} when all cycles are
//! 4-cycles).

use crate::canon::canonicalize;
use crate::construct::{make_F, make_S, make_S_plus, CycleSpec};
use crate::enumerate::{enumerate_graphs, EnumFilter, Forbidden};
use crate::graph::Graph;
use crate::spectral::{exact_lambda_compare, power_iteration};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::cmp::Ordering;

/// Lambda tolerance used by power iteration inside the search.
pub const SEARCH_TOL: f64 = 1e-10;
/// Candidates within this distance of the float leader enter the exact
/// tie-break.
pub const TIE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Edges,
    Lambda,
}

/// Outcome of an EX/SPEX search.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalReport {
    pub schema: u32,
    pub n: usize,
    /// Forbidden pattern: cycle-spec string or explicit graph6.
    pub forbidden: String,
    pub mode: SearchMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimum_edges: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub optimum_lambda: Option<f64>,
    /// Canonical graph6 of every optimum graph.
    pub argmax: Vec<String>,
    /// Whether each argmax graph is connected.
    pub argmax_connected: Vec<bool>,
    /// Canonical graph6 of the predicted extremal graph, when the
    /// theory names one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prediction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_prediction: Option<bool>,
    /// Edge-count upper bound from the bounds module. Edges mode only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_upper_bound: Option<f64>,
    /// Graphs within TIE_TOL of the float leader (superset of argmax,
    /// before exact tie-breaking). Lambda mode only.
    pub tie_set: Vec<String>,
    /// True when the argmax class is a single graph, certified by exact
    /// comparison in lambda mode.
    pub unique: bool,
}

fn canonical_g6(g: &Graph) -> Result<String> {
    Ok(String::from_utf8(canonicalize(g)?.bytes).unwrap())
}

fn free_graphs(n: usize, forbidden: &Forbidden) -> Result<Vec<Graph>> {
    enumerate_graphs(
        n,
        &EnumFilter {
            freeness: Some(forbidden.clone()),
            ..Default::default()
        },
    )
}

/// Maximum edge count over all F-free graphs on n vertices.
pub fn ex_search(n: usize, spec: &CycleSpec) -> Result<ExtremalReport> {
    let forbidden = Forbidden::Spec(spec.clone());
    let graphs = free_graphs(n, &forbidden)?;
    ex_over(n, spec.to_string(), &forbidden, graphs, Some(crate::bounds::aks_bound(n, spec)))
}

/// EX search over an externally supplied F-free candidate stream (all
/// graphs are re-checked for freeness).
pub fn ex_search_stream(
    n: usize,
    spec: &CycleSpec,
    graphs: Vec<Graph>,
) -> Result<ExtremalReport> {
    let forbidden = Forbidden::Spec(spec.clone());
    let free: Vec<Graph> = graphs
        .into_iter()
        .filter(|g| g.n() == n)
        .map(|g| Ok((forbidden.is_free(&g)?, g)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter_map(|(free, g)| free.then_some(g))
        .collect();
    ex_over(n, spec.to_string(), &forbidden, free, Some(crate::bounds::aks_bound(n, spec)))
}

fn ex_over(
    n: usize,
    forbidden_desc: String,
    forbidden: &Forbidden,
    graphs: Vec<Graph>,
    edge_upper_bound: Option<f64>,
) -> Result<ExtremalReport> {
    let optimum = graphs.iter().map(Graph::edge_count).max().unwrap_or(0);
    let mut argmax = Vec::new();
    let mut connected = Vec::new();
    for g in &graphs {
        if g.edge_count() == optimum {
            // re-verify freeness on every reported argmax
            assert!(forbidden.is_free(g)?, "argmax graph is not free");
            argmax.push(canonical_g6(g)?);
            connected.push(g.is_connected());
        }
    }
    let unique = argmax.len() == 1;
    Ok(ExtremalReport {
        schema: 1,
        n,
        forbidden: forbidden_desc,
        mode: SearchMode::Edges,
        optimum_edges: Some(optimum),
        optimum_lambda: None,
        argmax,
        argmax_connected: connected,
        prediction: None,
        matches_prediction: None,
        edge_upper_bound,
        tie_set: Vec::new(),
        unique,
    })
}

/// The paper's case split: S_{n,kappa}+ when max k_i >= 3, F_{n,t} when
/// every k_i = 2. None when n is too small to build it.
pub fn spex_prediction(n: usize, spec: &CycleSpec) -> Option<Graph> {
    if spec.all_fours() {
        make_F(n, spec.t()).ok()
    } else {
        make_S_plus(n, spec.kappa()).ok()
    }
}

/// Keeps only graphs where no edge can be added without creating the
/// forbidden pattern. Sound for lambda maximization because lambda
/// never decreases under edge addition.
pub fn maximal_free(graphs: Vec<Graph>, forbidden: &Forbidden) -> Result<Vec<Graph>> {
    graphs
        .into_par_iter()
        .map(|g| {
            let n = g.n();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let mut g2 = g.clone();
                        g2.add_edge(u, v);
                        if forbidden.is_free(&g2)? {
                            return Ok(None);
                        }
                    }
                }
            }
            Ok(Some(g))
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

/// Maximum spectral radius over all F-free graphs, with exact
/// tie-breaking among float-tied leaders.
pub fn spex_search(n: usize, spec: &CycleSpec) -> Result<ExtremalReport> {
    let forbidden = Forbidden::Spec(spec.clone());
    let graphs = free_graphs(n, &forbidden)?;
    let candidates = maximal_free(graphs, &forbidden)?;
    let prediction = spex_prediction(n, spec);
    spex_over(n, spec.to_string(), &forbidden, candidates, prediction)
}

/// SPEX with an arbitrary forbidden graph h. When h is connected and
/// bipartite the prediction is S_{n, s-1} with s the smallest color
/// class of h; otherwise no prediction is attached.
pub fn spex_search_forbidden_graph(n: usize, h: &Graph) -> Result<ExtremalReport> {
    let forbidden = Forbidden::Graph(h.clone());
    let graphs = free_graphs(n, &forbidden)?;
    let candidates = maximal_free(graphs, &forbidden)?;
    let prediction = if h.is_connected() && h.n() >= 1 {
        h.bipartition()?
            .and_then(|b| make_S(n, b.smallest_class_size.saturating_sub(1)).ok())
    } else {
        None
    };
    spex_over(n, crate::graph6::encode(h), &forbidden, candidates, prediction)
}

/// SPEX over an external candidate stream; freeness is re-checked and
/// maximality pruning applied.
pub fn spex_search_stream(
    n: usize,
    spec: &CycleSpec,
    graphs: Vec<Graph>,
) -> Result<ExtremalReport> {
    let forbidden = Forbidden::Spec(spec.clone());
    let free: Vec<Graph> = graphs
        .into_iter()
        .filter(|g| g.n() == n)
        .map(|g| Ok((forbidden.is_free(&g)?, g)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter_map(|(ok, g)| ok.then_some(g))
        .collect();
    let candidates = maximal_free(free, &forbidden)?;
    let prediction = spex_prediction(n, spec);
    spex_over(n, spec.to_string(), &forbidden, candidates, prediction)
}

fn spex_over(
    n: usize,
    forbidden_desc: String,
    forbidden: &Forbidden,
    candidates: Vec<Graph>,
    prediction: Option<Graph>,
) -> Result<ExtremalReport> {
    if candidates.is_empty() {
        return Err(Error::InvalidParameter("spex search over an empty candidate set".into()));
    }
    let lambdas: Vec<f64> = candidates
        .par_iter()
        .map(|g| power_iteration(g, SEARCH_TOL, 1_000_000).map(|r| r.lambda))
        .collect::<Result<_>>()?;
    let leader = lambdas.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let tie_idx: Vec<usize> = (0..candidates.len())
        .filter(|&i| leader - lambdas[i] <= TIE_TOL)
        .collect();

    // exact tie-break: find the true maxima within the tie set
    let mut max_idx = vec![tie_idx[0]];
    for &i in &tie_idx[1..] {
        match exact_lambda_compare(&candidates[i], &candidates[max_idx[0]])? {
            Ordering::Greater => max_idx = vec![i],
            Ordering::Equal => max_idx.push(i),
            Ordering::Less => {}
        }
    }
    let optimum_lambda = lambdas[max_idx[0]];

    let mut argmax = Vec::new();
    let mut connected = Vec::new();
    for &i in &max_idx {
        assert!(forbidden.is_free(&candidates[i])?, "argmax graph is not free");
        argmax.push(canonical_g6(&candidates[i])?);
        connected.push(candidates[i].is_connected());
    }
    let mut tie_set = Vec::new();
    for &i in &tie_idx {
        tie_set.push(canonical_g6(&candidates[i])?);
    }
    let prediction_g6 = prediction.as_ref().map(canonical_g6).transpose()?;
    let matches_prediction = prediction_g6
        .as_ref()
        .map(|p| argmax.len() == 1 && argmax[0] == *p);
    let unique = argmax.len() == 1;
    Ok(ExtremalReport {
        schema: 1,
        n,
        forbidden: forbidden_desc,
        mode: SearchMode::Lambda,
        optimum_edges: None,
        optimum_lambda: Some(optimum_lambda),
        argmax,
        argmax_connected: connected,
        prediction: prediction_g6,
        matches_prediction,
        edge_upper_bound: None,
        tie_set,
        unique,
    })
}

/// Unpruned SPEX over every free graph; oracle for the maximality
/// reduction at small n.
pub fn spex_search_unpruned(n: usize, spec: &CycleSpec) -> Result<ExtremalReport> {
    let forbidden = Forbidden::Spec(spec.clone());
    let graphs = free_graphs(n, &forbidden)?;
    let prediction = spex_prediction(n, spec);
    spex_over(n, spec.to_string(), &forbidden, graphs, prediction)
}
