//! Named, runnable claim checks. Each check produces a record with a
//! three-valued verdict: pass, fail (implementation bug, with a
//! re-validating counterexample), or out-of-theorem-range (small-n
//! disagreement with an asymptotic claim).

use crate::bounds::{bipartition_edge_bound, degree_square_bound};
use crate::construct::{
    make_intersecting_even_cycles, make_K, make_Km, make_Kp, CycleSpec,
};
use crate::enumerate::{enumerate_graphs, EnumFilter, Forbidden};
use crate::extremal::{spex_prediction, spex_search};
use crate::graph::Graph;
use crate::graph6::encode;
use crate::spectral::{
    coarsest_equitable_partition, lambda_S_closed_form, quotient_spectral_radius,
};
use crate::subgraph::{
    contains_intersecting_even_cycles, contains_minor, find_disjoint_path_system, has_path_on,
    restrict_to_u_uw,
};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    OutOfTheoremRange,
}

/// One claim check outcome. Verdicts are reproducible from `parameters`
/// alone (seeds included); `runtime_ms` is filled only on request so
/// that default output stays byte-identical across runs.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationRecord {
    pub schema: u32,
    pub claim_id: String,
    pub parameters: Value,
    pub verdict: Verdict,
    pub evidence: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u128>,
}

impl VerificationRecord {
    fn new(claim_id: &str, parameters: Value, verdict: Verdict, evidence: Value) -> Self {
        VerificationRecord {
            schema: 1,
            claim_id: claim_id.to_string(),
            parameters,
            verdict,
            evidence,
            runtime_ms: None,
        }
    }
}

/// K_{kappa+1, kappa+t} contains the intersecting even cycle when every
/// k_i >= 3.
#[allow(non_snake_case)]
pub fn verify_lemma_containment_Kab(spec: &CycleSpec) -> Result<VerificationRecord> {
    if spec.ks().iter().any(|&k| k < 3) {
        return Err(Error::InvalidParameter(
            "containment lemma requires every k_i >= 3".into(),
        ));
    }
    if spec.vertex_count() > 20 {
        return Err(Error::TooLarge { n: spec.vertex_count(), limit: 20 });
    }
    let kappa = spec.kappa();
    let host = make_K(kappa + 1, kappa + spec.t());
    let witness = contains_intersecting_even_cycles(&host, spec)?;
    let params = json!({ "spec": spec.to_string() });
    Ok(match witness {
        Some(w) => VerificationRecord::new(
            "lemma-3.3",
            params,
            Verdict::Pass,
            json!({ "host": encode(&host), "center": w.center, "cycles": w.cycles }),
        ),
        None => VerificationRecord::new(
            "lemma-3.3",
            params,
            Verdict::Fail,
            json!({ "host": encode(&host), "note": "no embedding found" }),
        ),
    })
}

/// k_t = 2 case: C_{4,...,4} inside K^p_{t,2t+1}. k_t >= 3 case: the
/// spec's cycle graph inside both K^p_{kappa,kappa+t+1} and
/// K^m_{kappa,kappa+t+1}.
pub fn verify_lemma_almost_bipartite(spec: &CycleSpec) -> Result<VerificationRecord> {
    let (kappa, t) = (spec.kappa(), spec.t());
    let hosts: Vec<Graph> = if spec.max_k() == 2 {
        vec![make_Kp(t, 2 * t + 1)?]
    } else {
        vec![make_Kp(kappa, kappa + t + 1)?, make_Km(kappa, kappa + t + 1)?]
    };
    if hosts.iter().any(|h| h.n() > 20) {
        return Err(Error::TooLarge {
            n: hosts.iter().map(Graph::n).max().unwrap(),
            limit: 20,
        });
    }
    let params = json!({ "spec": spec.to_string() });
    let mut evidence = Vec::new();
    for host in &hosts {
        match contains_intersecting_even_cycles(host, spec)? {
            Some(w) => evidence.push(json!({
                "host": encode(host),
                "center": w.center,
                "cycles": w.cycles,
            })),
            None => {
                return Ok(VerificationRecord::new(
                    "lemma-4.almost-bipartite",
                    params,
                    Verdict::Fail,
                    json!({ "host": encode(host), "note": "no embedding found" }),
                ));
            }
        }
    }
    Ok(VerificationRecord::new(
        "lemma-4.almost-bipartite",
        params,
        Verdict::Pass,
        Value::Array(evidence),
    ))
}

/// Every enumerated F-free graph on n <= n_max vertices satisfies
/// sum of squared degrees < (4 kappa + t)(n-1) n strictly.
pub fn verify_theorem_degree_squares(n_max: usize, spec: &CycleSpec) -> Result<VerificationRecord> {
    if n_max > 8 {
        return Err(Error::TooLarge { n: n_max, limit: 8 });
    }
    let params = json!({ "spec": spec.to_string(), "n_max": n_max });
    let mut checked = Vec::new();
    // n = 1 is excluded: the bound degenerates to 0 there and the
    // single graph K1 has degree-square sum 0
    for n in 2..=n_max {
        let graphs = enumerate_graphs(
            n,
            &EnumFilter {
                freeness: Some(Forbidden::Spec(spec.clone())),
                ..Default::default()
            },
        )?;
        let bound = degree_square_bound(n, spec);
        for g in &graphs {
            let sum: u64 = (0..n).map(|v| (g.degree(v).unwrap() as u64).pow(2)).sum();
            if sum >= bound {
                return Ok(VerificationRecord::new(
                    "theorem-3.6",
                    params,
                    Verdict::Fail,
                    json!({
                        "counterexample": encode(g),
                        "sum_degree_squares": sum,
                        "bound": bound,
                    }),
                ));
            }
        }
        checked.push(json!({ "n": n, "free_classes": graphs.len(), "bound": bound }));
    }
    Ok(VerificationRecord::new(
        "theorem-3.6",
        params,
        Verdict::Pass,
        Value::Array(checked),
    ))
}

/// Seeded random (g, U, W) instances. Two implications are checked on
/// the restriction to U-U and U-W edges: a path on 4 kappa + t vertices
/// forces a disjoint path system with ends in U, and so does
/// 2 e(U) + e(U,W) above the bipartition threshold.
pub fn verify_lemma_disjoint_paths(
    trials: usize,
    n: usize,
    spec: &CycleSpec,
    seed: u64,
) -> Result<VerificationRecord> {
    if n > 20 {
        return Err(Error::TooLarge { n, limit: 20 });
    }
    let params = json!({
        "spec": spec.to_string(),
        "n": n,
        "trials": trials,
        "seed": seed,
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let long_path = 4 * spec.kappa() + spec.t();
    let mut path_triggers = 0usize;
    let mut threshold_triggers = 0usize;
    for trial in 0..trials {
        let p: f64 = rng.gen_range(0.05..0.95);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        let in_u: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        let side_u: Vec<usize> = (0..n).filter(|&v| in_u[v]).collect();
        let side_w: Vec<usize> = (0..n).filter(|&v| !in_u[v]).collect();

        let restricted = restrict_to_u_uw(&g, &in_u);
        let path_hyp = has_path_on(&restricted, long_path)?.is_some();
        let weight = 2.0 * g.count_edges_within(&side_u) as f64
            + g.count_edges_between(&side_u, &side_w)? as f64;
        let threshold_hyp = weight > bipartition_edge_bound(side_u.len(), n, spec)?;
        if !path_hyp && !threshold_hyp {
            continue;
        }
        let system = find_disjoint_path_system(&g, &side_u, &side_w, spec)?;
        path_triggers += path_hyp as usize;
        threshold_triggers += threshold_hyp as usize;
        if system.is_none() {
            return Ok(VerificationRecord::new(
                "lemma-3.4",
                params,
                Verdict::Fail,
                json!({
                    "counterexample": encode(&g),
                    "side_u": side_u,
                    "trial": trial,
                    "path_hypothesis": path_hyp,
                    "threshold_hypothesis": threshold_hyp,
                }),
            ));
        }
    }
    Ok(VerificationRecord::new(
        "lemma-3.4",
        params,
        Verdict::Pass,
        json!({
            "path_hypothesis_triggers": path_triggers,
            "threshold_hypothesis_triggers": threshold_triggers,
        }),
    ))
}

/// Per-n spectral-extremal verdicts against the predicted construction.
/// A mismatch is out-of-theorem-range, not a failure: the underlying
/// claims hold for sufficiently large n only.
pub fn verify_main_theorems(
    n_lo: usize,
    n_hi: usize,
    spec: &CycleSpec,
) -> Result<Vec<VerificationRecord>> {
    if n_lo > n_hi {
        return Err(Error::InvalidParameter("empty n range".into()));
    }
    let claim = if spec.all_fours() { "theorem-1.5" } else { "theorem-1.4" };
    let mut out = Vec::new();
    for n in n_lo..=n_hi {
        let report = spex_search(n, spec)?;
        let params = json!({ "spec": spec.to_string(), "n": n });
        let matched = report.unique && report.matches_prediction == Some(true);
        let verdict = if matched { Verdict::Pass } else { Verdict::OutOfTheoremRange };
        out.push(VerificationRecord::new(
            claim,
            params,
            verdict,
            json!({
                "argmax": report.argmax,
                "prediction": report.prediction,
                "optimum_lambda": report.optimum_lambda,
                "unique": report.unique,
            }),
        ));
    }
    Ok(out)
}

/// Quotient-computed lambda of the predicted construction lies in
/// [closed form of S_{n,kappa}, sqrt((4 kappa + t)(n-1))]. The chain
/// head sqrt(kappa n) <= closed form is checked where it holds
/// (kappa >= 2 and n large enough); other grid points are recorded as
/// edge cases.
pub fn verify_lambda_bounds_on_constructions(
    grid: &[(usize, CycleSpec)],
) -> Result<VerificationRecord> {
    let params = json!({
        "grid": grid
            .iter()
            .map(|(n, s)| json!({ "n": n, "spec": s.to_string() }))
            .collect::<Vec<_>>(),
    });
    let mut points = Vec::new();
    for (n, spec) in grid {
        let (n, kappa, t) = (*n, spec.kappa(), spec.t());
        let construction = match spex_prediction(n, spec) {
            Some(g) => g,
            None => {
                points.push(json!({ "n": n, "spec": spec.to_string(), "note": "n too small" }));
                continue;
            }
        };
        let cells = coarsest_equitable_partition(&construction);
        let lambda = quotient_spectral_radius(&construction, &cells)?;
        let lower = lambda_S_closed_form(n, kappa);
        let upper = ((4 * kappa + t) as f64 * (n as f64 - 1.0)).sqrt();
        if lambda < lower - 1e-8 || lambda > upper + 1e-8 {
            return Ok(VerificationRecord::new(
                "lemma-3.9",
                params,
                Verdict::Fail,
                json!({
                    "n": n,
                    "spec": spec.to_string(),
                    "lambda": lambda,
                    "lower": lower,
                    "upper": upper,
                }),
            ));
        }
        let chain_head = (kappa as f64 * n as f64).sqrt();
        let chain_holds = chain_head <= lower + 1e-9;
        if kappa >= 2 && n >= kappa + 2 && !chain_holds {
            // sqrt(kappa n) <= lambda(S_{n,kappa}) can only fail very
            // close to the n = kappa boundary; record, do not fail
            points.push(json!({
                "n": n,
                "spec": spec.to_string(),
                "lambda": lambda,
                "note": "chain head exceeds closed form at boundary n",
            }));
            continue;
        }
        points.push(json!({
            "n": n,
            "spec": spec.to_string(),
            "lambda": lambda,
            "lower": lower,
            "upper": upper,
            "chain_head_holds": chain_holds,
        }));
    }
    Ok(VerificationRecord::new(
        "lemma-3.9",
        params,
        Verdict::Pass,
        Value::Array(points),
    ))
}

/// The predicted construction has no forbidden-cycle minor.
pub fn verify_minor_freeness(spec: &CycleSpec, n: usize) -> Result<VerificationRecord> {
    if n > 12 {
        return Err(Error::TooLarge { n, limit: 12 });
    }
    let pattern = make_intersecting_even_cycles(spec);
    if pattern.n() > 8 {
        return Err(Error::TooLarge { n: pattern.n(), limit: 8 });
    }
    let construction = spex_prediction(n, spec).ok_or_else(|| {
        Error::InvalidParameter(format!("n = {n} too small for the construction"))
    })?;
    let has = contains_minor(&construction, &pattern)?;
    let params = json!({ "spec": spec.to_string(), "n": n });
    Ok(VerificationRecord::new(
        "remark-6.2",
        params,
        if has { Verdict::Fail } else { Verdict::Pass },
        json!({
            "construction": encode(&construction),
            "pattern": encode(&pattern),
            "contains_minor": has,
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(ks: &[usize]) -> CycleSpec {
        CycleSpec::new(ks.to_vec()).unwrap()
    }

    #[test]
    fn containment_lemma_small_specs() {
        for ks in [vec![3], vec![3, 3], vec![3, 4]] {
            let r = verify_lemma_containment_Kab(&spec(&ks)).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "spec {ks:?}");
        }
        assert!(verify_lemma_containment_Kab(&spec(&[2])).is_err());
    }

    #[test]
    fn almost_bipartite_lemma() {
        for ks in [vec![2, 2], vec![3], vec![2, 3]] {
            let r = verify_lemma_almost_bipartite(&spec(&ks)).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "spec {ks:?}");
        }
    }

    #[test]
    fn degree_squares_small() {
        let r = verify_theorem_degree_squares(6, &spec(&[2])).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(verify_theorem_degree_squares(9, &spec(&[2])).is_err());
    }

    #[test]
    fn disjoint_paths_sampling() {
        let r = verify_lemma_disjoint_paths(300, 10, &spec(&[2]), 42).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        // the hypotheses must actually fire for the run to mean anything
        let fired = r.evidence["path_hypothesis_triggers"].as_u64().unwrap()
            + r.evidence["threshold_hypothesis_triggers"].as_u64().unwrap();
        assert!(fired > 0);
        // reproducible from the recorded seed
        let again = verify_lemma_disjoint_paths(300, 10, &spec(&[2]), 42).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            serde_json::to_string(&again).unwrap()
        );
    }

    #[test]
    fn main_theorem_records() {
        let records = verify_main_theorems(5, 6, &spec(&[2])).unwrap();
        assert_eq!(records.len(), 2);
        for r in &records {
            assert_ne!(r.verdict, Verdict::Fail);
            assert_eq!(r.claim_id, "theorem-1.5");
        }
    }

    #[test]
    fn lambda_bounds_grid() {
        let grid = vec![
            (100, spec(&[2])),
            (1000, spec(&[3])),
            (10_000, spec(&[2, 2])),
            (4, spec(&[3])), // boundary n = kappa + 2
        ];
        let r = verify_lambda_bounds_on_constructions(&grid).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn minor_freeness_examples() {
        let r = verify_minor_freeness(&spec(&[3]), 10).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let r = verify_minor_freeness(&spec(&[2]), 10).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        // 9-vertex pattern exceeds the minor checker's cap
        assert!(verify_minor_freeness(&spec(&[2, 3]), 10).is_err());
    }
}
