//! Adjacency spectral radius: shifted power iteration with residual
//! certificates, equitable-partition quotient shortcuts, closed forms,
//! and exact tie-breaking via integer characteristic polynomials.

pub mod exact;

use crate::construct::CycleSpec;
use crate::graph::Graph;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use std::cmp::Ordering;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 1_000_000;

/// Spectral radius estimate with a residual certificate.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralResult {
    /// Rayleigh-quotient estimate of lambda(G).
    pub lambda: f64,
    /// Perron vector scaled to max entry 1; zeros off the winning
    /// component of a disconnected graph.
    pub perron: Vec<f64>,
    /// ||A x - lambda x||_inf at the returned vector. Convergence is
    /// judged relative: residual <= tol * max(1, lambda).
    pub residual: f64,
    pub iterations: usize,
    /// False when max_iter ran out with residual above tol; lambda then
    /// holds the best estimate.
    pub converged: bool,
}

fn matvec(g: &Graph, verts: &[usize], index: &[usize], x: &[f64], out: &mut [f64]) {
    for (i, &v) in verts.iter().enumerate() {
        let mut acc = 0.0;
        g.for_each_neighbor(v, |w| acc += x[index[w]]);
        out[i] = acc;
    }
}

/// Power iteration on one connected component; returns (lambda, vector
/// over comp indices, residual, iterations, converged).
fn component_power(
    g: &Graph,
    comp: &[usize],
    index: &[usize],
    tol: f64,
    max_iter: usize,
) -> (f64, Vec<f64>, f64, usize, bool) {
    let m = comp.len();
    if m == 1 {
        return (0.0, vec![1.0], 0.0, 0, true);
    }
    let mut x = vec![1.0f64; m];
    let mut ax = vec![0.0f64; m];
    let mut lambda = 0.0;
    let mut residual = f64::INFINITY;
    let mut best_residual = f64::INFINITY;
    let mut stalled = 0usize;
    let mut iterations = 0;
    while iterations < max_iter {
        iterations += 1;
        matvec(g, comp, index, &x, &mut ax);
        let mut num = 0.0;
        let mut den = 0.0;
        for i in 0..m {
            num += ax[i] * x[i];
            den += x[i] * x[i];
        }
        lambda = num / den;
        residual = (0..m)
            .map(|i| (ax[i] - lambda * x[i]).abs())
            .fold(0.0, f64::max);
        // relative test: at lambda ~ sqrt(kn) an absolute residual of
        // tol is below f64 rounding noise of the row sums
        if residual <= tol * lambda.max(1.0) {
            break;
        }
        // rounding noise can floor the residual above any tiny tol;
        // stop once it stops improving
        if residual < best_residual * 0.999 {
            best_residual = residual;
            stalled = 0;
        } else {
            stalled += 1;
            if stalled >= 200 {
                break;
            }
        }
        // shifted step y = (A + sI) x; s tracks the Rayleigh estimate,
        // which both defeats bipartite period-2 cycling and damps the
        // most negative eigenvalue (join graphs have lambda_min close
        // to -lambda_1, where a unit shift converges impractically
        // slowly)
        let shift = lambda.max(1.0);
        let mut norm = 0.0f64;
        for i in 0..m {
            ax[i] += shift * x[i];
            norm = norm.max(ax[i]);
        }
        for i in 0..m {
            x[i] = ax[i] / norm;
        }
    }
    let max = x.iter().cloned().fold(0.0f64, f64::max);
    for v in x.iter_mut() {
        *v /= max;
    }
    (lambda, x, residual, iterations, residual <= tol * lambda.max(1.0))
}

/// Spectral radius and Perron vector via shifted power iteration from
/// the all-ones vector. Disconnected graphs are handled per component;
/// the reported lambda is the component maximum.
pub fn power_iteration(g: &Graph, tol: f64, max_iter: usize) -> Result<SpectralResult> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("power_iteration: empty graph".into()));
    }
    if tol <= 0.0 {
        return Err(Error::InvalidParameter("power_iteration: tol must be positive".into()));
    }
    let comps = g.components();
    let mut index = vec![0usize; g.n()];
    let mut best: Option<(f64, usize, Vec<f64>, f64, bool)> = None;
    let mut iterations = 0;
    let mut all_converged = true;
    for (ci, comp) in comps.iter().enumerate() {
        for (i, &v) in comp.iter().enumerate() {
            index[v] = i;
        }
        let (lam, vec, res, iters, conv) = component_power(g, comp, &index, tol, max_iter);
        iterations += iters;
        all_converged &= conv;
        if best.as_ref().map_or(true, |b| lam > b.0) {
            best = Some((lam, ci, vec, res, conv));
        }
    }
    let (lambda, ci, vec, residual, _) = best.unwrap();
    let mut perron = vec![0.0f64; g.n()];
    for (i, &v) in comps[ci].iter().enumerate() {
        perron[v] = vec[i];
    }
    Ok(SpectralResult {
        lambda,
        perron,
        residual,
        iterations,
        converged: all_converged,
    })
}

/// Spectral radius of S_{n,k}: (k-1 + sqrt((k-1)^2 + 4k(n-k))) / 2.
#[allow(non_snake_case)]
pub fn lambda_S_closed_form(n: usize, k: usize) -> f64 {
    let n = n as f64;
    let k = k as f64;
    (k - 1.0 + ((k - 1.0).powi(2) + 4.0 * k * (n - k)).sqrt()) / 2.0
}

/// (lower, upper) bracket for lambda of an extremal C_{2k...}-free
/// graph: lower is the S_{n,kappa} closed form, upper is
/// sqrt((4 kappa + t)(n-1)).
pub fn lambda_bounds(n: usize, spec: &CycleSpec) -> Result<(f64, f64)> {
    let kappa = spec.kappa();
    if n <= kappa {
        return Err(Error::InvalidParameter(format!(
            "lambda_bounds: need n > kappa, got n={n}, kappa={kappa}"
        )));
    }
    let lower = lambda_S_closed_form(n, kappa);
    let upper = ((4 * kappa + spec.t()) as f64 * (n as f64 - 1.0)).sqrt();
    Ok((lower, upper))
}

/// Builds the quotient matrix of a vertex partition, verifying
/// equitability: entry (i,j) is the number of neighbors in cell j of
/// any vertex in cell i.
pub fn quotient_matrix(g: &Graph, classes: &[Vec<usize>]) -> Result<Vec<Vec<i64>>> {
    let n = g.n();
    let mut cell_of = vec![usize::MAX; n];
    for (ci, cell) in classes.iter().enumerate() {
        if cell.is_empty() {
            return Err(Error::NotEquitable(format!("cell {ci} is empty")));
        }
        for &v in cell {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if cell_of[v] != usize::MAX {
                return Err(Error::OverlappingSets(v));
            }
            cell_of[v] = ci;
        }
    }
    if cell_of.iter().any(|&c| c == usize::MAX) {
        return Err(Error::NotEquitable("partition does not cover all vertices".into()));
    }
    let c = classes.len();
    let mut q = vec![vec![0i64; c]; c];
    for (ci, cell) in classes.iter().enumerate() {
        for (vi, &v) in cell.iter().enumerate() {
            let mut counts = vec![0i64; c];
            g.for_each_neighbor(v, |w| counts[cell_of[w]] += 1);
            if vi == 0 {
                q[ci] = counts;
            } else if q[ci] != counts {
                return Err(Error::NotEquitable(format!(
                    "vertices {} and {v} of cell {ci} have different neighbor profiles",
                    cell[0]
                )));
            }
        }
    }
    Ok(q)
}

/// Largest eigenvalue of the quotient matrix of an equitable partition,
/// which equals lambda(G): exact characteristic polynomial plus
/// certified bisection on the largest real root.
pub fn quotient_spectral_radius(g: &Graph, classes: &[Vec<usize>]) -> Result<f64> {
    let q = quotient_matrix(g, classes)?;
    let a: Vec<Vec<BigInt>> = q
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let coeffs = exact::charpoly(&a);
    let p = exact::RatPoly::from_bigints(&coeffs);
    let eps = BigRational::new(BigInt::from(1), BigInt::from(10u64).pow(13));
    let (lo, hi, _) = exact::largest_root_interval(&p, &eps)
        .ok_or_else(|| Error::InvalidParameter("quotient matrix has no real eigenvalue".into()))?;
    let mid = (lo + hi) / BigRational::from_integer(BigInt::from(2));
    Ok(mid.to_f64().unwrap())
}

/// Coarsest equitable partition by iterated refinement; the cells carry
/// a deterministic order.
pub fn coarsest_equitable_partition(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return vec![];
    }
    let mut cell_of = vec![0usize; n];
    let mut num_cells = 1;
    loop {
        let mut keys: Vec<(Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut key = vec![0u32; num_cells + 1];
                key[0] = cell_of[v] as u32;
                g.for_each_neighbor(v, |w| key[1 + cell_of[w]] += 1);
                (key, v)
            })
            .collect();
        keys.sort();
        let mut new_cell_of = vec![0usize; n];
        let mut cell = 0;
        for i in 0..n {
            if i > 0 && keys[i].0 != keys[i - 1].0 {
                cell += 1;
            }
            new_cell_of[keys[i].1] = cell;
        }
        let new_num = cell + 1;
        if new_num == num_cells {
            break;
        }
        cell_of = new_cell_of;
        num_cells = new_num;
    }
    let mut cells = vec![Vec::new(); num_cells];
    for v in 0..n {
        cells[cell_of[v]].push(v);
    }
    cells
}

/// Lower-bound certificate: true iff A y >= c y entrywise, computed in
/// exact rational arithmetic; true certifies lambda(G) >= c.
pub fn certified_lower_bound(g: &Graph, y: &[f64], c: f64) -> Result<bool> {
    if y.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: y.len() });
    }
    if y.iter().any(|&v| v < 0.0 || !v.is_finite()) {
        return Err(Error::InvalidParameter("certified_lower_bound: y must be nonnegative".into()));
    }
    if y.iter().all(|&v| v == 0.0) {
        return Err(Error::InvalidParameter("certified_lower_bound: y must be nonzero".into()));
    }
    let yr: Vec<BigRational> = y
        .iter()
        .map(|&v| exact::rational_from_f64(v).unwrap())
        .collect();
    let cr = exact::rational_from_f64(c)
        .ok_or_else(|| Error::InvalidParameter("certified_lower_bound: c not finite".into()))?;
    for v in 0..g.n() {
        let mut ay = BigRational::zero();
        g.for_each_neighbor(v, |w| ay += &yr[w]);
        if ay < &cr * &yr[v] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Compares true spectral radii of two graphs (n <= 12 each) exactly:
/// integer characteristic polynomials, Sturm isolation of the largest
/// roots, interval narrowing until disjoint, with a shared-factor test
/// for equality.
pub fn exact_lambda_compare(g1: &Graph, g2: &Graph) -> Result<Ordering> {
    const LIMIT: usize = 12;
    for g in [g1, g2] {
        if g.n() > LIMIT {
            return Err(Error::TooLarge { n: g.n(), limit: LIMIT });
        }
        if g.n() == 0 {
            return Err(Error::InvalidParameter("exact_lambda_compare: empty graph".into()));
        }
    }
    let p1 = exact::RatPoly::from_bigints(&exact::charpoly_adjacency(g1)?);
    let p2 = exact::RatPoly::from_bigints(&exact::charpoly_adjacency(g2)?);
    if p1 == p2 {
        return Ok(Ordering::Equal);
    }
    let eps = BigRational::new(BigInt::from(1), BigInt::from(1u64 << 20));
    // adjacency matrices are real symmetric: a largest real root exists
    let (mut lo1, mut hi1, ch1) = exact::largest_root_interval(&p1, &eps).unwrap();
    let (mut lo2, mut hi2, ch2) = exact::largest_root_interval(&p2, &eps).unwrap();
    let gcd = p1.gcd(&p2);
    let gcd_chain = (gcd.degree() >= 1).then(|| exact::SturmChain::new(&gcd));
    for _ in 0..300 {
        if hi1 <= lo2 {
            return Ok(Ordering::Less);
        }
        if hi2 <= lo1 {
            return Ok(Ordering::Greater);
        }
        if let Some(chain) = &gcd_chain {
            let lo = if lo1 > lo2 { &lo1 } else { &lo2 }.clone();
            let hi = if hi1 < hi2 { &hi1 } else { &hi2 }.clone();
            if lo < hi && chain.count_roots(&lo, &hi) >= 1 {
                // a common root sits inside both isolating intervals, so
                // it is the largest root of each
                return Ok(Ordering::Equal);
            }
        }
        exact::shrink_step(&ch1, &mut lo1, &mut hi1);
        exact::shrink_step(&ch2, &mut lo2, &mut hi2);
    }
    // distinct algebraic numbers of degree <= 12 separate far above
    // 2^-300; reaching here means the roots coincide
    Ok(Ordering::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{make_F, make_K, make_S, make_S_plus};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[test]
    fn power_iteration_regular_graphs() {
        let r = power_iteration(&cycle(4), 1e-10, 100_000).unwrap();
        assert!(r.converged);
        assert!((r.lambda - 2.0).abs() <= 1e-9);
        assert!((r.perron.iter().cloned().fold(0.0, f64::max) - 1.0).abs() < 1e-15);

        let r = power_iteration(&complete(5), 1e-10, 100_000).unwrap();
        assert!((r.lambda - 4.0).abs() <= 1e-9);
    }

    #[test]
    fn power_iteration_s_family() {
        // lambda(S_{10,2}) = (1 + sqrt(65)) / 2
        let r = power_iteration(&make_S(10, 2).unwrap(), 1e-12, 1_000_000).unwrap();
        let want = (1.0 + 65f64.sqrt()) / 2.0;
        assert!((r.lambda - want).abs() < 1e-10);
        assert!(r.perron.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn disconnected_takes_component_max() {
        // K3 plus C4: lambda = 2, Perron zero on the K3 side? No:
        // lambda(K3) = 2 = lambda(C4); first component wins the tie.
        let mut g = Graph::new(7);
        for (u, v) in [(0, 1), (0, 2), (1, 2)] {
            g.add_edge(u, v);
        }
        for (u, v) in [(3, 4), (4, 5), (5, 6), (6, 3)] {
            g.add_edge(u, v);
        }
        let r = power_iteration(&g, 1e-10, 100_000).unwrap();
        assert!((r.lambda - 2.0).abs() < 1e-9);
        let max = r.perron.iter().cloned().fold(0.0f64, f64::max);
        assert!((max - 1.0).abs() < 1e-15);
        // exactly one component carries weight
        assert!(r.perron[..3].iter().all(|&x| x > 0.0) != r.perron[3..].iter().all(|&x| x > 0.0));
    }

    #[test]
    fn closed_form_examples() {
        assert!((lambda_S_closed_form(10, 1) - 3.0).abs() < 1e-12); // sqrt(n-1)
        let want = (1.0 + 33f64.sqrt()) / 2.0;
        assert!((lambda_S_closed_form(6, 2) - want).abs() < 1e-12);
    }

    #[test]
    fn closed_form_cross_validates_power_iteration() {
        for n in [10usize, 50, 200] {
            for k in 1..=4usize.min(n - 1) {
                let g = make_S(n, k).unwrap();
                let r = power_iteration(&g, 1e-12, 1_000_000).unwrap();
                assert!(
                    (r.lambda - lambda_S_closed_form(n, k)).abs() < 1e-8,
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn quotient_examples() {
        // F_{5,1}: cells {center}, {matched 4} -> [[0,4],[1,1]],
        // lambda = (1+sqrt(17))/2
        let f = make_F(5, 1).unwrap();
        let q = quotient_matrix(&f, &[vec![0], vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(q, vec![vec![0, 4], vec![1, 1]]);
        let lam = quotient_spectral_radius(&f, &[vec![0], vec![1, 2, 3, 4]]).unwrap();
        assert!((lam - (1.0 + 17f64.sqrt()) / 2.0).abs() < 1e-12);

        // K_{3,4} with its sides: lambda = sqrt(12)
        let k = make_K(3, 4);
        let lam = quotient_spectral_radius(&k, &[vec![0, 1, 2], vec![3, 4, 5, 6]]).unwrap();
        assert!((lam - 12f64.sqrt()).abs() < 1e-12);

        // S_{n,k}+ quotient [[k-1,2,n-k-2],[k,1,0],[k,0,0]]
        let (n, k) = (20usize, 2usize);
        let g = make_S_plus(n, k).unwrap();
        let classes = vec![
            (0..k).collect::<Vec<_>>(),
            vec![k, k + 1],
            (k + 2..n).collect::<Vec<_>>(),
        ];
        let q = quotient_matrix(&g, &classes).unwrap();
        assert_eq!(
            q,
            vec![
                vec![k as i64 - 1, 2, (n - k - 2) as i64],
                vec![k as i64, 1, 0],
                vec![k as i64, 0, 0]
            ]
        );
        let lam_q = quotient_spectral_radius(&g, &classes).unwrap();
        let lam_p = power_iteration(&g, 1e-12, 1_000_000).unwrap().lambda;
        assert!((lam_q - lam_p).abs() < 1e-9);
    }

    #[test]
    fn quotient_rejects_non_equitable() {
        let f = make_F(6, 1).unwrap(); // has an unmatched vertex
        let err = quotient_matrix(&f, &[vec![0], (1..6).collect()]);
        assert!(matches!(err, Err(Error::NotEquitable(_))));
    }

    #[test]
    fn coarsest_partition_is_equitable() {
        for g in [make_S_plus(9, 2).unwrap(), make_F(8, 3).unwrap(), cycle(6)] {
            let cells = coarsest_equitable_partition(&g);
            assert!(quotient_matrix(&g, &cells).is_ok());
        }
    }

    #[test]
    fn certified_bound_examples() {
        let c4 = cycle(4);
        assert!(certified_lower_bound(&c4, &[1.0; 4], 2.0).unwrap());
        assert!(!certified_lower_bound(&c4, &[1.0; 4], 2.1).unwrap());

        // S_{6,2}: Perron estimate rounded down certifies lambda - 1e-6
        let g = make_S(6, 2).unwrap();
        let r = power_iteration(&g, 1e-12, 1_000_000).unwrap();
        assert!(certified_lower_bound(&g, &r.perron, r.lambda - 1e-6).unwrap());

        assert!(certified_lower_bound(&c4, &[1.0; 3], 1.0).is_err());
        assert!(certified_lower_bound(&c4, &[0.0; 4], 1.0).is_err());
    }

    #[test]
    fn exact_compare_examples() {
        let c4 = cycle(4);
        assert_eq!(exact_lambda_compare(&c4, &c4).unwrap(), Ordering::Equal);
        assert_eq!(
            exact_lambda_compare(&complete(5), &complete(4)).unwrap(),
            Ordering::Greater
        );
        // bowtie (1+sqrt(17))/2 vs C5 (lambda 2)
        let bow = make_F(5, 1).unwrap();
        assert_eq!(exact_lambda_compare(&bow, &cycle(5)).unwrap(), Ordering::Greater);
        // equal radii, different graphs: C4 vs K_{1,4} (both lambda 2)
        let star = make_S(5, 1).unwrap();
        assert_eq!(exact_lambda_compare(&c4, &star).unwrap(), Ordering::Equal);
    }

    #[test]
    fn exact_compare_matches_power_iteration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(2..=9);
            let mut g1 = Graph::new(n);
            let mut g2 = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        g1.add_edge(u, v);
                    }
                    if rng.gen_bool(0.5) {
                        g2.add_edge(u, v);
                    }
                }
            }
            let l1 = power_iteration(&g1, 1e-12, 1_000_000).unwrap().lambda;
            let l2 = power_iteration(&g2, 1e-12, 1_000_000).unwrap().lambda;
            if (l1 - l2).abs() > 1e-6 {
                let want = if l1 < l2 { Ordering::Less } else { Ordering::Greater };
                assert_eq!(exact_lambda_compare(&g1, &g2).unwrap(), want);
            }
        }
    }

    #[test]
    fn lambda_bounds_bracket() {
        let spec = CycleSpec::new(vec![3]).unwrap();
        let (lo, hi) = lambda_bounds(100, &spec).unwrap();
        assert!((lo - (1.0 + 785f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!((hi - (9.0 * 99.0f64).sqrt()).abs() < 1e-12);
        // chain: sqrt(kappa n) <= lower (kappa >= 2 side of the chain;
        // at kappa = 1 the star radius sqrt(n-1) sits just below
        // sqrt(n)), upper < sqrt(5 kappa n)
        for n in [10usize, 100, 1000] {
            for ks in [vec![2], vec![2, 2], vec![3], vec![2, 3]] {
                let spec = CycleSpec::new(ks).unwrap();
                let kappa = spec.kappa() as f64;
                if n <= spec.kappa() {
                    continue;
                }
                let (lo, hi) = lambda_bounds(n, &spec).unwrap();
                if spec.kappa() >= 2 {
                    assert!(lo >= (kappa * n as f64).sqrt() - 1e-9);
                }
                assert!(hi < (5.0 * kappa * n as f64).sqrt());
            }
        }
    }

    #[test]
    fn edge_addition_monotone() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let tol = 1e-10;
        for _ in 0..500 {
            let n = rng.gen_range(2..=10);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v);
                    }
                }
            }
            let before = power_iteration(&g, tol, 1_000_000).unwrap().lambda;
            let non_edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !g.has_edge(u, v))
                .collect();
            if let Some(&(u, v)) = non_edges.first() {
                let mut g2 = g.clone();
                g2.add_edge(u, v);
                let after = power_iteration(&g2, tol, 1_000_000).unwrap().lambda;
                assert!(after >= before - tol);
            }
        }
    }
}
