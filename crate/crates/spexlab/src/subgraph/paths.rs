//! Simple-path search and vertex-disjoint path packing with endpoints
//! in a designated side.

use crate::construct::CycleSpec;
use crate::graph::Graph;
use crate::{Error, Result};

/// t vertex-disjoint paths, path i on 2*k_i' + 1 vertices, both
/// endpoints of every path in side U; only U-U and U-W edges used.
#[derive(Clone, Debug)]
pub struct PathSystem {
    pub paths: Vec<Vec<usize>>,
    pub side_u: Vec<usize>,
    pub side_w: Vec<usize>,
}

/// Exhaustive search for a simple path on `ell` vertices. Prunes on the
/// count of vertices reachable from the growing end.
pub fn has_path_on(g: &Graph, ell: usize) -> Result<Option<Vec<usize>>> {
    if ell == 0 {
        return Err(Error::InvalidParameter("has_path_on: ell must be >= 1".into()));
    }
    if g.n() > 64 {
        return Err(Error::TooLarge { n: g.n(), limit: 64 });
    }
    if ell > g.n() {
        return Ok(None);
    }
    if ell == 1 {
        return Ok(Some(vec![0]));
    }
    let rows = g.dense_rows()?;
    for start in 0..g.n() {
        let mut path = vec![start];
        if extend_path(rows, ell, 1u64 << start, &mut path, usize::MAX) {
            for pair in path.windows(2) {
                assert!(g.has_edge(pair[0], pair[1]), "path witness invalid");
            }
            return Ok(Some(path));
        }
    }
    Ok(None)
}

/// Count of vertices reachable from `v` without touching `blocked`
/// (v itself excluded from blocked).
fn reachable_count(rows: &[u64], v: usize, blocked: u64) -> u32 {
    let mut seen = 1u64 << v;
    let mut frontier = seen;
    loop {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[u];
        }
        next &= !seen & !blocked;
        if next == 0 {
            return seen.count_ones();
        }
        seen |= next;
        frontier = next;
    }
}

/// DFS extension to a path on `ell` vertices. `must_end_in` restricts
/// the final vertex (usize::MAX = anywhere); endpoints beyond the first
/// also respect `min_end` ordering handled by callers.
fn extend_path(rows: &[u64], ell: usize, used: u64, path: &mut Vec<usize>, end_min: usize) -> bool {
    if path.len() == ell {
        return end_min == usize::MAX || *path.last().unwrap() > end_min;
    }
    let last = *path.last().unwrap();
    let need = (ell - path.len()) as u32;
    if reachable_count(rows, last, used & !(1u64 << last)) < need + 1 {
        return false;
    }
    let mut cand = rows[last] & !used;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(v);
        if extend_path(rows, ell, used | (1 << v), path, end_min) {
            return true;
        }
        path.pop();
    }
    false
}

/// Builds the restriction of g to edges inside U plus edges between U
/// and W (edges inside W dropped).
pub fn restrict_to_u_uw(g: &Graph, in_u: &[bool]) -> Graph {
    let mut out = Graph::new(g.n());
    for (u, v) in g.edges() {
        if in_u[u] || in_u[v] {
            out.add_edge(u, v);
        }
    }
    out
}

/// Backtracking search for t disjoint paths of orders 2k_i' + 1 with
/// all endpoints in U, using only U-U and U-W edges. Exhaustive at
/// n <= 32 scale.
pub fn find_disjoint_path_system(
    g: &Graph,
    side_u: &[usize],
    side_w: &[usize],
    spec: &CycleSpec,
) -> Result<Option<PathSystem>> {
    if g.n() > 64 {
        return Err(Error::TooLarge { n: g.n(), limit: 64 });
    }
    let mut in_u = vec![false; g.n()];
    let mut seen = vec![false; g.n()];
    for &v in side_u {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        in_u[v] = true;
        seen[v] = true;
    }
    for &v in side_w {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if seen[v] {
            return Err(Error::OverlappingSets(v));
        }
        seen[v] = true;
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::InvalidParameter("U and W must partition V".into()));
    }
    let restricted = restrict_to_u_uw(g, &in_u);
    let rows = restricted.dense_rows()?;
    let u_mask: u64 = side_u.iter().fold(0u64, |m, &v| m | 1 << v);

    // orders searched longest-first
    let mut orders: Vec<usize> = spec.ks().iter().rev().map(|&k| 2 * (k - 1) + 1).collect();
    orders.sort_unstable_by(|a, b| b.cmp(a));

    let mut paths: Vec<Vec<usize>> = Vec::new();
    if place_paths(rows, u_mask, &orders, 0, 0, &mut paths) {
        let system = PathSystem {
            paths,
            side_u: side_u.to_vec(),
            side_w: side_w.to_vec(),
        };
        validate(&restricted, &in_u, &orders, &system);
        Ok(Some(system))
    } else {
        Ok(None)
    }
}

fn place_paths(
    rows: &[u64],
    u_mask: u64,
    orders: &[usize],
    idx: usize,
    used: u64,
    paths: &mut Vec<Vec<usize>>,
) -> bool {
    if idx == orders.len() {
        return true;
    }
    let order = orders[idx];
    // equal-order slots interchangeable: force increasing start vertices
    let min_start = if idx > 0 && orders[idx - 1] == order {
        paths[idx - 1][0] + 1
    } else {
        0
    };
    if min_start >= 64 {
        return false;
    }
    let mut starts = u_mask & !used & (u64::MAX << min_start);
    while starts != 0 {
        let s = starts.trailing_zeros() as usize;
        starts &= starts - 1;
        let mut path = vec![s];
        if extend_system_path(rows, u_mask, order, used | (1 << s), &mut path, orders, idx, paths) {
            return true;
        }
    }
    false
}

#[allow(clippy::too_many_arguments)]
fn extend_system_path(
    rows: &[u64],
    u_mask: u64,
    order: usize,
    used: u64,
    path: &mut Vec<usize>,
    orders: &[usize],
    idx: usize,
    paths: &mut Vec<Vec<usize>>,
) -> bool {
    if path.len() == order {
        let end = *path.last().unwrap();
        if u_mask >> end & 1 == 0 || end <= path[0] {
            return false;
        }
        paths.push(path.clone());
        if place_paths(rows, u_mask, orders, idx + 1, used, paths) {
            return true;
        }
        paths.pop();
        return false;
    }
    let last = *path.last().unwrap();
    let mut cand = rows[last] & !used;
    // the final vertex must land in U
    if path.len() + 1 == order {
        cand &= u_mask;
    }
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(v);
        if extend_system_path(rows, u_mask, order, used | (1 << v), path, orders, idx, paths) {
            return true;
        }
        path.pop();
    }
    false
}

fn validate(restricted: &Graph, in_u: &[bool], orders: &[usize], sys: &PathSystem) {
    assert_eq!(sys.paths.len(), orders.len());
    let mut seen = vec![false; restricted.n()];
    for (path, &order) in sys.paths.iter().zip(orders) {
        assert_eq!(path.len(), order, "path order mismatch");
        assert!(in_u[path[0]] && in_u[*path.last().unwrap()], "endpoint outside U");
        for pair in path.windows(2) {
            assert!(restricted.has_edge(pair[0], pair[1]), "path uses a missing edge");
        }
        for &v in path {
            assert!(!seen[v], "paths overlap");
            seen[v] = true;
        }
    }
}
