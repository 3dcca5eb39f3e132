//! Deterministic builders for the named graph families. Fixed labeling
//! conventions throughout: clique vertices first, added edge at
//! {k, k+1}, cycle/path center at vertex 0, so tests can assert exact
//! edge sets rather than isomorphism classes.

use crate::graph::Graph;
use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

/// The multiset {k1, ..., kt} defining the intersecting even cycle
/// C_{2k1, ..., 2kt}; kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleSpec {
    ks: Vec<usize>,
}

impl CycleSpec {
    pub fn new(mut ks: Vec<usize>) -> Result<Self> {
        if ks.is_empty() {
            return Err(Error::InvalidParameter("cycle spec needs t >= 1".into()));
        }
        if ks.iter().any(|&k| k < 2) {
            return Err(Error::InvalidParameter("every k_i must be >= 2".into()));
        }
        ks.sort_unstable();
        Ok(CycleSpec { ks })
    }

    /// Parses "2,2,3" into the spec; entries are the k_i values, so
    /// "2,3" means C_{4,6}.
    pub fn parse(s: &str) -> Result<Self> {
        let ks: Vec<usize> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad spec entry {p:?}")))
            })
            .collect::<Result<_>>()?;
        CycleSpec::new(ks)
    }

    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    /// Number of cycles t.
    pub fn t(&self) -> usize {
        self.ks.len()
    }

    /// kappa = sum(k_i - 1).
    pub fn kappa(&self) -> usize {
        self.ks.iter().sum::<usize>() - self.ks.len()
    }

    /// Vertex count of C_{2k1,...,2kt}: 2*kappa + t + 1.
    pub fn vertex_count(&self) -> usize {
        2 * self.kappa() + self.t() + 1
    }

    pub fn all_fours(&self) -> bool {
        self.ks.iter().all(|&k| k == 2)
    }

    pub fn max_k(&self) -> usize {
        *self.ks.last().unwrap()
    }
}

impl fmt::Display for CycleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ks.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// t1 even cycles plus t2 paths on 2p_i vertices, all meeting only at
/// the center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclePathSpec {
    cycle_ks: Vec<usize>,
    path_ps: Vec<usize>,
}

impl CyclePathSpec {
    pub fn new(mut cycle_ks: Vec<usize>, mut path_ps: Vec<usize>) -> Result<Self> {
        if cycle_ks.is_empty() && path_ps.is_empty() {
            return Err(Error::InvalidParameter("need t1 + t2 >= 1".into()));
        }
        if cycle_ks.iter().chain(&path_ps).any(|&k| k < 2) {
            return Err(Error::InvalidParameter("every k_i and p_i must be >= 2".into()));
        }
        cycle_ks.sort_unstable();
        path_ps.sort_unstable();
        Ok(CyclePathSpec { cycle_ks, path_ps })
    }

    pub fn cycle_ks(&self) -> &[usize] {
        &self.cycle_ks
    }

    pub fn path_ps(&self) -> &[usize] {
        &self.path_ps
    }

    /// kappa = (sum k_i + sum p_i) - (t1 + t2).
    pub fn kappa(&self) -> usize {
        self.cycle_ks.iter().chain(&self.path_ps).sum::<usize>()
            - (self.cycle_ks.len() + self.path_ps.len())
    }
}

/// S_{n,k} = K_k joined to (n-k) isolated vertices. Vertices 0..k form
/// the clique.
#[allow(non_snake_case)]
pub fn make_S(n: usize, k: usize) -> Result<Graph> {
    if k > n {
        return Err(Error::InvalidParameter(format!("make_S: k={k} > n={n}")));
    }
    let mut g = Graph::new(n);
    for u in 0..k {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// S_{n,k}+ : S_{n,k} plus the single edge {k, k+1} in the independent
/// side.
#[allow(non_snake_case)]
pub fn make_S_plus(n: usize, k: usize) -> Result<Graph> {
    if n < k + 2 {
        return Err(Error::InvalidParameter(format!("make_S_plus: need n >= k+2, got n={n}, k={k}")));
    }
    let mut g = make_S(n, k)?;
    g.add_edge(k, k + 1);
    Ok(g)
}

/// F_{n,k} = K_k joined to a maximal matching on n-k vertices; the
/// unmatched vertex, if any, is the last one.
#[allow(non_snake_case)]
pub fn make_F(n: usize, k: usize) -> Result<Graph> {
    if k > n {
        return Err(Error::InvalidParameter(format!("make_F: k={k} > n={n}")));
    }
    let mut g = make_S(n, k)?;
    let mut v = k;
    while v + 1 < n {
        g.add_edge(v, v + 1);
        v += 2;
    }
    Ok(g)
}

/// M_k: floor(k/2) disjoint edges plus (k mod 2) isolated vertex.
pub fn make_matching(k: usize) -> Graph {
    let mut g = Graph::new(k);
    let mut v = 0;
    while v + 1 < k {
        g.add_edge(v, v + 1);
        v += 2;
    }
    g
}

/// C_{2k1,...,2kt}: t even cycles intersecting exactly at vertex 0.
pub fn make_intersecting_even_cycles(spec: &CycleSpec) -> Graph {
    let mut g = Graph::new(spec.vertex_count());
    let mut next = 1;
    for &k in spec.ks() {
        // cycle on vertices 0, next, next+1, ..., next + 2k - 2
        let len = 2 * k - 1;
        let first = next;
        let last = next + len - 1;
        g.add_edge(0, first);
        for v in first..last {
            g.add_edge(v, v + 1);
        }
        g.add_edge(last, 0);
        next += len;
    }
    g
}

/// t1 even cycles and t2 paths on 2p_i vertices, all meeting only at
/// vertex 0; each path is attached at one end (a 2p-cycle with one
/// center-adjacent edge deleted).
pub fn make_intersecting_cycles_paths(spec: &CyclePathSpec) -> Graph {
    let n = 1
        + spec.cycle_ks().iter().map(|&k| 2 * k - 1).sum::<usize>()
        + spec.path_ps().iter().map(|&p| 2 * p - 1).sum::<usize>();
    let mut g = Graph::new(n);
    let mut next = 1;
    for &k in spec.cycle_ks() {
        let len = 2 * k - 1;
        let first = next;
        let last = next + len - 1;
        g.add_edge(0, first);
        for v in first..last {
            g.add_edge(v, v + 1);
        }
        g.add_edge(last, 0);
        next += len;
    }
    for &p in spec.path_ps() {
        let len = 2 * p - 1;
        let first = next;
        let last = next + len - 1;
        g.add_edge(0, first);
        for v in first..last {
            g.add_edge(v, v + 1);
        }
        next += len;
    }
    g
}

/// Complete bipartite K_{a,b}; side A is 0..a, side B is a..a+b.
#[allow(non_snake_case)]
pub fn make_K(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

/// K_{a,b}^p: K_{a,b} plus a path on the first three B-side vertices.
#[allow(non_snake_case)]
pub fn make_Kp(a: usize, b: usize) -> Result<Graph> {
    if b < 3 {
        return Err(Error::InvalidParameter(format!("make_Kp: need b >= 3, got {b}")));
    }
    let mut g = make_K(a, b);
    g.add_edge(a, a + 1);
    g.add_edge(a + 1, a + 2);
    Ok(g)
}

/// K_{a,b}^m: K_{a,b} plus two disjoint edges inside the B side.
#[allow(non_snake_case)]
pub fn make_Km(a: usize, b: usize) -> Result<Graph> {
    if b < 4 {
        return Err(Error::InvalidParameter(format!("make_Km: need b >= 4, got {b}")));
    }
    let mut g = make_K(a, b);
    g.add_edge(a, a + 1);
    g.add_edge(a + 2, a + 3);
    Ok(g)
}
