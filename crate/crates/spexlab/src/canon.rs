//! Canonical labeling for graphs on at most 64 vertices: color
//! refinement plus full backtracking over refined cells. Correctness
//! over speed; callers stay at enumeration scale (n <= 10ish).

use crate::graph::Graph;
use crate::Result;

/// Output of a canonical run.
pub struct Canonical {
    /// Canonical graph6 line; equal strings iff isomorphic graphs.
    pub bytes: Vec<u8>,
    /// The graph relabeled canonically.
    pub graph: Graph,
    /// Original vertices that occupy canonical position n-1 in some
    /// optimal labeling. This is one automorphism orbit.
    pub last_orbit: Vec<usize>,
}

/// Canonical byte string: equal iff isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(canonicalize(g)?.bytes)
}

/// Full canonical data (relabeled graph plus last-position orbit).
pub fn canonicalize(g: &Graph) -> Result<Canonical> {
    let rows = g.dense_rows()?;
    let n = g.n();
    if n == 0 {
        return Ok(Canonical {
            bytes: crate::graph6::encode(g).into_bytes(),
            graph: g.clone(),
            last_orbit: vec![],
        });
    }
    let mut search = Search {
        rows,
        n,
        best_code: None,
        best_perm: Vec::new(),
        last_orbit_mask: 0,
    };
    let initial = refine(rows, n, vec![(0..n).collect()]);
    search.dfs(initial);
    let perm = search.best_perm;
    // perm[v] = canonical label of v
    let canon_graph = g.relabel(&perm);
    let bytes = crate::graph6::encode(&canon_graph).into_bytes();
    let mut last_orbit: Vec<usize> =
        (0..n).filter(|&v| search.last_orbit_mask >> v & 1 == 1).collect();
    last_orbit.sort_unstable();
    Ok(Canonical { bytes, graph: canon_graph, last_orbit })
}

type Partition = Vec<Vec<usize>>;

/// Iterated 1-WL refinement: split cells by the vector of neighbor
/// counts into every cell, subcells ordered by count vector.
fn refine(rows: &[u64], _n: usize, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut new_cells: Partition = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                new_cells.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let key: Vec<u32> =
                        masks.iter().map(|&m| (rows[v] & m).count_ones()).collect();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    new_cells.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    if i - start != cell.len() {
                        changed = true;
                    }
                    start = i;
                }
            }
        }
        cells = new_cells;
        if !changed {
            return cells;
        }
    }
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    best_code: Option<Vec<u64>>,
    best_perm: Vec<usize>,
    last_orbit_mask: u64,
}

impl Search<'_> {
    fn dfs(&mut self, cells: Partition) {
        if let Some(target) = cells.iter().position(|c| c.len() > 1) {
            for i in 0..cells[target].len() {
                let mut next: Partition = Vec::with_capacity(cells.len() + 1);
                for (j, cell) in cells.iter().enumerate() {
                    if j == target {
                        let v = cell[i];
                        next.push(vec![v]);
                        next.push(cell.iter().copied().filter(|&u| u != v).collect());
                    } else {
                        next.push(cell.clone());
                    }
                }
                self.dfs(refine(self.rows, self.n, next));
            }
            return;
        }
        // discrete partition: cells[i] = [v] means label(v) = i
        let n = self.n;
        let mut perm = vec![0usize; n];
        let mut by_label = vec![0usize; n];
        for (label, cell) in cells.iter().enumerate() {
            perm[cell[0]] = label;
            by_label[label] = cell[0];
        }
        // pack upper triangle in row order under the new labels
        let nbits = n * (n - 1) / 2;
        let mut code = vec![0u64; (nbits + 63) / 64];
        let mut bit = 0;
        for i in 0..n {
            let row = self.rows[by_label[i]];
            for j in (i + 1)..n {
                if row >> by_label[j] & 1 == 1 {
                    code[bit / 64] |= 1u64 << (bit % 64);
                }
                bit += 1;
            }
        }
        match &self.best_code {
            Some(best) if *best < code => {}
            Some(best) if *best == code => {
                self.last_orbit_mask |= 1 << by_label[n - 1];
            }
            _ => {
                self.best_code = Some(code);
                self.best_perm = perm;
                self.last_orbit_mask = 1 << by_label[n - 1];
            }
        }
    }
}

/// Brute-force isomorphism by permutation search; test oracle for the
/// canonical form at tiny n.
pub fn isomorphic_brute_force(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    permute_check(g, h, &mut perm, 0)
}

fn permute_check(g: &Graph, h: &Graph, perm: &mut Vec<usize>, k: usize) -> bool {
    let n = g.n();
    if k == n {
        return g
            .edges()
            .iter()
            .all(|&(u, v)| h.has_edge(perm[u], perm[v]));
    }
    for i in k..n {
        perm.swap(k, i);
        // partial prune: edges among the first k+1 vertices must map
        let ok = (0..=k).all(|a| {
            (a + 1..=k).all(|b| g.has_edge(a, b) == h.has_edge(perm[a], perm[b]))
        });
        if ok && permute_check(g, h, perm, k + 1) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}
