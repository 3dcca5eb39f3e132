//! VF2-style backtracking search for a (non-induced) subgraph
//! embedding, with degree and connectivity pruning.

use crate::graph::Graph;
use crate::{Error, Result};

/// Finds an injective map V(h) -> V(g) preserving adjacency (subgraph,
/// not induced), or None. Host must have at most 64 vertices and at
/// least as many as the pattern.
pub fn contains_subgraph(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    if g.n() > 64 {
        return Err(Error::TooLarge { n: g.n(), limit: 64 });
    }
    if h.n() > g.n() {
        return Err(Error::InvalidParameter(format!(
            "pattern has {} vertices, host only {}",
            h.n(),
            g.n()
        )));
    }
    if h.n() == 0 {
        return Ok(Some(vec![]));
    }
    let g_rows = g.dense_rows()?;
    let hn = h.n();
    let h_deg: Vec<usize> = (0..hn).map(|v| h.degree(v).unwrap()).collect();
    let g_deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v).unwrap()).collect();

    // order pattern vertices: start at max degree, then prefer vertices
    // with the most already-ordered neighbors (ties by degree)
    let mut order: Vec<usize> = Vec::with_capacity(hn);
    let mut placed = vec![false; hn];
    while order.len() < hn {
        let next = (0..hn)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let connected = h.neighbors(v).iter().filter(|&&u| placed[u]).count();
                (connected, h_deg[v], std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }

    let mut map = vec![usize::MAX; hn];
    let mut used: u64 = 0;
    let found = embed(g, g_rows, &g_deg, h, &h_deg, &order, 0, &mut map, &mut used);
    if found {
        // re-validate the witness edge by edge before reporting
        for (u, v) in h.edges() {
            assert!(g.has_edge(map[u], map[v]), "witness failed validation");
        }
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn embed(
    g: &Graph,
    g_rows: &[u64],
    g_deg: &[usize],
    h: &Graph,
    h_deg: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    // candidates must cover all mapped pattern neighbors
    let mut cand: u64 = !*used & if g.n() >= 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut anchored = false;
    for q in h.neighbors(p) {
        if map[q] != usize::MAX {
            cand &= g_rows[map[q]];
            anchored = true;
        }
    }
    let _ = anchored;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if g_deg[w] < h_deg[p] {
            continue;
        }
        map[p] = w;
        *used |= 1 << w;
        if embed(g, g_rows, g_deg, h, h_deg, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << w);
        map[p] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{make_K, make_S_plus};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    #[test]
    fn c6_inside_k33() {
        let w = contains_subgraph(&make_K(3, 3), &cycle(6)).unwrap();
        assert!(w.is_some());
    }

    #[test]
    fn c4_not_in_c6() {
        assert!(contains_subgraph(&cycle(6), &cycle(4)).unwrap().is_none());
    }

    #[test]
    fn p4_in_c4() {
        assert!(contains_subgraph(&cycle(4), &path(4)).unwrap().is_some());
    }

    #[test]
    fn size_violation() {
        assert!(contains_subgraph(&cycle(4), &cycle(5)).is_err());
    }

    #[test]
    fn empty_pattern() {
        assert_eq!(contains_subgraph(&cycle(4), &Graph::new(0)).unwrap(), Some(vec![]));
        // 2 isolated pattern vertices embed anywhere
        assert!(contains_subgraph(&cycle(4), &Graph::new(2)).unwrap().is_some());
    }

    #[test]
    fn c6_free_s_plus() {
        let g = make_S_plus(9, 2).unwrap();
        assert!(contains_subgraph(&g, &cycle(6)).unwrap().is_none());
    }
}
