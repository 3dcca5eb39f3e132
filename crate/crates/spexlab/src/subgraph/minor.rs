//! Toy-scale minor containment: breadth-first search over all edge
//! contractions (deduplicated by canonical form), testing subgraph
//! containment at every node. Vertex and edge deletions are covered by
//! the subgraph test; contractions inside branch sets by the search, so
//! together this exhausts all minors.

use crate::canon::canonical_form;
use crate::graph::Graph;
use crate::subgraph::contains_subgraph;
use crate::{Error, Result};
use std::collections::HashSet;

const MAX_PATTERN: usize = 8;
const MAX_HOST: usize = 12;

/// True iff h is a minor of g. Deliberately naive and size-capped.
pub fn contains_minor(g: &Graph, h: &Graph) -> Result<bool> {
    if h.n() > MAX_PATTERN {
        return Err(Error::TooLarge { n: h.n(), limit: MAX_PATTERN });
    }
    if g.n() > MAX_HOST {
        return Err(Error::TooLarge { n: g.n(), limit: MAX_HOST });
    }
    if h.n() == 0 {
        return Ok(true);
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut queue: Vec<Graph> = vec![g.clone()];
    seen.insert(canonical_form(g)?);
    while let Some(cur) = queue.pop() {
        if cur.n() >= h.n() && contains_subgraph(&cur, h)?.is_some() {
            return Ok(true);
        }
        if cur.n() <= h.n() {
            continue;
        }
        for (u, v) in cur.edges() {
            let contracted = cur.contract_edge(u, v);
            let key = canonical_form(&contracted)?;
            if seen.insert(key) {
                queue.push(contracted);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{make_S_plus, CycleSpec};

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
    fn subgraph_implies_minor() {
        assert!(contains_minor(&complete(4), &cycle(4)).unwrap());
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(contains_minor(&cycle(5), &p4).unwrap());
    }

    #[test]
    fn c6_contracts_to_k3() {
        assert!(contains_minor(&cycle(6), &cycle(3)).unwrap());
    }

    #[test]
    fn no_k4_minor_in_tree() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert!(!contains_minor(&star, &cycle(3)).unwrap());
        assert!(!contains_minor(&cycle(5), &complete(4)).unwrap());
    }

    #[test]
    fn s_plus_has_no_c46_minor() {
        let g = make_S_plus(10, 2).unwrap();
        let spec = CycleSpec::new(vec![2, 3]).unwrap();
        let pattern = crate::construct::make_intersecting_even_cycles(&spec);
        assert_eq!(pattern.n(), 9);
        // pattern exceeds the 8-vertex cap
        assert!(contains_minor(&g, &pattern).is_err());
        // C6 fits
        assert!(!contains_minor(&g, &cycle(6)).unwrap());
    }

    #[test]
    fn size_caps() {
        assert!(contains_minor(&Graph::new(13), &cycle(3)).is_err());
    }
}
