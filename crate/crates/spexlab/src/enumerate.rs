//! Streaming generation of all non-isomorphic graphs on n vertices by
//! canonical augmentation, plus graph6 stream ingestion.

use crate::canon::canonicalize;
use crate::construct::CycleSpec;
use crate::graph::Graph;
use crate::subgraph::{contains_intersecting_even_cycles, contains_subgraph};
use crate::{Error, Result};
use rayon::prelude::*;
use std::collections::HashSet;
use std::io::BufRead;

/// Built-in generator cap; above this, feed an external graph6 stream.
pub const MAX_BUILTIN_N: usize = 9;

/// What to forbid as a subgraph.
#[derive(Clone, Debug)]
pub enum Forbidden {
    Spec(CycleSpec),
    Graph(Graph),
}

impl Forbidden {
    /// True iff g contains no copy of the forbidden pattern.
    pub fn is_free(&self, g: &Graph) -> Result<bool> {
        match self {
            Forbidden::Spec(spec) => {
                Ok(contains_intersecting_even_cycles(g, spec)?.is_none())
            }
            Forbidden::Graph(h) => {
                if h.n() > g.n() {
                    return Ok(true);
                }
                Ok(contains_subgraph(g, h)?.is_none())
            }
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct EnumFilter {
    pub connected_only: bool,
    pub min_edges: Option<usize>,
    pub max_edges: Option<usize>,
    pub freeness: Option<Forbidden>,
}

impl EnumFilter {
    fn validate(&self) -> Result<()> {
        if let (Some(lo), Some(hi)) = (self.min_edges, self.max_edges) {
            if lo > hi {
                return Err(Error::InvalidParameter(format!(
                    "min_edges {lo} > max_edges {hi}"
                )));
            }
        }
        Ok(())
    }

    fn post_accept(&self, g: &Graph) -> bool {
        if self.connected_only && !g.is_connected() {
            return false;
        }
        let e = g.edge_count();
        if self.min_edges.is_some_and(|lo| e < lo) {
            return false;
        }
        if self.max_edges.is_some_and(|hi| e > hi) {
            return false;
        }
        true
    }
}

/// All non-isomorphic graphs on n vertices passing the filter, exactly
/// one representative per class, in deterministic order.
///
/// Generation is canonical augmentation: each (m-1)-vertex
/// representative is extended by one vertex over every neighbor subset;
/// a child survives iff its new vertex lies in the canonical-last orbit
/// (so each class is produced from exactly one parent class), with
/// per-parent deduplication of subset orbits. Freeness is monotone
/// under edge addition, so non-free graphs are pruned as soon as they
/// appear; connectivity and edge windows are post-filters.
pub fn enumerate_graphs(n: usize, filter: &EnumFilter) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_BUILTIN_N {
        return Err(Error::InvalidParameter(format!(
            "built-in generator supports 1 <= n <= {MAX_BUILTIN_N}, got {n}"
        )));
    }
    filter.validate()?;
    let mut level: Vec<Graph> = vec![Graph::new(1)];
    for m in 2..=n {
        let results: Vec<Vec<Graph>> = level
            .par_iter()
            .map(|parent| extend_parent(parent, m, filter))
            .collect::<Result<_>>()?;
        level = results.into_iter().flatten().collect();
    }
    Ok(level.into_iter().filter(|g| filter.post_accept(g)).collect())
}

fn extend_parent(parent: &Graph, m: usize, filter: &EnumFilter) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    for nbrs in 0u64..(1u64 << (m - 1)) {
        let child = parent.with_added_vertex(nbrs)?;
        if let Some(forbidden) = &filter.freeness {
            if !forbidden.is_free(&child)? {
                continue;
            }
        }
        let canon = canonicalize(&child)?;
        if !canon.last_orbit.contains(&(m - 1)) {
            continue;
        }
        if seen.insert(canon.bytes) {
            out.push(canon.graph);
        }
    }
    Ok(out)
}

/// Brute-force class census: canonicalize every labeled graph on n
/// vertices and deduplicate. Oracle for the augmentation generator.
pub fn all_classes_brute_force(n: usize) -> Result<Vec<Vec<u8>>> {
    if n > 6 {
        return Err(Error::InvalidParameter("brute-force census capped at n = 6".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut forms = HashSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut g = Graph::new(n);
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        forms.insert(canonicalize(&g)?.bytes);
    }
    let mut out: Vec<Vec<u8>> = forms.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Decodes a graph6 stream line by line; malformed lines fail fast with
/// their 1-based line number. Blank lines are skipped.
pub fn stream_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(Error::Io(e))),
            Ok(l) if l.trim().is_empty() => None,
            Ok(l) => Some(crate::graph6::decode(&l).map_err(|e| match e {
                Error::Graph6 { msg, .. } => Error::Graph6 { msg, line: Some(i + 1) },
                other => other,
            })),
        })
}
