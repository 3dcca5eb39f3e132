//! Specialized detector for intersecting even cycles: a center vertex
//! plus t vertex-disjoint cycles through it. Exhaustive, so "absent" is
//! a proof of freeness.

use crate::construct::CycleSpec;
use crate::graph::Graph;
use crate::{Error, Result};

/// Witness: the center plus each cycle as its non-center vertex
/// sequence (first and last are neighbors of the center).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    pub center: usize,
    pub cycles: Vec<Vec<usize>>,
}

/// Searches for t cycles of lengths 2k_t >= ... >= 2k_1 through a
/// common center, pairwise intersecting only there. Longer cycles are
/// placed first (they are scarcer); cycles of equal length are ordered
/// by their starting neighbor to kill duplicate work.
pub fn contains_intersecting_even_cycles(
    g: &Graph,
    spec: &CycleSpec,
) -> Result<Option<CycleWitness>> {
    if g.n() > 64 {
        return Err(Error::TooLarge { n: g.n(), limit: 64 });
    }
    if spec.vertex_count() > g.n() {
        return Ok(None);
    }
    let rows = g.dense_rows()?;
    // lengths in decreasing order
    let mut lens: Vec<usize> = spec.ks().iter().rev().map(|&k| 2 * k).collect();
    lens.sort_unstable_by(|a, b| b.cmp(a));
    let t = lens.len();

    let mut centers: Vec<usize> = (0..g.n()).collect();
    centers.sort_by_key(|&v| std::cmp::Reverse(rows[v].count_ones()));
    for &center in &centers {
        if (rows[center].count_ones() as usize) < 2 * t {
            continue;
        }
        let mut cycles: Vec<Vec<usize>> = Vec::with_capacity(t);
        let used = 1u64 << center;
        if place_cycle(rows, center, &lens, 0, used, &mut cycles) {
            let w = CycleWitness { center, cycles };
            validate(g, spec, &w);
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn place_cycle(
    rows: &[u64],
    center: usize,
    lens: &[usize],
    idx: usize,
    used: u64,
    cycles: &mut Vec<Vec<usize>>,
) -> bool {
    if idx == lens.len() {
        return true;
    }
    let len = lens[idx];
    // same-length slots are interchangeable: force increasing starts
    let min_start = if idx > 0 && lens[idx - 1] == len {
        cycles[idx - 1][0] + 1
    } else {
        0
    };
    let mut starts = rows[center] & !used;
    if min_start >= 64 {
        return false;
    }
    starts &= u64::MAX << min_start;
    while starts != 0 {
        let s = starts.trailing_zeros() as usize;
        starts &= starts - 1;
        let mut path = vec![s];
        // the cycle's non-center path has len - 1 vertices; one is
        // already placed
        if extend(rows, center, len - 2, used | (1 << s), &mut path, lens, idx, cycles) {
            return true;
        }
    }
    false
}

/// Extends the current cycle path to `remaining` more vertices; the
/// final vertex must close back to the center and exceed the start (one
/// traversal direction per cycle).
#[allow(clippy::too_many_arguments)]
fn extend(
    rows: &[u64],
    center: usize,
    remaining: usize,
    used: u64,
    path: &mut Vec<usize>,
    lens: &[usize],
    idx: usize,
    cycles: &mut Vec<Vec<usize>>,
) -> bool {
    let last = *path.last().unwrap();
    if remaining == 1 {
        // closing vertex: neighbor of both `last` and the center
        let mut cand = rows[last] & rows[center] & !used;
        // direction break: end > start
        cand &= u64::MAX.checked_shl(path[0] as u32 + 1).unwrap_or(0);
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            path.push(v);
            cycles.push(path.clone());
            if place_cycle(rows, center, lens, idx + 1, used | (1 << v), cycles) {
                return true;
            }
            cycles.pop();
            path.pop();
        }
        return false;
    }
    let mut cand = rows[last] & !used;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(v);
        if extend(rows, center, remaining - 1, used | (1 << v), path, lens, idx, cycles) {
            return true;
        }
        path.pop();
    }
    false
}

fn validate(g: &Graph, spec: &CycleSpec, w: &CycleWitness) {
    let mut lens: Vec<usize> = w.cycles.iter().map(|c| c.len() + 1).collect();
    lens.sort_unstable();
    let want: Vec<usize> = spec.ks().iter().map(|&k| 2 * k).collect();
    assert_eq!(lens, want, "witness cycle lengths mismatch");
    let mut seen = vec![false; g.n()];
    seen[w.center] = true;
    for cyc in &w.cycles {
        assert!(g.has_edge(w.center, cyc[0]), "witness edge missing");
        assert!(g.has_edge(w.center, *cyc.last().unwrap()), "witness edge missing");
        for pair in cyc.windows(2) {
            assert!(g.has_edge(pair[0], pair[1]), "witness edge missing");
        }
        for &v in cyc {
            assert!(!seen[v], "witness cycles overlap");
            seen[v] = true;
        }
    }
}
