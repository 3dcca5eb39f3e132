//! Loop-free undirected graphs: dense bitset rows for n <= 64, sorted
//! sparse adjacency lists above that.

use crate::{Error, Result};

/// Vertex-count threshold between the dense and sparse representations.
pub const DENSE_LIMIT: usize = 64;

/// Hard cap on vertex count.
pub const MAX_VERTICES: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Debug)]
enum Adj {
    Dense(Vec<u64>),
    Sparse(Vec<Vec<u32>>),
}

/// An undirected simple graph.
///
/// Immutable by convention once constructed: builders call `add_edge`,
/// everything downstream only reads.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Adj,
}

impl Graph {
    /// Empty graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph too large: {n}");
        let adj = if n <= DENSE_LIMIT {
            Adj::Dense(vec![0u64; n])
        } else {
            Adj::Sparse(vec![Vec::new(); n])
        };
        Graph { n, adj }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.adj, Adj::Dense(_))
    }

    /// Dense bitset rows, available only when n <= 64.
    pub fn dense_rows(&self) -> Result<&[u64]> {
        match &self.adj {
            Adj::Dense(rows) => Ok(rows),
            Adj::Sparse(_) => Err(Error::TooLarge {
                n: self.n,
                limit: DENSE_LIMIT,
            }),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Adds the undirected edge {u, v}. Idempotent. Panics on a loop or
    /// out-of-range vertex.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range for n={}", self.n);
        match &mut self.adj {
            Adj::Dense(rows) => {
                rows[u] |= 1u64 << v;
                rows[v] |= 1u64 << u;
            }
            Adj::Sparse(lists) => {
                if let Err(pos) = lists[u].binary_search(&(v as u32)) {
                    lists[u].insert(pos, v as u32);
                }
                if let Err(pos) = lists[v].binary_search(&(u as u32)) {
                    lists[v].insert(pos, u as u32);
                }
            }
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || u == v {
            return false;
        }
        match &self.adj {
            Adj::Dense(rows) => rows[u] >> v & 1 == 1,
            Adj::Sparse(lists) => lists[u].binary_search(&(v as u32)).is_ok(),
        }
    }

    /// Degree |N1(v)|.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(match &self.adj {
            Adj::Dense(rows) => rows[v].count_ones() as usize,
            Adj::Sparse(lists) => lists[v].len(),
        })
    }

    pub fn for_each_neighbor(&self, v: usize, mut f: impl FnMut(usize)) {
        match &self.adj {
            Adj::Dense(rows) => {
                let mut row = rows[v];
                while row != 0 {
                    f(row.trailing_zeros() as usize);
                    row &= row - 1;
                }
            }
            Adj::Sparse(lists) => {
                for &u in &lists[v] {
                    f(u as usize);
                }
            }
        }
    }

    /// Neighbors of v in ascending order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        self.for_each_neighbor(v, |u| out.push(u));
        out
    }

    pub fn edge_count(&self) -> usize {
        match &self.adj {
            Adj::Dense(rows) => rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2,
            Adj::Sparse(lists) => lists.iter().map(Vec::len).sum::<usize>() / 2,
        }
    }

    /// Edges as (u, v) with u < v, lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            self.for_each_neighbor(u, |v| {
                if u < v {
                    out.push((u, v));
                }
            });
        }
        out
    }

    /// BFS layers from `u`: shells[i] = vertices at distance exactly i,
    /// up to `depth`. shells[0] = {u}. Exhausted components give
    /// trailing empty shells.
    pub fn neighborhood_shells(&self, u: usize, depth: usize) -> Result<Vec<Vec<usize>>> {
        self.check_vertex(u)?;
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut shells = vec![vec![u]];
        for d in 1..=depth {
            let mut next = Vec::new();
            for &v in &shells[d - 1] {
                self.for_each_neighbor(v, |w| {
                    if dist[w] == usize::MAX {
                        dist[w] = d;
                        next.push(w);
                    }
                });
            }
            next.sort_unstable();
            shells.push(next);
        }
        Ok(shells)
    }

    /// e(A, B) for disjoint vertex sets A and B.
    pub fn count_edges_between(&self, a: &[usize], b: &[usize]) -> Result<usize> {
        for &v in a.iter().chain(b) {
            self.check_vertex(v)?;
        }
        let mut in_a = vec![false; self.n];
        for &v in a {
            in_a[v] = true;
        }
        for &v in b {
            if in_a[v] {
                return Err(Error::OverlappingSets(v));
            }
        }
        let mut in_b = vec![false; self.n];
        for &v in b {
            in_b[v] = true;
        }
        let mut count = 0;
        for &v in a {
            self.for_each_neighbor(v, |w| {
                if in_b[w] {
                    count += 1;
                }
            });
        }
        Ok(count)
    }

    /// e(A): edges with both ends in A.
    pub fn count_edges_within(&self, a: &[usize]) -> usize {
        let mut in_a = vec![false; self.n];
        for &v in a {
            in_a[v] = true;
        }
        let mut count = 0;
        for &v in a {
            self.for_each_neighbor(v, |w| {
                if in_a[w] {
                    count += 1;
                }
            });
        }
        count / 2
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                self.for_each_neighbor(v, |w| {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                });
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The unique 2-coloring of a connected graph. `Ok(None)` means not
    /// bipartite; disconnected input is an error (callers decompose
    /// first, since color classes are only unique per component).
    pub fn bipartition(&self) -> Result<Option<Bipartition>> {
        if self.n == 0 {
            return Err(Error::Disconnected);
        }
        let mut color = vec![u8::MAX; self.n];
        color[0] = 0;
        let mut queue = std::collections::VecDeque::from([0usize]);
        let mut reached = 1usize;
        let mut ok = true;
        while let Some(v) = queue.pop_front() {
            let cv = color[v];
            self.for_each_neighbor(v, |w| {
                if color[w] == u8::MAX {
                    color[w] = 1 - cv;
                    reached += 1;
                    queue.push_back(w);
                } else if color[w] == cv {
                    ok = false;
                }
            });
            if !ok {
                return Ok(None);
            }
        }
        if reached != self.n {
            return Err(Error::Disconnected);
        }
        let side_a: Vec<usize> = (0..self.n).filter(|&v| color[v] == 0).collect();
        let side_b: Vec<usize> = (0..self.n).filter(|&v| color[v] == 1).collect();
        let smallest_class_size = side_a.len().min(side_b.len());
        Ok(Some(Bipartition {
            side_a,
            side_b,
            smallest_class_size,
        }))
    }

    /// Induced subgraph on `verts`; vertex i of the result is verts[i].
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            self.for_each_neighbor(v, |w| {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j);
                }
            });
        }
        g
    }

    /// Deletes vertex v; remaining vertices keep their relative order.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let verts: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&verts)
    }

    /// Contracts edge {u, v} into u (simple-graph contraction: loops and
    /// multi-edges dropped). The merged vertex takes u's slot; v is
    /// removed and higher vertices shift down.
    pub fn contract_edge(&self, u: usize, v: usize) -> Graph {
        debug_assert!(self.has_edge(u, v));
        let map = |x: usize| if x > v { x - 1 } else { x };
        let mut g = Graph::new(self.n - 1);
        for (a, b) in self.edges() {
            if (a, b) == (u.min(v), u.max(v)) {
                continue;
            }
            let a2 = map(if a == v { u } else { a });
            let b2 = map(if b == v { u } else { b });
            if a2 != b2 {
                g.add_edge(a2, b2);
            }
        }
        g
    }

    /// Dense-only: new graph with one extra vertex adjacent to the
    /// bitmask `nbrs` over the existing vertices.
    pub fn with_added_vertex(&self, nbrs: u64) -> Result<Graph> {
        let rows = self.dense_rows()?;
        if self.n + 1 > DENSE_LIMIT {
            return Err(Error::TooLarge { n: self.n + 1, limit: DENSE_LIMIT });
        }
        let mut new_rows = rows.to_vec();
        for (i, row) in new_rows.iter_mut().enumerate() {
            if nbrs >> i & 1 == 1 {
                *row |= 1u64 << self.n;
            }
        }
        new_rows.push(nbrs);
        Ok(Graph {
            n: self.n + 1,
            adj: Adj::Dense(new_rows),
        })
    }

    /// Relabels: vertex v of self becomes perm[v] of the result.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Checks the representation invariants (symmetry, no loops, sorted
    /// duplicate-free lists). Used by decoders and tests.
    pub fn check_invariants(&self) -> bool {
        match &self.adj {
            Adj::Dense(rows) => {
                for (v, &row) in rows.iter().enumerate() {
                    if row >> v & 1 == 1 {
                        return false;
                    }
                    if self.n < 64 && row >> self.n != 0 {
                        return false;
                    }
                    let mut r = row;
                    while r != 0 {
                        let u = r.trailing_zeros() as usize;
                        if rows[u] >> v & 1 != 1 {
                            return false;
                        }
                        r &= r - 1;
                    }
                }
                true
            }
            Adj::Sparse(lists) => {
                for (v, list) in lists.iter().enumerate() {
                    if !list.windows(2).all(|w| w[0] < w[1]) {
                        return false;
                    }
                    for &u in list {
                        let u = u as usize;
                        if u == v || u >= self.n {
                            return false;
                        }
                        if lists[u].binary_search(&(v as u32)).is_err() {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }
}

/// The unique 2-coloring of a connected bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    pub smallest_class_size: usize,
}
