//! Simple undirected graphs and the neighborhood, distance, power, core and
//! component primitives every solver builds on.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use rand_core::RngCore;

use crate::{Error, Result};

/// Sorted, duplicate-free list of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    /// Builds a set from a 0/1 membership mask.
    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(mask.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Membership mask of length `n`. Members must be below `n`.
    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<&[usize]> for VertexSet {
    fn from(s: &[usize]) -> Self {
        s.iter().copied().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(s: [usize; N]) -> Self {
        s.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Validating constructor. Duplicate edges collapse; self-loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Input(alloc::format!("self-loop at vertex {u}")));
            }
            b.add_edge(u, v);
        }
        Ok(b.build())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> Range<usize> {
        0..self.n()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        s.iter().try_for_each(|v| self.check_vertex(v))
    }

    /// Subgraph induced by `keep`; kernel vertex `i` is `keep[i]` after sorting.
    pub fn induced(&self, keep: &VertexSet) -> Induced {
        let mut local = vec![usize::MAX; self.n()];
        for (i, v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let mut b = GraphBuilder::new(keep.len());
        for (i, v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX && i < j {
                    b.add_edge(i, j);
                }
            }
        }
        Induced { graph: b.build(), to_original: keep.as_slice().to_vec() }
    }

    /// `g - removed`, as an induced subgraph with an id map.
    pub fn without(&self, removed: &VertexSet) -> Induced {
        let mask = removed.to_mask(self.n());
        let keep: VertexSet = self.vertices().filter(|&v| !mask[v]).collect();
        self.induced(&keep)
    }

    /// Multi-source BFS distances, stopping at `max_radius` when given.
    /// Vertices flagged in `blocked` are never entered.
    pub fn distances(
        &self,
        sources: impl IntoIterator<Item = usize>,
        max_radius: Option<usize>,
        blocked: Option<&[bool]>,
    ) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        for s in sources {
            if blocked.is_some_and(|b| b[s]) || dist[s].is_some() {
                continue;
            }
            dist[s] = Some(0);
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            if max_radius.is_some_and(|r| du >= r) {
                continue;
            }
            for &w in &self.adj[u] {
                if dist[w].is_none() && !blocked.is_some_and(|b| b[w]) {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// `|N[s]|` for the radius-1 closed neighborhood.
    pub fn closed_neighborhood_size(&self, s: &[bool]) -> usize {
        let mut seen = vec![false; self.n()];
        let mut count = 0;
        for v in self.vertices().filter(|&v| s[v]) {
            for w in core::iter::once(v).chain(self.adj[v].iter().copied()) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                }
            }
        }
        count
    }

    /// Mask of `N[s]` (radius 1).
    pub fn closed_neighborhood_mask(&self, s: &[bool]) -> Vec<bool> {
        let mut out = s.to_vec();
        for v in self.vertices().filter(|&v| s[v]) {
            for &w in &self.adj[v] {
                out[w] = true;
            }
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// An induced subgraph together with the ids its vertices had in the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    /// Sorted; `to_original[i]` is the parent id of vertex `i`.
    pub to_original: Vec<usize>,
}

impl Induced {
    pub fn from_original(&self, v: usize) -> Option<usize> {
        self.to_original.binary_search(&v).ok()
    }

    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.to_original[v]).collect()
    }
}

/// Mutable edge accumulator; [`GraphBuilder::build`] sorts and dedups.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    adj: Vec<Vec<usize>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { adj: vec![Vec::new(); n] }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder { adj: g.adj.clone() }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_vertices(&mut self, count: usize) -> Range<usize> {
        let start = self.adj.len();
        self.adj.resize(start + count, Vec::new());
        start..start + count
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    /// Adds `count` fresh pendant vertices hanging off `v`.
    pub fn add_pendants(&mut self, v: usize, count: usize) -> Range<usize> {
        let r = self.add_vertices(count);
        for w in r.clone() {
            self.add_edge(v, w);
        }
        r
    }

    /// Joins every pair in `vs`.
    pub fn make_clique(&mut self, vs: &[usize]) {
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                self.add_edge(a, b);
            }
        }
    }

    /// Path of exactly `len` edges from `a` to `b` through fresh vertices.
    /// Returns the fresh internal vertices in path order.
    pub fn add_path(&mut self, a: usize, b: usize, len: usize) -> Vec<usize> {
        assert!(len >= 1, "paths need at least one edge");
        let internal: Vec<usize> = self.add_vertices(len - 1).collect();
        let mut prev = a;
        for &w in &internal {
            self.add_edge(prev, w);
            prev = w;
        }
        self.add_edge(prev, b);
        internal
    }

    pub fn build(mut self) -> Graph {
        let mut m = 0;
        for nb in &mut self.adj {
            nb.sort_unstable();
            nb.dedup();
            m += nb.len();
        }
        Graph { adj: self.adj, m: m / 2 }
    }
}

/// `N^d[s]` when `closed`, else `N^d[s] \ s`.
pub fn neighborhood(g: &Graph, s: &VertexSet, d: usize, closed: bool) -> Result<VertexSet> {
    g.check_set(s)?;
    let dist = g.distances(s.iter(), Some(d), None);
    Ok(g.vertices().filter(|&v| dist[v].is_some() && (closed || !s.contains(v))).collect())
}

/// The `x`-th power: `{u, v}` is an edge iff `1 <= dist(u, v) <= x`.
pub fn power(g: &Graph, x: usize) -> Result<Graph> {
    if x == 0 {
        return Err(Error::Input("graph power exponent must be at least 1".into()));
    }
    let mut b = GraphBuilder::new(g.n());
    for u in g.vertices() {
        let dist = g.distances([u], Some(x), None);
        for (v, d) in dist.iter().enumerate().skip(u + 1) {
            if d.is_some() {
                b.add_edge(u, v);
            }
        }
    }
    Ok(b.build())
}

/// Vertex set of the 2-core (maximum subgraph of minimum degree 2).
pub fn two_core(g: &Graph) -> VertexSet {
    let order: Vec<usize> = g.vertices().collect();
    peel_two_core(g, &order).0
}

/// Peels vertices of degree <= 1, seeding the work queue in `order`.
/// Returns the core and the peeling sequence. The core does not depend on
/// `order`; only the sequence does.
pub fn peel_two_core(g: &Graph, order: &[usize]) -> (VertexSet, Vec<usize>) {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queued = vec![false; n];
    let mut queue = VecDeque::new();
    for &v in order {
        if deg[v] <= 1 && !queued[v] {
            queued[v] = true;
            queue.push_back(v);
        }
    }
    let mut sequence = Vec::new();
    while let Some(v) = queue.pop_front() {
        removed[v] = true;
        sequence.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] <= 1 && !queued[w] {
                    queued[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    (g.vertices().filter(|&v| !removed[v]).collect(), sequence)
}

/// Connected components of `g - excluded`, each sorted, ordered by least member.
pub fn components(g: &Graph, excluded: &VertexSet) -> Vec<VertexSet> {
    let blocked = excluded.to_mask(g.n());
    components_masked(g, &blocked)
}

pub(crate) fn components_masked(g: &Graph, blocked: &[bool]) -> Vec<VertexSet> {
    let mut seen = blocked.to_vec();
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        out.push(comp.into_iter().collect());
    }
    out
}

/// True iff `g - removed` is a forest.
pub fn is_acyclic(g: &Graph, removed: &VertexSet) -> bool {
    is_acyclic_masked(g, &removed.to_mask(g.n()))
}

/// Forest test via union-find: a cycle exists iff some edge closes a loop.
pub(crate) fn is_acyclic_masked(g: &Graph, removed: &[bool]) -> bool {
    let mut parent: Vec<usize> = g.vertices().collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (u, v) in g.edges() {
        if removed[u] || removed[v] {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Deterministic graph families used by tests, examples and the CLI.
pub mod families {
    use super::*;

    pub fn path(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for v in 1..n {
            b.add_edge(v - 1, v);
        }
        b.build()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut b = GraphBuilder::from_graph(&path(n));
        b.add_edge(n - 1, 0);
        b.build()
    }

    pub fn complete(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        b.make_clique(&(0..n).collect::<Vec<_>>());
        b.build()
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        let mut b = GraphBuilder::new(1);
        b.add_pendants(0, leaves);
        b.build()
    }

    /// `t` triangles sharing vertex 0.
    pub fn friendship(t: usize) -> Graph {
        let mut b = GraphBuilder::new(1 + 2 * t);
        for i in 0..t {
            let (a, c) = (1 + 2 * i, 2 + 2 * i);
            b.add_edge(0, a);
            b.add_edge(0, c);
            b.add_edge(a, c);
        }
        b.build()
    }

    /// Vertices 0 and 1 joined by `k` internally disjoint paths of length 2.
    pub fn theta(k: usize) -> Graph {
        let mut b = GraphBuilder::new(2);
        for _ in 0..k {
            b.add_path(0, 1, 2);
        }
        b.build()
    }

    /// Erdos-Renyi G(n, num/den). Pairs are visited in lexicographic order and
    /// each consumes one `next_u64`, so a seeded generator reproduces exactly.
    pub fn gnp<R: RngCore>(n: usize, num: u64, den: u64, rng: &mut R) -> Graph {
        assert!(den > 0, "edge probability denominator must be positive");
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.next_u64() % den < num {
                    b.add_edge(u, v);
                }
            }
        }
        b.build()
    }
}
