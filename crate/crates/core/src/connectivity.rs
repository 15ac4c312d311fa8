//! Vertex-capacitated flow: minimum vertex s-t cuts, internally disjoint path
//! counts, and the flower (petal) decision used by the feedback vertex set
//! kernel.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

const INF: usize = usize::MAX / 4;
const NONE: usize = usize::MAX;

/// Minimum vertex separator between two terminals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutResult {
    pub cut: VertexSet,
    pub size: usize,
    /// Component of `s` in `g - cut`.
    pub side_s: VertexSet,
}

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: usize,
    rev: usize,
}

/// Residual network with Edmonds-Karp augmentation.
#[derive(Clone, Debug)]
struct FlowNetwork {
    arcs: Vec<Vec<Arc>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork { arcs: vec![Vec::new(); nodes] }
    }

    fn add_arc(&mut self, u: usize, v: usize, cap: usize) {
        let (ru, rv) = (self.arcs[v].len(), self.arcs[u].len());
        self.arcs[u].push(Arc { to: v, cap, rev: ru });
        self.arcs[v].push(Arc { to: u, cap: 0, rev: rv });
    }

    /// Augments until no path remains or `limit` units have been pushed.
    fn max_flow(&mut self, src: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit {
            let mut pred: Vec<Option<(usize, usize)>> = vec![None; self.arcs.len()];
            let mut seen = vec![false; self.arcs.len()];
            seen[src] = true;
            let mut queue = VecDeque::from([src]);
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for (i, a) in self.arcs[u].iter().enumerate() {
                    if a.cap > 0 && !seen[a.to] {
                        seen[a.to] = true;
                        pred[a.to] = Some((u, i));
                        queue.push_back(a.to);
                    }
                }
            }
            if !seen[sink] {
                break;
            }
            let mut bottleneck = INF;
            let mut v = sink;
            while let Some((u, i)) = pred[v] {
                bottleneck = bottleneck.min(self.arcs[u][i].cap);
                v = u;
            }
            let push = bottleneck.min(limit - flow);
            let mut v = sink;
            while let Some((u, i)) = pred[v] {
                self.arcs[u][i].cap -= push;
                let rev = self.arcs[u][i].rev;
                self.arcs[v][rev].cap += push;
                v = u;
            }
            flow += push;
        }
        flow
    }

    fn residual_reachable(&self, src: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[src] = true;
        let mut stack = vec![src];
        while let Some(u) = stack.pop() {
            for a in &self.arcs[u] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}

/// Split network: vertex `v` becomes `2v -> 2v+1` with capacity 1, except
/// `s` and `t` which are uncapacitated. Edges become infinite arcs.
fn split_network(g: &Graph, s: usize, t: usize, skip_st_edge: bool) -> FlowNetwork {
    let mut net = FlowNetwork::new(2 * g.n());
    for v in g.vertices() {
        let cap = if v == s || v == t { INF } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, cap);
    }
    for (u, v) in g.edges() {
        if skip_st_edge && ((u == s && v == t) || (u == t && v == s)) {
            continue;
        }
        net.add_arc(2 * u + 1, 2 * v, INF);
        net.add_arc(2 * v + 1, 2 * u, INF);
    }
    net
}

/// Minimum s-t vertex separator avoiding `s` and `t`, or `None` when `s` and
/// `t` are adjacent (no separator exists). Among minimum cuts the one closest
/// to `s` is returned.
pub fn min_vertex_cut(g: &Graph, s: usize, t: usize) -> Result<Option<CutResult>> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::Input("terminals must be distinct".into()));
    }
    if g.has_edge(s, t) {
        return Ok(None);
    }
    let mut net = split_network(g, s, t, false);
    let size = net.max_flow(2 * s + 1, 2 * t, INF);
    let reach = net.residual_reachable(2 * s + 1);
    let cut: VertexSet =
        g.vertices().filter(|&v| v != s && v != t && reach[2 * v] && !reach[2 * v + 1]).collect();
    debug_assert_eq!(cut.len(), size);
    let blocked = cut.to_mask(g.n());
    let dist = g.distances([s], None, Some(&blocked));
    let side_s = g.vertices().filter(|&v| dist[v].is_some()).collect();
    Ok(Some(CutResult { cut, size, side_s }))
}

/// Maximum number of internally vertex-disjoint x-y paths of length >= 2.
pub fn disjoint_long_paths(g: &Graph, x: usize, y: usize) -> usize {
    assert!(x != y, "endpoints must be distinct");
    let mut net = split_network(g, x, y, true);
    net.max_flow(2 * x + 1, 2 * y, INF)
}

/// Same as [`disjoint_long_paths`] but stops once `limit` paths are found.
pub(crate) fn disjoint_long_paths_at_least(g: &Graph, x: usize, y: usize, limit: usize) -> bool {
    let mut net = split_network(g, x, y, true);
    net.max_flow(2 * x + 1, 2 * y, limit) >= limit
}

/// Witness for the flower decision at vertex `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlowerCertificate {
    /// Cycles (as vertex sequences starting at `x`) meeting pairwise only in `x`.
    Cycles(Vec<Vec<usize>>),
    /// A set avoiding `x` that meets every cycle through `x`.
    Blocker(VertexSet),
}

/// Decides `petal(x) >= threshold`. On success returns `threshold` cycles
/// through `x` that are otherwise disjoint; otherwise returns a blocker of
/// size at most `2 * (threshold - 1)`. Both certificates are checked before
/// they are returned.
pub fn petal_decision(g: &Graph, x: usize, threshold: usize) -> Result<FlowerCertificate> {
    g.check_vertex(x)?;
    if threshold == 0 {
        return Err(Error::Input("petal threshold must be at least 1".into()));
    }
    let mut cycles = flower(g, x);
    if cycles.len() >= threshold {
        cycles.truncate(threshold);
        if !is_flower(g, x, &cycles) {
            return Err(Error::Internal("flower cycles overlap outside x".into()));
        }
        return Ok(FlowerCertificate::Cycles(cycles));
    }
    let budget = 2 * cycles.len();
    let mut z = Vec::new();
    if !blocker_search(g, x, budget, &mut z) {
        return Err(Error::Internal(alloc::format!("no cycle blocker of size <= {budget} at vertex {x}")));
    }
    let z: VertexSet = z.into_iter().collect();
    if cycle_through(g, x, &z.to_mask(g.n())).is_some() {
        return Err(Error::Internal("blocker misses a cycle through x".into()));
    }
    Ok(FlowerCertificate::Blocker(z))
}

/// `petal(x)` exactly.
pub fn petal_number(g: &Graph, x: usize) -> usize {
    flower(g, x).len()
}

/// Checks that each cycle is a simple cycle of `g` through `x` and that any
/// two share only `x`.
pub fn is_flower(g: &Graph, x: usize, cycles: &[Vec<usize>]) -> bool {
    let mut used = vec![false; g.n()];
    for c in cycles {
        if c.len() < 3 || c[0] != x {
            return false;
        }
        let closes = (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]));
        if !closes {
            return false;
        }
        for &v in &c[1..] {
            if v == x || used[v] {
                return false;
            }
            used[v] = true;
        }
    }
    true
}

/// A maximum flower at `x`. Cycles through `x` are T-paths in `g - x` with
/// `T = N(x)`; a maximum packing of vertex-disjoint T-paths comes from a
/// maximum matching in the doubled auxiliary graph, where
/// `matching = |V \ T| + #paths`.
fn flower(g: &Graph, x: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut is_terminal = vec![false; n];
    for &t in g.neighbors(x) {
        is_terminal[t] = true;
    }
    // node ids: terminals get one node, other vertices two (twin at +1)
    let mut node = vec![NONE; n];
    let mut owner = Vec::new();
    for v in g.vertices().filter(|&v| v != x) {
        node[v] = owner.len();
        owner.push(v);
        if !is_terminal[v] {
            owner.push(v);
        }
    }
    let mut adj = vec![Vec::new(); owner.len()];
    let link = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for v in g.vertices().filter(|&v| v != x && !is_terminal[v]) {
        link(node[v], node[v] + 1, &mut adj);
    }
    for (u, v) in g.edges() {
        if u == x || v == x {
            continue;
        }
        match (is_terminal[u], is_terminal[v]) {
            (true, true) => link(node[u], node[v], &mut adj),
            (true, false) => {
                link(node[u], node[v], &mut adj);
                link(node[u], node[v] + 1, &mut adj);
            }
            (false, true) => {
                link(node[v], node[u], &mut adj);
                link(node[v], node[u] + 1, &mut adj);
            }
            (false, false) => {
                link(node[u], node[v], &mut adj);
                link(node[u] + 1, node[v] + 1, &mut adj);
            }
        }
    }
    let mate = max_matching(&adj);
    let twin = |a: usize| if a > 0 && owner[a - 1] == owner[a] { a - 1 } else { a + 1 };

    let mut cycles = Vec::new();
    for &t in g.neighbors(x) {
        let start = node[t];
        if mate[start] == NONE {
            continue;
        }
        let mut path = vec![t];
        let mut cur = mate[start];
        let end = loop {
            let v = owner[cur];
            path.push(v);
            if is_terminal[v] {
                break Some(v);
            }
            let next = mate[twin(cur)];
            if next == NONE {
                break None;
            }
            cur = next;
        };
        // each T-T component is seen from both ends; keep one orientation
        if let Some(end) = end {
            if t < end {
                let mut cycle = vec![x];
                cycle.extend(path);
                cycles.push(cycle);
            }
        }
    }
    cycles
}

/// Edmonds' blossom algorithm; returns the mate of every node (or `NONE`).
fn max_matching(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut mate = vec![NONE; n];
    // greedy start
    for v in 0..n {
        if mate[v] == NONE {
            if let Some(&w) = adj[v].iter().find(|&&w| mate[w] == NONE) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = augmenting_path(adj, &mate, &mut parent, &mut base, root) {
            while v != NONE {
                let pv = parent[v];
                let ppv = mate[pv];
                mate[v] = pv;
                mate[pv] = v;
                v = ppv;
            }
        }
    }
    mate
}

fn augmenting_path(
    adj: &[Vec<usize>],
    mate: &[usize],
    parent: &mut [usize],
    base: &mut [usize],
    root: usize,
) -> Option<usize> {
    let n = adj.len();
    let mut used = vec![false; n];
    parent.fill(NONE);
    for (i, b) in base.iter_mut().enumerate() {
        *b = i;
    }
    used[root] = true;
    let mut queue = VecDeque::from([root]);

    let lca = |base: &[usize], parent: &[usize], mut a: usize, mut b: usize| {
        let mut seen = vec![false; n];
        loop {
            a = base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = parent[mate[a]];
        }
        loop {
            b = base[b];
            if seen[b] {
                return b;
            }
            b = parent[mate[b]];
        }
    };
    let mark = |base: &[usize],
                parent: &mut [usize],
                blossom: &mut [bool],
                mut v: usize,
                b: usize,
                mut child: usize| {
        while base[v] != b {
            blossom[base[v]] = true;
            blossom[base[mate[v]]] = true;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    };

    while let Some(v) = queue.pop_front() {
        for &to in &adj[v] {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                let cur = lca(base, parent, v, to);
                let mut blossom = vec![false; n];
                mark(base, parent, &mut blossom, v, cur, to);
                mark(base, parent, &mut blossom, to, cur, v);
                for i in 0..n {
                    if blossom[base[i]] {
                        base[i] = cur;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == NONE {
                parent[to] = v;
                if mate[to] == NONE {
                    return Some(to);
                }
                used[mate[to]] = true;
                queue.push_back(mate[to]);
            }
        }
    }
    None
}

/// Some cycle through `x` avoiding `blocked`, as the `N(x)`-path part
/// (without `x`), or `None` if every such cycle is hit.
fn cycle_through(g: &Graph, x: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut origin = vec![NONE; n];
    let mut parent = vec![NONE; n];
    let mut queue = VecDeque::new();
    for &t in g.neighbors(x) {
        if !blocked[t] {
            origin[t] = t;
            queue.push_back(t);
        }
    }
    let trace = |parent: &[usize], mut v: usize| {
        let mut p = vec![v];
        while parent[v] != NONE {
            v = parent[v];
            p.push(v);
        }
        p
    };
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if w == x || blocked[w] {
                continue;
            }
            if origin[w] == NONE {
                origin[w] = origin[u];
                parent[w] = u;
                queue.push_back(w);
            } else if origin[w] != origin[u] {
                let mut path = trace(&parent, u);
                path.reverse();
                path.extend(trace(&parent, w));
                return Some(path);
            }
        }
    }
    None
}

/// Bounded search tree: some vertex of any cycle through `x` must be in the
/// blocker, so branch over the vertices of one such cycle.
fn blocker_search(g: &Graph, x: usize, budget: usize, z: &mut Vec<usize>) -> bool {
    let mut blocked = vec![false; g.n()];
    for &v in z.iter() {
        blocked[v] = true;
    }
    let Some(path) = cycle_through(g, x, &blocked) else {
        return true;
    };
    if z.len() == budget {
        return false;
    }
    for v in path {
        z.push(v);
        if blocker_search(g, x, budget, z) {
            return true;
        }
        z.pop();
    }
    false
}

/// True iff some cycle of `g` passes through `x` while avoiding `z`.
pub fn has_cycle_through(g: &Graph, x: usize, z: &VertexSet) -> bool {
    cycle_through(g, x, &z.to_mask(g.n())).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::GraphBuilder;

    #[test]
    fn cut_examples() {
        let p = path(3);
        let c = min_vertex_cut(&p, 0, 2).unwrap().unwrap();
        assert_eq!((c.cut, c.size), ([1].into(), 1));
        assert_eq!(c.side_s, [0].into());

        let g = theta(2);
        let c = min_vertex_cut(&g, 0, 1).unwrap().unwrap();
        assert_eq!((c.cut, c.size), ([2, 3].into(), 2));

        assert_eq!(min_vertex_cut(&path(2), 0, 1).unwrap(), None);
        assert!(min_vertex_cut(&p, 1, 1).is_err());
    }

    #[test]
    fn long_path_examples() {
        assert_eq!(disjoint_long_paths(&theta(3), 0, 1), 3);
        assert_eq!(disjoint_long_paths(&path(2), 0, 1), 0);
        // K4 on {x, y, a, b}: x-a-y and x-b-y
        assert_eq!(disjoint_long_paths(&complete(4), 0, 1), 2);
        assert!(disjoint_long_paths_at_least(&theta(5), 0, 1, 4));
    }

    #[test]
    fn petal_examples() {
        match petal_decision(&friendship(3), 0, 3).unwrap() {
            FlowerCertificate::Cycles(c) => assert_eq!(c.len(), 3),
            other => panic!("expected cycles, got {other:?}"),
        }
        assert_eq!(petal_decision(&star(4), 0, 2).unwrap(), FlowerCertificate::Blocker(VertexSet::new()));
        // two triangles sharing edge {x, y}: x=0, y=1, apexes 2 and 3
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        assert_eq!(petal_number(&g, 0), 1);
        match petal_decision(&g, 0, 2).unwrap() {
            FlowerCertificate::Blocker(z) => {
                assert!(z.len() <= 2);
                assert!(!has_cycle_through(&g, 0, &z));
            }
            other => panic!("expected blocker, got {other:?}"),
        }
    }

    #[test]
    fn blossom_handles_odd_cycles() {
        // C5 with a pendant: maximum matching 3
        let mut b = GraphBuilder::from_graph(&cycle(5));
        b.add_pendants(0, 1);
        let g = b.build();
        let adj: Vec<Vec<usize>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
        let mate = max_matching(&adj);
        assert_eq!(mate.iter().filter(|&&m| m != NONE).count(), 6);
    }
}
