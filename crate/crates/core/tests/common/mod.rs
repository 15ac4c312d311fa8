#![allow(dead_code)]

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use secluded_core::graph::families::gnp;
use secluded_core::oracle::{oracle, OracleConfig, ProblemInstance};
use secluded_core::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform in `lo..=hi`.
pub fn pick(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> usize {
    lo + (rng.next_u64() % (hi - lo + 1) as u64) as usize
}

/// `G(n, p)` with `p` drawn from {0.2, 0.35, 0.5}.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let num = [20, 35, 50][pick(rng, 0, 2)];
    gnp(n, num, 100, rng)
}

/// Oracle verdict with a generous capacity.
pub fn truth(inst: ProblemInstance) -> bool {
    oracle(&inst, &OracleConfig { cap: 24 }).expect("oracle within capacity").yes
}

/// Floyd-Warshall distances, `usize::MAX` for unreachable pairs.
pub fn all_pairs(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut d = vec![vec![usize::MAX; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                if d[u][w] != usize::MAX && d[w][v] != usize::MAX {
                    d[u][v] = d[u][v].min(d[u][w] + d[w][v]);
                }
            }
        }
    }
    d
}

/// Repeatedly strips vertices of degree at most 1.
pub fn naive_two_core(g: &Graph) -> Vec<usize> {
    let mut alive = vec![true; g.n()];
    loop {
        let drop =
            (0..g.n()).find(|&v| alive[v] && g.neighbors(v).iter().filter(|&&w| alive[w]).count() <= 1);
        match drop {
            Some(v) => alive[v] = false,
            None => return (0..g.n()).filter(|&v| alive[v]).collect(),
        }
    }
}

pub fn shuffle(rng: &mut ChaCha8Rng, xs: &mut [usize]) {
    for i in (1..xs.len()).rev() {
        let j = pick(rng, 0, i);
        xs.swap(i, j);
    }
}

/// Proptest strategy: graphs on `lo..=hi` vertices from an edge bitmask.
pub fn arb_graph(lo: usize, hi: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Bitmask of `N[S]` (radius `r`) using Floyd-Warshall distances.
pub fn ball_mask(d: &[Vec<usize>], s: u32, r: usize) -> u32 {
    let n = d.len();
    let mut out = 0;
    for v in 0..n {
        if (0..n).any(|u| s >> u & 1 == 1 && d[u][v] <= r) {
            out |= 1 << v;
        }
    }
    out
}

/// `g - S` has no cycle, by union-find over surviving edges.
pub fn naive_acyclic(g: &Graph, s: u32) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (u, v) in g.edges() {
        if s >> u & 1 == 1 || s >> v & 1 == 1 {
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

/// No triangle survives in `g - S`.
pub fn naive_triangle_free(g: &Graph, s: u32) -> bool {
    let n = g.n();
    let alive = |v: usize| s >> v & 1 == 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if alive(a)
                    && alive(b)
                    && alive(c)
                    && g.has_edge(a, b)
                    && g.has_edge(b, c)
                    && g.has_edge(a, c)
                {
                    return false;
                }
            }
        }
    }
    true
}

/// `s` and `t` are disconnected in `g - S`.
pub fn naive_separates(g: &Graph, s_mask: u32, s: usize, t: usize) -> bool {
    let mut seen = s_mask | 1 << s;
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        if u == t {
            return false;
        }
        for &w in g.neighbors(u) {
            if seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    true
}
