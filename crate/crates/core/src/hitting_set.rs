//! Bounded-arity hypergraphs and an expressive hitting-set kernel.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::VertexSet;
use crate::subsets::{count_up_to, for_each_combination};
use crate::{Error, Result};

/// Default capacity of [`minimal_hitting_sets`]: at most `2^20` candidates.
pub const EXHAUSTIVE_CAP: u32 = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    pub universe_size: usize,
    /// Each edge is sorted and duplicate-free.
    pub edges: Vec<Vec<usize>>,
    pub d: usize,
}

impl Hypergraph {
    /// Validates elements and arity. Members of an edge are sorted; repeated
    /// edges are dropped, keeping the first occurrence.
    pub fn new(universe_size: usize, edges: Vec<Vec<usize>>, d: usize) -> Result<Self> {
        let mut seen = alloc::collections::BTreeSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if let Some(&x) = e.iter().find(|&&x| x >= universe_size) {
                return Err(Error::VertexOutOfRange { vertex: x, n: universe_size });
            }
            if e.len() > d {
                return Err(Error::Input(format!("edge of size {} exceeds arity {d}", e.len())));
            }
            if seen.insert(e.clone()) {
                out.push(e);
            }
        }
        Ok(Hypergraph { universe_size, edges: out, d })
    }

    pub fn is_hitting_set(&self, set: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.iter().any(|&x| set.contains(x)))
    }
}

/// A sub-hypergraph on a renumbered universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HsKernel {
    /// Kernel hypergraph over `0..to_original.len()`.
    pub hypergraph: Hypergraph,
    /// Sorted; kernel element `i` is original element `to_original[i]`.
    pub to_original: Vec<usize>,
    /// Indices of the kept edges in the input edge list.
    pub kept_edges: Vec<usize>,
}

impl HsKernel {
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|x| self.to_original[x]).collect()
    }

    /// Kernel universe in original ids.
    pub fn universe(&self) -> VertexSet {
        VertexSet::from_sorted(self.to_original.clone())
    }
}

/// `d^2 * (k+1)^d`: bound on the kernel universe size.
pub fn kernel_universe_bound(d: usize, k: usize) -> u128 {
    (d as u128).pow(2).saturating_mul((k as u128 + 1).saturating_pow(d as u32))
}

/// Keeps a sub-family with exactly the same hitting sets of size at most `k`
/// (hence the same inclusion-minimal ones).
///
/// Edges are scanned in input order. An edge `e` is kept iff every proper
/// subset `W` of `e` lies in fewer than `(k+1)^(|e|-|W|)` kept edges of size
/// `|e|`. If `e` is dropped at `W`, a set of size `<= k` avoiding `W` would
/// have to hit that many same-size petals through `W`, which pigeonholes to
/// an over-full `W + x`. At most `(k+1)^s` edges of each size `s` survive.
pub fn expressive_kernel(h: &Hypergraph, k: usize) -> HsKernel {
    let mut counts: BTreeMap<(usize, Vec<usize>), u128> = BTreeMap::new();
    let limit = |t: usize| (k as u128 + 1).saturating_pow(t as u32);
    let mut kept_edges = Vec::new();
    for (idx, e) in h.edges.iter().enumerate() {
        let s = e.len();
        let proper: Vec<Vec<usize>> = (0u32..(1u32 << s) - 1)
            .map(|mask| (0..s).filter(|&i| mask >> i & 1 == 1).map(|i| e[i]).collect())
            .collect();
        let keep =
            proper.iter().all(|w| counts.get(&(s, w.clone())).copied().unwrap_or(0) < limit(s - w.len()));
        if keep {
            for w in proper {
                *counts.entry((s, w)).or_insert(0) += 1;
            }
            kept_edges.push(idx);
        }
    }
    let universe: VertexSet = kept_edges.iter().flat_map(|&i| h.edges[i].iter().copied()).collect();
    let to_original = universe.into_vec();
    let local = |x: usize| to_original.binary_search(&x).unwrap();
    let edges = kept_edges.iter().map(|&i| h.edges[i].iter().map(|&x| local(x)).collect()).collect();
    let hypergraph = Hypergraph { universe_size: to_original.len(), edges, d: h.d };
    HsKernel { hypergraph, to_original, kept_edges }
}

/// All inclusion-minimal hitting sets of size at most `k`, ordered by size
/// then lexicographically.
pub fn minimal_hitting_sets(h: &Hypergraph, k: usize) -> Result<Vec<VertexSet>> {
    minimal_hitting_sets_capped(h, k, EXHAUSTIVE_CAP)
}

/// As [`minimal_hitting_sets`], refusing when more than `2^cap` candidate
/// sets would have to be checked.
pub fn minimal_hitting_sets_capped(h: &Hypergraph, k: usize, cap: u32) -> Result<Vec<VertexSet>> {
    let u = h.universe_size;
    let needed = count_up_to(u, k);
    if needed > 1u128 << cap.min(127) {
        return Err(Error::Capacity { needed: format!("{needed} subsets"), cap: format!("2^{cap} subsets") });
    }
    let mut in_set = vec![false; u];
    let hits = |in_set: &[bool]| h.edges.iter().all(|e| e.iter().any(|&x| in_set[x]));
    let mut out = Vec::new();
    for size in 0..=k.min(u) {
        for_each_combination(u, size, |c| {
            for &x in c {
                in_set[x] = true;
            }
            let minimal = hits(&in_set)
                && c.iter().all(|&x| {
                    in_set[x] = false;
                    let still = hits(&in_set);
                    in_set[x] = true;
                    !still
                });
            if minimal {
                out.push(VertexSet::from_sorted(c.to_vec()));
            }
            for &x in c {
                in_set[x] = false;
            }
            false
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(u: usize, edges: &[&[usize]]) -> Hypergraph {
        let d = edges.iter().map(|e| e.len()).max().unwrap_or(0);
        Hypergraph::new(u, edges.iter().map(|e| e.to_vec()).collect(), d).unwrap()
    }

    #[test]
    fn minimal_sets_examples() {
        assert_eq!(minimal_hitting_sets(&hg(2, &[&[0, 1]]), 1).unwrap(), [[0].into(), [1].into()]);
        assert_eq!(minimal_hitting_sets(&hg(3, &[&[0, 1], &[1, 2]]), 1).unwrap(), [[1].into()]);
        assert!(minimal_hitting_sets(&hg(4, &[&[0, 1], &[2, 3]]), 1).unwrap().is_empty());
    }

    #[test]
    fn capacity_error() {
        let h = hg(64, &[&[0, 1]]);
        assert!(matches!(minimal_hitting_sets_capped(&h, 64, 20), Err(Error::Capacity { .. })));
    }

    #[test]
    fn star_kernel() {
        // a=0, b_i = 1..=3
        let h = hg(4, &[&[0, 1], &[0, 2], &[0, 3]]);
        let ker = expressive_kernel(&h, 1);
        assert!(ker.kept_edges.len() < 3);
        let lifted: Vec<VertexSet> =
            minimal_hitting_sets(&ker.hypergraph, 1).unwrap().iter().map(|s| ker.lift(s)).collect();
        assert_eq!(lifted, [[0].into()]);
    }

    #[test]
    fn empty_and_mixed_sizes() {
        let ker = expressive_kernel(&hg(5, &[]), 3);
        assert!(ker.hypergraph.edges.is_empty() && ker.to_original.is_empty());
        // a singleton after two larger edges must survive
        let h = hg(4, &[&[0, 1], &[2, 3], &[1]]);
        let ker = expressive_kernel(&h, 1);
        assert!(ker.kept_edges.contains(&2));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Hypergraph::new(2, vec![vec![0, 5]], 2).is_err());
        assert!(Hypergraph::new(4, vec![vec![0, 1, 2]], 2).is_err());
        let h = Hypergraph::new(3, vec![vec![1, 0], vec![0, 1]], 2).unwrap();
        assert_eq!(h.edges, [vec![0, 1]]);
    }
}
