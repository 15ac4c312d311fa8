//! F-free vertex deletion: induced pattern occurrences, minimal deletion
//! sets, the secluded solver and kernel, and the small secluded branching.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{families, Graph, Induced, VertexSet};
use crate::hitting_set::{expressive_kernel, HsKernel, Hypergraph};
use crate::subsets::for_each_combination;
use crate::{Answer, Error, KernelOutcome, Result, SolutionReport, Verdict};

/// A finite family of forbidden induced subgraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenFamily {
    pub patterns: Vec<Graph>,
}

impl ForbiddenFamily {
    pub fn new(patterns: Vec<Graph>) -> Result<Self> {
        if patterns.iter().any(|p| p.n() == 0) {
            return Err(Error::Input("forbidden patterns need at least one vertex".into()));
        }
        Ok(ForbiddenFamily { patterns })
    }

    pub fn triangle() -> Self {
        ForbiddenFamily { patterns: vec![families::complete(3)] }
    }

    pub fn edge() -> Self {
        ForbiddenFamily { patterns: vec![families::path(2)] }
    }

    pub fn p3() -> Self {
        ForbiddenFamily { patterns: vec![families::path(3)] }
    }

    /// Largest pattern order.
    pub fn c(&self) -> usize {
        self.patterns.iter().map(Graph::n).max().unwrap_or(0)
    }

    pub fn min_degree_at_least(&self, d: usize) -> bool {
        self.patterns.iter().all(|p| p.vertices().all(|v| p.degree(v) >= d))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FfvdInstance {
    pub g: Graph,
    pub family: ForbiddenFamily,
    /// `|N[S]|` bound (secluded) or `|S|` bound (small secluded).
    pub k: usize,
    pub ell: Option<usize>,
}

struct Pattern<'a> {
    g: &'a Graph,
    m: usize,
    degrees: Vec<usize>,
}

impl<'a> Pattern<'a> {
    fn new(g: &'a Graph) -> Self {
        let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        Pattern { g, m: g.m(), degrees }
    }

    /// Does `g[subset]` match this pattern? Invariants are compared first,
    /// then a degree-respecting bijection is searched by backtracking.
    fn induced_by(&self, g: &Graph, subset: &[usize]) -> bool {
        let c = subset.len();
        let local: Vec<usize> =
            (0..c).map(|i| (0..c).filter(|&j| j != i && g.has_edge(subset[i], subset[j])).count()).collect();
        if local.iter().sum::<usize>() != 2 * self.m {
            return false;
        }
        let mut sorted = local.clone();
        sorted.sort_unstable();
        if sorted != self.degrees {
            return false;
        }
        let mut image = vec![usize::MAX; c];
        let mut used = vec![false; c];
        self.extend(g, subset, &local, 0, &mut image, &mut used)
    }

    fn extend(
        &self,
        g: &Graph,
        subset: &[usize],
        local: &[usize],
        i: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == image.len() {
            return true;
        }
        for j in 0..subset.len() {
            if used[j] || local[j] != self.g.degree(i) {
                continue;
            }
            let consistent = (0..i).all(|a| self.g.has_edge(a, i) == g.has_edge(subset[image[a]], subset[j]));
            if consistent {
                image[i] = j;
                used[j] = true;
                if self.extend(g, subset, local, i + 1, image, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
}

/// Visits every vertex set of `g - removed` inducing a pattern, by size then
/// lexicographically, until `visit` returns `true`.
fn scan_occurrences(
    g: &Graph,
    family: &ForbiddenFamily,
    removed: &[bool],
    mut visit: impl FnMut(&[usize]) -> bool,
) -> bool {
    let patterns: Vec<Pattern> = family.patterns.iter().map(Pattern::new).collect();
    let mut sizes: Vec<usize> = patterns.iter().map(|p| p.g.n()).collect();
    sizes.sort_unstable();
    sizes.dedup();
    for c in sizes {
        let here: Vec<&Pattern> = patterns.iter().filter(|p| p.g.n() == c).collect();
        let min_deg = here.iter().map(|p| p.degrees[0]).min().unwrap_or(0);
        let cand: Vec<usize> = g.vertices().filter(|&v| !removed[v] && g.degree(v) >= min_deg).collect();
        let mut buf = vec![0; c];
        let stop = for_each_combination(cand.len(), c, |idx| {
            for (b, &i) in buf.iter_mut().zip(idx) {
                *b = cand[i];
            }
            here.iter().any(|p| p.induced_by(g, &buf)) && visit(&buf)
        });
        if stop {
            return true;
        }
    }
    false
}

/// Some vertex set inducing a pattern, or `None` if `g` is F-free.
pub fn find_occurrence(g: &Graph, family: &ForbiddenFamily) -> Option<VertexSet> {
    find_occurrence_without(g, family, &VertexSet::new())
}

/// [`find_occurrence`] in `g - removed`.
pub fn find_occurrence_without(
    g: &Graph,
    family: &ForbiddenFamily,
    removed: &VertexSet,
) -> Option<VertexSet> {
    let mut found = None;
    scan_occurrences(g, family, &removed.to_mask(g.n()), |occ| {
        found = Some(VertexSet::from_sorted(occ.to_vec()));
        true
    });
    found
}

pub(crate) fn is_deletion_set_masked(g: &Graph, family: &ForbiddenFamily, removed: &[bool]) -> bool {
    !scan_occurrences(g, family, removed, |_| true)
}

/// Hypergraph of all occurrences over `V(g)`, with arity `c`.
pub fn all_occurrences(g: &Graph, family: &ForbiddenFamily) -> Hypergraph {
    let mut edges = Vec::new();
    scan_occurrences(g, family, &vec![false; g.n()], |occ| {
        edges.push(occ.to_vec());
        false
    });
    Hypergraph::new(g.n(), edges, family.c()).expect("occurrences are valid edges")
}

/// All inclusion-minimal deletion sets of size at most `k`, by size then
/// lexicographically. Search tree: some vertex of any occurrence must go.
pub fn enumerate_minimal_deletion_sets(g: &Graph, family: &ForbiddenFamily, k: usize) -> Vec<VertexSet> {
    fn branch(
        g: &Graph,
        family: &ForbiddenFamily,
        k: usize,
        removed: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        out: &mut BTreeSet<(usize, Vec<usize>)>,
    ) {
        let mut occ = None;
        scan_occurrences(g, family, removed, |o| {
            occ = Some(o.to_vec());
            true
        });
        let Some(occ) = occ else {
            let mut s = chosen.clone();
            s.sort_unstable();
            out.insert((s.len(), s));
            return;
        };
        if chosen.len() == k {
            return;
        }
        for v in occ {
            removed[v] = true;
            chosen.push(v);
            branch(g, family, k, removed, chosen, out);
            chosen.pop();
            removed[v] = false;
        }
    }
    let mut found = BTreeSet::new();
    branch(g, family, k, &mut vec![false; g.n()], &mut Vec::new(), &mut found);
    let mut mask = vec![false; g.n()];
    found
        .into_iter()
        .filter(|(_, s)| {
            s.iter().all(|&x| {
                for &v in s {
                    mask[v] = v != x;
                }
                let redundant = is_deletion_set_masked(g, family, &mask);
                for &v in s {
                    mask[v] = false;
                }
                !redundant
            })
        })
        .map(|(_, s)| VertexSet::from_sorted(s))
        .collect()
}

fn ffvd_report(g: &Graph, family: &ForbiddenFamily, set: VertexSet) -> SolutionReport {
    let mut report = SolutionReport::at_radius(g, set, 1);
    report.property_verified = find_occurrence_without(g, family, &report.solution).is_none();
    report
}

/// Secluded F-FVD: a deletion set with `|N[S]| <= k`. Shrinking a solution
/// never grows `N[S]`, so checking the minimal deletion sets suffices.
pub fn solve_secluded_ffvd(inst: &FfvdInstance) -> Result<Answer> {
    if inst.ell.is_some() {
        return Err(Error::Input("secluded F-FVD takes no ell budget".into()));
    }
    let sets = enumerate_minimal_deletion_sets(&inst.g, &inst.family, inst.k);
    let mut nodes = 0;
    for s in sets {
        nodes += 1;
        let mut report = ffvd_report(&inst.g, &inst.family, s);
        if report.closed_neighborhood.len() <= inst.k {
            report.budgets_verified = true;
            if !report.property_verified {
                return Err(Error::Internal("deletion set leaves an occurrence".into()));
            }
            return Ok(Answer::yes(report, nodes));
        }
    }
    Ok(Answer::no(nodes))
}

/// Kernel for secluded F-FVD with its id map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FfvdKernel {
    pub instance: FfvdInstance,
    /// Sorted; kernel vertex `i` is original vertex `to_original[i]`.
    pub to_original: Vec<usize>,
    /// Universe of the hitting-set kernel, in original ids.
    pub core: VertexSet,
    pub hitting_set: HsKernel,
}

impl FfvdKernel {
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.to_original[v]).collect()
    }

    pub fn from_original(&self, v: usize) -> Option<usize> {
        self.to_original.binary_search(&v).ok()
    }
}

/// `G' = G[U' + N_{k+1}(U')]` where `U'` is the universe of an expressive
/// hitting-set kernel of the occurrence hypergraph and `N_{k+1}(u)` are the
/// `k+1` smallest neighbors of `u`. `(G', k)` is equivalent to `(G, k)`.
pub fn kernelize_secluded_ffvd(inst: &FfvdInstance) -> Result<KernelOutcome<FfvdKernel>> {
    if inst.ell.is_some() {
        return Err(Error::Input("secluded F-FVD kernel takes no ell budget".into()));
    }
    let g = &inst.g;
    let h = all_occurrences(g, &inst.family);
    let hs = expressive_kernel(&h, inst.k);
    let core = hs.universe();
    let keep: VertexSet = core
        .iter()
        .flat_map(|u| core::iter::once(u).chain(g.neighbors(u).iter().copied().take(inst.k + 1)))
        .collect();
    let Induced { graph, to_original } = g.induced(&keep);
    let verdict = h.edges.is_empty().then(|| Verdict {
        yes: true,
        justification: "graph is already F-free; the empty set is a solution".into(),
    });
    let kernel = FfvdKernel {
        instance: FfvdInstance { g: graph, family: inst.family.clone(), k: inst.k, ell: None },
        to_original,
        core,
        hitting_set: hs,
    };
    Ok(KernelOutcome { kernel, verdict })
}

/// Small secluded F-FVD: `|S| <= k`, `|N(S)| <= ell`, `g - S` F-free.
pub fn solve_small_secluded_ffvd(inst: &FfvdInstance) -> Result<Answer> {
    solve_small_secluded_ffvd_with(inst, true)
}

/// Grows each minimal deletion set by moving open-neighborhood vertices into
/// it. With `prune`, sets with `|N(S)| > ell + k` are abandoned: a solution
/// `S* >= S` has `N(S) <= (S* - S) + N(S*)`.
pub fn solve_small_secluded_ffvd_with(inst: &FfvdInstance, prune: bool) -> Result<Answer> {
    let Some(ell) = inst.ell else {
        return Err(Error::Input("small secluded F-FVD needs an ell budget".into()));
    };
    let g = &inst.g;
    let mut search = Grow { g, k: inst.k, ell, prune, visited: BTreeSet::new(), nodes: 0 };
    for m in enumerate_minimal_deletion_sets(g, &inst.family, inst.k) {
        if let Some(s) = search.grow(m) {
            let mut report = ffvd_report(g, &inst.family, s);
            report.budgets_verified =
                report.solution.len() <= inst.k && report.open_neighborhood.len() <= ell;
            if !report.property_verified || !report.budgets_verified {
                return Err(Error::Internal("small secluded deletion set failed verification".into()));
            }
            return Ok(Answer::yes(report, search.nodes));
        }
    }
    Ok(Answer::no(search.nodes))
}

struct Grow<'a> {
    g: &'a Graph,
    k: usize,
    ell: usize,
    prune: bool,
    visited: BTreeSet<Vec<usize>>,
    nodes: u64,
}

impl Grow<'_> {
    fn grow(&mut self, s: VertexSet) -> Option<VertexSet> {
        if !self.visited.insert(s.as_slice().to_vec()) {
            return None;
        }
        self.nodes += 1;
        let mask = s.to_mask(self.g.n());
        let open: VertexSet =
            s.iter().flat_map(|v| self.g.neighbors(v).iter().copied()).filter(|&w| !mask[w]).collect();
        if open.len() <= self.ell {
            return Some(s);
        }
        if (self.prune && open.len() > self.ell + self.k) || s.len() >= self.k {
            return None;
        }
        for v in open.iter() {
            let next: VertexSet = s.iter().chain(core::iter::once(v)).collect();
            if let Some(found) = self.grow(next) {
                return Some(found);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn sec(g: Graph, family: ForbiddenFamily, k: usize) -> FfvdInstance {
        FfvdInstance { g, family, k, ell: None }
    }

    #[test]
    fn occurrences() {
        let tri = ForbiddenFamily::triangle();
        assert_eq!(find_occurrence(&complete(3), &tri), Some([0, 1, 2].into()));
        assert_eq!(find_occurrence(&cycle(4), &tri), None);
        assert_eq!(find_occurrence(&path(4), &ForbiddenFamily::edge()), Some([0, 1].into()));
        assert_eq!(all_occurrences(&complete(4), &tri).edges.len(), 4);
        assert_eq!(all_occurrences(&path(6), &tri).edges.len(), 0);
        // 5-vertex star: hub plus any two of the 4 leaves
        assert_eq!(all_occurrences(&star(4), &ForbiddenFamily::p3()).edges.len(), 6);
        // a triangle does not induce P3
        assert_eq!(all_occurrences(&complete(3), &ForbiddenFamily::p3()).edges.len(), 0);
    }

    #[test]
    fn minimal_deletion_sets() {
        let tri = ForbiddenFamily::triangle();
        let sets = enumerate_minimal_deletion_sets(&complete(3), &tri, 1);
        assert_eq!(sets, [[0].into(), [1].into(), [2].into()]);
        assert_eq!(enumerate_minimal_deletion_sets(&cycle(4), &tri, 3), [VertexSet::new()]);
        assert_eq!(enumerate_minimal_deletion_sets(&complete(4), &tri, 2).len(), 6);
        assert!(enumerate_minimal_deletion_sets(&complete(4), &tri, 1).is_empty());
    }

    #[test]
    fn secluded_vertex_cover() {
        let g = cycle(5);
        let edge = ForbiddenFamily::edge();
        assert!(solve_secluded_ffvd(&sec(g.clone(), edge.clone(), 5)).unwrap().is_yes());
        assert!(!solve_secluded_ffvd(&sec(g, edge, 4)).unwrap().is_yes());
        let a = solve_secluded_ffvd(&sec(complete(3), ForbiddenFamily::triangle(), 3)).unwrap();
        let w = a.witness.unwrap();
        assert_eq!(w.solution.len(), 1);
        assert_eq!(w.closed_neighborhood, [0, 1, 2].into());
    }

    #[test]
    fn kernel_trivial_cases() {
        let out = kernelize_secluded_ffvd(&sec(path(5), ForbiddenFamily::triangle(), 2)).unwrap();
        assert_eq!(out.decided(), Some(true));
        assert_eq!(out.kernel.instance.g.n(), 0);
        let out = kernelize_secluded_ffvd(&sec(complete(3), ForbiddenFamily::triangle(), 3)).unwrap();
        assert_eq!(out.kernel.instance.g, complete(3));
        assert_eq!(out.decided(), None);
    }

    #[test]
    fn small_secluded_examples() {
        let tri = ForbiddenFamily::triangle();
        let inst = FfvdInstance { g: complete(3), family: tri.clone(), k: 1, ell: Some(2) };
        assert_eq!(solve_small_secluded_ffvd(&inst).unwrap().witness.unwrap().solution.len(), 1);
        let inst = FfvdInstance { g: complete(3), family: tri, k: 1, ell: Some(1) };
        assert!(!solve_small_secluded_ffvd(&inst).unwrap().is_yes());
    }
}
