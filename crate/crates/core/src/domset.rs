//! p-secluded q-dominating sets in the regime `2p > q`.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};
use crate::subsets::for_each_combination;
use crate::{Answer, Error, Result, SolutionReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomInstance {
    pub g: Graph,
    /// Seclusion radius.
    pub p: usize,
    /// Domination radius.
    pub q: usize,
    /// `|S|` bound (small secluded) or `|N^p[S]|` bound (secluded).
    pub k: usize,
    pub ell: Option<usize>,
}

impl DomInstance {
    pub fn secluded(g: Graph, p: usize, q: usize, k: usize) -> Self {
        DomInstance { g, p, q, k, ell: None }
    }

    pub fn small(g: Graph, p: usize, q: usize, k: usize, ell: usize) -> Self {
        DomInstance { g, p, q, k, ell: Some(ell) }
    }

    /// Checks `0 < p < q`; the solvers additionally need `2p > q`.
    pub fn validate(&self) -> Result<()> {
        let (p, q) = (self.p, self.q);
        if p == 0 || p >= q {
            return Err(Error::ParameterRegime { p, q, reason: "need 0 < p < q" });
        }
        Ok(())
    }

    fn validate_fpt_regime(&self) -> Result<()> {
        self.validate()?;
        if 2 * self.p <= self.q {
            return Err(Error::ParameterRegime {
                p: self.p,
                q: self.q,
                reason: "the FPT algorithm needs p > q/2",
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DomOptions {
    /// Drop vertices within distance `< p` of a clique larger than `k + ell`.
    pub clique_pruning: bool,
}

/// True iff every vertex is within distance `q` of `set`.
pub fn is_q_dominating(g: &Graph, set: &VertexSet, q: usize) -> bool {
    g.distances(set.iter(), Some(q), None).iter().all(Option::is_some)
}

/// `|N^p[v]|`, stopping early once it exceeds `limit`.
fn ball_size_capped(g: &Graph, v: usize, radius: usize, limit: usize) -> usize {
    let mut dist = vec![usize::MAX; g.n()];
    dist[v] = 0;
    let mut order = vec![v];
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        if dist[u] == radius {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                order.push(w);
                if order.len() > limit {
                    return order.len();
                }
            }
        }
    }
    order.len()
}

/// `Y = { y : |N^p[y]| <= budget }`; every solution lies inside it.
pub fn candidate_set(g: &Graph, p: usize, budget: usize) -> VertexSet {
    g.vertices().filter(|&y| ball_size_capped(g, y, p, budget) <= budget).collect()
}

/// `B^i[v]`: vertices joined to `v` by a path of length at most `i` whose
/// vertices all have degree at most `budget - 1`. Empty if `v` itself is
/// too heavy.
pub fn linked_ball(g: &Graph, v: usize, i: usize, budget: usize) -> VertexSet {
    let light = |u: usize| g.degree(u) < budget;
    if !light(v) {
        return VertexSet::new();
    }
    let mut dist = vec![usize::MAX; g.n()];
    dist[v] = 0;
    let mut order = vec![v];
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        if dist[u] == i {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX && light(w) {
                dist[w] = dist[u] + 1;
                order.push(w);
            }
        }
    }
    order.into_iter().collect()
}

/// Maximal cliques with more than `min_size` vertices (Bron-Kerbosch with
/// pivoting).
fn large_cliques(g: &Graph, min_size: usize) -> Vec<Vec<usize>> {
    fn expand(
        g: &Graph,
        r: &mut Vec<usize>,
        p: Vec<usize>,
        mut x: Vec<usize>,
        min_size: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if r.len() + p.len() <= min_size {
            return;
        }
        if p.is_empty() {
            if x.is_empty() {
                out.push(r.clone());
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&w| g.has_edge(u, w)).count())
            .unwrap();
        let branch: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
        let mut p = p;
        for v in branch {
            r.push(v);
            let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            expand(g, r, np, nx, min_size, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    expand(g, &mut Vec::new(), g.vertices().collect(), Vec::new(), min_size, &mut out);
    out
}

fn dom_report(g: &Graph, set: VertexSet, p: usize, q: usize) -> SolutionReport {
    let mut report = SolutionReport::at_radius(g, set, p);
    report.property_verified = is_q_dominating(g, &report.solution, q);
    report
}

/// Small p-secluded q-dominating set with `|S| <= k`, `|N^p(S)| <= ell`.
pub fn solve_small_secluded_qds(inst: &DomInstance) -> Result<Answer> {
    solve_small_secluded_qds_with(inst, DomOptions::default())
}

pub fn solve_small_secluded_qds_with(inst: &DomInstance, opts: DomOptions) -> Result<Answer> {
    inst.validate_fpt_regime()?;
    let Some(ell) = inst.ell else {
        return Err(Error::Input("small secluded q-dominating set needs an ell budget".into()));
    };
    let (g, p, q, k) = (&inst.g, inst.p, inst.q, inst.k);
    let budget = k + ell;
    if budget <= 1 && g.n() > 1 {
        // a solution would be an isolated vertex (or nothing) dominating everything
        return Ok(Answer::no(0));
    }
    let mut y = candidate_set(g, p, budget);
    let bound = (k as u128).saturating_mul((budget as u128).saturating_pow(q as u32));
    if y.len() as u128 > bound {
        return Ok(Answer::no(0));
    }
    if opts.clique_pruning {
        let cliques = large_cliques(g, budget);
        if !cliques.is_empty() && p > 0 {
            let sources = cliques.into_iter().flatten();
            let near = g.distances(sources, Some(p - 1), None);
            y = y.iter().filter(|&v| near[v].is_none()).collect();
        }
    }
    let ys = y.as_slice();
    let mut nodes = 0u64;
    let mut found = None;
    for size in 0..=k.min(ys.len()) {
        let hit = for_each_combination(ys.len(), size, |idx| {
            nodes += 1;
            let set: VertexSet = idx.iter().map(|&i| ys[i]).collect();
            let report = dom_report(g, set, p, q);
            if report.property_verified && report.open_neighborhood.len() <= ell {
                found = Some(report);
                return true;
            }
            false
        });
        if hit {
            break;
        }
    }
    match found {
        Some(mut report) => {
            report.budgets_verified = report.solution.len() <= k && report.open_neighborhood.len() <= ell;
            if !report.budgets_verified {
                return Err(Error::Internal("dominating set exceeds its budgets".into()));
            }
            Ok(Answer::yes(report, nodes))
        }
        None => Ok(Answer::no(nodes)),
    }
}

/// p-secluded q-dominating set with `|N^p[S]| <= k`, by trying every split
/// `k = k' + ell'` of the budget into `|S| <= k'` and `|N^p(S)| <= ell'`.
pub fn solve_secluded_qds(inst: &DomInstance) -> Result<Answer> {
    solve_secluded_qds_with(inst, DomOptions::default())
}

pub fn solve_secluded_qds_with(inst: &DomInstance, opts: DomOptions) -> Result<Answer> {
    inst.validate_fpt_regime()?;
    if inst.ell.is_some() {
        return Err(Error::Input("secluded q-dominating set takes no ell budget".into()));
    }
    let mut nodes = 0;
    for k1 in 0..=inst.k {
        let small = DomInstance::small(inst.g.clone(), inst.p, inst.q, k1, inst.k - k1);
        let answer = solve_small_secluded_qds_with(&small, opts)?;
        nodes += answer.nodes_explored;
        if let Some(mut report) = answer.witness {
            report.budgets_verified = report.closed_neighborhood.len() <= inst.k;
            if !report.budgets_verified {
                return Err(Error::Internal("N^p[S] exceeds the secluded budget".into()));
            }
            return Ok(Answer::yes(report, nodes));
        }
    }
    Ok(Answer::no(nodes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{complete, path};

    #[test]
    fn single_vertex() {
        let g = Graph::new(1);
        let a = solve_small_secluded_qds(&DomInstance::small(g.clone(), 2, 3, 1, 0)).unwrap();
        assert_eq!(a.witness.unwrap().solution, [0].into());
        assert!(solve_secluded_qds(&DomInstance::secluded(g, 2, 3, 1)).unwrap().is_yes());
    }

    #[test]
    fn seven_path() {
        let g = path(7);
        let a = solve_small_secluded_qds(&DomInstance::small(g.clone(), 2, 3, 1, 4)).unwrap();
        let w = a.witness.unwrap();
        assert_eq!(w.solution, [3].into());
        assert_eq!(w.open_neighborhood, [1, 2, 4, 5].into());
        let a = solve_secluded_qds(&DomInstance::secluded(g, 2, 3, 5)).unwrap();
        assert_eq!(a.witness.unwrap().solution, [3].into());
    }

    #[test]
    fn regime_is_enforced() {
        let g = path(3);
        for (p, q) in [(1, 2), (1, 3), (3, 3), (0, 1), (2, 5)] {
            let r = solve_small_secluded_qds(&DomInstance::small(g.clone(), p, q, 1, 1));
            assert!(matches!(r, Err(Error::ParameterRegime { .. })), "{p} {q}");
        }
    }

    #[test]
    fn linked_ball_respects_degree() {
        // path 0-1-2-3-4, budget 3: all degrees <= 2 qualify
        let g = path(5);
        assert_eq!(linked_ball(&g, 0, 2, 3), [0, 1, 2].into());
        // budget 2 excludes interior vertices of degree 2
        assert_eq!(linked_ball(&g, 0, 4, 2), [0].into());
        assert_eq!(linked_ball(&g, 2, 4, 2), VertexSet::new());
    }

    #[test]
    fn clique_pruning_agrees() {
        let g = complete(5);
        for k in 0..3 {
            for ell in 0..6 {
                let inst = DomInstance::small(g.clone(), 2, 3, k, ell);
                let a = solve_small_secluded_qds(&inst).unwrap().is_yes();
                let b = solve_small_secluded_qds_with(&inst, DomOptions { clique_pruning: true })
                    .unwrap()
                    .is_yes();
                assert_eq!(a, b);
            }
        }
        assert_eq!(large_cliques(&g, 3).len(), 1);
        assert!(large_cliques(&g, 5).is_empty());
    }
}
