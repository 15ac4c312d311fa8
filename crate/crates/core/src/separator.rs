//! Secluded s-t separators: the polynomial cube-cut solver and an exact
//! degree-pruned search for the small secluded variant.

use alloc::vec;
use alloc::vec::Vec;

use crate::connectivity::min_vertex_cut;
use crate::graph::{power, Graph, GraphBuilder, VertexSet};
use crate::{Answer, Error, Result, SolutionReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorInstance {
    pub g: Graph,
    pub s: usize,
    pub t: usize,
    /// Bound on `|N[S]|` (secluded) or on `|S|` (small secluded).
    pub k: usize,
    /// Bound on `|N(S)|`; present only for the small secluded variant.
    pub ell: Option<usize>,
}

impl SeparatorInstance {
    pub fn secluded(g: Graph, s: usize, t: usize, k: usize) -> Self {
        SeparatorInstance { g, s, t, k, ell: None }
    }

    pub fn small(g: Graph, s: usize, t: usize, k: usize, ell: usize) -> Self {
        SeparatorInstance { g, s, t, k, ell: Some(ell) }
    }

    pub fn validate(&self) -> Result<()> {
        self.g.check_vertex(self.s)?;
        self.g.check_vertex(self.t)?;
        if self.s == self.t {
            return Err(Error::Input("terminals must be distinct".into()));
        }
        Ok(())
    }
}

/// True iff `set` avoids `s`, `t` and disconnects them.
pub fn is_separator(g: &Graph, s: usize, t: usize, set: &VertexSet) -> bool {
    if set.contains(s) || set.contains(t) {
        return false;
    }
    let blocked = set.to_mask(g.n());
    g.distances([s], None, Some(&blocked))[t].is_none()
}

/// The auxiliary graph: `g` plus pendant terminals `s'` on `s` and `t'` on `t`.
fn with_pendant_terminals(g: &Graph, s: usize, t: usize) -> (Graph, usize, usize) {
    let mut b = GraphBuilder::from_graph(g);
    let s2 = b.add_pendants(s, 1).start;
    let t2 = b.add_pendants(t, 1).start;
    (b.build(), s2, t2)
}

/// Size of a minimum `s'`-`t'` vertex cut in the cube of the pendant-augmented
/// graph, or `None` when `s` and `t` are adjacent. The secluded instance is a
/// yes-instance iff this is at most `k`.
pub fn cube_cut_size(g: &Graph, s: usize, t: usize) -> Result<Option<usize>> {
    SeparatorInstance::secluded(g.clone(), s, t, 0).validate()?;
    if g.has_edge(s, t) {
        return Ok(None);
    }
    let (g2, s2, t2) = with_pendant_terminals(g, s, t);
    Ok(min_vertex_cut(&power(&g2, 3)?, s2, t2)?.map(|c| c.size))
}

fn separator_report(inst: &SeparatorInstance, set: VertexSet) -> SolutionReport {
    let mut report = SolutionReport::at_radius(&inst.g, set, 1);
    report.property_verified = is_separator(&inst.g, inst.s, inst.t, &report.solution);
    report.budgets_verified = match inst.ell {
        None => report.closed_neighborhood.len() <= inst.k,
        Some(ell) => report.solution.len() <= inst.k && report.open_neighborhood.len() <= ell,
    };
    report
}

/// Secluded s-t separator: a separator `S` with `|N[S]| <= k`.
///
/// A minimum `s'`-`t'` cut `S'` in the cube of the pendant-augmented graph is
/// the closed neighborhood of some separator; the separator is recovered as
/// the cut vertices at distance exactly 2 from the `s'` side.
pub fn solve_secluded_separator(inst: &SeparatorInstance) -> Result<Answer> {
    inst.validate()?;
    if inst.ell.is_some() {
        return Err(Error::Input("secluded separator takes no open-neighborhood budget".into()));
    }
    let g = &inst.g;
    if g.has_edge(inst.s, inst.t) {
        return Ok(Answer::no(0));
    }
    let (g2, s2, t2) = with_pendant_terminals(g, inst.s, inst.t);
    let Some(cut) = min_vertex_cut(&power(&g2, 3)?, s2, t2)? else {
        return Ok(Answer::no(1));
    };
    if cut.size > inst.k {
        return Ok(Answer::no(1));
    }
    let dist = g2.distances(cut.side_s.iter(), Some(2), None);
    let set: VertexSet = cut.cut.iter().filter(|&v| dist[v] == Some(2)).collect();
    let report = separator_report(inst, set);
    if !report.property_verified || !report.budgets_verified {
        return Err(Error::Internal("back-mapped separator failed verification".into()));
    }
    if !report.closed_neighborhood.is_subset(&cut.cut) {
        return Err(Error::Internal("N[S] escapes the cube cut".into()));
    }
    Ok(Answer::yes(report, 1))
}

/// Small secluded s-t separator: `|S| <= k` and `|N(S)| <= ell`.
///
/// Depth-first search over vertices of degree at most `k + ell` in increasing
/// id order. A branch is cut when even `k - |S|` further vertices could not
/// bring `|N(S)|` down to `ell`, since each added vertex removes at most one
/// vertex from `N(S)`.
pub fn solve_small_secluded_separator(inst: &SeparatorInstance) -> Result<Answer> {
    inst.validate()?;
    let Some(ell) = inst.ell else {
        return Err(Error::Input("small secluded separator needs an ell budget".into()));
    };
    let g = &inst.g;
    let candidates: Vec<usize> =
        g.vertices().filter(|&v| v != inst.s && v != inst.t && g.degree(v) <= inst.k + ell).collect();
    let mut search = SmallSearch {
        g,
        s: inst.s,
        t: inst.t,
        k: inst.k,
        ell,
        candidates: &candidates,
        in_set: vec![false; g.n()],
        chosen: Vec::new(),
        nodes: 0,
    };
    if search.dfs(0) {
        let report = separator_report(inst, search.chosen.iter().copied().collect());
        if !report.property_verified || !report.budgets_verified {
            return Err(Error::Internal("small separator failed verification".into()));
        }
        return Ok(Answer::yes(report, search.nodes));
    }
    Ok(Answer::no(search.nodes))
}

struct SmallSearch<'a> {
    g: &'a Graph,
    s: usize,
    t: usize,
    k: usize,
    ell: usize,
    candidates: &'a [usize],
    in_set: Vec<bool>,
    chosen: Vec<usize>,
    nodes: u64,
}

impl SmallSearch<'_> {
    fn open_size(&self) -> usize {
        let mut seen = vec![false; self.g.n()];
        let mut count = 0;
        for &v in &self.chosen {
            for &w in self.g.neighbors(v) {
                if !self.in_set[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                }
            }
        }
        count
    }

    fn dfs(&mut self, from: usize) -> bool {
        self.nodes += 1;
        let open = self.open_size();
        if open > self.ell + (self.k - self.chosen.len()) {
            return false;
        }
        if open <= self.ell && self.g.distances([self.s], None, Some(&self.in_set))[self.t].is_none() {
            return true;
        }
        if self.chosen.len() == self.k {
            return false;
        }
        for i in from..self.candidates.len() {
            let v = self.candidates[i];
            self.in_set[v] = true;
            self.chosen.push(v);
            if self.dfs(i + 1) {
                return true;
            }
            self.chosen.pop();
            self.in_set[v] = false;
        }
        false
    }
}
