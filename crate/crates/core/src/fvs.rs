//! Secluded feedback vertex set: reduction rules, the size threshold and an
//! exact solver on the reduced instance.
//!
//! Rules, in the order they are tried:
//!
//! * RR1 deletes a vertex when it and all its neighbors lie outside the 2-core.
//! * RR3 answers "no" when some vertex has `ceil(k/2)` cycles meeting only there.
//! * RR5 answers "no" when two vertices are joined by `k` internally disjoint
//!   paths of length at least 2.
//! * RR4 deletes a non-core neighbor of a vertex of degree above `k`.
//! * RR2 shortens a chain of three core-degree-2 vertices to two.
//!
//! RR2 is applied in a guarded form: the window `v0 v1 v2 v3 v4` is replaced
//! by `v0 u1 u2 v4`, `u1` inheriting the pendants of `v1` and `u2` those of
//! `v3`, and only when `v2` carries at least as many pendants as the lighter
//! of `v1`, `v3`. Giving both new vertices the minimum pendant count instead
//! is unsound once the chain ends differ in weight.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::connectivity::{disjoint_long_paths_at_least, petal_decision, FlowerCertificate};
use crate::graph::{is_acyclic, is_acyclic_masked, two_core, Graph, GraphBuilder, VertexSet};
use crate::subsets::for_each_combination;
use crate::{Answer, Error, KernelOutcome, Result, SolutionReport, Verdict};

/// Default bound on the number of search candidates in [`solve_sfvs`].
pub const SOLVE_CAP: usize = 24;

const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FvsInstance {
    pub g: Graph,
    /// `|N[S]|` bound (secluded) or `|S|` bound (small secluded).
    pub k: usize,
    pub ell: Option<usize>,
}

impl FvsInstance {
    pub fn secluded(g: Graph, k: usize) -> Self {
        FvsInstance { g, k, ell: None }
    }

    pub fn small(g: Graph, k: usize, ell: usize) -> Self {
        FvsInstance { g, k, ell: Some(ell) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    Rr1,
    Rr2,
    Rr3,
    Rr4,
    Rr5,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Rule::Rr1 => "RR1",
            Rule::Rr2 => "RR2",
            Rule::Rr3 => "RR3",
            Rule::Rr4 => "RR4",
            Rule::Rr5 => "RR5",
        };
        f.write_str(name)
    }
}

/// One rule application, in working ids: original vertices keep their ids
/// and fresh vertices are numbered from the original vertex count upwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleStep {
    pub rule: Rule,
    /// Vertices that triggered the rule.
    pub affected: Vec<usize>,
    pub removed: Vec<usize>,
    pub added: Vec<usize>,
    pub added_edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RuleTrace {
    pub steps: Vec<RuleStep>,
}

impl RuleTrace {
    /// Re-applies every step to `original`, returning the reduced graph and
    /// the working id of each of its vertices.
    pub fn replay(&self, original: &Graph) -> Result<(Graph, Vec<usize>)> {
        let mut work = Work::new(original);
        for step in &self.steps {
            for &v in &step.removed {
                if !work.is_alive(v) {
                    return Err(Error::Input(format!("trace removes absent vertex {v}")));
                }
                work.remove(v);
            }
            for &v in &step.added {
                if work.add_vertex() != v {
                    return Err(Error::Input(format!("trace adds vertex {v} out of order")));
                }
            }
            for &(u, v) in &step.added_edges {
                if !work.is_alive(u) || !work.is_alive(v) || u == v {
                    return Err(Error::Input(format!("trace adds invalid edge {{{u}, {v}}}")));
                }
                work.add_edge(u, v);
            }
        }
        Ok(work.compact())
    }

    pub fn count(&self, rule: Rule) -> usize {
        self.steps.iter().filter(|s| s.rule == rule).count()
    }
}

/// Graph with stable ids: removals leave holes, additions append.
#[derive(Clone, Debug)]
struct Work {
    adj: Vec<BTreeSet<usize>>,
    alive: Vec<bool>,
}

impl Work {
    fn new(g: &Graph) -> Self {
        Work {
            adj: g.vertices().map(|v| g.neighbors(v).iter().copied().collect()).collect(),
            alive: vec![true; g.n()],
        }
    }

    fn is_alive(&self, v: usize) -> bool {
        v < self.alive.len() && self.alive[v]
    }

    fn remove(&mut self, v: usize) {
        for w in core::mem::take(&mut self.adj[v]) {
            self.adj[w].remove(&v);
        }
        self.alive[v] = false;
    }

    fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeSet::new());
        self.alive.push(true);
        self.alive.len() - 1
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Live vertices renumbered in id order.
    fn compact(&self) -> (Graph, Vec<usize>) {
        let ids: Vec<usize> = (0..self.alive.len()).filter(|&v| self.alive[v]).collect();
        let mut local = vec![NONE; self.alive.len()];
        for (i, &v) in ids.iter().enumerate() {
            local[v] = i;
        }
        let mut b = GraphBuilder::new(ids.len());
        for (i, &v) in ids.iter().enumerate() {
            for &w in &self.adj[v] {
                if i < local[w] {
                    b.add_edge(i, local[w]);
                }
            }
        }
        (b.build(), ids)
    }
}

/// Degree inside the 2-core, or 0 for vertices outside it.
pub fn deg_core(g: &Graph, core: &VertexSet, v: usize) -> usize {
    if !core.contains(v) {
        return 0;
    }
    g.neighbors(v).iter().filter(|&&w| core.contains(w)).count()
}

fn core_degrees(g: &Graph, core_mask: &[bool]) -> Vec<usize> {
    g.vertices()
        .map(|v| if core_mask[v] { g.neighbors(v).iter().filter(|&&w| core_mask[w]).count() } else { 0 })
        .collect()
}

/// The vertex bound every reduced yes-instance meets:
/// `4k^2 + 2k + (15k^3 + 8k^2 - k - 1)(k + 1)(12k + 7)`.
pub fn threshold(k: usize) -> i128 {
    let k = k as i128;
    let eval = || {
        let cubic = (15i128.checked_mul(k)?.checked_mul(k)?.checked_mul(k)?)
            .checked_add(8i128.checked_mul(k)?.checked_mul(k)?)?
            .checked_sub(k + 1)?;
        let tail = cubic.checked_mul(k + 1)?.checked_mul(12i128.checked_mul(k)?.checked_add(7)?)?;
        4i128.checked_mul(k)?.checked_mul(k)?.checked_add(2 * k)?.checked_add(tail)
    };
    eval().unwrap_or(i128::MAX)
}

/// Pendant counts of the interior chain vertices, after checking the shape
/// RR2 needs. `path` is `v0, v1, ..., v_l, v_{l+1}` in local ids.
fn rr2_pendants(g: &Graph, core_mask: &[bool], cdeg: &[usize], path: &[usize]) -> Result<Vec<usize>> {
    let bad = |why: String| Err(Error::Precondition(format!("RR2 inapplicable: {why}")));
    if path.len() < 5 {
        return bad(format!("path has {} interior vertices, need at least 3", path.len().saturating_sub(2)));
    }
    for &v in path {
        g.check_vertex(v)?;
    }
    let distinct: BTreeSet<usize> = path.iter().copied().collect();
    if distinct.len() != path.len() {
        return bad("path vertices are not distinct".into());
    }
    if let Some(w) = path.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
        return bad(format!("{{{}, {}}} is not an edge", w[0], w[1]));
    }
    let (first, last) = (path[0], path[path.len() - 1]);
    if cdeg[first] < 2 || cdeg[last] < 2 {
        return bad("path ends must have core degree at least 2".into());
    }
    let interior = &path[1..path.len() - 1];
    let mut pendants = Vec::with_capacity(interior.len());
    for &v in interior {
        if cdeg[v] != 2 {
            return bad(format!("interior vertex {v} has core degree {}", cdeg[v]));
        }
        for &w in g.neighbors(v) {
            if !core_mask[w] && g.degree(w) != 1 {
                return Err(Error::Precondition(format!(
                    "RR2: non-core neighbor {w} of {v} is not a pendant"
                )));
            }
        }
        pendants.push(g.degree(v) - 2);
    }
    let ends = pendants[0].min(pendants[pendants.len() - 1]);
    let middle = pendants[1..pendants.len() - 1].iter().copied().min().unwrap_or(usize::MAX);
    if middle < ends {
        return bad(format!(
            "a middle chain vertex carries {middle} pendants, fewer than the lighter end's {ends}"
        ));
    }
    Ok(pendants)
}

/// Result of a single RR2 application on a plain graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rr2Outcome {
    pub graph: Graph,
    /// For each new vertex, the input vertex it came from (`None` when fresh).
    pub to_original: Vec<Option<usize>>,
    pub u1: usize,
    pub u2: usize,
}

/// Replaces the interior `v1..v_l` of `path` (and their pendants) by two
/// vertices `u1`, `u2` carrying the pendants of `v1` and `v_l` respectively.
pub fn apply_rr2(g: &Graph, core: &VertexSet, path: &[usize]) -> Result<Rr2Outcome> {
    g.check_set(core)?;
    let core_mask = core.to_mask(g.n());
    let cdeg = core_degrees(g, &core_mask);
    let mut work = Work::new(g);
    let step = rr2_step(g, &core_mask, &cdeg, path, &mut work, |v| v)?;
    let (graph, ids) = work.compact();
    let to_original = ids.iter().map(|&w| (w < g.n()).then_some(w)).collect();
    let local = |w: usize| ids.binary_search(&w).unwrap();
    Ok(Rr2Outcome { graph, to_original, u1: local(step.added[0]), u2: local(step.added[1]) })
}

/// Applies RR2 on `work`; `g` is its compacted view and `id` translates
/// local ids to working ids.
fn rr2_step(
    g: &Graph,
    core_mask: &[bool],
    cdeg: &[usize],
    path: &[usize],
    work: &mut Work,
    id: impl Fn(usize) -> usize,
) -> Result<RuleStep> {
    let pendants = rr2_pendants(g, core_mask, cdeg, path)?;
    let interior = &path[1..path.len() - 1];
    let mut removed = Vec::new();
    for &v in interior {
        removed.push(id(v));
        removed.extend(g.neighbors(v).iter().filter(|&&w| !core_mask[w]).map(|&w| id(w)));
    }
    for &v in &removed {
        work.remove(v);
    }
    let (v0, v_end) = (id(path[0]), id(path[path.len() - 1]));
    let u1 = work.add_vertex();
    let u2 = work.add_vertex();
    let mut added = vec![u1, u2];
    let mut added_edges = vec![(v0, u1), (u1, u2), (u2, v_end)];
    for (u, count) in [(u1, pendants[0]), (u2, pendants[pendants.len() - 1])] {
        for _ in 0..count {
            let w = work.add_vertex();
            added.push(w);
            added_edges.push((u, w));
        }
    }
    for &(a, b) in &added_edges {
        work.add_edge(a, b);
    }
    Ok(RuleStep {
        rule: Rule::Rr2,
        affected: path.iter().map(|&v| id(v)).collect(),
        removed,
        added,
        added_edges,
    })
}

/// Leftmost window `v0 v1 v2 v3 v4` of some maximal chain of core-degree-2
/// vertices on which the guarded RR2 applies.
fn find_rr2_window(g: &Graph, core_mask: &[bool], cdeg: &[usize]) -> Option<Vec<usize>> {
    let core_nbrs = |v: usize| g.neighbors(v).iter().copied().filter(move |&w| core_mask[w]);
    let mut seen = vec![false; g.n()];
    for start in g.vertices().filter(|&v| cdeg[v] == 2) {
        if seen[start] {
            continue;
        }
        // walk both ways from `start` along core-degree-2 vertices
        let mut sides = [Vec::new(), Vec::new()];
        let mut cyclic = false;
        let first: Vec<usize> = core_nbrs(start).collect();
        for (side, &next) in sides.iter_mut().zip(&first) {
            let (mut prev, mut cur) = (start, next);
            loop {
                if cur == start {
                    cyclic = true;
                    break;
                }
                side.push(cur);
                if cdeg[cur] != 2 {
                    break;
                }
                let step = core_nbrs(cur).find(|&w| w != prev).unwrap();
                prev = cur;
                cur = step;
            }
            if cyclic {
                break;
            }
        }
        let seq: Vec<usize> = if cyclic {
            let mut s = vec![start];
            s.extend(&sides[0]);
            s
        } else {
            let mut s: Vec<usize> = sides[1].iter().rev().copied().collect();
            s.push(start);
            s.extend(&sides[0]);
            if s[0] > s[s.len() - 1] {
                s.reverse();
            }
            s
        };
        for &v in &seq {
            if cdeg[v] == 2 {
                seen[v] = true;
            }
        }
        let len = seq.len();
        let windows: Vec<Vec<usize>> = if cyclic {
            if len < 5 {
                continue;
            }
            (0..len).map(|i| (0..5).map(|j| seq[(i + j) % len]).collect()).collect()
        } else {
            seq.windows(5).map(<[usize]>::to_vec).collect()
        };
        for w in windows {
            if rr2_pendants(g, core_mask, cdeg, &w).is_ok() {
                return Some(w);
            }
        }
    }
    None
}

/// Reduced secluded FVS instance with everything needed to map solutions back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SfvsKernel {
    pub instance: FvsInstance,
    pub trace: RuleTrace,
    pub original_n: usize,
    /// Kernel vertex `i` is working vertex `working_ids[i]`.
    pub working_ids: Vec<usize>,
    /// For fresh working vertex `original_n + j`, the working vertex it
    /// stands in for, or `None` for fresh pendants.
    pub stands_for: Vec<Option<usize>>,
}

impl SfvsKernel {
    /// Maps kernel vertices to original vertices; `None` if some vertex is a
    /// fresh pendant with no counterpart.
    pub fn lift(&self, s: &VertexSet) -> Option<VertexSet> {
        s.iter()
            .map(|v| {
                let mut w = self.working_ids[v];
                while w >= self.original_n {
                    w = self.stands_for[w - self.original_n]?;
                }
                Some(w)
            })
            .collect()
    }
}

/// Applies the reduction rules exhaustively. Budgets `k <= 2` are decided
/// once RR1, RR3 and RR5 have had their turn: no nonempty set with
/// `|N[S]| <= 2` meets a cycle, so the answer is "yes" iff the graph is a
/// forest.
pub fn kernelize_sfvs(inst: &FvsInstance) -> Result<KernelOutcome<SfvsKernel>> {
    if inst.ell.is_some() {
        return Err(Error::Input("the SFVS kernel takes no ell budget".into()));
    }
    let k = inst.k;
    let n0 = inst.g.n();
    let mut work = Work::new(&inst.g);
    let mut trace = RuleTrace::default();
    let mut stands_for: Vec<Option<usize>> = Vec::new();
    let mut verdict = None;
    // RR1 and RR4 only delete vertices outside the 2-core, which changes no
    // cycle; flowers and parallel paths need rechecking only after RR2.
    let mut cycles_changed = true;

    let (g, ids) = loop {
        let (g, ids) = work.compact();
        let core = two_core(&g);
        let core_mask = core.to_mask(g.n());
        let cdeg = core_degrees(&g, &core_mask);

        let rr1: Vec<usize> =
            g.vertices().filter(|&u| cdeg[u] == 0 && g.neighbors(u).iter().all(|&v| cdeg[v] == 0)).collect();
        if !rr1.is_empty() {
            for u in rr1 {
                work.remove(ids[u]);
                trace.steps.push(RuleStep {
                    rule: Rule::Rr1,
                    affected: vec![ids[u]],
                    removed: vec![ids[u]],
                    added: vec![],
                    added_edges: vec![],
                });
            }
            continue;
        }
        if cycles_changed {
            // RR3 needs k >= 1 and RR5 k >= 2: below that they fire on forests
            let t = k.div_ceil(2);
            let mut flower = None;
            for x in core.iter().filter(|_| k >= 1) {
                if let FlowerCertificate::Cycles(_) = petal_decision(&g, x, t)? {
                    flower = Some(x);
                    break;
                }
            }
            if let Some(x) = flower {
                trace.steps.push(verdict_step(Rule::Rr3, vec![ids[x]]));
                verdict = Some(Verdict {
                    yes: false,
                    justification: format!("{t} cycles meet only at vertex {}", ids[x]),
                });
                break (g, ids);
            }
            let heavy: Vec<usize> = core.iter().filter(|&v| k >= 2 && g.degree(v) >= k).collect();
            let mut parallel = None;
            'pairs: for (i, &x) in heavy.iter().enumerate() {
                for &y in &heavy[i + 1..] {
                    if disjoint_long_paths_at_least(&g, x, y, k) {
                        parallel = Some((x, y));
                        break 'pairs;
                    }
                }
            }
            if let Some((x, y)) = parallel {
                trace.steps.push(verdict_step(Rule::Rr5, vec![ids[x], ids[y]]));
                verdict = Some(Verdict {
                    yes: false,
                    justification: format!(
                        "{k} internally disjoint long paths join {} and {}",
                        ids[x], ids[y]
                    ),
                });
                break (g, ids);
            }
            cycles_changed = false;
        }
        if k <= 2 {
            let yes = core.is_empty();
            verdict = Some(Verdict {
                yes,
                justification: format!(
                    "budget {k} <= 2 admits only the empty set, and the graph {} a forest",
                    if yes { "is" } else { "is not" }
                ),
            });
            break (g, ids);
        }
        let rr4 = g
            .vertices()
            .filter(|&v| g.degree(v) > k)
            .find_map(|v| g.neighbors(v).iter().find(|&&w| !core_mask[w]).map(|&w| (v, w)));
        if let Some((v, w)) = rr4 {
            work.remove(ids[w]);
            trace.steps.push(RuleStep {
                rule: Rule::Rr4,
                affected: vec![ids[v]],
                removed: vec![ids[w]],
                added: vec![],
                added_edges: vec![],
            });
            continue;
        }
        if let Some(window) = find_rr2_window(&g, &core_mask, &cdeg) {
            let step = rr2_step(&g, &core_mask, &cdeg, &window, &mut work, |v| ids[v])?;
            let (v1, v3) = (ids[window[1]], ids[window[3]]);
            stands_for.push(Some(v1));
            stands_for.push(Some(v3));
            stands_for.resize(step.added.last().unwrap() + 1 - n0, None);
            trace.steps.push(step);
            cycles_changed = true;
            continue;
        }
        break (g, ids);
    };

    if verdict.is_none() {
        let bound = threshold(k);
        if is_acyclic(&g, &VertexSet::new()) {
            verdict = Some(Verdict {
                yes: true,
                justification: "reduced graph is a forest; the empty set is a solution".into(),
            });
        } else if g.n() as i128 > bound {
            verdict = Some(Verdict {
                yes: false,
                justification: format!("reduced graph has {} vertices, above the bound {bound}", g.n()),
            });
        }
    }
    let kernel = SfvsKernel {
        instance: FvsInstance::secluded(g, k),
        trace,
        original_n: n0,
        working_ids: ids,
        stands_for,
    };
    Ok(KernelOutcome { kernel, verdict })
}

fn verdict_step(rule: Rule, affected: Vec<usize>) -> RuleStep {
    RuleStep { rule, affected, removed: vec![], added: vec![], added_edges: vec![] }
}

fn fvs_report(g: &Graph, set: VertexSet, k: usize) -> SolutionReport {
    let mut report = SolutionReport::at_radius(g, set, 1);
    report.property_verified = is_acyclic(g, &report.solution);
    report.budgets_verified = report.closed_neighborhood.len() <= k;
    report
}

/// Secluded FVS: a feedback vertex set `S` with `|N[S]| <= k`.
pub fn solve_sfvs(inst: &FvsInstance) -> Result<Answer> {
    solve_sfvs_capped(inst, SOLVE_CAP)
}

/// Kernelizes, then searches the reduced 2-core by increasing size. Only
/// core vertices of degree below `k` can be in a minimal solution; more than
/// `cap` of them is a capacity error.
pub fn solve_sfvs_capped(inst: &FvsInstance, cap: usize) -> Result<Answer> {
    let out = kernelize_sfvs(inst)?;
    let k = inst.k;
    match out.verdict {
        Some(Verdict { yes: false, .. }) => return Ok(Answer::no(0)),
        Some(Verdict { yes: true, .. }) => {
            let report = fvs_report(&inst.g, VertexSet::new(), k);
            if !report.property_verified {
                return Err(Error::Internal("kernel said yes but the graph has a cycle".into()));
            }
            return Ok(Answer::yes(report, 0));
        }
        None => {}
    }
    let ker = &out.kernel;
    let g = &ker.instance.g;
    let core = two_core(g);
    let cand: Vec<usize> = core.iter().filter(|&v| g.degree(v) < k).collect();
    if cand.len() > cap {
        return Err(Error::Capacity {
            needed: format!("{} candidate vertices", cand.len()),
            cap: format!("{cap} candidate vertices"),
        });
    }
    let mut nodes = 0u64;
    let mut found = None;
    let mut mask = vec![false; g.n()];
    for size in 1..=k.min(cand.len()) {
        let hit = for_each_combination(cand.len(), size, |idx| {
            nodes += 1;
            for &i in idx {
                mask[cand[i]] = true;
            }
            let ok = g.closed_neighborhood_size(&mask) <= k && is_acyclic_masked(g, &mask);
            for &i in idx {
                mask[cand[i]] = false;
            }
            if ok {
                found = Some(idx.iter().map(|&i| cand[i]).collect::<VertexSet>());
            }
            ok
        });
        if hit {
            break;
        }
    }
    let Some(s) = found else {
        return Ok(Answer::no(nodes));
    };
    let lifted =
        ker.lift(&s).ok_or_else(|| Error::Internal("kernel solution uses a fresh pendant".into()))?;
    let report = fvs_report(&inst.g, lifted, k);
    if !report.property_verified || !report.budgets_verified {
        return Err(Error::Internal("lifted feedback vertex set failed verification".into()));
    }
    Ok(Answer::yes(report, nodes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn core_degree_examples() {
        let t = path(4);
        assert_eq!(deg_core(&t, &two_core(&t), 1), 0);
        let c = cycle(4);
        assert_eq!(deg_core(&c, &two_core(&c), 0), 2);
        let mut b = GraphBuilder::from_graph(&c);
        b.add_pendants(0, 1);
        let g = b.build();
        assert_eq!(deg_core(&g, &two_core(&g), 0), 2);
    }

    #[test]
    fn threshold_values() {
        assert_eq!(threshold(1), 804);
        assert_eq!(threshold(usize::MAX), i128::MAX);
    }

    #[test]
    fn forest_reduces_to_nothing() {
        for k in [0, 3, 7] {
            let out = kernelize_sfvs(&FvsInstance::secluded(star(4), k)).unwrap();
            assert_eq!(out.kernel.instance.g.n(), 0);
            assert_eq!(out.decided(), Some(true));
        }
    }

    #[test]
    fn flower_and_parallel_rules_fire() {
        // k = 6: three triangles at the center
        let out = kernelize_sfvs(&FvsInstance::secluded(friendship(3), 6)).unwrap();
        assert_eq!(out.decided(), Some(false));
        assert_eq!(out.kernel.trace.steps.last().unwrap().rule, Rule::Rr3);
        // k = 4: two triangles through the center give petal 2 = ceil(4/2)
        let out = kernelize_sfvs(&FvsInstance::secluded(friendship(2), 4)).unwrap();
        assert_eq!(out.kernel.trace.count(Rule::Rr3), 1);
        // theta with 5 long paths, k = 5: every petal number is 1, RR5 fires
        let out = kernelize_sfvs(&FvsInstance::secluded(theta(5), 5)).unwrap();
        assert_eq!(out.decided(), Some(false));
        assert_eq!(out.kernel.trace.steps.last().unwrap().rule, Rule::Rr5);
    }

    #[test]
    fn rr2_on_c8() {
        let g = cycle(8);
        let core = two_core(&g);
        let out = apply_rr2(&g, &core, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(out.graph.n(), 7);
        assert_eq!(out.graph.m(), 7);
        assert_eq!(two_core(&out.graph).len(), 7);
    }

    #[test]
    fn rr2_with_pendants() {
        let mut b = GraphBuilder::from_graph(&cycle(8));
        for v in 0..8 {
            b.add_pendants(v, 1);
        }
        let g = b.build();
        let core = two_core(&g);
        let out = apply_rr2(&g, &core, &[0, 1, 2, 3, 4]).unwrap();
        // 16 - (3 + 3) + (2 + 2)
        assert_eq!(out.graph.n(), 14);
        assert_eq!(out.graph.degree(out.u1), 3);
        assert_eq!(out.graph.degree(out.u2), 3);
    }

    #[test]
    fn rr2_preconditions() {
        let g = cycle(8);
        let core = two_core(&g);
        assert!(matches!(apply_rr2(&g, &core, &[0, 1, 2, 3]), Err(Error::Precondition(_))));
        assert!(matches!(apply_rr2(&g, &core, &[0, 1, 3, 4, 5]), Err(Error::Precondition(_))));
        let c4 = cycle(4);
        assert!(apply_rr2(&c4, &two_core(&c4), &[0, 1, 2, 3, 0]).is_err());
        // a non-pendant tree hanging off a chain vertex
        let mut b = GraphBuilder::from_graph(&g);
        let w = b.add_pendants(2, 1).start;
        b.add_pendants(w, 1);
        let h = b.build();
        let err = apply_rr2(&h, &two_core(&h), &[0, 1, 2, 3, 4]).unwrap_err();
        assert!(matches!(err, Error::Precondition(m) if m.contains("not a pendant")));
    }

    #[test]
    fn solve_c4() {
        let a = solve_sfvs(&FvsInstance::secluded(cycle(4), 3)).unwrap();
        let w = a.witness.unwrap();
        assert_eq!(w.solution.len(), 1);
        assert_eq!(w.closed_neighborhood.len(), 3);
        assert!(!solve_sfvs(&FvsInstance::secluded(cycle(4), 2)).unwrap().is_yes());
    }

    #[test]
    fn long_cycle_shrinks_and_lifts() {
        let g = cycle(12);
        let out = kernelize_sfvs(&FvsInstance::secluded(g.clone(), 3)).unwrap();
        assert_eq!(out.kernel.instance.g.n(), 4);
        let (replayed, ids) = out.kernel.trace.replay(&g).unwrap();
        assert_eq!(replayed, out.kernel.instance.g);
        assert_eq!(ids, out.kernel.working_ids);
        let a = solve_sfvs(&FvsInstance::secluded(g, 3)).unwrap();
        assert!(a.witness.unwrap().property_verified);
    }
}
