//! Exhaustive deciders used as ground truth for every solver, kernel and
//! transformer.
//!
//! Candidate sets are enumerated by increasing size, lexicographically within
//! a size, and the first feasible one is the witness. The enumeration size is
//! checked up front against a capacity of `2^cap` subsets; exceeding it is an
//! error rather than a guess.
//!
//! For the problems whose feasibility is closed under supersets and whose
//! objective is `|N[S]|` or `|S|`, only vertices that can belong to an
//! inclusion-minimal solution are enumerated: the 2-core for feedback vertex
//! set, and vertices inside some pattern occurrence for F-free deletion.
//! Shrinking a solution never grows these objectives, so this is exact. The
//! small secluded variants measure `N(S)`, which can grow when `S` shrinks,
//! and are enumerated over the whole vertex set.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::domset::DomInstance;
use crate::ffvd::{all_occurrences, FfvdInstance, ForbiddenFamily};
use crate::fvs::FvsInstance;
use crate::graph::{is_acyclic_masked, two_core, Graph, VertexSet};
use crate::reductions::SourceInstance;
use crate::separator::SeparatorInstance;
use crate::subsets::{count_up_to, for_each_combination};
use crate::{Error, Result};

/// Large secluded independent set: an independent `S` with `|S| >= k` and
/// `|N(S)| <= ell`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LsisInstance {
    pub g: Graph,
    pub k: usize,
    pub ell: usize,
}

/// Everything the oracle can decide. Secluded and small secluded versions of
/// a problem share a variant and are told apart by the `ell` budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProblemInstance {
    Separator(SeparatorInstance),
    Dom(DomInstance),
    Ffvd(FfvdInstance),
    Fvs(FvsInstance),
    Lsis(LsisInstance),
    Source(SourceInstance),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// At most `2^cap` candidate sets are enumerated.
    pub cap: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { cap: 16 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleAnswer {
    pub yes: bool,
    /// Vertex ids, or set indices for set cover.
    pub witness: Option<VertexSet>,
    pub subsets_checked: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Optimum {
    Value(usize),
    Infeasible,
}

#[derive(Clone, Copy, Debug)]
enum Goal {
    /// Minimize the value; yes iff the minimum is at most the bound.
    AtMost(usize),
    /// Maximize the value; yes iff the maximum is at least the bound.
    AtLeast(usize),
}

type Eval<'a> = Box<dyn FnMut(&[usize]) -> Option<usize> + 'a>;

/// How one problem is searched: candidates are subsets of `universe`
/// (with `forced` always added); `eval` returns the objective of a feasible
/// set and `None` otherwise.
struct Plan<'a> {
    universe: Vec<usize>,
    forced: Option<usize>,
    /// Size range of the free part for the decision.
    decide: (usize, usize),
    /// Largest free part for the optimum.
    opt_max: usize,
    goal: Goal,
    eval: Eval<'a>,
}

/// Fixed-width bitset over vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn zeros(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self) {
        self.0.iter_mut().for_each(|w| *w = 0);
    }

    fn or_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn intersects(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Closed balls of the given radius around every vertex.
fn balls(g: &Graph, radius: usize) -> Vec<Bits> {
    g.vertices()
        .map(|v| {
            let mut b = Bits::zeros(g.n());
            for (u, d) in g.distances([v], Some(radius), None).iter().enumerate() {
                if d.is_some() {
                    b.set(u);
                }
            }
            b
        })
        .collect()
}

/// `|N^r[S]|` from precomputed balls, reusing `acc`.
fn ball_union(balls: &[Bits], set: &[usize], acc: &mut Bits) -> usize {
    acc.clear();
    for &v in set {
        acc.or_assign(&balls[v]);
    }
    acc.count()
}

fn mask(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

fn independent(g: &Graph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

/// Occurrences as bitsets plus the vertices they cover.
fn occurrence_bits(g: &Graph, family: &ForbiddenFamily) -> (Vec<Bits>, Vec<usize>) {
    let h = all_occurrences(g, family);
    let covered: VertexSet = h.edges.iter().flatten().copied().collect();
    let bits = h
        .edges
        .iter()
        .map(|e| {
            let mut b = Bits::zeros(g.n());
            e.iter().for_each(|&v| b.set(v));
            b
        })
        .collect();
    (bits, covered.into_vec())
}

fn hits_all(occ: &[Bits], set: &[usize], n: usize) -> bool {
    let mut s = Bits::zeros(n);
    set.iter().for_each(|&v| s.set(v));
    occ.iter().all(|o| o.intersects(&s))
}

/// Plan for a problem on `g` with seclusion radius `radius`, given the
/// feasibility test and the candidate universe of the secluded variant.
fn secluded_plan<'a>(
    g: &'a Graph,
    radius: usize,
    k: usize,
    ell: Option<usize>,
    minimal_universe: Vec<usize>,
    full_universe: Vec<usize>,
    mut feasible: impl FnMut(&[usize]) -> bool + 'a,
) -> Plan<'a> {
    let balls = balls(g, radius);
    let mut acc = Bits::zeros(g.n());
    match ell {
        None => {
            let opt_max = minimal_universe.len();
            Plan {
                universe: minimal_universe,
                forced: None,
                decide: (0, k),
                opt_max,
                goal: Goal::AtMost(k),
                eval: Box::new(move |s| feasible(s).then(|| ball_union(&balls, s, &mut acc))),
            }
        }
        Some(ell) => Plan {
            universe: full_universe,
            forced: None,
            decide: (0, k),
            opt_max: k,
            goal: Goal::AtMost(ell),
            eval: Box::new(move |s| feasible(s).then(|| ball_union(&balls, s, &mut acc) - s.len())),
        },
    }
}

fn plan(inst: &ProblemInstance) -> Result<Plan<'_>> {
    Ok(match inst {
        ProblemInstance::Separator(sep) => {
            sep.validate()?;
            let g = &sep.g;
            let (s, t) = (sep.s, sep.t);
            let others: Vec<usize> = g.vertices().filter(|&v| v != s && v != t).collect();
            let feasible = move |set: &[usize]| {
                let blocked = mask(g.n(), set);
                g.distances([s], None, Some(&blocked))[t].is_none()
            };
            secluded_plan(g, 1, sep.k, sep.ell, others.clone(), others, feasible)
        }
        ProblemInstance::Dom(dom) => {
            dom.validate()?;
            let g = &dom.g;
            let cover = balls(g, dom.q);
            let mut acc = Bits::zeros(g.n());
            let n = g.n();
            let feasible = move |set: &[usize]| ball_union(&cover, set, &mut acc) == n;
            let all: Vec<usize> = g.vertices().collect();
            secluded_plan(g, dom.p, dom.k, dom.ell, all.clone(), all, feasible)
        }
        ProblemInstance::Ffvd(f) => {
            let g = &f.g;
            let (occ, covered) = occurrence_bits(g, &f.family);
            let n = g.n();
            let feasible = move |set: &[usize]| hits_all(&occ, set, n);
            secluded_plan(g, 1, f.k, f.ell, covered, g.vertices().collect(), feasible)
        }
        ProblemInstance::Fvs(f) => {
            let g = &f.g;
            let feasible = move |set: &[usize]| is_acyclic_masked(g, &mask(g.n(), set));
            secluded_plan(g, 1, f.k, f.ell, two_core(g).into_vec(), g.vertices().collect(), feasible)
        }
        ProblemInstance::Lsis(l) => {
            let g = &l.g;
            let nb = balls(g, 1);
            let mut acc = Bits::zeros(g.n());
            let ell = l.ell;
            Plan {
                universe: g.vertices().collect(),
                forced: None,
                decide: (l.k, g.n()),
                opt_max: g.n(),
                goal: Goal::AtLeast(l.k),
                eval: Box::new(move |s| {
                    let ok = independent(g, s) && ball_union(&nb, s, &mut acc) - s.len() <= ell;
                    ok.then_some(s.len())
                }),
            }
        }
        ProblemInstance::Source(src) => {
            src.validate()?;
            source_plan(src)?
        }
    })
}

fn source_plan(src: &SourceInstance) -> Result<Plan<'_>> {
    Ok(match src {
        SourceInstance::SetCover(sc) => {
            let nu = sc.universe;
            let sets: Vec<Bits> = sc
                .family
                .iter()
                .map(|a| {
                    let mut b = Bits::zeros(nu);
                    a.iter().for_each(|&u| b.set(u));
                    b
                })
                .collect();
            let mut acc = Bits::zeros(nu);
            Plan {
                universe: (0..sc.family.len()).collect(),
                forced: None,
                decide: (0, sc.k),
                opt_max: sc.family.len(),
                goal: Goal::AtMost(sc.k),
                eval: Box::new(move |x| (ball_union(&sets, x, &mut acc) == nu).then_some(x.len())),
            }
        }
        SourceInstance::Clique(c) => {
            let g = &c.g;
            Plan {
                universe: g.vertices().collect(),
                forced: None,
                decide: (c.k, c.k),
                opt_max: g.n(),
                goal: Goal::AtLeast(c.k),
                eval: Box::new(move |s| {
                    let clique =
                        s.iter().enumerate().all(|(i, &a)| s[i + 1..].iter().all(|&b| g.has_edge(a, b)));
                    clique.then_some(s.len())
                }),
            }
        }
        SourceInstance::Mis(m) => {
            let g = &m.g;
            let class_of = m.class_of();
            let k = m.classes.len();
            Plan {
                universe: g.vertices().collect(),
                forced: None,
                decide: (k, k),
                opt_max: k,
                goal: Goal::AtLeast(k),
                eval: Box::new(move |s| {
                    let mut used = vec![false; k];
                    let colorful = s.iter().all(|&v| !core::mem::replace(&mut used[class_of[v]], true));
                    (colorful && independent(g, s)).then_some(s.len())
                }),
            }
        }
        SourceInstance::Catv(c) => {
            let g = &c.g;
            let nb = balls(g, 1);
            let mut acc = Bits::zeros(g.n());
            let free = c.k.saturating_sub(1);
            let (lo, hi) = if c.k == 0 { (1, 0) } else { (0, free) };
            Plan {
                universe: g.vertices().filter(|&v| v != c.s).collect(),
                forced: Some(c.s),
                decide: (lo, hi),
                opt_max: if c.k == 0 { 0 } else { free },
                goal: Goal::AtMost(c.ell),
                eval: Box::new(move |s| {
                    // the empty budget admits no set containing s
                    (s.len() <= free + 1 && !s.is_empty() && c.k > 0)
                        .then(|| ball_union(&nb, s, &mut acc) - s.len())
                }),
            }
        }
        SourceInstance::Fvs(f) => {
            let g = &f.g;
            let core = two_core(g).into_vec();
            let opt_max = core.len();
            Plan {
                universe: core,
                forced: None,
                decide: (0, f.k),
                opt_max,
                goal: Goal::AtMost(f.k),
                eval: Box::new(move |s| is_acyclic_masked(g, &mask(g.n(), s)).then_some(s.len())),
            }
        }
        SourceInstance::Ffvd(f) => {
            let (occ, covered) = occurrence_bits(&f.g, &f.family);
            let n = f.g.n();
            let opt_max = covered.len();
            Plan {
                universe: covered,
                forced: None,
                decide: (0, f.s),
                opt_max,
                goal: Goal::AtMost(f.s),
                eval: Box::new(move |s| hits_all(&occ, s, n).then_some(s.len())),
            }
        }
    })
}

fn count_sizes(n: usize, lo: usize, hi: usize) -> u128 {
    if lo > hi || lo > n {
        return 0;
    }
    let below = if lo == 0 { 0 } else { count_up_to(n, lo - 1) };
    count_up_to(n, hi) - below
}

fn check_capacity(n: usize, lo: usize, hi: usize, cap: u32) -> Result<()> {
    let needed = count_sizes(n, lo, hi);
    if needed > 1u128 << cap.min(127) {
        return Err(Error::Capacity { needed: format!("{needed} subsets"), cap: format!("2^{cap} subsets") });
    }
    Ok(())
}

/// Visits candidate sets (as sorted vertex lists) with free part of size in
/// `lo..=hi`, in enumeration order, until `visit` returns true.
fn enumerate(
    universe: &[usize],
    forced: Option<usize>,
    lo: usize,
    hi: usize,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> u64 {
    let mut checked = 0;
    let mut buf = Vec::new();
    for size in lo..=hi.min(universe.len()) {
        let stop = for_each_combination(universe.len(), size, |idx| {
            checked += 1;
            buf.clear();
            buf.extend(idx.iter().map(|&i| universe[i]));
            if let Some(f) = forced {
                let pos = buf.partition_point(|&x| x < f);
                buf.insert(pos, f);
            }
            visit(&buf)
        });
        if stop {
            break;
        }
    }
    checked
}

/// Decides the instance by exhaustive search.
pub fn oracle(inst: &ProblemInstance, cfg: &OracleConfig) -> Result<OracleAnswer> {
    let mut plan = plan(inst)?;
    let (lo, hi) = plan.decide;
    check_capacity(plan.universe.len(), lo, hi, cfg.cap)?;
    let goal = plan.goal;
    let mut witness = None;
    let eval = &mut plan.eval;
    let checked = enumerate(&plan.universe, plan.forced, lo, hi, |s| {
        let ok = match (eval(s), goal) {
            (Some(v), Goal::AtMost(b)) => v <= b,
            (Some(v), Goal::AtLeast(b)) => v >= b,
            (None, _) => false,
        };
        if ok {
            witness = Some(VertexSet::from_sorted(s.to_vec()));
        }
        ok
    });
    Ok(OracleAnswer { yes: witness.is_some(), witness, subsets_checked: checked })
}

/// Decides with the default capacity.
pub fn decide(inst: &ProblemInstance) -> Result<bool> {
    oracle(inst, &OracleConfig::default()).map(|a| a.yes)
}

/// The extremal objective over all feasible sets: min `|N[S]|` (secluded),
/// min `|N(S)|` subject to `|S| <= k` (small secluded), max `|S|` (large
/// secluded independent set, clique, multicolored independent set), or the
/// natural size objective of the other source problems.
pub fn oracle_optimum(inst: &ProblemInstance, cfg: &OracleConfig) -> Result<Optimum> {
    let mut plan = plan(inst)?;
    let lo = usize::from(matches!(inst, ProblemInstance::Source(SourceInstance::Catv(c)) if c.k == 0));
    let hi = plan.opt_max;
    check_capacity(plan.universe.len(), lo, hi, cfg.cap)?;
    let goal = plan.goal;
    let mut best: Option<usize> = None;
    let eval = &mut plan.eval;
    enumerate(&plan.universe, plan.forced, lo, hi, |s| {
        if let Some(v) = eval(s) {
            best = Some(match (best, goal) {
                (None, _) => v,
                (Some(b), Goal::AtMost(_)) => b.min(v),
                (Some(b), Goal::AtLeast(_)) => b.max(v),
            });
        }
        false
    });
    Ok(best.map_or(Optimum::Infeasible, Optimum::Value))
}

/// Whether an optimum meets the instance's budget, matching [`oracle`].
pub fn meets_budget(inst: &ProblemInstance, opt: Optimum) -> Result<bool> {
    let goal = plan(inst)?.goal;
    Ok(match (opt, goal) {
        (Optimum::Infeasible, _) => false,
        (Optimum::Value(v), Goal::AtMost(b)) => v <= b,
        (Optimum::Value(v), Goal::AtLeast(b)) => v >= b,
    })
}
