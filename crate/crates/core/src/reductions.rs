//! Hardness constructions as deterministic instance transformers.
//!
//! Every transformer keeps the source vertices (or, for set cover, the
//! universe elements followed by one vertex per set) at the front of the
//! target and appends fresh vertices contiguously after them. Structural
//! checks on the output run on every call and surface as internal errors.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::domset::DomInstance;
use crate::ffvd::{FfvdInstance, ForbiddenFamily};
use crate::fvs::FvsInstance;
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::oracle::LsisInstance;
use crate::separator::SeparatorInstance;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub universe: usize,
    pub family: Vec<Vec<usize>>,
    pub k: usize,
}

impl SetCoverInstance {
    pub fn validate(&self) -> Result<()> {
        for set in &self.family {
            if let Some(&x) = set.iter().find(|&&x| x >= self.universe) {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.universe });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueInstance {
    pub g: Graph,
    pub k: usize,
}

/// Multicolored independent set: one vertex from each class, pairwise
/// non-adjacent. The number of classes is the solution size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisInstance {
    pub g: Graph,
    pub classes: Vec<Vec<usize>>,
}

impl MisInstance {
    /// The classes must partition the vertex set.
    pub fn validate(&self) -> Result<()> {
        let mut seen = vec![false; self.g.n()];
        for class in &self.classes {
            for &v in class {
                self.g.check_vertex(v)?;
                if seen[v] {
                    return Err(Error::Input(format!("vertex {v} lies in two classes")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&b| !b) {
            return Err(Error::Input(format!("vertex {v} lies in no class")));
        }
        Ok(())
    }

    /// Class index of every vertex (after validation).
    pub fn class_of(&self) -> Vec<usize> {
        let mut of = vec![usize::MAX; self.g.n()];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                of[v] = i;
            }
        }
        of
    }
}

/// Cutting at most `k` vertices with terminal: `s ∈ S`, `|S| <= k`,
/// `|N(S)| <= ell`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatvInstance {
    pub g: Graph,
    pub s: usize,
    pub k: usize,
    pub ell: usize,
}

/// Plain feedback vertex set: `|S| <= k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FvsSource {
    pub g: Graph,
    pub k: usize,
}

/// Plain F-free vertex deletion: `|S| <= s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FfvdSource {
    pub g: Graph,
    pub family: ForbiddenFamily,
    pub s: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceInstance {
    SetCover(SetCoverInstance),
    Clique(CliqueInstance),
    Mis(MisInstance),
    Catv(CatvInstance),
    Fvs(FvsSource),
    Ffvd(FfvdSource),
}

impl SourceInstance {
    pub fn validate(&self) -> Result<()> {
        match self {
            SourceInstance::SetCover(sc) => sc.validate(),
            SourceInstance::Mis(m) => m.validate(),
            SourceInstance::Catv(c) => c.g.check_vertex(c.s),
            SourceInstance::Clique(_) | SourceInstance::Fvs(_) | SourceInstance::Ffvd(_) => Ok(()),
        }
    }
}

/// A transformed instance with the position of each source vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced<T> {
    pub target: T,
    /// `source_ids[i]` is the target vertex standing for source item `i`.
    pub source_ids: Vec<usize>,
}

fn ensure(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Internal(format!("construction check failed: {what}")))
    }
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// FVS to secluded FVS: `n^2` pendants per vertex, `k' = k (n^2 + n)`.
pub fn fvs_to_sfvs(src: &FvsSource) -> Result<Reduced<FvsInstance>> {
    let n = src.g.n();
    let per = n * n;
    let mut b = GraphBuilder::from_graph(&src.g);
    for v in 0..n {
        b.add_pendants(v, per);
    }
    let g = b.build();
    ensure(g.n() == n + n * per, "vertex count")?;
    ensure((0..n).all(|v| g.degree(v) == src.g.degree(v) + per), "pendant counts")?;
    Ok(Reduced { target: FvsInstance::secluded(g, src.k * (per + n)), source_ids: identity(n) })
}

/// F-free vertex deletion to its secluded version: `n + 1` pendants per
/// vertex and `k = s (n + 1) + n`. Every pattern must have minimum degree 2
/// so that pendants never occur in a pattern.
pub fn ffvd_to_sffvd(src: &FfvdSource) -> Result<Reduced<FfvdInstance>> {
    if !src.family.min_degree_at_least(2) {
        return Err(Error::Precondition("every forbidden pattern needs minimum degree at least 2".into()));
    }
    let n = src.g.n();
    let mut b = GraphBuilder::from_graph(&src.g);
    for v in 0..n {
        b.add_pendants(v, n + 1);
    }
    let g = b.build();
    ensure(g.n() == n + n * (n + 1), "vertex count")?;
    let target = FfvdInstance { g, family: src.family.clone(), k: src.s * (n + 1) + n, ell: None };
    Ok(Reduced { target, source_ids: identity(n) })
}

/// Cutting vertices with a terminal to small secluded separator: terminals
/// `s'` and `t'` both hang off `s`, `k' = k` and `ell' = ell + 2`.
pub fn catv_to_sssts(src: &CatvInstance) -> Result<Reduced<SeparatorInstance>> {
    src.g.check_vertex(src.s)?;
    let n = src.g.n();
    let mut b = GraphBuilder::from_graph(&src.g);
    let s2 = b.add_pendants(src.s, 1).start;
    let t2 = b.add_pendants(src.s, 1).start;
    let g = b.build();
    ensure(g.n() == n + 2 && (s2, t2) == (n, n + 1), "terminal ids")?;
    Ok(Reduced { target: SeparatorInstance::small(g, s2, t2, src.k, src.ell + 2), source_ids: identity(n) })
}

/// Serial composition of small secluded separator instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composed {
    pub target: SeparatorInstance,
    /// `source_ids[q][v]`: target vertex of vertex `v` of instance `q`.
    pub source_ids: Vec<Vec<usize>>,
}

/// Chains the instances by identifying each `t_q` with `s_{q+1}` and hangs
/// `k + ell + 1` pendants on every junction. The result is a yes-instance
/// iff one of the inputs is.
pub fn compose_sssts(srcs: &[SeparatorInstance]) -> Result<Composed> {
    let first = srcs.first().ok_or_else(|| Error::Input("nothing to compose".into()))?;
    let (k, ell) = match first.ell {
        Some(ell) => (first.k, ell),
        None => return Err(Error::Input("composition needs small secluded instances".into())),
    };
    for inst in srcs {
        inst.validate()?;
        if inst.k != k || inst.ell != Some(ell) {
            return Err(Error::Input(format!(
                "instances disagree on (k, ell): ({k}, {ell}) vs ({}, {:?})",
                inst.k, inst.ell
            )));
        }
    }
    let mut b = GraphBuilder::new(0);
    let mut source_ids: Vec<Vec<usize>> = Vec::with_capacity(srcs.len());
    let mut junctions = Vec::new();
    for (q, inst) in srcs.iter().enumerate() {
        let joined = (q > 0).then(|| {
            let prev = &srcs[q - 1];
            source_ids[q - 1][prev.t]
        });
        let ids: Vec<usize> = inst
            .g
            .vertices()
            .map(|v| match joined {
                Some(j) if v == inst.s => j,
                _ => b.add_vertex(),
            })
            .collect();
        for (u, v) in inst.g.edges() {
            b.add_edge(ids[u], ids[v]);
        }
        if let Some(j) = joined {
            junctions.push(j);
        }
        source_ids.push(ids);
    }
    for &j in &junctions {
        b.add_pendants(j, k + ell + 1);
    }
    let g = b.build();
    let s = source_ids[0][first.s];
    let last = srcs.len() - 1;
    let t = source_ids[last][srcs[last].t];
    let expected: usize =
        srcs.iter().map(|i| i.g.n()).sum::<usize>() - junctions.len() + junctions.len() * (k + ell + 1);
    ensure(g.n() == expected, "vertex count")?;
    Ok(Composed { target: SeparatorInstance::small(g, s, t, k, ell), source_ids })
}

/// Skeleton shared by both set-cover constructions: `V_U`, `V_F`, `V'_F`
/// (in that order), the element-set edges, the clique `C_U` and the
/// `b`-paths with their cliques.
struct CoverSkeleton {
    b: GraphBuilder,
    v_u: Vec<usize>,
    v_f: Vec<usize>,
    v_f2: Vec<usize>,
}

impl CoverSkeleton {
    fn new(src: &SetCoverInstance) -> Self {
        let nu = src.universe;
        let nf = src.family.len();
        let mut b = GraphBuilder::new(nu + 2 * nf);
        let v_u: Vec<usize> = (0..nu).collect();
        let v_f: Vec<usize> = (nu..nu + nf).collect();
        let v_f2: Vec<usize> = (nu + nf..nu + 2 * nf).collect();
        for (a, set) in src.family.iter().enumerate() {
            for &u in set {
                b.add_edge(v_f2[a], v_u[u]);
            }
        }
        CoverSkeleton { b, v_u, v_f, v_f2 }
    }

    /// `C_U` joined to `V'_F ∪ V_U`, plus the `b`-paths and `C_h^u` cliques
    /// when `q - p >= 2`.
    fn attach_cliques(&mut self, kp: usize, p: usize, q: usize) -> Vec<usize> {
        let c_u: Vec<usize> = self.b.add_vertices(kp).collect();
        self.b.make_clique(&c_u);
        for &c in &c_u {
            for &x in self.v_f2.iter().chain(&self.v_u) {
                self.b.add_edge(c, x);
            }
        }
        if q - p >= 2 {
            for &u in &self.v_u {
                let mut chain = vec![u];
                chain.extend(self.b.add_vertices(q - p - 2));
                for w in chain.windows(2) {
                    self.b.add_edge(w[0], w[1]);
                }
                for &bh in &chain {
                    let clique: Vec<usize> = self.b.add_vertices(kp).collect();
                    self.b.make_clique(&clique);
                    for &c in &clique {
                        self.b.add_edge(c, bh);
                    }
                }
            }
        }
        c_u
    }

    fn source_ids(&self) -> Vec<usize> {
        self.v_u.iter().chain(&self.v_f).copied().collect()
    }
}

fn check_cover(src: &SetCoverInstance, p: usize, q: usize) -> Result<()> {
    src.validate()?;
    if p == 0 || p >= q {
        return Err(Error::ParameterRegime { p, q, reason: "need 0 < p < q" });
    }
    Ok(())
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// Wraps a secluded budget `k'` as a secluded or small secluded instance;
/// the small budgets are `(k + 1, k' - (k + 1))`.
fn dom_target(g: Graph, p: usize, q: usize, k: usize, kp: usize, small: bool) -> DomInstance {
    if small {
        DomInstance::small(g, p, q, k + 1, kp - (k + 1))
    } else {
        DomInstance::secluded(g, p, q, kp)
    }
}

/// Set cover to p-secluded q-dominating set for any `0 < p < q`, with
/// `k' = p + 1 + |F| p + k`. Needs `k < |F|`.
pub fn setcover_to_secluded_qds(
    src: &SetCoverInstance,
    p: usize,
    q: usize,
    small: bool,
) -> Result<Reduced<DomInstance>> {
    check_cover(src, p, q)?;
    let nf = src.family.len();
    if src.k >= nf {
        return Err(Error::Precondition(format!("need k < |F|, got k={} and |F|={nf}", src.k)));
    }
    let kp = p + 1 + nf * p + src.k;
    let mut sk = CoverSkeleton::new(src);
    let s = sk.b.add_vertex();
    let r = sk.b.add_vertex();
    sk.b.add_path(r, s, q);
    for a in 0..nf {
        sk.b.add_edge(sk.v_f[a], r);
        sk.b.add_path(sk.v_f[a], sk.v_f2[a], p);
    }
    let c_u = sk.attach_cliques(kp, p, q);
    let source_ids = sk.source_ids();
    let g = sk.b.build();
    ensure(c_u.len() == kp && is_clique(&g, &c_u), "C_U is a clique of size k'")?;
    Ok(Reduced { target: dom_target(g, p, q, src.k, kp, small), source_ids })
}

/// The budget of the second set-cover construction.
pub fn w2_budget(k: usize, p: usize, q: usize) -> usize {
    if 3 * p < q {
        (k + 1) * (2 * p + 1)
    } else {
        // (3p - q + 1) + (q - p) = 2p + 1 is odd, so the product is even
        2 * p + 1 + k * (p + (3 * p - q + 1) * (q - p) / 2)
    }
}

/// Set cover to p-secluded q-dominating set for `0 < p <= q/2`, preserving
/// the solution size parameter up to a factor.
pub fn setcover_to_secluded_qds_w2(
    src: &SetCoverInstance,
    p: usize,
    q: usize,
    small: bool,
) -> Result<Reduced<DomInstance>> {
    check_cover(src, p, q)?;
    if 2 * p > q {
        return Err(Error::ParameterRegime { p, q, reason: "need 0 < p <= q/2" });
    }
    let nf = src.family.len();
    let kp = w2_budget(src.k, p, q);
    let mut sk = CoverSkeleton::new(src);
    let s = sk.b.add_vertex();
    let c = sk.b.add_vertex();
    let r = sk.b.add_vertex();
    sk.b.add_path(s, c, q);
    sk.b.add_path(c, r, p);
    let c_r: Vec<usize> = sk.b.add_vertices(kp).collect();
    sk.b.make_clique(&c_r);
    for &x in &c_r {
        sk.b.add_edge(x, r);
    }
    let c_u = sk.attach_cliques(kp, p, q);
    for a in 0..nf {
        // t_0 = v_A, ..., t_p = v'_A
        let mut t = vec![sk.v_f[a]];
        t.extend(sk.b.add_path(sk.v_f[a], sk.v_f2[a], p));
        t.push(sk.v_f2[a]);
        if 3 * p >= q {
            for &th in &t[..=3 * p - q] {
                sk.b.add_path(r, th, p);
            }
        } else {
            sk.b.add_path(r, t[0], q - 2 * p);
        }
    }
    let source_ids = sk.source_ids();
    let v_f2 = sk.v_f2.clone();
    let g = sk.b.build();
    ensure(is_clique(&g, &c_r) && is_clique(&g, &c_u), "C_r and C_U are cliques")?;
    let dist = g.distances([c], Some(q), None);
    ensure(v_f2.iter().all(|&v| dist[v] == Some(q)), "d(c, v'_A) = q")?;
    Ok(Reduced { target: dom_target(g, p, q, src.k, kp, small), source_ids })
}

/// Multicolored independent set to small secluded FVS: every class becomes
/// a clique, a hub `u` is joined to all of `V` and to `k' + ell` fresh
/// leaves, with `k' = |V| - k` and `ell = k + 1`.
pub fn mis_to_ssfvs(src: &MisInstance) -> Result<Reduced<FvsInstance>> {
    src.validate()?;
    let class_of = src.class_of();
    for (i, class) in src.classes.iter().enumerate() {
        if class.len() < 2 {
            return Err(Error::Precondition(format!("class {i} has fewer than 2 vertices")));
        }
    }
    if let Some((u, v)) = src.g.edges().find(|&(u, v)| class_of[u] == class_of[v]) {
        return Err(Error::Precondition(format!("edge {u}-{v} lies inside a class")));
    }
    let n = src.g.n();
    let k = src.classes.len();
    let (kp, ell) = (n - k, k + 1);
    let mut b = GraphBuilder::from_graph(&src.g);
    for class in &src.classes {
        b.make_clique(class);
    }
    let hub = b.add_vertex();
    for v in 0..n {
        b.add_edge(hub, v);
    }
    b.add_pendants(hub, kp + ell);
    let g = b.build();
    ensure(g.degree(hub) == n + kp + ell, "hub degree |V| + |L|")?;
    Ok(Reduced { target: FvsInstance::small(g, kp, ell), source_ids: identity(n) })
}

/// Clique to large secluded independent set: one vertex `x_uv` per edge,
/// joined to `u` and `v`, and `V` turned into a clique. Budgets are
/// `k' = C(k, 2)` and `ell' = k`. Needs `k < |V| - 1`.
pub fn clique_to_lsis(src: &CliqueInstance) -> Result<Reduced<LsisInstance>> {
    let n = src.g.n();
    if src.k + 1 >= n {
        return Err(Error::Precondition(format!("need k < |V| - 1, got k={} and |V|={n}", src.k)));
    }
    let edges: Vec<(usize, usize)> = src.g.edges().collect();
    let mut b = GraphBuilder::new(n);
    let all: Vec<usize> = (0..n).collect();
    b.make_clique(&all);
    for &(u, v) in &edges {
        let x = b.add_vertex();
        b.add_edge(x, u);
        b.add_edge(x, v);
    }
    let g = b.build();
    ensure(g.n() == n + edges.len(), "vertex count |V| + |E|")?;
    let x: VertexSet = (n..g.n()).collect();
    ensure(x.iter().all(|v| g.degree(v) == 2), "edge vertices have degree 2")?;
    let k2 = src.k * src.k.saturating_sub(1) / 2;
    Ok(Reduced { target: LsisInstance { g, k: k2, ell: src.k }, source_ids: identity(n) })
}
