//! Instance documents: a JSON envelope and a bare edge-list reader.

use std::collections::BTreeMap;
use std::fmt;

use secluded_core::domset::DomInstance;
use secluded_core::ffvd::{FfvdInstance, ForbiddenFamily};
use secluded_core::fvs::FvsInstance;
use secluded_core::oracle::{LsisInstance, ProblemInstance};
use secluded_core::reductions::{
    CatvInstance, CliqueInstance, FfvdSource, FvsSource, MisInstance, SetCoverInstance, SourceInstance,
};
use secluded_core::separator::SeparatorInstance;
use secluded_core::{Error as CoreError, Graph};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Problem {
    Ssep,
    Sssep,
    Sqds,
    Ssqds,
    Sfvd,
    Ssfvd,
    Sfvs,
    Ssfvs,
    Lsis,
    SetCover,
    Clique,
    Mis,
    Catv,
    Fvs,
    Ffvd,
}

impl Problem {
    pub const ALL: [Problem; 15] = [
        Problem::Ssep,
        Problem::Sssep,
        Problem::Sqds,
        Problem::Ssqds,
        Problem::Sfvd,
        Problem::Ssfvd,
        Problem::Sfvs,
        Problem::Ssfvs,
        Problem::Lsis,
        Problem::SetCover,
        Problem::Clique,
        Problem::Mis,
        Problem::Catv,
        Problem::Fvs,
        Problem::Ffvd,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Problem::Ssep => "ssep",
            Problem::Sssep => "sssep",
            Problem::Sqds => "sqds",
            Problem::Ssqds => "ssqds",
            Problem::Sfvd => "sfvd",
            Problem::Ssfvd => "ssfvd",
            Problem::Sfvs => "sfvs",
            Problem::Ssfvs => "ssfvs",
            Problem::Lsis => "lsis",
            Problem::SetCover => "setcover",
            Problem::Clique => "clique",
            Problem::Mis => "mis",
            Problem::Catv => "catv",
            Problem::Fvs => "fvs",
            Problem::Ffvd => "ffvd",
        }
    }

    /// Integer parameters the problem cannot do without.
    pub fn required_params(self) -> &'static [&'static str] {
        match self {
            Problem::Ssep => &["k", "s", "t"],
            Problem::Sssep => &["k", "ell", "s", "t"],
            Problem::Sqds => &["p", "q", "k"],
            Problem::Ssqds => &["p", "q", "k", "ell"],
            Problem::Sfvd | Problem::Sfvs | Problem::Clique | Problem::Fvs | Problem::Ffvd => &["k"],
            Problem::Ssfvd | Problem::Ssfvs | Problem::Lsis => &["k", "ell"],
            Problem::SetCover => &["universe", "k"],
            Problem::Mis => &[],
            Problem::Catv => &["terminal", "k", "ell"],
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

pub(crate) fn parse_problem(s: &str) -> Result<Problem, String> {
    Problem::ALL.into_iter().find(|p| p.code() == s).ok_or_else(|| {
        let codes: Vec<_> = Problem::ALL.iter().map(|p| p.code()).collect();
        format!("unknown problem code '{s}' (expected one of {})", codes.join(", "))
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDoc { n: g.n(), edges: g.edges().map(|(u, v)| [u, v]).collect() }
    }

    /// `field` names the document location for diagnostics.
    pub fn to_graph(&self, field: &str) -> Result<Graph, CliError> {
        for (i, &[u, v]) in self.edges.iter().enumerate() {
            let at = format!("{field}.edges[{i}]");
            if let Some(w) = [u, v].into_iter().find(|&w| w >= self.n) {
                return Err(CliError::field(at, format!("vertex {w} out of range for n = {}", self.n)));
            }
            if u == v {
                return Err(CliError::field(at, format!("self-loop at vertex {u}")));
            }
        }
        let edges: Vec<_> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::from_edges(self.n, &edges).map_err(|e| CliError::field(field, e.to_string()))
    }
}

/// Problem-specific payload.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Extras {
    /// Forbidden induced subgraphs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Vec<GraphDoc>>,
    /// Set-cover family over `0..universe`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sets: Option<Vec<Vec<usize>>>,
    /// Color classes of a multicolored independent set instance.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<usize>>>,
    /// Written by `reduce` and `kernelize`: vertex of this instance standing
    /// for each source item, or the source vertex of each kernel vertex.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_ids: Option<Vec<Option<usize>>>,
    /// Written by composition: `composed_ids[i][v]` for vertex `v` of input `i`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub composed_ids: Option<Vec<Vec<usize>>>,
}

impl Extras {
    fn is_empty(&self) -> bool {
        *self == Extras::default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Envelope {
    pub problem: String,
    pub graph: GraphDoc,
    #[serde(default)]
    pub params: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Extras::is_empty")]
    pub extras: Extras,
}

impl Envelope {
    pub fn new(problem: Problem, g: &Graph) -> Self {
        Envelope {
            problem: problem.code().to_string(),
            graph: GraphDoc::from_graph(g),
            params: BTreeMap::new(),
            extras: Extras::default(),
        }
    }

    pub fn with(mut self, key: &str, value: usize) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::field("envelope", e.to_string()))
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelopes always serialize");
        s.push('\n');
        s
    }

    pub fn problem(&self) -> Result<Problem, CliError> {
        self.problem.parse().map_err(|e| CliError::field("problem", e))
    }

    pub fn param(&self, key: &str) -> Result<usize, CliError> {
        self.params.get(key).copied().ok_or_else(|| {
            CliError::field(format!("params.{key}"), format!("required by problem {}", self.problem))
        })
    }

    pub fn graph(&self) -> Result<Graph, CliError> {
        self.graph.to_graph("graph")
    }

    /// Problem code known, required params present and the graph valid.
    pub fn validate(&self) -> Result<Problem, CliError> {
        let problem = self.problem()?;
        for key in problem.required_params() {
            self.param(key)?;
        }
        self.graph()?;
        Ok(problem)
    }

    pub fn family(&self) -> Result<ForbiddenFamily, CliError> {
        let docs = self.extras.family.as_ref().ok_or_else(|| {
            CliError::field("extras.family", format!("required by problem {}", self.problem))
        })?;
        let patterns = docs
            .iter()
            .enumerate()
            .map(|(i, d)| d.to_graph(&format!("extras.family[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        ForbiddenFamily::new(patterns).map_err(|e| CliError::field("extras.family", e.to_string()))
    }

    fn list(&self, key: &str, value: &Option<Vec<Vec<usize>>>) -> Result<Vec<Vec<usize>>, CliError> {
        value.clone().ok_or_else(|| {
            CliError::field(format!("extras.{key}"), format!("required by problem {}", self.problem))
        })
    }

    /// Builds the in-memory instance the solvers and the oracle take.
    pub fn instance(&self) -> Result<ProblemInstance, CliError> {
        let problem = self.validate()?;
        let g = self.graph()?;
        let p = |key: &str| self.param(key);
        let inst = match problem {
            Problem::Ssep => {
                ProblemInstance::Separator(SeparatorInstance::secluded(g, p("s")?, p("t")?, p("k")?))
            }
            Problem::Sssep => {
                ProblemInstance::Separator(SeparatorInstance::small(g, p("s")?, p("t")?, p("k")?, p("ell")?))
            }
            Problem::Sqds => ProblemInstance::Dom(DomInstance::secluded(g, p("p")?, p("q")?, p("k")?)),
            Problem::Ssqds => {
                ProblemInstance::Dom(DomInstance::small(g, p("p")?, p("q")?, p("k")?, p("ell")?))
            }
            Problem::Sfvd | Problem::Ssfvd => ProblemInstance::Ffvd(FfvdInstance {
                g,
                family: self.family()?,
                k: p("k")?,
                ell: if problem == Problem::Ssfvd { Some(p("ell")?) } else { None },
            }),
            Problem::Sfvs => ProblemInstance::Fvs(FvsInstance::secluded(g, p("k")?)),
            Problem::Ssfvs => ProblemInstance::Fvs(FvsInstance::small(g, p("k")?, p("ell")?)),
            Problem::Lsis => ProblemInstance::Lsis(LsisInstance { g, k: p("k")?, ell: p("ell")? }),
            Problem::SetCover => ProblemInstance::Source(SourceInstance::SetCover(SetCoverInstance {
                universe: p("universe")?,
                family: self.list("sets", &self.extras.sets)?,
                k: p("k")?,
            })),
            Problem::Clique => {
                ProblemInstance::Source(SourceInstance::Clique(CliqueInstance { g, k: p("k")? }))
            }
            Problem::Mis => ProblemInstance::Source(SourceInstance::Mis(MisInstance {
                g,
                classes: self.list("classes", &self.extras.classes)?,
            })),
            Problem::Catv => ProblemInstance::Source(SourceInstance::Catv(CatvInstance {
                g,
                s: p("terminal")?,
                k: p("k")?,
                ell: p("ell")?,
            })),
            Problem::Fvs => ProblemInstance::Source(SourceInstance::Fvs(FvsSource { g, k: p("k")? })),
            Problem::Ffvd => ProblemInstance::Source(SourceInstance::Ffvd(FfvdSource {
                g,
                family: self.family()?,
                s: p("k")?,
            })),
        };
        check_instance(&inst)?;
        Ok(inst)
    }
}

/// Envelope for an in-memory instance; the inverse of [`Envelope::instance`].
pub fn to_envelope(inst: &ProblemInstance) -> Envelope {
    let family = |f: &ForbiddenFamily| Extras { family: Some(family_docs(f)), ..Extras::default() };
    match inst {
        ProblemInstance::Separator(s) => {
            let env = Envelope::new(if s.ell.is_some() { Problem::Sssep } else { Problem::Ssep }, &s.g)
                .with("k", s.k)
                .with("s", s.s)
                .with("t", s.t);
            with_ell(env, s.ell)
        }
        ProblemInstance::Dom(d) => {
            let env = Envelope::new(if d.ell.is_some() { Problem::Ssqds } else { Problem::Sqds }, &d.g)
                .with("p", d.p)
                .with("q", d.q)
                .with("k", d.k);
            with_ell(env, d.ell)
        }
        ProblemInstance::Ffvd(f) => {
            let mut env = Envelope::new(if f.ell.is_some() { Problem::Ssfvd } else { Problem::Sfvd }, &f.g)
                .with("k", f.k);
            env.extras = family(&f.family);
            with_ell(env, f.ell)
        }
        ProblemInstance::Fvs(f) => {
            let env = Envelope::new(if f.ell.is_some() { Problem::Ssfvs } else { Problem::Sfvs }, &f.g)
                .with("k", f.k);
            with_ell(env, f.ell)
        }
        ProblemInstance::Lsis(l) => Envelope::new(Problem::Lsis, &l.g).with("k", l.k).with("ell", l.ell),
        ProblemInstance::Source(src) => match src {
            SourceInstance::SetCover(sc) => {
                let mut env = Envelope::new(Problem::SetCover, &Graph::new(0))
                    .with("universe", sc.universe)
                    .with("k", sc.k);
                env.extras.sets = Some(sc.family.clone());
                env
            }
            SourceInstance::Clique(c) => Envelope::new(Problem::Clique, &c.g).with("k", c.k),
            SourceInstance::Mis(m) => {
                let mut env = Envelope::new(Problem::Mis, &m.g);
                env.extras.classes = Some(m.classes.clone());
                env
            }
            SourceInstance::Catv(c) => {
                Envelope::new(Problem::Catv, &c.g).with("terminal", c.s).with("k", c.k).with("ell", c.ell)
            }
            SourceInstance::Fvs(f) => Envelope::new(Problem::Fvs, &f.g).with("k", f.k),
            SourceInstance::Ffvd(f) => {
                let mut env = Envelope::new(Problem::Ffvd, &f.g).with("k", f.s);
                env.extras = family(&f.family);
                env
            }
        },
    }
}

fn with_ell(env: Envelope, ell: Option<usize>) -> Envelope {
    match ell {
        Some(l) => env.with("ell", l),
        None => env,
    }
}

/// Range checks that name the envelope field at fault.
fn check_instance(inst: &ProblemInstance) -> Result<(), CliError> {
    let vertex = |g: &Graph, key: &str, v: usize| {
        g.check_vertex(v).map_err(|e| CliError::field(format!("params.{key}"), e.to_string()))
    };
    match inst {
        ProblemInstance::Separator(s) => {
            vertex(&s.g, "s", s.s)?;
            vertex(&s.g, "t", s.t)?;
            if s.s == s.t {
                return Err(CliError::field("params.t", "terminals must be distinct"));
            }
        }
        ProblemInstance::Source(SourceInstance::Catv(c)) => vertex(&c.g, "terminal", c.s)?,
        ProblemInstance::Source(SourceInstance::SetCover(sc)) => {
            sc.validate().map_err(|e| CliError::field("extras.sets", e.to_string()))?
        }
        ProblemInstance::Source(SourceInstance::Mis(m)) => {
            m.validate().map_err(|e| CliError::field("extras.classes", e.to_string()))?
        }
        _ => {}
    }
    Ok(())
}

/// Patterns selectable by name on the command line.
pub fn named_family(name: &str) -> Result<ForbiddenFamily, CliError> {
    match name {
        "triangle" => Ok(ForbiddenFamily::triangle()),
        "edge" => Ok(ForbiddenFamily::edge()),
        "p3" => Ok(ForbiddenFamily::p3()),
        _ => Err(CliError::Usage(format!("unknown pattern family '{name}' (expected triangle, edge or p3)"))),
    }
}

pub fn family_docs(family: &ForbiddenFamily) -> Vec<GraphDoc> {
    family.patterns.iter().map(GraphDoc::from_graph).collect()
}

/// Reads "n m" followed by `m` lines "u v" (0-based).
pub fn read_edge_list(text: &str) -> Result<Graph, CliError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let bad =
        |line: usize, msg: &str| CliError::field(format!("edge list line {}", line + 1), msg.to_string());
    let (hl, header) = lines.next().ok_or_else(|| CliError::field("edge list", "empty input"))?;
    let nums = parse_pair(header).ok_or_else(|| bad(hl, "expected header 'n m'"))?;
    let (n, m) = nums;
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines {
        let (u, v) = parse_pair(line).ok_or_else(|| bad(i, "expected two vertex ids"))?;
        if u >= n || v >= n {
            return Err(bad(i, &format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(bad(i, "self-loop"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(CliError::field(
            "edge list",
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, &edges).map_err(|e: CoreError| CliError::field("edge list", e.to_string()))
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Some((a, b)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_round_trip() {
        for p in Problem::ALL {
            assert_eq!(p.code().parse::<Problem>().unwrap(), p);
        }
        assert!("nope".parse::<Problem>().is_err());
    }

    #[test]
    fn edge_list() {
        let g = read_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert!(read_edge_list("3 2\n0 1\n").is_err());
        assert!(read_edge_list("3 1\n0 3\n").is_err());
        assert!(read_edge_list("3 1\n1 1\n").is_err());
    }

    #[test]
    fn missing_param_names_the_field() {
        let env = Envelope::new(Problem::Ssep, &Graph::new(3)).with("k", 2).with("s", 0);
        let err = env.instance().unwrap_err().to_string();
        assert!(err.contains("params.t"), "{err}");
    }

    #[test]
    fn bad_edge_names_the_field() {
        let text = r#"{"problem":"sfvs","graph":{"n":2,"edges":[[0,1],[1,5]]},"params":{"k":1}}"#;
        let err = Envelope::parse(text).unwrap().instance().unwrap_err().to_string();
        assert!(err.contains("graph.edges[1]"), "{err}");
    }
}
