use alloc::string::String;

use crate::graph::{Graph, VertexSet};

/// A verified solution: the set, its neighborhoods, and the checks it passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionReport {
    pub solution: VertexSet,
    /// `N(S)` at the radius the problem measures seclusion with.
    pub open_neighborhood: VertexSet,
    /// `N[S]` at the same radius.
    pub closed_neighborhood: VertexSet,
    /// The defining property (separation, domination, acyclicity, ...) holds.
    pub property_verified: bool,
    /// Every budget of the instance holds.
    pub budgets_verified: bool,
}

impl SolutionReport {
    /// Computes the neighborhoods of `solution` at radius `radius`.
    pub(crate) fn at_radius(g: &Graph, solution: VertexSet, radius: usize) -> Self {
        let dist = g.distances(solution.iter(), Some(radius), None);
        let closed: VertexSet = g.vertices().filter(|&v| dist[v].is_some()).collect();
        let open = closed.iter().filter(|&v| !solution.contains(v)).collect();
        SolutionReport {
            solution,
            open_neighborhood: open,
            closed_neighborhood: closed,
            property_verified: false,
            budgets_verified: false,
        }
    }
}

/// Solver result: a witness or "no", plus the number of search nodes visited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Answer {
    pub witness: Option<SolutionReport>,
    pub nodes_explored: u64,
}

impl Answer {
    pub fn yes(report: SolutionReport, nodes_explored: u64) -> Self {
        Answer { witness: Some(report), nodes_explored }
    }

    pub fn no(nodes_explored: u64) -> Self {
        Answer { witness: None, nodes_explored }
    }

    pub fn is_yes(&self) -> bool {
        self.witness.is_some()
    }
}

/// A forced yes/no decision with its justification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub yes: bool,
    pub justification: String,
}

/// Result of a kernelization: the reduced instance, and a verdict when the
/// kernel already decides the instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelOutcome<K> {
    pub kernel: K,
    pub verdict: Option<Verdict>,
}

impl<K> KernelOutcome<K> {
    pub fn decided(&self) -> Option<bool> {
        self.verdict.as_ref().map(|v| v.yes)
    }
}
