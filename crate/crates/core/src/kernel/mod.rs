//! Kernelization pipelines: polynomial-time preprocessing that shrinks an
//! instance to an equivalent one whose size depends only on the structural
//! parameter, plus strategy lifting back to the original graph.
//!
//! Every pipeline records an ordered trace of rule applications and a
//! witness for each deleted vertex; composing witnesses yields the image
//! map that strategy lifting and the audits consume. Deletion rules are
//! never applied at k = 1 (a deleted twin can lower the cop number there);
//! those instances are solved outright and the verdict stored.

mod lift;
mod pipelines;

pub use lift::{lift_strategy, LiftedPolicy};
pub use pipelines::{
    kernelize_cvd, kernelize_directed, kernelize_dts, kernelize_generalized, kernelize_nd,
    kernelize_vcn,
};

use crate::error::KernelError;
use crate::game::Verdict;
use crate::graph::Graph;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Vc,
    Cvd,
    Dts,
    Nd,
    Directed,
    Generalized,
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ParamKind::Vc => "vc",
            ParamKind::Cvd => "cvd",
            ParamKind::Dts => "dts",
            ParamKind::Nd => "nd",
            ParamKind::Directed => "directed",
            ParamKind::Generalized => "general",
        };
        f.write_str(s)
    }
}

/// The reduction rules, named by what they do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    /// Enough cops relative to the parameter: answer yes outright.
    ThresholdYes,
    /// k = 1 routed to the exact solver; verdict stored.
    DirectSolve,
    /// Independent-set vertex with a dominated neighborhood.
    DominatedIndep,
    /// Within-clique vertex dominated on the deletion set.
    CliqueDominated,
    /// Whole clique subsumed member-by-member by another clique.
    CliqueSubsume,
    /// Star leaf dominated by a sibling leaf.
    StarLeafDominated,
    /// Whole star subsumed center-to-center and leaf-by-leaf.
    StarSubsume,
    /// Directed domination on both in- and out-neighborhoods.
    DirectedDominated,
    /// Neighborhood equivalence class truncated to k+1 members.
    ClassTruncate,
    /// Same-type class collapsed to one representative.
    TypeCollapse,
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RuleKind::ThresholdYes => "threshold-yes",
            RuleKind::DirectSolve => "direct-solve",
            RuleKind::DominatedIndep => "dominated-indep",
            RuleKind::CliqueDominated => "clique-dominated",
            RuleKind::CliqueSubsume => "clique-subsume",
            RuleKind::StarLeafDominated => "star-leaf-dominated",
            RuleKind::StarSubsume => "star-subsume",
            RuleKind::DirectedDominated => "directed-dominated",
            RuleKind::ClassTruncate => "class-truncate",
            RuleKind::TypeCollapse => "type-collapse",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceEntry {
    Verdict { rule: RuleKind, yes: bool },
    Delete { rule: RuleKind, deleted: usize, witness: usize },
}

/// Output of one pipeline: the reduced graph, an optional early verdict,
/// the applied-rule trace, and the image map for lifting.
#[derive(Debug, Clone)]
pub struct KernelResult {
    pub param: ParamKind,
    pub k: usize,
    /// Early decision (threshold rules or the k = 1 direct solve). When
    /// set, consumers must not interpret `reduced`.
    pub verdict: Option<Verdict>,
    /// Induced subgraph on the survivors, re-numbered by ascending original
    /// id.
    pub reduced: Graph,
    /// Original ids of the survivors; `kept[i]` is reduced vertex `i`.
    pub kept: Vec<usize>,
    /// Maps every original vertex to its surviving image (identity on
    /// survivors, the resolved deletion witness otherwise).
    pub image: Vec<usize>,
    pub trace: Vec<TraceEntry>,
}

impl KernelResult {
    pub fn deleted(&self) -> usize {
        self.image.len() - self.kept.len()
    }

    /// Reduced index of an original vertex, if it survived.
    pub fn reduced_index(&self, orig: usize) -> Option<usize> {
        self.kept.binary_search(&orig).ok()
    }

    /// Reduced index of the image of any original vertex.
    pub fn image_index(&self, orig: usize) -> usize {
        self.reduced_index(self.image[orig]).expect("images survive")
    }

    /// One line per rule application: `rule deleted witness`, with verdict
    /// rules rendered as `rule verdict yes|no`.
    pub fn trace_text(&self) -> String {
        use fmt::Write as _;
        let mut out = String::new();
        for entry in &self.trace {
            match entry {
                TraceEntry::Verdict { rule, yes } => {
                    writeln!(out, "{rule} verdict {}", if *yes { "yes" } else { "no" }).unwrap()
                }
                TraceEntry::Delete { rule, deleted, witness } => {
                    writeln!(out, "{rule} {deleted} {witness}").unwrap()
                }
            }
        }
        out
    }
}

/// Deletion bookkeeping shared by the pipelines.
pub(crate) struct Reducer<'a> {
    g: &'a Graph,
    param: ParamKind,
    k: usize,
    alive: Vec<bool>,
    witness: Vec<Option<usize>>,
    trace: Vec<TraceEntry>,
    verdict: Option<Verdict>,
}

impl<'a> Reducer<'a> {
    pub fn new(g: &'a Graph, param: ParamKind, k: usize) -> Reducer<'a> {
        Reducer {
            g,
            param,
            k,
            alive: vec![true; g.n()],
            witness: vec![None; g.n()],
            trace: Vec::new(),
            verdict: None,
        }
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive[v]
    }

    pub fn delete(&mut self, rule: RuleKind, deleted: usize, witness: usize) {
        debug_assert!(self.alive[deleted] && self.alive[witness] && deleted != witness);
        self.alive[deleted] = false;
        self.witness[deleted] = Some(witness);
        self.trace.push(TraceEntry::Delete { rule, deleted, witness });
    }

    pub fn record_verdict(&mut self, rule: RuleKind, verdict: Verdict) {
        self.trace.push(TraceEntry::Verdict { rule, yes: verdict == Verdict::CopWin });
        self.verdict = Some(verdict);
    }

    pub fn finish(self) -> Result<KernelResult, KernelError> {
        let kept: Vec<usize> = (0..self.g.n()).filter(|&v| self.alive[v]).collect();
        let (reduced, kept_check) = self.g.induced(&kept);
        debug_assert_eq!(kept, kept_check);
        let mut image: Vec<usize> = (0..self.g.n()).collect();
        for v in 0..self.g.n() {
            let mut cur = v;
            while !self.alive[cur] {
                cur = self.witness[cur].expect("deleted vertices carry a witness");
            }
            image[v] = cur;
        }
        Ok(KernelResult {
            param: self.param,
            k: self.k,
            verdict: self.verdict,
            reduced,
            kept,
            image,
            trace: self.trace,
        })
    }
}

/// The ceiling-division convention used by every threshold rule.
pub(crate) fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}
