//! Mechanized checks of the contraction theorems and their lemmas over
//! exhaustively enumerated and sampled small graphs.
//!
//! Every check produces a [`VerificationReport`]. Each violation carries the
//! graph, the family and the configuration it was found on, and
//! [`Violation::replay`] re-runs that single instance from the serialized
//! data alone.

mod checks;
mod enumerate;
mod sample;
mod verify;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::contraction::FamilyError;
use crate::detect::Witness;
use crate::graph::{Graph, GraphError, VertexSet};
use crate::io;
use crate::solve::SolveError;

pub use checks::{brute_force_contracted_count, evaluate, imperfection_witness, Check, Failure, Outcome};
pub use enumerate::{
    enumerate_clique_families, enumerate_labeled_graphs, enumerate_stable_families, graph_from_index,
    labeled_graph_count, EXHAUSTIVE_MAX_N, FAMILY_MAX_N,
};
pub use sample::{sample_co_meyniel, sample_graphs, sample_meyniel, SampleClass, SampleOutcome, MAX_ATTEMPTS_PER_GRAPH};
pub use verify::{
    closure_probe, verify_lemma1, verify_structural_lemmas, verify_theorem1, verify_theorem2,
    CLOSURE_MAX_N, LEMMA1_MAX_N, SAMPLED_FAMILY_MAX_N, THEOREM1_MAX_N,
};

/// Violations kept in a report; the rest are only counted.
pub const MAX_REPORTED_VIOLATIONS: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    /// A size guard was exceeded.
    #[error("{0}")]
    Guard(String),
    #[error("graph is Meyniel, it has no imperfection witness")]
    MeynielGraph,
    #[error("malformed instance: {0}")]
    Instance(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

impl From<GraphError> for HarnessError {
    fn from(e: GraphError) -> Self {
        HarnessError::Instance(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustiveScope {
    pub n_min: usize,
    pub n_max: usize,
    /// `"all"` or the class the enumerated graphs were filtered to.
    pub class: String,
    pub graphs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampledScope {
    pub class: SampleClass,
    pub n: usize,
    pub seed: u64,
    pub requested: usize,
    pub obtained: usize,
    pub attempts: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scope {
    pub exhaustive: Option<ExhaustiveScope>,
    pub sampled: Option<SampledScope>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    /// Compact edge list, see [`encode_graph`].
    pub graph: String,
    /// Family in `q j: ...` lines; empty for the empty family.
    pub family: String,
    pub check: Check,
    pub witness: Option<Witness>,
    pub detail: String,
}

impl Violation {
    pub(crate) fn new(g: &Graph, family: &[VertexSet], check: Check, failure: Failure) -> Self {
        Violation {
            graph: encode_graph(g),
            family: io::write_family(family),
            check,
            witness: failure.witness,
            detail: failure.detail,
        }
    }

    /// Re-runs the recorded instance; `true` when it still fails.
    pub fn replay(&self) -> Result<bool, HarnessError> {
        let g = decode_graph(&self.graph)?;
        let family = io::parse_family(&self.family).map_err(|e| HarnessError::Instance(e.to_string()))?;
        Ok(matches!(evaluate(&self.check, &g, &family)?, Outcome::Fails(_)))
    }
}

/// A positive fact established during a run, such as a strictness example.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub graph: String,
    pub holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub property: String,
    pub scope: Scope,
    /// Instances whose hypotheses held and whose conclusion was tested.
    pub checked: u64,
    pub pass: bool,
    pub violation_count: u64,
    /// At most [`MAX_REPORTED_VIOLATIONS`], sorted by instance encoding.
    pub violations: Vec<Violation>,
    /// Checked instances per sub-check.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub breakdown: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<Certificate>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `n: u-v u-v ...` with edges in lexicographic order.
pub fn encode_graph(g: &Graph) -> String {
    let mut s = format!("{}:", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!(" {u}-{v}"));
    }
    s
}

pub fn decode_graph(s: &str) -> Result<Graph, HarnessError> {
    let bad = || HarnessError::Instance(format!("bad graph encoding {s:?}"));
    let (n, rest) = s.split_once(':').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    let mut edges = Vec::new();
    for tok in rest.split_whitespace() {
        let (u, v) = tok.split_once('-').ok_or_else(bad)?;
        edges.push((u.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?));
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Running totals for one batch of graphs.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    checked: u64,
    breakdown: BTreeMap<&'static str, u64>,
    violation_count: u64,
    violations: Vec<Violation>,
}

impl Tally {
    /// Records one instance of sub-check `key`; the instance description is
    /// only built when the check failed.
    pub fn add(
        &mut self,
        key: &'static str,
        outcome: Outcome,
        g: &Graph,
        family: &[VertexSet],
        check: impl FnOnce() -> Check,
    ) {
        match outcome {
            Outcome::Vacuous => return,
            Outcome::Holds => {}
            Outcome::Fails(f) => {
                self.violation_count += 1;
                if self.violations.len() < MAX_REPORTED_VIOLATIONS {
                    self.violations.push(Violation::new(g, family, check(), f));
                }
            }
        }
        self.checked += 1;
        *self.breakdown.entry(key).or_default() += 1;
    }

    pub fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        for (k, v) in other.breakdown {
            *self.breakdown.entry(k).or_default() += v;
        }
        self.violation_count += other.violation_count;
        self.violations.extend(other.violations);
    }

    pub fn into_report(mut self, property: &str, scope: Scope, certificates: Vec<Certificate>) -> VerificationReport {
        self.violations.sort();
        self.violations.truncate(MAX_REPORTED_VIOLATIONS);
        let pass = self.violation_count == 0 && certificates.iter().all(|c| c.holds);
        VerificationReport {
            property: property.to_string(),
            scope,
            checked: self.checked,
            pass,
            violation_count: self.violation_count,
            violations: self.violations,
            breakdown: self.breakdown.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            certificates,
        }
    }
}
