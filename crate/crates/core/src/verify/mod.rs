//! Verifiers and the counterexample auditor.
//!
//! Every verifier returns a [`VerifyReport`]. Candidate spaces are split
//! into fixed shards processed in parallel; shard results are merged in
//! shard order, and random shards draw from their own ChaCha stream, so a
//! report depends only on its parameters and seed.

mod audit;
mod coset;
mod dirac;
mod graph;
mod space;
mod theorems;

pub use audit::{
    audit_candidate, evaluate_conditions, recheck_violation, AuditOptions, AuditReport,
    ConditionId, ConditionResult, FamilyMember, Hypothesis, HypothesisCheck, Status, Witness,
};
pub use coset::{coset_contribution_check, coset_profile, CosetCheck, CosetProfile, CosetRow};
pub use dirac::{auxiliary_degree, dirac_pairing, hamiltonian_cycle, validate_pairing, Pairing};
pub use graph::{graph_lemma_check, graph_lemma_search, Graph, GraphLemmaCheck, GraphSearchOptions};
pub use space::ComplementSpace;
pub use theorems::{
    brute_force_critical_number, verify_bose_burton, verify_main_theorem, verify_pie, verify_quotp,
    verify_quotx,
};

use std::time::Duration;

use serde::Serialize;

/// Default cap on the number of candidates an exhaustive run may examine.
pub const DEFAULT_CANDIDATE_CAP: u128 = 100_000_000;
/// Default per-candidate node budget for subspace searches.
pub const DEFAULT_CANDIDATE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exhaustive,
    Random,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "random" => Ok(Mode::Random),
            other => Err(format!("unknown mode `{other}`")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub mode: Mode,
    pub seed: u64,
    /// Samples (random mode) or trials.
    pub samples: u64,
    pub cap: u128,
    pub node_budget: u64,
}

impl VerifyConfig {
    pub fn exhaustive() -> Self {
        Self {
            mode: Mode::Exhaustive,
            seed: 0,
            samples: 0,
            cap: DEFAULT_CANDIDATE_CAP,
            node_budget: DEFAULT_CANDIDATE_BUDGET,
        }
    }

    pub fn random(samples: u64, seed: u64) -> Self {
        Self { mode: Mode::Random, seed, samples, ..Self::exhaustive() }
    }
}

/// A candidate that contradicts the statement being checked.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub rank: u32,
    pub edges: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vector: Option<u32>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub check: String,
    pub mode: Mode,
    pub space: String,
    pub candidates_examined: u64,
    pub skipped_nonspanning: u64,
    /// Candidates that met every hypothesis of the statement.
    pub qualifying: u64,
    /// Candidates abandoned because a search exceeded its node budget.
    pub resource_skipped: u64,
    pub violations: Vec<Violation>,
    pub seed: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.resource_skipped == 0
    }

    /// 0 = clean, 1 = violation found, 2 = resource-skipped work present.
    pub fn exit_status(&self) -> i32 {
        if !self.violations.is_empty() {
            1
        } else if self.resource_skipped > 0 {
            2
        } else {
            0
        }
    }
}

/// Outcome of one candidate.
pub(crate) enum Outcome {
    NonSpanning,
    NotQualifying,
    Qualifying,
    Violation(Violation),
    ResourceSkipped,
}

#[derive(Default, Debug)]
pub(crate) struct Tally {
    pub examined: u64,
    pub nonspanning: u64,
    pub qualifying: u64,
    pub resource_skipped: u64,
    pub violations: Vec<Violation>,
}

impl Tally {
    pub(crate) fn record(&mut self, outcome: Outcome) {
        self.examined += 1;
        match outcome {
            Outcome::NonSpanning => self.nonspanning += 1,
            Outcome::NotQualifying => {}
            Outcome::Qualifying => self.qualifying += 1,
            Outcome::Violation(v) => {
                self.qualifying += 1;
                self.violations.push(v);
            }
            Outcome::ResourceSkipped => self.resource_skipped += 1,
        }
    }

    pub(crate) fn merge(mut self, other: Tally) -> Tally {
        self.examined += other.examined;
        self.nonspanning += other.nonspanning;
        self.qualifying += other.qualifying;
        self.resource_skipped += other.resource_skipped;
        self.violations.extend(other.violations);
        self
    }

    pub(crate) fn into_report(
        mut self,
        check: &str,
        mode: Mode,
        space: String,
        seed: u64,
        elapsed: Duration,
    ) -> VerifyReport {
        self.violations.sort();
        VerifyReport {
            check: check.to_string(),
            mode,
            space,
            candidates_examined: self.examined,
            skipped_nonspanning: self.nonspanning,
            qualifying: self.qualifying,
            resource_skipped: self.resource_skipped,
            violations: self.violations,
            seed,
            elapsed,
        }
    }
}

/// Per-shard RNG: stream `shard` of the ChaCha generator keyed by `seed`.
pub(crate) fn shard_rng(seed: u64, shard: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shard);
    rng
}

/// Splits `total` items into consecutive shards of `size`.
pub(crate) fn shard_ranges(total: u64, size: u64) -> Vec<(u64, u64)> {
    (0..total.div_ceil(size)).map(|s| (s * size, ((s + 1) * size).min(total))).collect()
}
