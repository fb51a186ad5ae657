//! Termination verdicts and ranking-function certificates.
//!
//! Every finite table terminates once its base conditions are supplied: all
//! orbits fall into a cycle class, and the base set is finite, hence
//! enumerable. The extracted ranking function counts applications left
//! until the base set and is itself the order-preserving certificate of
//! that fact: it strictly decreases at every off-base step.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;

use crate::canonical::CodeMode;
use crate::error::Error;
use crate::finite::FiniteFunction;
use crate::iso::{topologies_isomorphic, IsoDecision};
use crate::symbolic::{MapFamily, OrbitOutcome, SymbolicMap};
use crate::topology::{build_topology, Topology};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermStatus {
    Terminating,
    NonTerminating,
    Unknown,
}

impl fmt::Display for TermStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermStatus::Terminating => write!(f, "terminating"),
            TermStatus::NonTerminating => write!(f, "non-terminating"),
            TermStatus::Unknown => write!(f, "unknown"),
        }
    }
}

/// A termination verdict with its justification.
///
/// `required_base_conditions` is present exactly on terminating verdicts
/// and lists the elements whose values must be supplied externally.
/// `NonTerminating` is only ever produced from an analytic certificate,
/// never from exploration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermVerdict {
    pub status: TermStatus,
    pub required_base_conditions: Option<BTreeSet<BigInt>>,
    pub certificate: String,
}

/// Every finite table terminates: orbits reach a cycle class in at most
/// `|domain|` steps and the base set is finite, hence enumerable.
pub fn classify_termination(f: &FiniteFunction) -> TermVerdict {
    let t = build_topology(f);
    let base = t.base_conditions_required();
    TermVerdict {
        status: TermStatus::Terminating,
        certificate: format!(
            "finite poset with an enumerable base set of {} element(s); \
             every orbit reaches the base set within {} applications",
            base.len(),
            f.len()
        ),
        required_base_conditions: Some(base.into_iter().map(BigInt::from).collect()),
    }
}

/// Verdict for a symbolic map.
///
/// Analytic families decide the question outright. Everything else is
/// probed: the per-start outcomes are tallied into the certificate, but no
/// amount of exploration upgrades the verdict beyond `Unknown`.
pub fn classify_termination_symbolic(
    map: &SymbolicMap,
    probes: &[BigInt],
    budget: u64,
) -> Result<TermVerdict, Error> {
    match map.family() {
        Some(MapFamily::Predecessor) => Ok(TermVerdict {
            status: TermStatus::Terminating,
            required_base_conditions: Some(BTreeSet::from([BigInt::ZERO])),
            certificate: "argument strictly decreases by 1; every start reaches the base \
                          element 0"
                .into(),
        }),
        Some(MapFamily::Successor) => Ok(TermVerdict {
            status: TermStatus::NonTerminating,
            required_base_conditions: None,
            certificate: "argument strictly increases by 1 and no base set exists; \
                          iteration computes forever"
                .into(),
        }),
        Some(MapFamily::SuccessorOnIntegers) => Ok(TermVerdict {
            status: TermStatus::NonTerminating,
            required_base_conditions: None,
            certificate: "argument strictly increases across all integers; no base set exists"
                .into(),
        }),
        Some(MapFamily::Split) => Ok(TermVerdict {
            status: TermStatus::NonTerminating,
            required_base_conditions: None,
            certificate: "both branches walk away from the pivot along ascending chains \
                          with generators 0 and -1; no base set exists"
                .into(),
        }),
        Some(MapFamily::Affine { slope, offset }) if slope >= 1 && offset >= 1 => Ok(TermVerdict {
            status: TermStatus::NonTerminating,
            required_base_conditions: None,
            certificate: format!(
                "{slope}x+{offset} is strictly increasing on the naturals and no base \
                     set exists; iteration computes forever"
            ),
        }),
        _ => {
            let mut reached = 0u64;
            let mut cycled = 0u64;
            let mut exhausted = 0u64;
            for p in probes {
                let r = map.orbit(p, budget)?;
                match r.outcome {
                    OrbitOutcome::ReachedBase { .. } => reached += 1,
                    OrbitOutcome::EnteredCycle { .. } => cycled += 1,
                    OrbitOutcome::BudgetExhausted { .. } => exhausted += 1,
                }
            }
            Ok(TermVerdict {
                status: TermStatus::Unknown,
                required_base_conditions: None,
                certificate: format!(
                    "no analytic certificate; probed {} start(s) with budget {budget}: \
                     {reached} reached base, {cycled} entered a cycle, {exhausted} \
                     exhausted the budget",
                    probes.len()
                ),
            })
        }
    }
}

/// Transfers a termination verdict across an ordinal isomorphism: if `f`
/// induces the same order as the already-classified `reference`, it
/// inherits the verdict.
pub fn termination_by_isomorphism(
    f: &FiniteFunction,
    reference: &FiniteFunction,
) -> Option<TermVerdict> {
    let tf = build_topology(f);
    let tr = build_topology(reference);
    match topologies_isomorphic(&tf, &tr, CodeMode::ClassLevel) {
        IsoDecision::Yes(witness) => {
            let mut verdict = classify_termination(f);
            verdict.certificate = format!(
                "inherited through an order-preserving bijection of {} classes from a \
                 reference already classified as terminating",
                witness.len()
            );
            Some(verdict)
        }
        IsoDecision::No => None,
    }
}

/// Applications of `f` needed to first reach a base-class element.
///
/// Base elements (cycle members) sit at rank 0; every other element's rank
/// is exactly one more than its image's, which makes the map a certificate
/// of strict descent toward the base set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankMap {
    rank: BTreeMap<u64, u64>,
}

impl RankMap {
    pub fn new(rank: BTreeMap<u64, u64>) -> Self {
        Self { rank }
    }

    pub fn get(&self, x: u64) -> Option<u64> {
        self.rank.get(&x).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.rank.iter().map(|(&x, &r)| (x, r))
    }

    pub fn as_map(&self) -> &BTreeMap<u64, u64> {
        &self.rank
    }
}

/// Extracts the distance-to-base ranking of `f`.
///
/// Panics if `t` was not built from `f`.
pub fn extract_ranking(t: &Topology, f: &FiniteFunction) -> RankMap {
    let mut rank: BTreeMap<u64, u64> = BTreeMap::new();
    for x in f.domain() {
        if rank.contains_key(&x) {
            continue;
        }
        let mut path = Vec::new();
        let mut cur = x;
        let found = loop {
            if let Some(&r) = rank.get(&cur) {
                break r;
            }
            assert!(
                t.class_of(cur).is_some() && path.len() <= f.len(),
                "topology was not built from this function"
            );
            if t.is_base_element(cur) {
                rank.insert(cur, 0);
                break 0;
            }
            path.push(cur);
            cur = f.apply(cur).expect("closed table");
        };
        let depth = path.len() as u64;
        for (i, &e) in path.iter().enumerate() {
            rank.insert(e, found + depth - i as u64);
        }
    }
    RankMap::new(rank)
}

/// Result of checking a candidate ranking against a function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankCheck {
    Valid,
    /// The smallest element at which strict descent fails.
    Violation(u64),
}

/// Checks that `r` strictly decreases along `f` at every element outside
/// the base set. Descent need not be by exactly one; base elements carry no
/// obligation because iteration stops there.
pub fn verify_ranking(f: &FiniteFunction, r: &RankMap) -> Result<RankCheck, Error> {
    let t = build_topology(f);
    for x in f.domain() {
        let rx = r.get(x).ok_or(Error::MissingRank(x))?;
        if t.is_base_element(x) {
            continue;
        }
        let y = f.apply(x)?;
        let ry = r.get(y).ok_or(Error::MissingRank(y))?;
        if ry >= rx {
            return Ok(RankCheck::Violation(x));
        }
    }
    Ok(RankCheck::Valid)
}
