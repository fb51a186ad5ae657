//! Classification of chain-shaped subjects.
//!
//! Finite topologies are inspected directly. Symbolic maps receive an
//! analytic verdict only when they belong to a closed-form family whose
//! escape or descent is provable by inspection; exploration alone can never
//! certify unboundedness, so everything else reports `Unknown` together
//! with what the explored window showed.

use num_bigint::BigInt;

use crate::symbolic::{MapFamily, SymbolicMap};
use crate::topology::Topology;

/// Shape verdict for a subject, with a textual certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainClass {
    pub kind: ChainKind,
    pub evidence: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainKind {
    /// A finite total order of the given number of classes.
    FiniteChain(usize),
    /// Descends to a declared base from every start: surely terminating.
    DescendingToBase,
    /// Grows without bound from a generator: surely non-terminating.
    AscendingUnbounded,
    /// A certified two-way-infinite chain: no base and no generator.
    DoublyUnbounded,
    NotAChain,
    Unknown,
}

impl ChainKind {
    /// Kinds that certify termination of every iteration.
    pub fn certifies_termination(self) -> bool {
        matches!(self, ChainKind::DescendingToBase)
    }

    /// Kinds that certify that iteration can never stop.
    pub fn certifies_divergence(self) -> bool {
        matches!(
            self,
            ChainKind::AscendingUnbounded | ChainKind::DoublyUnbounded
        )
    }
}

/// Start-value range and step budget used to explore a symbolic subject.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
    pub budget: u64,
}

impl Default for Window {
    fn default() -> Self {
        Self {
            lo: -32,
            hi: 32,
            budget: 10_000,
        }
    }
}

/// Classifies a finite topology: a chain exactly when the forest is one
/// tree in which no class has two lower covers.
pub fn classify_chain(t: &Topology) -> ChainClass {
    if t.base_set().len() > 1 {
        return ChainClass {
            kind: ChainKind::NotAChain,
            evidence: format!("{} separate trees in the forest", t.base_set().len()),
        };
    }
    let children = t.children();
    if let Some(c) = children.iter().position(|k| k.len() > 1) {
        return ChainClass {
            kind: ChainKind::NotAChain,
            evidence: format!(
                "class {} has {} lower covers",
                t.classes()[c].label(),
                children[c].len()
            ),
        };
    }
    ChainClass {
        kind: ChainKind::FiniteChain(t.class_count()),
        evidence: format!("total order of {} classes", t.class_count()),
    }
}

/// Classifies a symbolic map: analytic families get closed-form verdicts,
/// everything else is explored over the window and reported `Unknown`.
pub fn classify_chain_map(map: &SymbolicMap, window: &Window) -> ChainClass {
    match map.family() {
        Some(MapFamily::Predecessor) => ChainClass {
            kind: ChainKind::DescendingToBase,
            evidence: "argument decreases by 1 until the base element 0; total chain with base {0}"
                .into(),
        },
        Some(MapFamily::Successor) => ChainClass {
            kind: ChainKind::AscendingUnbounded,
            evidence: "argument increases by 1 from generator 0; no base set exists".into(),
        },
        Some(MapFamily::SuccessorOnIntegers) => ChainClass {
            kind: ChainKind::DoublyUnbounded,
            evidence:
                "argument increases by 1 across all integers; neither a base nor a generator exists"
                    .into(),
        },
        Some(MapFamily::Split) => ChainClass {
            kind: ChainKind::NotAChain,
            evidence: "two chains, generators {0, -1}".into(),
        },
        Some(MapFamily::Affine { slope, offset }) if slope >= 1 && offset >= 1 => ChainClass {
            kind: ChainKind::AscendingUnbounded,
            evidence: format!(
                "{slope}x+{offset} is strictly increasing on the naturals; \
                 union of ascending chains with no base set"
            ),
        },
        _ => explore(map, window),
    }
}

fn explore(map: &SymbolicMap, window: &Window) -> ChainClass {
    let mut probed = 0u64;
    let mut reached = 0u64;
    let mut cycled = 0u64;
    let mut exhausted = 0u64;
    let mut escaped = 0u64;
    for v in window.lo..=window.hi {
        let x = BigInt::from(v);
        if !map.in_domain(&x) && !map.is_base(&x) {
            continue;
        }
        probed += 1;
        match map.orbit(&x, window.budget) {
            Ok(r) => match r.outcome {
                crate::symbolic::OrbitOutcome::ReachedBase { .. } => reached += 1,
                crate::symbolic::OrbitOutcome::EnteredCycle { .. } => cycled += 1,
                crate::symbolic::OrbitOutcome::BudgetExhausted { .. } => exhausted += 1,
            },
            Err(_) => escaped += 1,
        }
    }
    ChainClass {
        kind: ChainKind::Unknown,
        evidence: format!(
            "no analytic certificate; explored {probed} starts in [{lo}, {hi}]: \
             {reached} reached base, {cycled} entered a cycle, {exhausted} hit the \
             {budget}-step budget, {escaped} left the domain",
            lo = window.lo,
            hi = window.hi,
            budget = window.budget,
        ),
    }
}
