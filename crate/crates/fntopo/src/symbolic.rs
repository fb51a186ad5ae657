//! Lazily evaluated self-maps on unbounded integer domains.
//!
//! A [`SymbolicMap`] carries three rules: the transition itself, a domain
//! predicate describing the carrier set, and a base predicate marking the
//! elements at which iteration stops. Keeping the stopping set outside the
//! transition rule lets the same map be analyzed against different stopping
//! sets. All arithmetic is exact; values never silently wrap.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::finite::FiniteFunction;

type Rule = Arc<dyn Fn(&BigInt) -> BigInt + Send + Sync>;
type Predicate = Arc<dyn Fn(&BigInt) -> bool + Send + Sync>;

/// Closed-form families whose long-run behaviour is provable by inspection.
///
/// Divergence and descent certificates are only ever issued for these;
/// a black-box map (family `None`) can at most be explored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapFamily {
    /// Halve or apply `(3x+1)/2`, stopping at 1.
    Collatz,
    /// `x + 1` on the naturals.
    Successor,
    /// `x - 1` on the naturals, stopping at 0.
    Predecessor,
    /// `x + 1` for `x >= 0`, `x - 1` otherwise: two chains out of the
    /// integers, growing away from 0 and -1.
    Split,
    /// `a·x + b` on the naturals.
    Affine { slope: u64, offset: u64 },
    /// `x + 1` over all integers: a chain with no endpoint on either side.
    SuccessorOnIntegers,
}

/// A self-map on an unbounded integer domain, evaluated on demand.
#[derive(Clone)]
pub struct SymbolicMap {
    name: String,
    family: Option<MapFamily>,
    rule: Rule,
    domain: Predicate,
    base: Predicate,
}

impl SymbolicMap {
    /// A black-box map; no analytic certificates will ever be issued for it.
    pub fn new(
        name: impl Into<String>,
        rule: impl Fn(&BigInt) -> BigInt + Send + Sync + 'static,
        domain: impl Fn(&BigInt) -> bool + Send + Sync + 'static,
        base: impl Fn(&BigInt) -> bool + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            family: None,
            rule: Arc::new(rule),
            domain: Arc::new(domain),
            base: Arc::new(base),
        }
    }

    /// The halve-or-`(3x+1)/2` map on positive integers, stopping at 1.
    pub fn collatz() -> Self {
        Self {
            name: "collatz".into(),
            family: Some(MapFamily::Collatz),
            rule: Arc::new(
                |x: &BigInt| {
                    if x.is_even() {
                        x / 2
                    } else {
                        (x * 3 + 1) / 2
                    }
                },
            ),
            domain: Arc::new(|x: &BigInt| x > &BigInt::zero()),
            base: Arc::new(|x: &BigInt| *x == BigInt::from(1)),
        }
    }

    /// `x + 1` on the naturals; no stopping set.
    pub fn successor() -> Self {
        Self {
            name: "successor".into(),
            family: Some(MapFamily::Successor),
            rule: Arc::new(|x: &BigInt| x + 1),
            domain: Arc::new(|x: &BigInt| !x.is_negative()),
            base: Arc::new(|_| false),
        }
    }

    /// `x - 1` on the naturals, stopping at 0.
    pub fn predecessor() -> Self {
        Self {
            name: "predecessor".into(),
            family: Some(MapFamily::Predecessor),
            rule: Arc::new(|x: &BigInt| x - 1),
            domain: Arc::new(|x: &BigInt| !x.is_negative()),
            base: Arc::new(|x: &BigInt| x.is_zero()),
        }
    }

    /// `x + 1` for `x >= 0`, `x - 1` otherwise, over all integers.
    pub fn split() -> Self {
        Self {
            name: "split".into(),
            family: Some(MapFamily::Split),
            rule: Arc::new(|x: &BigInt| if x.is_negative() { x - 1 } else { x + 1 }),
            domain: Arc::new(|_| true),
            base: Arc::new(|_| false),
        }
    }

    /// `a·x + b` on the naturals; no stopping set.
    pub fn affine(slope: u64, offset: u64) -> Self {
        Self {
            name: format!("affine({slope}x+{offset})"),
            family: Some(MapFamily::Affine { slope, offset }),
            rule: Arc::new(move |x: &BigInt| x * slope + offset),
            domain: Arc::new(|x: &BigInt| !x.is_negative()),
            base: Arc::new(|_| false),
        }
    }

    /// `x + 1` over all integers.
    pub fn successor_on_integers() -> Self {
        Self {
            name: "successor-on-integers".into(),
            family: Some(MapFamily::SuccessorOnIntegers),
            rule: Arc::new(|x: &BigInt| x + 1),
            domain: Arc::new(|_| true),
            base: Arc::new(|_| false),
        }
    }

    /// Views a finite table as a symbolic map with an empty stopping set.
    ///
    /// Orbits of such a map always end in a cycle: finite domains are
    /// eventually periodic.
    pub fn from_finite(f: &FiniteFunction) -> Self {
        let table: HashMap<BigInt, BigInt> = f
            .pairs()
            .map(|(s, d)| (BigInt::from(s), BigInt::from(d)))
            .collect();
        let lookup = table.clone();
        Self {
            name: "table".into(),
            family: None,
            rule: Arc::new(move |x: &BigInt| lookup[x].clone()),
            domain: Arc::new(move |x: &BigInt| table.contains_key(x)),
            base: Arc::new(|_| false),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn family(&self) -> Option<MapFamily> {
        self.family
    }

    /// Whether `x` belongs to the declared carrier set.
    pub fn in_domain(&self, x: &BigInt) -> bool {
        (self.domain)(x)
    }

    /// Whether iteration stops at `x`.
    pub fn is_base(&self, x: &BigInt) -> bool {
        (self.base)(x)
    }

    /// One application of the transition rule.
    ///
    /// Only meaningful on domain elements that are not base elements; the
    /// iteration entry points below enforce that.
    pub fn apply(&self, x: &BigInt) -> BigInt {
        (self.rule)(x)
    }

    /// `n`-fold application with domain checking at every intermediate step.
    pub fn iterate(&self, x: &BigInt, n: u64) -> Result<BigInt, Error> {
        if !self.in_domain(x) && !self.is_base(x) {
            return Err(Error::DomainEscape(x.clone()));
        }
        let mut cur = x.clone();
        for done in 0..n {
            if self.is_base(&cur) {
                return Err(Error::TerminalHit {
                    value: cur,
                    remaining: n - done,
                });
            }
            cur = self.apply(&cur);
            if !self.in_domain(&cur) && !self.is_base(&cur) {
                return Err(Error::DomainEscape(cur));
            }
        }
        Ok(cur)
    }

    /// Iterates from `start` until a base element is hit, a value repeats,
    /// or `budget` applications have been spent.
    pub fn orbit(&self, start: &BigInt, budget: u64) -> Result<OrbitResult, Error> {
        if budget == 0 {
            return Err(Error::Invalid("orbit budget must be at least 1".into()));
        }
        if !self.in_domain(start) && !self.is_base(start) {
            return Err(Error::DomainEscape(start.clone()));
        }
        let mut trace = vec![start.clone()];
        let mut seen: HashMap<BigInt, usize> = HashMap::new();
        seen.insert(start.clone(), 0);
        let mut steps = 0u64;
        loop {
            let cur = trace.last().expect("trace is never empty").clone();
            if self.is_base(&cur) {
                return Ok(OrbitResult {
                    trace,
                    outcome: OrbitOutcome::ReachedBase { steps },
                });
            }
            if steps == budget {
                return Ok(OrbitResult {
                    trace,
                    outcome: OrbitOutcome::BudgetExhausted { budget },
                });
            }
            let next = self.apply(&cur);
            if !self.in_domain(&next) && !self.is_base(&next) {
                return Err(Error::DomainEscape(next));
            }
            if let Some(&pos) = seen.get(&next) {
                let cycle = trace[pos..].to_vec();
                return Ok(OrbitResult {
                    trace,
                    outcome: OrbitOutcome::EnteredCycle {
                        cycle,
                        tail_length: pos,
                    },
                });
            }
            seen.insert(next.clone(), trace.len());
            trace.push(next);
            steps += 1;
        }
    }
}

impl fmt::Debug for SymbolicMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymbolicMap")
            .field("name", &self.name)
            .field("family", &self.family)
            .finish_non_exhaustive()
    }
}

/// The visited values of one iteration run together with how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitResult {
    /// Visited values in order; the first entry is the start value and
    /// consecutive entries are related by one application of the map.
    pub trace: Vec<BigInt>,
    pub outcome: OrbitOutcome,
}

/// Exactly one of three ways an orbit run can end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitOutcome {
    /// A base element was reached after `steps` applications.
    ReachedBase { steps: u64 },
    /// A value repeated; `cycle` lists the pairwise distinct cycle values in
    /// visit order and `tail_length` counts the entries before the cycle.
    EnteredCycle {
        cycle: Vec<BigInt>,
        tail_length: usize,
    },
    /// The budget ran out before either of the above.
    BudgetExhausted { budget: u64 },
}

impl fmt::Display for OrbitOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitOutcome::ReachedBase { steps } => write!(f, "ReachedBase({steps})"),
            OrbitOutcome::EnteredCycle { cycle, tail_length } => {
                let vals: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
                write!(
                    f,
                    "EnteredCycle([{}], tail={})",
                    vals.join(" "),
                    tail_length
                )
            }
            OrbitOutcome::BudgetExhausted { budget } => write!(f, "BudgetExhausted({budget})"),
        }
    }
}
