//! Relabeling-invariant codes for induced orders.
//!
//! Each tree of the Hasse forest is folded into a balanced-parenthesis
//! string with the children substrings sorted at every level; the forest is
//! the sorted multiset of its tree codes. Two topologies are ordinally
//! isomorphic exactly when their codes are equal, so code equality stands in
//! for the search for an order-preserving bijection.

use std::fmt;

use crate::topology::{ClassId, Topology};

/// How much structure the code keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum CodeMode {
    /// Compare reduced domains only; cycle lengths and class sizes are
    /// ignored. A 3-cycle and a fixed point code identically.
    #[default]
    ClassLevel,
    /// Root codes additionally carry the cycle length of their base class,
    /// so maps that differ only in cycle length are told apart.
    StrictCycleLength,
}

/// A canonical encoding of a topology's forest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    mode: CodeMode,
    /// One code per tree, sorted; in strict mode each is prefixed with the
    /// decimal cycle length of its root.
    roots: Vec<String>,
}

impl CanonicalCode {
    pub fn mode(&self) -> CodeMode {
        self.mode
    }

    pub fn roots(&self) -> &[String] {
        &self.roots
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.roots.join(" "))
    }
}

/// Per-class subtree codes at class level, indexed by class id.
///
/// Shared with the isomorphism witness construction, which pairs classes by
/// equal subtree code.
pub(crate) fn class_codes(t: &Topology) -> Vec<String> {
    let n = t.class_count();
    let children = t.children();

    // Depth-first recursion would be natural but chains can be long; fold
    // bottom-up instead, walking a breadth-first order backwards.
    let mut order: Vec<ClassId> = t.base_set().to_vec();
    let mut next = 0;
    while let Some(&c) = order.get(next) {
        next += 1;
        order.extend(children[c].iter().copied());
    }
    debug_assert_eq!(order.len(), n);
    order.reverse();

    let mut codes = vec![String::new(); n];
    for c in order {
        let mut kid_codes: Vec<&str> = children[c].iter().map(|&k| codes[k].as_str()).collect();
        kid_codes.sort_unstable();
        let mut code = String::with_capacity(2 + kid_codes.iter().map(|s| s.len()).sum::<usize>());
        code.push('(');
        for k in kid_codes {
            code.push_str(k);
        }
        code.push(')');
        codes[c] = code;
    }
    codes
}

/// Root code of one tree in the requested mode.
pub(crate) fn root_code(t: &Topology, codes: &[String], root: ClassId, mode: CodeMode) -> String {
    match mode {
        CodeMode::ClassLevel => codes[root].clone(),
        CodeMode::StrictCycleLength => {
            format!("{}{}", t.classes()[root].members.len(), codes[root])
        }
    }
}

/// Computes the canonical code of a topology.
///
/// Deterministic, and invariant under any relabeling of the domain: equal
/// codes exactly characterize ordinal isomorphism in the given mode.
pub fn canonical_code(t: &Topology, mode: CodeMode) -> CanonicalCode {
    let codes = class_codes(t);
    let mut roots: Vec<String> = t
        .base_set()
        .iter()
        .map(|&r| root_code(t, &codes, r, mode))
        .collect();
    roots.sort_unstable();
    CanonicalCode { mode, roots }
}
