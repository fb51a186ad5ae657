//! Ordinal-isomorphism decisions with explicit witnesses.

use crate::canonical::{canonical_code, class_codes, root_code, CodeMode};
use crate::finite::FiniteFunction;
use crate::topology::{build_topology, ClassId, Topology};

/// Outcome of an isomorphism test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoDecision {
    /// Isomorphic; the witness pairs each class of the left topology with a
    /// class of the right one, preserving the order in both directions.
    Yes(Vec<(ClassId, ClassId)>),
    No,
}

impl IsoDecision {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoDecision::Yes(_))
    }
}

/// Decides whether two functions induce the same order on their reduced
/// domains. The domains may differ; only the class structure is compared.
pub fn is_ordinally_isomorphic(
    f: &FiniteFunction,
    g: &FiniteFunction,
    mode: CodeMode,
) -> IsoDecision {
    topologies_isomorphic(&build_topology(f), &build_topology(g), mode)
}

/// Same decision, starting from already-built topologies.
pub fn topologies_isomorphic(a: &Topology, b: &Topology, mode: CodeMode) -> IsoDecision {
    if canonical_code(a, mode) != canonical_code(b, mode) {
        return IsoDecision::No;
    }
    // Codes agree, so a witness exists; construct it by pairing equal-coded
    // subtrees. Among equal codes, smaller original members go first, which
    // keeps the output deterministic.
    let codes_a = class_codes(a);
    let codes_b = class_codes(b);
    let sort_key = |t: &Topology, codes: &[String], ids: &[ClassId], mode: Option<CodeMode>| {
        let mut v: Vec<(String, u64, ClassId)> = ids
            .iter()
            .map(|&c| {
                let code = match mode {
                    Some(m) => root_code(t, codes, c, m),
                    None => codes[c].clone(),
                };
                (code, t.classes()[c].min_member(), c)
            })
            .collect();
        v.sort();
        v.into_iter().map(|(_, _, c)| c).collect::<Vec<_>>()
    };

    let mut pairs = Vec::with_capacity(a.class_count());
    let kids_a = a.children();
    let kids_b = b.children();
    let mut stack: Vec<(ClassId, ClassId)> = sort_key(a, &codes_a, a.base_set(), Some(mode))
        .into_iter()
        .zip(sort_key(b, &codes_b, b.base_set(), Some(mode)))
        .collect();
    while let Some((ca, cb)) = stack.pop() {
        pairs.push((ca, cb));
        let next_a = sort_key(a, &codes_a, &kids_a[ca], None);
        let next_b = sort_key(b, &codes_b, &kids_b[cb], None);
        debug_assert_eq!(next_a.len(), next_b.len());
        stack.extend(next_a.into_iter().zip(next_b));
    }
    pairs.sort_unstable();
    IsoDecision::Yes(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(pairs: &[(u64, u64)]) -> FiniteFunction {
        FiniteFunction::new(pairs.iter().copied()).unwrap()
    }

    fn sample_table() -> FiniteFunction {
        table(&[(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 3)])
    }

    #[test]
    fn relabeling_is_an_isomorphism() {
        let f = sample_table();
        // image under the permutation x -> 5 - x
        let g = table(&[(5, 3), (4, 3), (3, 2), (2, 1), (1, 0), (0, 2)]);
        let d = is_ordinally_isomorphic(&f, &g, CodeMode::ClassLevel);
        match d {
            IsoDecision::Yes(pairs) => assert_eq!(pairs.len(), 4),
            IsoDecision::No => panic!("relabelled table must stay isomorphic"),
        }
        assert!(is_ordinally_isomorphic(&f, &g, CodeMode::StrictCycleLength).is_yes());
    }

    #[test]
    fn chain_and_star_differ() {
        let chain = table(&[(0, 1), (1, 2), (2, 2)]);
        let star = table(&[(0, 2), (1, 2), (2, 2)]);
        assert_eq!(
            is_ordinally_isomorphic(&chain, &star, CodeMode::ClassLevel),
            IsoDecision::No
        );
    }

    #[test]
    fn cycle_length_only_matters_in_strict_mode() {
        let cycle3 = table(&[(0, 1), (1, 2), (2, 0)]);
        let point = table(&[(0, 0)]);
        assert!(is_ordinally_isomorphic(&cycle3, &point, CodeMode::ClassLevel).is_yes());
        assert_eq!(
            is_ordinally_isomorphic(&cycle3, &point, CodeMode::StrictCycleLength),
            IsoDecision::No
        );
    }

    #[test]
    fn witness_preserves_order_both_ways() {
        let f = sample_table();
        let g = table(&[(10, 12), (11, 12), (12, 13), (13, 14), (14, 15), (15, 13)]);
        let ta = build_topology(&f);
        let tb = build_topology(&g);
        let IsoDecision::Yes(pairs) = topologies_isomorphic(&ta, &tb, CodeMode::ClassLevel) else {
            panic!("shifted copy must be isomorphic");
        };
        for &(a1, b1) in &pairs {
            for &(a2, b2) in &pairs {
                assert_eq!(
                    ta.is_strict_ancestor(a1, a2),
                    tb.is_strict_ancestor(b1, b2),
                    "witness must preserve the ancestor relation"
                );
            }
        }
    }

    #[test]
    fn domains_of_different_size_can_still_match() {
        // a 2-cycle and a 5-cycle both condense to one class
        let small = table(&[(0, 1), (1, 0)]);
        let big = FiniteFunction::cycle(5).unwrap();
        assert!(is_ordinally_isomorphic(&small, &big, CodeMode::ClassLevel).is_yes());
        assert!(!is_ordinally_isomorphic(&small, &big, CodeMode::StrictCycleLength).is_yes());
    }
}
