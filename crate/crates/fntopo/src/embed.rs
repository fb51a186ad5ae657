//! Order embedding of one induced topology into another.
//!
//! An embedding is an injective map on classes that preserves the
//! strict-ancestor relation in both directions. Deciding it for unordered
//! forests is NP-complete in general, so the search is exact backtracking
//! with per-(subtree, target) memoization and a hard class-count cutoff
//! that fails loudly instead of degrading silently.

use std::collections::HashMap;

use crate::error::Error;
use crate::topology::{ClassId, Topology};

/// Default class-count cutoff for the embedding search. The CLI lets the
/// `FNTOPO_EMBED_LIMIT` environment variable override it.
pub const DEFAULT_EMBED_LIMIT: usize = 200;

/// Outcome of an embedding test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbedDecision {
    /// The witness maps every class of the source topology to a distinct
    /// class of the target, preserving comparability both ways.
    Yes(Vec<(ClassId, ClassId)>),
    No,
}

impl EmbedDecision {
    pub fn is_yes(&self) -> bool {
        matches!(self, EmbedDecision::Yes(_))
    }
}

/// Decides whether `src` order-embeds into `dst` under the default cutoff.
pub fn embeds_into(src: &Topology, dst: &Topology) -> Result<EmbedDecision, Error> {
    embeds_into_with_limit(src, dst, DEFAULT_EMBED_LIMIT)
}

/// Same decision with an explicit class-count cutoff.
pub fn embeds_into_with_limit(
    src: &Topology,
    dst: &Topology,
    limit: usize,
) -> Result<EmbedDecision, Error> {
    let count = src.class_count().max(dst.class_count());
    if count > limit {
        return Err(Error::SizeLimit { count, limit });
    }
    let mut search = EmbedSearch::new(src, dst);
    Ok(match search.solve() {
        Some(pairs) => EmbedDecision::Yes(pairs),
        None => EmbedDecision::No,
    })
}

struct EmbedSearch<'a> {
    src: &'a Topology,
    src_children: Vec<Vec<ClassId>>,
    /// Strict descendants of every target class, ascending.
    dst_descendants: Vec<Vec<ClassId>>,
    /// Symmetric comparability on target classes, diagonal included.
    dst_comparable: Vec<Vec<bool>>,
    /// Can the source subtree at `.0` map its root exactly onto `.1`?
    memo: HashMap<(ClassId, ClassId), bool>,
}

impl<'a> EmbedSearch<'a> {
    fn new(src: &'a Topology, dst: &'a Topology) -> Self {
        let m = dst.class_count();
        let mut descendants = vec![Vec::new(); m];
        let mut comparable = vec![vec![false; m]; m];
        for (c, row) in comparable.iter_mut().enumerate() {
            row[c] = true;
        }
        for class in dst.classes() {
            let c = class.id;
            let mut cur = dst.parent(c);
            while let Some(p) = cur {
                descendants[p].push(c);
                comparable[p][c] = true;
                comparable[c][p] = true;
                cur = dst.parent(p);
            }
        }
        Self {
            src,
            src_children: src.children(),
            dst_descendants: descendants,
            dst_comparable: comparable,
            memo: HashMap::new(),
        }
    }

    fn solve(&mut self) -> Option<Vec<(ClassId, ClassId)>> {
        let roots: Vec<ClassId> = self.src.base_set().to_vec();
        let all_targets: Vec<ClassId> = (0..self.dst_comparable.len()).collect();
        let candidates = self.candidates(&roots, &all_targets);
        let chosen = self.assign(&candidates)?;
        let mut pairs = Vec::with_capacity(self.src.class_count());
        for (&r, &v) in roots.iter().zip(&chosen) {
            self.expand(r, v, &mut pairs);
        }
        pairs.sort_unstable();
        Some(pairs)
    }

    fn candidates(&mut self, sources: &[ClassId], targets: &[ClassId]) -> Vec<Vec<ClassId>> {
        sources
            .iter()
            .map(|&s| {
                targets
                    .iter()
                    .copied()
                    .filter(|&v| self.maps_root_onto(s, v))
                    .collect()
            })
            .collect()
    }

    /// Whether the source subtree rooted at `u` embeds with `u` sent
    /// exactly to `v`.
    fn maps_root_onto(&mut self, u: ClassId, v: ClassId) -> bool {
        if let Some(&known) = self.memo.get(&(u, v)) {
            return known;
        }
        let kids = self.src_children[u].clone();
        let ok = if kids.is_empty() {
            true
        } else {
            let below = self.dst_descendants[v].clone();
            let candidates = self.candidates(&kids, &below);
            self.assign(&candidates).is_some()
        };
        self.memo.insert((u, v), ok);
        ok
    }

    /// Picks one target per source such that all picks are pairwise
    /// incomparable (which also forces them to be distinct). Returns the
    /// picks in source order.
    fn assign(&self, candidates: &[Vec<ClassId>]) -> Option<Vec<ClassId>> {
        let mut order: Vec<usize> = (0..candidates.len()).collect();
        // scarcest source first prunes hardest
        order.sort_by_key(|&i| candidates[i].len());
        let mut chosen: Vec<Option<ClassId>> = vec![None; candidates.len()];
        if self.assign_from(0, &order, candidates, &mut chosen) {
            Some(chosen.into_iter().map(|c| c.expect("assigned")).collect())
        } else {
            None
        }
    }

    fn assign_from(
        &self,
        pos: usize,
        order: &[usize],
        candidates: &[Vec<ClassId>],
        chosen: &mut Vec<Option<ClassId>>,
    ) -> bool {
        let Some(&i) = order.get(pos) else {
            return true;
        };
        'next: for &v in &candidates[i] {
            for w in chosen.iter().flatten() {
                if self.dst_comparable[v][*w] {
                    continue 'next;
                }
            }
            chosen[i] = Some(v);
            if self.assign_from(pos + 1, order, candidates, chosen) {
                return true;
            }
            chosen[i] = None;
        }
        false
    }

    /// Reconstructs a concrete witness under a root placement that the memo
    /// already certified feasible.
    fn expand(&mut self, u: ClassId, v: ClassId, pairs: &mut Vec<(ClassId, ClassId)>) {
        pairs.push((u, v));
        let kids = self.src_children[u].clone();
        if kids.is_empty() {
            return;
        }
        let below = self.dst_descendants[v].clone();
        let candidates = self.candidates(&kids, &below);
        let chosen = self.assign(&candidates).expect("memoized as feasible");
        for (&k, &w) in kids.iter().zip(&chosen) {
            self.expand(k, w, pairs);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::FiniteFunction;
    use crate::topology::build_topology;

    /// Descending chain of `k` classes: k-1 -> k-2 -> ... -> 0 -> 0.
    fn chain(k: u64) -> Topology {
        let f = FiniteFunction::new((0..k).map(|x| (x, x.saturating_sub(1)))).unwrap();
        build_topology(&f)
    }

    fn star(leaves: u64) -> Topology {
        let hub = leaves;
        let f = FiniteFunction::new((0..=leaves).map(|x| (x, hub))).unwrap();
        build_topology(&f)
    }

    #[test]
    fn short_chain_embeds_into_long_chain() {
        let d = embeds_into(&chain(3), &chain(10)).unwrap();
        assert!(d.is_yes());
        assert_eq!(
            embeds_into(&chain(10), &chain(3)).unwrap(),
            EmbedDecision::No
        );
    }

    #[test]
    fn every_topology_embeds_into_itself() {
        let t = star(4);
        let EmbedDecision::Yes(pairs) = embeds_into(&t, &t).unwrap() else {
            panic!("identity embedding must exist");
        };
        assert_eq!(pairs.len(), t.class_count());
    }

    #[test]
    fn star_does_not_embed_into_a_chain() {
        assert_eq!(
            embeds_into(&star(2), &chain(10)).unwrap(),
            EmbedDecision::No
        );
    }

    #[test]
    fn star_embeds_into_wider_star() {
        assert!(embeds_into(&star(2), &star(5)).unwrap().is_yes());
        assert_eq!(embeds_into(&star(5), &star(2)).unwrap(), EmbedDecision::No);
    }

    #[test]
    fn witness_preserves_comparability_both_ways() {
        // two separate chains into a taller forest
        let src_f = FiniteFunction::new([(0, 0), (1, 0), (10, 10), (11, 10), (12, 11)]).unwrap();
        let dst_f =
            FiniteFunction::new([(0, 0), (1, 0), (2, 1), (3, 2), (20, 20), (21, 20), (22, 21)])
                .unwrap();
        let src = build_topology(&src_f);
        let dst = build_topology(&dst_f);
        let EmbedDecision::Yes(pairs) = embeds_into(&src, &dst).unwrap() else {
            panic!("two short chains fit into two taller ones");
        };
        assert_eq!(pairs.len(), src.class_count());
        for &(a1, b1) in &pairs {
            for &(a2, b2) in &pairs {
                assert_eq!(
                    src.is_strict_ancestor(a1, a2),
                    dst.is_strict_ancestor(b1, b2)
                );
            }
        }
    }

    #[test]
    fn cutoff_fails_loudly() {
        let big = chain(300);
        let small = chain(2);
        let err = embeds_into(&small, &big).unwrap_err();
        assert_eq!(
            err,
            Error::SizeLimit {
                count: 300,
                limit: DEFAULT_EMBED_LIMIT
            }
        );
        assert!(embeds_into_with_limit(&small, &big, 400).unwrap().is_yes());
    }
}
