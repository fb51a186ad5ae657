//! Shared fixtures and independent oracles for the integration suites.
//!
//! The oracles here deliberately avoid the library's canonical-code and
//! embedding machinery: isomorphism is decided by exhaustive backtracking
//! over class bijections so the fast path has something honest to answer to.

#![allow(dead_code)]

use std::collections::BTreeMap;

use fntopo::{build_topology, FiniteFunction, Topology};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random endofunction on `{0..n-1}`.
pub fn random_table(rng: &mut impl Rng, n: u64) -> FiniteFunction {
    FiniteFunction::new((0..n).map(|x| (x, rng.random_range(0..n))))
        .expect("image range is closed by construction")
}

/// Conjugates `f` by a random injection into a roomier element space:
/// the returned table is `relabel ∘ f ∘ relabel⁻¹`.
pub fn relabel(rng: &mut impl Rng, f: &FiniteFunction) -> FiniteFunction {
    let elems: Vec<u64> = f.domain().collect();
    let mut fresh: Vec<u64> = (0..(elems.len() as u64) * 3).collect();
    fresh.shuffle(rng);
    let map: BTreeMap<u64, u64> = elems.iter().copied().zip(fresh).collect();
    FiniteFunction::new(f.pairs().map(|(s, d)| (map[&s], map[&d])))
        .expect("conjugation preserves closure")
}

/// `x -> x - 1` with a fixed point at 0: a chain of `k` classes.
pub fn descending_chain(k: u64) -> FiniteFunction {
    assert!(k >= 1);
    FiniteFunction::new((0..k).map(|x| (x, x.saturating_sub(1)))).expect("closed")
}

/// `leaves` elements all mapping onto one fixed point.
pub fn star(leaves: u64) -> FiniteFunction {
    FiniteFunction::new((0..=leaves).map(|x| (x, leaves))).expect("closed")
}

/// `matrix[i][k]` is true when class `i` lies strictly above class `k`.
pub fn ancestor_matrix(t: &Topology) -> Vec<Vec<bool>> {
    let n = t.class_count();
    (0..n)
        .map(|i| (0..n).map(|k| t.is_strict_ancestor(i, k)).collect())
        .collect()
}

/// Exhaustive search for an order-preserving bijection between the class
/// posets (both directions preserved). When `match_cycle_lengths` is set,
/// matched cycle classes must also have equal cardinality.
pub fn brute_force_isomorphic(a: &Topology, b: &Topology, match_cycle_lengths: bool) -> bool {
    let n = a.class_count();
    if n != b.class_count() {
        return false;
    }
    let mut search = BijectionSearch {
        a,
        b,
        anc_a: ancestor_matrix(a),
        anc_b: ancestor_matrix(b),
        match_cycle_lengths,
        assigned: vec![None; n],
        used: vec![false; n],
    };
    search.extend_from(0)
}

struct BijectionSearch<'a> {
    a: &'a Topology,
    b: &'a Topology,
    anc_a: Vec<Vec<bool>>,
    anc_b: Vec<Vec<bool>>,
    match_cycle_lengths: bool,
    assigned: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl BijectionSearch<'_> {
    fn extend_from(&mut self, i: usize) -> bool {
        let n = self.assigned.len();
        if i == n {
            return true;
        }
        'candidates: for j in 0..n {
            if self.used[j] {
                continue;
            }
            let ca = &self.a.classes()[i];
            let cb = &self.b.classes()[j];
            if ca.is_cycle != cb.is_cycle {
                continue;
            }
            if self.match_cycle_lengths && ca.is_cycle && ca.members.len() != cb.members.len() {
                continue;
            }
            let pairs: Vec<(usize, usize)> = self
                .assigned
                .iter()
                .enumerate()
                .filter_map(|(i2, j2)| j2.map(|j2| (i2, j2)))
                .collect();
            for (i2, j2) in pairs {
                if self.anc_a[i][i2] != self.anc_b[j][j2] || self.anc_a[i2][i] != self.anc_b[j2][j]
                {
                    continue 'candidates;
                }
            }
            self.assigned[i] = Some(j);
            self.used[j] = true;
            if self.extend_from(i + 1) {
                return true;
            }
            self.assigned[i] = None;
            self.used[j] = false;
        }
        false
    }
}

/// Exhaustive check for an order embedding: backtracks over every injective
/// class map and tests strict-ancestor preservation in both directions.
/// Unlike the isomorphism search, maximality need not be preserved: an
/// inner node of the target is a fine image for a source root.
pub fn brute_force_embeds(src: &Topology, dst: &Topology) -> bool {
    let n = src.class_count();
    let m = dst.class_count();
    if n > m {
        return false;
    }
    let anc_src = ancestor_matrix(src);
    let anc_dst = ancestor_matrix(dst);
    let mut assigned: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; m];

    fn extend(
        i: usize,
        anc_src: &[Vec<bool>],
        anc_dst: &[Vec<bool>],
        assigned: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == assigned.len() {
            return true;
        }
        'candidates: for j in 0..used.len() {
            if used[j] {
                continue;
            }
            for (i2, j2) in assigned
                .iter()
                .enumerate()
                .filter_map(|(i2, j2)| j2.map(|j2| (i2, j2)))
            {
                if anc_src[i][i2] != anc_dst[j][j2] || anc_src[i2][i] != anc_dst[j2][j] {
                    continue 'candidates;
                }
            }
            assigned[i] = Some(j);
            used[j] = true;
            if extend(i + 1, anc_src, anc_dst, assigned, used) {
                return true;
            }
            assigned[i] = None;
            used[j] = false;
        }
        false
    }

    extend(0, &anc_src, &anc_dst, &mut assigned, &mut used)
}

/// Checks that `pairs` is an injective map preserving strict ancestry in
/// both directions.
pub fn check_order_embedding_witness(
    src: &Topology,
    dst: &Topology,
    pairs: &[(usize, usize)],
) -> bool {
    if pairs.len() != src.class_count() {
        return false;
    }
    let mut seen = vec![false; dst.class_count()];
    for &(_, v) in pairs {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    for &(a1, b1) in pairs {
        for &(a2, b2) in pairs {
            if src.is_strict_ancestor(a1, a2) != dst.is_strict_ancestor(b1, b2) {
                return false;
            }
        }
    }
    true
}

/// Convenience: topology of a fresh random table.
pub fn random_topology(rng: &mut impl Rng, n: u64) -> Topology {
    build_topology(&random_table(rng, n))
}
