//! Condensation of a finite endofunction into its induced order.
//!
//! Iterating `f : A -> A` preorders `A` by reachability. Collapsing mutually
//! reachable elements (the cycles) yields a partial order on the classes
//! whose Hasse diagram is a forest: each tree is rooted at a cycle class and
//! every other node is a singleton. The roots form the base set (where
//! recursion bottoms out), the leaves form the generator set, and their
//! intersection is the fixed-point set.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::finite::FiniteFunction;

/// Dense index of an equivalence class within a [`Topology`].
pub type ClassId = usize;

/// One class of mutually reachable elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqClass {
    pub id: ClassId,
    /// Members in ascending order; never empty.
    pub members: Vec<u64>,
    /// True when `f` restricted to the members is a cyclic permutation.
    /// Every class with more than one member is a cycle.
    pub is_cycle: bool,
}

impl EqClass {
    /// Smallest member; classes are numbered by this key.
    pub fn min_member(&self) -> u64 {
        self.members[0]
    }

    /// Renders the members as `{a,b,c}`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.members.iter().map(|m| m.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// The induced order of a finite endofunction: equivalence classes, the
/// Hasse forest over them, and the base / generator / fixed-point sets.
///
/// Immutable after construction and freely shareable across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    classes: Vec<EqClass>,
    /// The unique upper cover of each class, absent exactly on the maximal
    /// (base) classes. One parent per class suffices because `f` is a
    /// function.
    parent: Vec<Option<ClassId>>,
    base: Vec<ClassId>,
    generators: Vec<ClassId>,
    fixed_points: Vec<ClassId>,
    class_index: BTreeMap<u64, ClassId>,
}

/// Builds the induced order of `f`.
///
/// Classes are numbered by smallest member, so equal functions always
/// produce identical topologies.
pub fn build_topology(f: &FiniteFunction) -> Topology {
    let elements: Vec<u64> = f.domain().collect();
    let n = elements.len();
    let index_of: BTreeMap<u64, usize> =
        elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let image: Vec<usize> = elements
        .iter()
        .map(|&e| index_of[&f.apply(e).expect("domain element")])
        .collect();

    // Mark cycle membership in one pass. Out-degree is one, so walking from
    // an unvisited element either closes a fresh cycle on the current path
    // or runs into territory already finished.
    const UNVISITED: u8 = 0;
    const IN_PROGRESS: u8 = 1;
    const FINISHED: u8 = 2;
    let mut state = vec![UNVISITED; n];
    let mut path_pos = vec![0usize; n];
    let mut on_cycle = vec![false; n];
    for start in 0..n {
        if state[start] != UNVISITED {
            continue;
        }
        let mut path = Vec::new();
        let mut cur = start;
        while state[cur] == UNVISITED {
            state[cur] = IN_PROGRESS;
            path_pos[cur] = path.len();
            path.push(cur);
            cur = image[cur];
        }
        if state[cur] == IN_PROGRESS {
            // `cur` is on the current path: everything from it onward cycles.
            for &e in &path[path_pos[cur]..] {
                on_cycle[e] = true;
            }
        }
        for &e in &path {
            state[e] = FINISHED;
        }
    }

    // Group cycle elements into classes; everything else is a singleton.
    let mut raw: Vec<(Vec<usize>, bool)> = Vec::new();
    let mut seen = vec![false; n];
    for i in 0..n {
        if on_cycle[i] && !seen[i] {
            let mut members = Vec::new();
            let mut cur = i;
            loop {
                members.push(cur);
                seen[cur] = true;
                cur = image[cur];
                if cur == i {
                    break;
                }
            }
            members.sort_unstable();
            raw.push((members, true));
        }
    }
    for (i, _) in on_cycle.iter().enumerate().filter(|(_, &c)| !c) {
        raw.push((vec![i], false));
    }
    raw.sort_by_key(|(members, _)| members[0]);

    let mut class_of_elem = vec![0usize; n];
    let classes: Vec<EqClass> = raw
        .into_iter()
        .enumerate()
        .map(|(id, (member_idx, is_cycle))| {
            for &i in &member_idx {
                class_of_elem[i] = id;
            }
            EqClass {
                id,
                members: member_idx.iter().map(|&i| elements[i]).collect(),
                is_cycle,
            }
        })
        .collect();

    let parent: Vec<Option<ClassId>> = classes
        .iter()
        .map(|c| {
            if c.is_cycle {
                None
            } else {
                let i = index_of[&c.members[0]];
                Some(class_of_elem[image[i]])
            }
        })
        .collect();

    let mut has_child = vec![false; classes.len()];
    for p in parent.iter().flatten() {
        has_child[*p] = true;
    }

    let base: Vec<ClassId> = (0..classes.len())
        .filter(|&c| parent[c].is_none())
        .collect();
    let generators: Vec<ClassId> = (0..classes.len()).filter(|&c| !has_child[c]).collect();
    let fixed_points: Vec<ClassId> = base
        .iter()
        .copied()
        .filter(|c| generators.contains(c))
        .collect();

    let class_index = classes
        .iter()
        .flat_map(|c| c.members.iter().map(move |&m| (m, c.id)))
        .collect();

    Topology {
        classes,
        parent,
        base,
        generators,
        fixed_points,
        class_index,
    }
}

impl Topology {
    pub fn classes(&self) -> &[EqClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// The class containing `x`, if `x` was in the analyzed domain.
    pub fn class_of(&self, x: u64) -> Option<ClassId> {
        self.class_index.get(&x).copied()
    }

    /// The unique upper cover in the Hasse forest; `None` on base classes.
    pub fn parent(&self, c: ClassId) -> Option<ClassId> {
        self.parent[c]
    }

    /// Maximal classes: the cycle classes, where recursion bottoms out.
    pub fn base_set(&self) -> &[ClassId] {
        &self.base
    }

    /// Minimal classes: inputs from which every other value is reached.
    pub fn generator_set(&self) -> &[ClassId] {
        &self.generators
    }

    /// Base intersected with generators. Singleton members satisfy
    /// `f(x) = x`.
    pub fn fixed_point_set(&self) -> &[ClassId] {
        &self.fixed_points
    }

    /// Lower covers of every class, recomputed from the parent map.
    pub fn children(&self) -> Vec<Vec<ClassId>> {
        let mut kids = vec![Vec::new(); self.classes.len()];
        for (c, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                kids[*p].push(c);
            }
        }
        kids
    }

    /// Whether `upper` lies strictly above `lower` on a parent chain.
    pub fn is_strict_ancestor(&self, upper: ClassId, lower: ClassId) -> bool {
        let mut cur = self.parent[lower];
        while let Some(c) = cur {
            if c == upper {
                return true;
            }
            cur = self.parent[c];
        }
        false
    }

    pub fn is_base_class(&self, c: ClassId) -> bool {
        self.parent[c].is_none()
    }

    /// Whether `x` sits in a base (cycle) class.
    pub fn is_base_element(&self, x: u64) -> bool {
        self.class_of(x).is_some_and(|c| self.is_base_class(c))
    }

    /// For each element, the values visited until the first member of a
    /// base class, inclusive.
    ///
    /// Panics if `f` is not the function this topology was built from.
    pub fn element_rank_paths(&self, f: &FiniteFunction) -> BTreeMap<u64, Vec<u64>> {
        let mut paths = BTreeMap::new();
        for x in f.domain() {
            assert!(
                self.class_of(x).is_some(),
                "topology was not built from this function"
            );
            let mut path = vec![x];
            let mut cur = x;
            while !self.is_base_element(cur) {
                // a genuine orbit hits its cycle within |domain| steps
                assert!(
                    path.len() <= f.len(),
                    "topology was not built from this function"
                );
                cur = f.apply(cur).expect("closed table");
                path.push(cur);
            }
            paths.insert(x, path);
        }
        paths
    }

    /// The elements at which a value must be supplied externally for
    /// recursion to bottom out: the union of all base-class members.
    pub fn base_conditions_required(&self) -> BTreeSet<u64> {
        self.base
            .iter()
            .flat_map(|&c| self.classes[c].members.iter().copied())
            .collect()
    }
}

/// Validation used by tests and the validating constructor path: checks the
/// structural laws a topology must satisfy against the original function.
pub fn check_topology(t: &Topology, f: &FiniteFunction) -> Result<(), Error> {
    let mut covered = BTreeSet::new();
    for class in t.classes() {
        for &m in &class.members {
            if !covered.insert(m) {
                return Err(Error::Invalid(format!("element {m} appears twice")));
            }
        }
        if class.members.len() > 1 && !class.is_cycle {
            return Err(Error::Invalid(format!(
                "non-cycle class {} has several members",
                class.label()
            )));
        }
        if class.is_cycle {
            // f must act as a cyclic permutation on the members
            let members: BTreeSet<u64> = class.members.iter().copied().collect();
            let mut cur = class.members[0];
            for _ in 0..class.members.len() {
                cur = f.apply(cur)?;
                if !members.contains(&cur) {
                    return Err(Error::Invalid(format!(
                        "class {} is not closed under f",
                        class.label()
                    )));
                }
            }
            if cur != class.members[0] {
                return Err(Error::Invalid(format!(
                    "class {} does not close into a cycle",
                    class.label()
                )));
            }
        }
        if t.is_base_class(class.id) != class.is_cycle {
            return Err(Error::Invalid(format!(
                "class {} breaks the cycle/base coincidence",
                class.label()
            )));
        }
    }
    let domain: BTreeSet<u64> = f.domain().collect();
    if covered != domain {
        return Err(Error::Invalid("classes do not cover the domain".into()));
    }
    // parent chains must reach a base class in fewer than |classes| hops
    for c in 0..t.class_count() {
        let mut cur = c;
        let mut hops = 0;
        while let Some(p) = t.parent(cur) {
            cur = p;
            hops += 1;
            if hops >= t.class_count() {
                return Err(Error::Invalid("parent relation contains a loop".into()));
            }
        }
    }
    Ok(())
}
