//! Explicit endofunctions on finite integer domains.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;

/// A total function from a finite set of non-negative integers to itself.
///
/// The domain is the set of table sources; every image must itself be a
/// domain element, so iteration can never leave the table. Instances are
/// immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteFunction {
    table: BTreeMap<u64, u64>,
}

impl FiniteFunction {
    /// Builds a function from `(source, image)` pairs.
    ///
    /// Rejects an empty table, a repeated source ([`Error::Duplicate`]) and
    /// an image that is not itself a source ([`Error::Closure`]).
    pub fn new(pairs: impl IntoIterator<Item = (u64, u64)>) -> Result<Self, Error> {
        let mut table = BTreeMap::new();
        for (src, dst) in pairs {
            if table.insert(src, dst).is_some() {
                return Err(Error::Duplicate(src));
            }
        }
        if table.is_empty() {
            return Err(Error::Invalid("domain must be non-empty".into()));
        }
        for (&src, &dst) in &table {
            if !table.contains_key(&dst) {
                return Err(Error::Closure { src, dst });
            }
        }
        Ok(Self { table })
    }

    /// The identity function on the given domain.
    pub fn identity(domain: impl IntoIterator<Item = u64>) -> Result<Self, Error> {
        Self::new(domain.into_iter().map(|x| (x, x)))
    }

    /// `x + 1 (mod n)` on `{0, .., n-1}`: a single cycle of length `n`.
    pub fn cycle(n: u64) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::Invalid("cycle length must be positive".into()));
        }
        Self::new((0..n).map(|x| (x, (x + 1) % n)))
    }

    /// Domain elements in ascending order.
    pub fn domain(&self) -> impl Iterator<Item = u64> + '_ {
        self.table.keys().copied()
    }

    /// Number of domain elements.
    pub fn len(&self) -> usize {
        self.table.len()
    }

    /// Always false; the constructor rejects empty tables.
    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.table.contains_key(&x)
    }

    /// `(source, image)` pairs in ascending source order.
    pub fn pairs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.table.iter().map(|(&s, &d)| (s, d))
    }

    /// One application of the function.
    pub fn apply(&self, x: u64) -> Result<u64, Error> {
        self.table.get(&x).copied().ok_or(Error::UnknownElement(x))
    }

    /// `n`-fold application; `iterate(x, 0)` is `x` itself.
    pub fn iterate(&self, x: u64, n: u64) -> Result<u64, Error> {
        let mut cur = x;
        if !self.contains(cur) {
            return Err(Error::UnknownElement(cur));
        }
        for _ in 0..n {
            cur = self.table[&cur];
        }
        Ok(cur)
    }

    /// Minimal number of applications sending `x` to `y`, if any.
    ///
    /// A finite orbit revisits a value within `|domain|` applications, so
    /// walking that many steps decides the question exactly.
    pub fn precedes(&self, x: u64, y: u64) -> Result<Option<u64>, Error> {
        if !self.contains(x) {
            return Err(Error::UnknownElement(x));
        }
        if !self.contains(y) {
            return Err(Error::UnknownElement(y));
        }
        let mut cur = x;
        for n in 0..self.table.len() as u64 {
            if cur == y {
                return Ok(Some(n));
            }
            cur = self.table[&cur];
        }
        Ok(None)
    }

    /// Mutual reachability under iteration, or plain equality.
    pub fn functionally_equal(&self, x: u64, y: u64) -> Result<bool, Error> {
        if x == y {
            // still validate membership
            if !self.contains(x) {
                return Err(Error::UnknownElement(x));
            }
            return Ok(true);
        }
        Ok(self.precedes(x, y)?.is_some() && self.precedes(y, x)?.is_some())
    }
}

impl fmt::Debug for FiniteFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteFunction({} elements)", self.table.len())
    }
}
