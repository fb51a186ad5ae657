//! Accumulator form of linear recurrences.
//!
//! A recurrence with memory `B` makes `B` recursive calls per evaluation.
//! Carrying a sliding window of the last `B` values turns it into a single
//! self-call whose index argument plainly descends by one, so the index
//! projection is a chain topology ending in the `B` supplied base values
//! and evaluation takes exactly `max(0, n - B + 1)` window shifts. All
//! arithmetic is exact.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::finite::FiniteFunction;
use crate::topology::{build_topology, Topology};

/// A linear recurrence
/// `f(n) = c + a_1·f(n-1) + ... + a_B·f(n-B)` with supplied values
/// `f(0)..f(B-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSpec {
    constant: BigInt,
    /// `a_1 .. a_B`; the last entry is nonzero so the memory depth is real.
    coefficients: Vec<BigInt>,
    /// `d_0 .. d_{B-1}`.
    base_values: Vec<BigInt>,
}

impl RecurrenceSpec {
    pub fn new(
        constant: BigInt,
        coefficients: Vec<BigInt>,
        base_values: Vec<BigInt>,
    ) -> Result<Self, Error> {
        if coefficients.is_empty() {
            return Err(Error::Invalid("memory must be at least 1".into()));
        }
        if base_values.len() != coefficients.len() {
            return Err(Error::Invalid(format!(
                "{} coefficients need {} base values, got {}",
                coefficients.len(),
                coefficients.len(),
                base_values.len()
            )));
        }
        if coefficients.last().expect("non-empty").is_zero() {
            return Err(Error::Invalid(
                "deepest coefficient must be nonzero; drop it to shrink the memory".into(),
            ));
        }
        Ok(Self {
            constant,
            coefficients,
            base_values,
        })
    }

    /// `f(n) = f(n-1) + f(n-2)` with `f(0) = 0`, `f(1) = 1`.
    pub fn fibonacci() -> Self {
        Self::new(
            BigInt::ZERO,
            vec![BigInt::from(1), BigInt::from(1)],
            vec![BigInt::ZERO, BigInt::from(1)],
        )
        .expect("fibonacci spec is valid")
    }

    /// The memory depth `B`.
    pub fn memory(&self) -> usize {
        self.coefficients.len()
    }

    pub fn constant(&self) -> &BigInt {
        &self.constant
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn base_values(&self) -> &[BigInt] {
        &self.base_values
    }
}

/// Window of the last `B` values together with the index still to reach.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AccumulatorState {
    /// Always exactly `B` entries.
    pub window: Vec<BigInt>,
    pub index: u64,
}

impl AccumulatorState {
    /// The starting state: the supplied base values and the target index.
    pub fn initial(spec: &RecurrenceSpec, n: u64) -> Self {
        Self {
            window: spec.base_values().to_vec(),
            index: n,
        }
    }
}

/// One window shift.
///
/// The oldest entry drops out, everything slides left, and the fresh last
/// entry combines the window against the coefficients with the oldest value
/// paired to the deepest coefficient: `c + a_B·w_0 + ... + a_1·w_{B-1}`.
pub fn accumulator_step(
    spec: &RecurrenceSpec,
    s: &AccumulatorState,
) -> Result<AccumulatorState, Error> {
    let b = spec.memory();
    if s.window.len() != b {
        return Err(Error::Invalid(format!(
            "window of {} entries does not match the memory {b}",
            s.window.len()
        )));
    }
    if (s.index as usize) < b {
        return Err(Error::IndexBelowMemory {
            index: s.index,
            memory: b,
        });
    }
    let mut fresh = spec.constant().clone();
    for (j, w) in s.window.iter().enumerate() {
        fresh += &spec.coefficients()[b - 1 - j] * w;
    }
    let mut window = Vec::with_capacity(b);
    window.extend(s.window[1..].iter().cloned());
    window.push(fresh);
    Ok(AccumulatorState {
        window,
        index: s.index - 1,
    })
}

/// Evaluates `f(n)` by iterating [`accumulator_step`] until the index drops
/// below the memory, then reading the indexed window entry.
///
/// The loop is explicit: the whole point of the accumulator form is
/// constant-depth evaluation, so no call stack grows with `n`.
pub fn eval_accumulator(spec: &RecurrenceSpec, n: u64) -> BigInt {
    eval_accumulator_with_steps(spec, n).0
}

/// Same evaluation, also reporting how many window shifts were performed.
pub fn eval_accumulator_with_steps(spec: &RecurrenceSpec, n: u64) -> (BigInt, u64) {
    let b = spec.memory();
    let mut state = AccumulatorState::initial(spec, n);
    let mut steps = 0u64;
    while state.index as usize >= b {
        state = accumulator_step(spec, &state).expect("index checked by the loop condition");
        steps += 1;
    }
    let value = state.window[state.index as usize].clone();
    (value, steps)
}

/// Reference evaluation straight from the recurrence, memoized bottom-up.
///
/// Kept deliberately independent of the accumulator path so the two can
/// check each other.
pub fn eval_naive(spec: &RecurrenceSpec, n: u64) -> BigInt {
    let b = spec.memory();
    let n = n as usize;
    if n < b {
        return spec.base_values()[n].clone();
    }
    let mut memo: Vec<BigInt> = spec.base_values().to_vec();
    for m in b..=n {
        let mut v = spec.constant().clone();
        for (i, a) in spec.coefficients().iter().enumerate() {
            v += a * &memo[m - 1 - i];
        }
        memo.push(v);
    }
    memo[n].clone()
}

/// Window shifts [`eval_accumulator`] performs for index `n`:
/// `max(0, n - B + 1)`.
pub fn step_count(spec: &RecurrenceSpec, n: u64) -> u64 {
    (n + 1).saturating_sub(spec.memory() as u64)
}

/// The topology of the index argument over `0..=horizon`: indices at or
/// above the memory step down by one, indices below it hold the supplied
/// values and are modeled as fixed points.
pub fn projected_topology(spec: &RecurrenceSpec, horizon: u64) -> Result<Topology, Error> {
    let b = spec.memory() as u64;
    if horizon < b {
        return Err(Error::Invalid(format!(
            "horizon {horizon} must reach the memory {b}"
        )));
    }
    let f = FiniteFunction::new((0..=horizon).map(|i| (i, if i < b { i } else { i - 1 })))
        .expect("index map is closed by construction");
    Ok(build_topology(&f))
}

/// Parses a recurrence description file.
///
/// Lines are `const <int>`, `coeffs <int>...`, `bases <int>...` and
/// optionally `memory <count>`; `#` starts a comment line.
pub fn parse_recurrence_spec(text: &str) -> Result<RecurrenceSpec, Error> {
    let mut memory: Option<usize> = None;
    let mut constant = BigInt::ZERO;
    let mut coefficients: Option<Vec<BigInt>> = None;
    let mut base_values: Option<Vec<BigInt>> = None;

    let parse_int = |tok: &str, line: usize| {
        BigInt::from_str(tok).map_err(|_| Error::Parse {
            line,
            message: format!("expected an integer, got {tok:?}"),
        })
    };
    let parse_list = |toks: std::str::SplitWhitespace<'_>, line: usize| {
        toks.map(|t| parse_int(t, line))
            .collect::<Result<Vec<_>, _>>()
    };

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        let key = toks.next().expect("non-empty line");
        match key {
            "memory" => {
                let tok = toks.next().ok_or(Error::Parse {
                    line,
                    message: "memory needs a count".into(),
                })?;
                memory = Some(tok.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("bad memory count {tok:?}"),
                })?);
            }
            "const" => {
                let tok = toks.next().ok_or(Error::Parse {
                    line,
                    message: "const needs an integer".into(),
                })?;
                constant = parse_int(tok, line)?;
            }
            "coeffs" => coefficients = Some(parse_list(toks, line)?),
            "bases" => base_values = Some(parse_list(toks, line)?),
            other => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown key {other:?}"),
                })
            }
        }
    }

    let coefficients = coefficients.ok_or(Error::Invalid("missing coeffs line".into()))?;
    let base_values = base_values.ok_or(Error::Invalid("missing bases line".into()))?;
    if let Some(m) = memory {
        if m != coefficients.len() {
            return Err(Error::Invalid(format!(
                "memory {m} disagrees with {} coefficients",
                coefficients.len()
            )));
        }
    }
    RecurrenceSpec::new(constant, coefficients, base_values)
}
