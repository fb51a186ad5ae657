//! Order analysis of iterated endofunctions.
//!
//! Repeatedly applying a function `f : A -> A` to its own output preorders
//! `A` by reachability. Collapsing mutually reachable elements (the cycles)
//! turns that preorder into a partial order whose Hasse diagram is a forest:
//! every tree is rooted at a cycle class and all other nodes are singletons.
//! The roots are the *base set* (the elements at which recursion bottoms out
//! and where values must be supplied externally), the leaves are the
//! *generator set*, and their intersection is the *fixed-point set*.
//!
//! On top of that structure the crate decides ordinal isomorphism through
//! canonical forest codes, decides order embedding, classifies chain-shaped
//! subjects against the ever-descending and ever-ascending reference maps,
//! extracts distance-to-base ranking functions as termination certificates,
//! and rewrites linear recurrences into single-call accumulator form whose
//! index argument descends along a plain chain.
//!
//! ```
//! use fntopo::finite::FiniteFunction;
//! use fntopo::topology::build_topology;
//!
//! let f = FiniteFunction::new([(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 3)])?;
//! let t = build_topology(&f);
//! assert_eq!(t.base_conditions_required(), [3, 4, 5].into());
//! assert_eq!(t.class_count(), 4); // {0}, {1}, {2} and the cycle {3,4,5}
//! # Ok::<(), fntopo::error::Error>(())
//! ```
//!
//! The `examples/` directory holds one runnable program per capability; the
//! `fntopo` binary drives the same analyses from the command line.

pub mod canonical;
pub mod chains;
pub mod cli;
pub mod dot;
pub mod embed;
pub mod error;
pub mod finite;
pub mod iso;
pub mod recurrence;
pub mod report;
pub mod symbolic;
pub mod table;
pub mod termination;
pub mod topology;

pub use canonical::{canonical_code, CanonicalCode, CodeMode};
pub use chains::{classify_chain, classify_chain_map, ChainClass, ChainKind, Window};
pub use embed::{embeds_into, embeds_into_with_limit, EmbedDecision};
pub use error::Error;
pub use finite::FiniteFunction;
pub use iso::{is_ordinally_isomorphic, topologies_isomorphic, IsoDecision};
pub use recurrence::{
    accumulator_step, eval_accumulator, eval_naive, projected_topology, step_count,
    AccumulatorState, RecurrenceSpec,
};
pub use report::AnalysisReport;
pub use symbolic::{MapFamily, OrbitOutcome, OrbitResult, SymbolicMap};
pub use table::{parse_function_table, render_function_table};
pub use termination::{
    classify_termination, classify_termination_symbolic, extract_ranking, verify_ranking,
    RankCheck, RankMap, TermStatus, TermVerdict,
};
pub use topology::{build_topology, ClassId, EqClass, Topology};
