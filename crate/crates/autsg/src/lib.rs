//! Finite semigroups, synchronous transducers and the semigroups their
//! states generate.
//!
//! The library has three layers:
//!
//! * [`semigroup`], [`green`] and [`iso`] handle finite semigroups given by
//!   their multiplication table: structural predicates (bands,
//!   aperiodicity, identities), Green's relations, the left-regular
//!   representation, opposites, products, and a deterministic backtracking
//!   isomorphism search.
//! * [`mealy`] and [`canon`] handle synchronous (Mealy) transducers: the
//!   action of words of states on symbol sequences, decidable word
//!   equality by pair bisimulation, canonical minimized keys for word
//!   actions, and budgeted enumeration of the generated semigroup.
//! * [`cayley`] ties the two together: it builds the Cayley automaton of a
//!   semigroup, enumerates the semigroup it generates along with the dual
//!   obtained by acting from the right, and classifies semigroups by
//!   whether the canonical map `s ↦ s̄` is an isomorphism.
//!
//! [`constructions`] provides the standard families used by the test
//! corpus, [`tables`] the plain-text table format, and [`dot`] /
//! [`eggbox`] the renderers.
//!
//! # Conventions
//!
//! The table row index is the left factor: `table[i][j] = i·j`. A word of
//! states is stored in application order (`stages[0]` reads the input
//! first), while the algebraic product `u·v` applies `v` first; helper
//! constructors convert between the two. All values are immutable after
//! construction and every operation is a pure function of its inputs.
//!
//! ```
//! use autsg::cayley::{is_self_automaton, sigma};
//! use autsg::canon::Budgets;
//! use autsg::constructions::left_zero;
//!
//! let lz = left_zero(3).unwrap();
//! let report = is_self_automaton(&lz);
//! assert!(report.self_automaton);
//! let enumeration = sigma(&lz, &Budgets::default(), false);
//! assert_eq!(enumeration.finite().unwrap().semigroup.size(), 3);
//! ```

pub mod canon;
pub mod cayley;
pub mod constructions;
pub mod dot;
pub mod eggbox;
pub mod green;
pub mod iso;
pub mod mealy;
pub mod semigroup;
pub mod tables;

pub use canon::{ActionKey, Budgets, Enumeration, Exhausted};
pub use cayley::{ClassificationReport, SigmaResult};
pub use green::GreenStructure;
pub use iso::{IsoKind, IsoWitness};
pub use mealy::{CompositeState, Equivalence, MealyAutomaton, MealyError};
pub use semigroup::{FiniteSemigroup, ValidationError};
