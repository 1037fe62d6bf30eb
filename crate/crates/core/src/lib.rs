//! Order-preserving automata: deciders, certificate checkers, and hardness
//! gadgets.
//!
//! An automaton here is a complete deterministic semiautomaton. It is
//! *monotonic* when some linear order of its states is preserved by every
//! letter, *oriented* when some cyclic order is, and it *preserves a
//! nontrivial partial order* when at least one comparable pair survives the
//! action of the alphabet. This crate provides:
//!
//! - the data model and the `.aut`/`.nae` text formats ([`automaton`],
//!   [`nae`]);
//! - certificate checkers for linear, cyclic and partial orders ([`order`]);
//! - deciders with witnesses: linear-time unary algorithms, brute-force
//!   oracles, a propagation-driven complete search, and the polynomial
//!   nontrivial-partial-order finder ([`decide`]);
//! - instance generators for the classic hardness constructions: the
//!   NAE-3SAT clause gadget, the binary-alphabet simulation, and the sink
//!   extension ([`reduce`]).
//!
//! ```
//! use monotonaut::{decide_monotonic, verify_linear_order, Automaton};
//!
//! let a = Automaton::parse("3 1\n1\n2\n2\n").unwrap();
//! let witness = decide_monotonic(&a);
//! let order = witness.certificate().expect("a chain into a sink is monotonic");
//! assert!(verify_linear_order(&a, order).unwrap());
//! ```

pub mod automaton;
pub mod decide;
pub mod nae;
pub mod order;
pub mod reduce;

pub use automaton::{Automaton, AutomatonError, ParseError, StateId};
pub use decide::{
    decide_monotonic, decide_monotonic_backtracking, decide_monotonic_bruteforce,
    decide_oriented, decide_oriented_bruteforce, decide_unary_monotonic, decide_unary_oriented,
    find_nontrivial_partial_order, propagate_closure, Contradiction, DecideError,
    OrientedVerdict, Witness, DEFAULT_CYCLIC_LIMIT, DEFAULT_LINEAR_LIMIT,
};
pub use nae::{nae_bruteforce, Assignment, NaeError, NaeInstance, NAE_BRUTEFORCE_LIMIT};
pub use order::{
    canonical_cyclic, verify_cyclic_order, verify_linear_order, verify_partial_order,
    CyclicOrder, LinearOrder, OrderError, PartialOrderRelation,
};
pub use reduce::{
    add_sink, assignment_to_order, order_to_assignment, reduce_nae_to_automaton,
    reduce_to_binary, BinaryLayout, GadgetLayout, ReduceError,
};
