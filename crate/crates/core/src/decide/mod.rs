//! Decision procedures with witnesses: linear-time unary algorithms,
//! exhaustive brute-force oracles, a propagation-driven backtracking search
//! for underlying linear orders, and the polynomial nontrivial-partial-order
//! finder.
//!
//! Every yes-answer carries a certificate that passes the matching checker in
//! [`crate::order`].

mod brute;
mod closure;
mod unary;

pub use brute::{decide_monotonic_bruteforce, decide_oriented_bruteforce};
pub use closure::{
    decide_monotonic_backtracking, find_nontrivial_partial_order, propagate_closure,
    Contradiction,
};
pub use unary::{decide_unary_monotonic, decide_unary_oriented};

use thiserror::Error;

use crate::automaton::Automaton;
use crate::order::{CyclicOrder, LinearOrder};

/// Default state cap for the linear-order brute force (10! permutations).
pub const DEFAULT_LINEAR_LIMIT: usize = 10;
/// Default state cap for the cyclic-order brute force (10! canonical cycles).
pub const DEFAULT_CYCLIC_LIMIT: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error("decider requires a unary alphabet, automaton has {n_letters} letters")]
    NotUnary { n_letters: usize },
    #[error("{n_states} states exceeds the brute-force limit of {limit}")]
    TooManyStates { n_states: usize, limit: usize },
}

/// A decision together with its certificate. Yes-witnesses always verify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness<C> {
    Yes(C),
    No,
}

impl<C> Witness<C> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Witness::Yes(_))
    }

    pub fn certificate(&self) -> Option<&C> {
        match self {
            Witness::Yes(c) => Some(c),
            Witness::No => None,
        }
    }

    pub fn into_certificate(self) -> Option<C> {
        match self {
            Witness::Yes(c) => Some(c),
            Witness::No => None,
        }
    }
}

/// Answer of the oriented dispatcher. `Undecided` means the instance was not
/// monotonic and exceeded the cyclic brute-force cap, so neither verdict can
/// be trusted at this scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrientedVerdict {
    Yes(CyclicOrder),
    No,
    Undecided,
}

impl OrientedVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, OrientedVerdict::Yes(_))
    }

    pub fn certificate(&self) -> Option<&CyclicOrder> {
        match self {
            OrientedVerdict::Yes(c) => Some(c),
            _ => None,
        }
    }
}

/// Is the automaton monotonic? Unary automata use the linear-time cycle
/// analysis; everything else runs the complete backtracking search.
pub fn decide_monotonic(a: &Automaton) -> Witness<LinearOrder> {
    if a.n_letters() == 1 {
        decide_unary_monotonic(a).expect("alphabet checked to be unary")
    } else {
        decide_monotonic_backtracking(a)
    }
}

/// Is the automaton oriented? Unary automata use the linear-time cycle-length
/// analysis. Otherwise a monotonicity witness doubles as a cyclic one, and
/// only non-monotonic automata fall back to the cyclic brute force, capped at
/// `cyclic_limit` states.
pub fn decide_oriented(a: &Automaton, cyclic_limit: usize) -> OrientedVerdict {
    if a.n_letters() == 1 {
        return match decide_unary_oriented(a).expect("alphabet checked to be unary") {
            Witness::Yes(cycle) => OrientedVerdict::Yes(cycle),
            Witness::No => OrientedVerdict::No,
        };
    }
    if let Witness::Yes(ord) = decide_monotonic(a) {
        return OrientedVerdict::Yes(ord.as_cycle());
    }
    match decide_oriented_bruteforce(a, cyclic_limit) {
        Ok(Witness::Yes(cycle)) => OrientedVerdict::Yes(cycle),
        Ok(Witness::No) => OrientedVerdict::No,
        Err(_) => OrientedVerdict::Undecided,
    }
}
