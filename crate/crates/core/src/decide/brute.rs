//! Exhaustive enumeration deciders. These realize the guess-and-verify upper
//! bound directly and serve as the oracle every cleverer procedure is tested
//! against: they try candidate orders in lexicographic sequence and return
//! the first one the checker accepts.

use crate::automaton::Automaton;
use crate::order::{cyclic_preserved, linear_preserved, CyclicOrder, LinearOrder};

use super::{DecideError, Witness};

/// Advances `xs` to its lexicographic successor; false once `xs` is the last
/// permutation.
fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Tries all `n!` rankings in lexicographic order and returns the first
/// preserved one. Refuses automata larger than `limit` states.
pub fn decide_monotonic_bruteforce(
    a: &Automaton,
    limit: usize,
) -> Result<Witness<LinearOrder>, DecideError> {
    let n = a.n_states();
    if n > limit {
        return Err(DecideError::TooManyStates { n_states: n, limit });
    }
    let mut ranking: Vec<usize> = (0..n).collect();
    let mut ranks = vec![0usize; n];
    loop {
        for (rank, &state) in ranking.iter().enumerate() {
            ranks[state] = rank;
        }
        if linear_preserved(a, &ranking, &ranks) {
            let ord = LinearOrder::new(ranking).expect("permutation by construction");
            return Ok(Witness::Yes(ord));
        }
        if !next_permutation(&mut ranking) {
            return Ok(Witness::No);
        }
    }
}

/// Tries all `(n-1)!` cyclic orders (state 0 pinned first, the rest in
/// lexicographic order) and returns the first preserved one. Refuses automata
/// larger than `limit` states.
pub fn decide_oriented_bruteforce(
    a: &Automaton,
    limit: usize,
) -> Result<Witness<CyclicOrder>, DecideError> {
    let n = a.n_states();
    if n > limit {
        return Err(DecideError::TooManyStates { n_states: n, limit });
    }
    let mut cycle: Vec<usize> = (0..n).collect();
    let mut pos = vec![0usize; n];
    let mut scratch = Vec::with_capacity(n);
    loop {
        for (i, &state) in cycle.iter().enumerate() {
            pos[state] = i;
        }
        if cyclic_preserved(a, &cycle, &pos, &mut scratch) {
            let ord = CyclicOrder::new(cycle).expect("permutation by construction");
            return Ok(Witness::Yes(ord));
        }
        // state 0 stays pinned; only the tail permutes
        if !next_permutation(&mut cycle[1..]) {
            return Ok(Witness::No);
        }
    }
}
