//! Instance builders shared by the benchmark targets: structured automata
//! with known verdicts, so each benchmark exercises the code path it names.

use monotonaut::{Automaton, NaeInstance};

/// Unary automaton whose letter walks every state down a chain into a fixed
/// point; monotonic, with the whole state set in one tree.
pub fn chain_unary(n: usize) -> Automaton {
    let rows: Vec<Vec<usize>> = (0..n).map(|q| vec![q.saturating_sub(1)]).collect();
    Automaton::from_rows(&rows).expect("chain table is complete")
}

/// Unary automaton whose letter is one big rotation; oriented but not
/// monotonic for `n >= 2`.
pub fn ring_unary(n: usize) -> Automaton {
    let rows: Vec<Vec<usize>> = (0..n).map(|q| vec![(q + 1) % n]).collect();
    Automaton::from_rows(&rows).expect("ring table is complete")
}

/// A monotonic multi-letter automaton: every letter moves states toward the
/// top of the natural order without reordering them.
pub fn staircase(n: usize, k: usize) -> Automaton {
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|q| (0..k).map(|letter| (q + letter + 1).min(n - 1)).collect())
        .collect();
    Automaton::from_rows(&rows).expect("staircase table is complete")
}

/// A satisfiable clause-gadget instance of moderate size; with five clauses
/// over six variables no instance is unsatisfiable, so the backtracking
/// search exercises its descent path.
pub fn satisfiable_instance() -> NaeInstance {
    NaeInstance::new(6, vec![[1, 2, 3], [2, 3, 4], [3, 4, 5], [4, 5, 6], [1, 5, 6]])
        .expect("instance is valid")
}
