//! Certificate checkers: given an automaton and a proposed linear, cyclic or
//! partial order, decide whether every letter preserves it. These are the
//! ground truth that every decider's witness is checked against.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::automaton::{Automaton, StateId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("order covers {found} states but the automaton has {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("sequence is not a permutation of the state set")]
    NotAPermutation,
    #[error("relation contains the reflexive pair ({state}, {state})")]
    ReflexivePair { state: StateId },
    #[error("relation is not antisymmetric: it contains a cycle through state {state}")]
    CycleInRelation { state: StateId },
    #[error("cannot parse '{token}' as a state index")]
    BadToken { token: String },
}

fn check_permutation(seq: &[StateId]) -> Result<(), OrderError> {
    let n = seq.len();
    let mut seen = vec![false; n];
    for &s in seq {
        if s >= n || seen[s] {
            return Err(OrderError::NotAPermutation);
        }
        seen[s] = true;
    }
    Ok(())
}

fn parse_state_sequence(text: &str) -> Result<Vec<StateId>, OrderError> {
    text.split_whitespace()
        .map(|token| {
            token
                .parse::<usize>()
                .map_err(|_| OrderError::BadToken { token: token.to_string() })
        })
        .collect()
}

/// A total order on the state set, stored as the list of states from least to
/// greatest: `ranking[r]` is the state of rank `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOrder {
    ranking: Vec<StateId>,
}

impl LinearOrder {
    pub fn new(ranking: Vec<StateId>) -> Result<Self, OrderError> {
        check_permutation(&ranking)?;
        Ok(LinearOrder { ranking })
    }

    /// The natural order `0 < 1 < ... < n-1`.
    pub fn identity(n: usize) -> Self {
        LinearOrder { ranking: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.ranking.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranking.is_empty()
    }

    /// States from least to greatest.
    pub fn ranking(&self) -> &[StateId] {
        &self.ranking
    }

    /// Inverse table: `ranks()[q]` is the rank of state `q`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut ranks = vec![0usize; self.ranking.len()];
        for (rank, &state) in self.ranking.iter().enumerate() {
            ranks[state] = rank;
        }
        ranks
    }

    /// Reads the same permutation as a cyclic arrangement. A preserved linear
    /// order is always preserved as a cyclic order, so this converts a
    /// monotonicity witness into an orientedness witness.
    pub fn as_cycle(&self) -> CyclicOrder {
        CyclicOrder { cycle: self.ranking.clone() }
    }

    pub fn parse(text: &str) -> Result<Self, OrderError> {
        LinearOrder::new(parse_state_sequence(text)?)
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ranking.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for LinearOrder {
    type Err = OrderError;

    fn from_str(s: &str) -> Result<Self, OrderError> {
        LinearOrder::parse(s)
    }
}

/// A circular arrangement of all states. Two cyclic orders are equal when one
/// is a rotation of the other; the canonical representative starts at state 0.
#[derive(Debug, Clone, Eq)]
pub struct CyclicOrder {
    cycle: Vec<StateId>,
}

impl CyclicOrder {
    pub fn new(cycle: Vec<StateId>) -> Result<Self, OrderError> {
        check_permutation(&cycle)?;
        Ok(CyclicOrder { cycle })
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn cycle(&self) -> &[StateId] {
        &self.cycle
    }

    /// Inverse table: `positions()[q]` is the position of state `q` on the
    /// circle.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0usize; self.cycle.len()];
        for (i, &state) in self.cycle.iter().enumerate() {
            pos[state] = i;
        }
        pos
    }

    /// The rotation that puts state 0 first. Verification verdicts are
    /// invariant under this transformation.
    pub fn canonical(&self) -> CyclicOrder {
        let start = self.cycle.iter().position(|&s| s == 0).expect("permutation contains 0");
        let mut cycle = Vec::with_capacity(self.cycle.len());
        cycle.extend_from_slice(&self.cycle[start..]);
        cycle.extend_from_slice(&self.cycle[..start]);
        CyclicOrder { cycle }
    }

    pub fn parse(text: &str) -> Result<Self, OrderError> {
        CyclicOrder::new(parse_state_sequence(text)?)
    }
}

/// Canonical-rotation form of a cyclic order; kept as a free function so the
/// operation has a name of its own next to the verifiers.
pub fn canonical_cyclic(ord: &CyclicOrder) -> CyclicOrder {
    ord.canonical()
}

impl PartialEq for CyclicOrder {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.canonical().cycle == other.canonical().cycle
    }
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cycle.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for CyclicOrder {
    type Err = OrderError;

    fn from_str(s: &str) -> Result<Self, OrderError> {
        CyclicOrder::parse(s)
    }
}

/// A strict partial order on the state set, stored transitively closed as an
/// n-by-n membership matrix: `(p, q)` present means `p < q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOrderRelation {
    n: usize,
    less: Vec<bool>,
}

impl PartialOrderRelation {
    /// The empty relation (no comparable pairs).
    pub fn empty(n: usize) -> Self {
        PartialOrderRelation { n, less: vec![false; n * n] }
    }

    /// Builds the transitive closure of the given edges. Fails if the closure
    /// would be reflexive or break antisymmetry (i.e. the edges contain a
    /// cycle).
    pub fn from_edges(n: usize, edges: &[(StateId, StateId)]) -> Result<Self, OrderError> {
        let mut less = vec![false; n * n];
        for &(p, q) in edges {
            if p >= n || q >= n {
                return Err(OrderError::DimensionMismatch {
                    expected: n,
                    found: p.max(q) + 1,
                });
            }
            if p == q {
                return Err(OrderError::ReflexivePair { state: p });
            }
            less[p * n + q] = true;
        }
        // Warshall closure.
        for mid in 0..n {
            for p in 0..n {
                if less[p * n + mid] {
                    for q in 0..n {
                        if less[mid * n + q] {
                            less[p * n + q] = true;
                        }
                    }
                }
            }
        }
        for p in 0..n {
            if less[p * n + p] {
                return Err(OrderError::CycleInRelation { state: p });
            }
        }
        Ok(PartialOrderRelation { n, less })
    }

    pub(crate) fn from_closed_matrix(n: usize, less: Vec<bool>) -> Self {
        debug_assert_eq!(less.len(), n * n);
        PartialOrderRelation { n, less }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Is `p < q`?
    pub fn contains(&self, p: StateId, q: StateId) -> bool {
        self.less[p * self.n + q]
    }

    /// All pairs `(p, q)` with `p < q`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(StateId, StateId)> {
        let mut out = Vec::new();
        for p in 0..self.n {
            for q in 0..self.n {
                if self.less[p * self.n + q] {
                    out.push((p, q));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.less.iter().filter(|&&b| b).count()
    }

    /// Nontrivial means at least one comparable pair.
    pub fn is_trivial(&self) -> bool {
        self.less.iter().all(|&b| !b)
    }

    /// True when every pair of distinct states is comparable.
    pub fn is_total(&self) -> bool {
        for p in 0..self.n {
            for q in (p + 1)..self.n {
                if !self.contains(p, q) && !self.contains(q, p) {
                    return false;
                }
            }
        }
        true
    }

    /// For a total relation, the induced ranking (state with no smaller
    /// elements first). Returns `None` if the relation is not total.
    pub fn to_linear(&self) -> Option<LinearOrder> {
        if !self.is_total() {
            return None;
        }
        let mut ranking = vec![0; self.n];
        for q in 0..self.n {
            let rank = (0..self.n).filter(|&p| self.contains(p, q)).count();
            ranking[rank] = q;
        }
        Some(LinearOrder { ranking })
    }
}

/// Core of the linear check, shared with the brute-force enumerator so both
/// apply the same rule. `ranks` must be the inverse of `ranking`.
pub(crate) fn linear_preserved(a: &Automaton, ranking: &[StateId], ranks: &[usize]) -> bool {
    for letter in 0..a.n_letters() {
        for window in ranking.windows(2) {
            let lo = a.step(window[0], letter);
            let hi = a.step(window[1], letter);
            if ranks[lo] > ranks[hi] {
                return false;
            }
        }
    }
    true
}

/// Does every letter preserve the given total order? Checking rank-adjacent
/// state pairs suffices: violations between distant states always show up on
/// some adjacent pair by transitivity. Runs in O(|Sigma| * |Q|).
pub fn verify_linear_order(a: &Automaton, ord: &LinearOrder) -> Result<bool, OrderError> {
    if ord.len() != a.n_states() {
        return Err(OrderError::DimensionMismatch { expected: a.n_states(), found: ord.len() });
    }
    Ok(linear_preserved(a, ord.ranking(), &ord.ranks()))
}

/// Does every letter preserve the given cyclic order?
///
/// For a letter, walk the circle and record the position of each image, then
/// drop cyclically adjacent duplicates. The image sequence follows some
/// rotation of the circle exactly when the remaining circular position
/// sequence has at most one strict descent: a second descent either breaks
/// the rotation or betrays a repeated non-adjacent value.
pub fn verify_cyclic_order(a: &Automaton, ord: &CyclicOrder) -> Result<bool, OrderError> {
    if ord.len() != a.n_states() {
        return Err(OrderError::DimensionMismatch { expected: a.n_states(), found: ord.len() });
    }
    let mut scratch = Vec::with_capacity(ord.len());
    Ok(cyclic_preserved(a, ord.cycle(), &ord.positions(), &mut scratch))
}

/// Core of the cyclic check, shared with the brute-force enumerator. `pos`
/// must be the inverse of `cycle`; `scratch` is reused between calls.
pub(crate) fn cyclic_preserved(
    a: &Automaton,
    cycle: &[StateId],
    pos: &[usize],
    scratch: &mut Vec<usize>,
) -> bool {
    for letter in 0..a.n_letters() {
        scratch.clear();
        for &q in cycle {
            let p = pos[a.step(q, letter)];
            if scratch.last() != Some(&p) {
                scratch.push(p);
            }
        }
        // the last entry is cyclically adjacent to the first
        while scratch.len() > 1 && scratch.first() == scratch.last() {
            scratch.pop();
        }
        let len = scratch.len();
        let descents = (0..len)
            .filter(|&i| scratch[i] > scratch[(i + 1) % len])
            .count();
        if descents > 1 {
            return false;
        }
    }
    true
}

/// Does every letter preserve the given partial order? For each comparable
/// pair the images must coincide or be comparable the same way.
pub fn verify_partial_order(a: &Automaton, rel: &PartialOrderRelation) -> Result<bool, OrderError> {
    if rel.n() != a.n_states() {
        return Err(OrderError::DimensionMismatch { expected: a.n_states(), found: rel.n() });
    }
    for p in 0..rel.n() {
        for q in 0..rel.n() {
            if !rel.contains(p, q) {
                continue;
            }
            for letter in 0..a.n_letters() {
                let (u, v) = (a.step(p, letter), a.step(q, letter));
                if u != v && !rel.contains(u, v) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
