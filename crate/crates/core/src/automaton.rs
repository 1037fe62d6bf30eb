//! The automaton data model: a complete deterministic semiautomaton given by
//! its transition table, plus the `.aut` text format and a seeded random
//! generator for test instances.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Index of a state in `0..n_states`. Validity is enforced by the
/// [`Automaton`] constructors; operations taking a `StateId` assume it is in
/// range for the automaton at hand.
pub type StateId = usize;

/// A complete deterministic semiautomaton: every state has exactly one
/// outgoing transition per letter. There is no initial state and no set of
/// accepting states; only the action of the letters on the state set matters.
///
/// Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Automaton {
    n_states: usize,
    n_letters: usize,
    // row-major: delta[q * n_letters + a]
    delta: Vec<StateId>,
}

/// Constraint violations when building an automaton programmatically.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("automaton must have at least one state")]
    NoStates,
    #[error("automaton must have at least one letter")]
    NoLetters,
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow { row: usize, expected: usize, found: usize },
    #[error("transition from state {state} under letter {letter} is {value}, out of range for {n_states} states")]
    EntryOutOfRange { state: usize, letter: usize, value: usize, n_states: usize },
}

/// Errors raised while reading the `.aut` text format, each tied to the
/// offending input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input contains no automaton")]
    Empty,
    #[error("line {line}: expected header \"n_states n_letters\" with positive counts")]
    BadHeader { line: usize },
    #[error("line {line}: cannot parse '{token}' as a state index")]
    BadToken { line: usize, token: String },
    #[error("line {line}: entry {value} out of range (automaton has {n_states} states)")]
    EntryOutOfRange { line: usize, value: usize, n_states: usize },
    #[error("line {line}: row has {found} entries, expected {expected}")]
    BadRowWidth { line: usize, expected: usize, found: usize },
    #[error("line {line}: expected {expected} transition rows, found {found}")]
    WrongRowCount { line: usize, expected: usize, found: usize },
}

impl Automaton {
    /// Builds an automaton from one transition row per state; row `q`, column
    /// `a` holds `delta(q, a)`.
    pub fn from_rows(rows: &[Vec<StateId>]) -> Result<Self, AutomatonError> {
        let n_states = rows.len();
        if n_states == 0 {
            return Err(AutomatonError::NoStates);
        }
        let n_letters = rows[0].len();
        if n_letters == 0 {
            return Err(AutomatonError::NoLetters);
        }
        let mut delta = Vec::with_capacity(n_states * n_letters);
        for (state, row) in rows.iter().enumerate() {
            if row.len() != n_letters {
                return Err(AutomatonError::RaggedRow {
                    row: state,
                    expected: n_letters,
                    found: row.len(),
                });
            }
            for (letter, &value) in row.iter().enumerate() {
                if value >= n_states {
                    return Err(AutomatonError::EntryOutOfRange { state, letter, value, n_states });
                }
                delta.push(value);
            }
        }
        Ok(Automaton { n_states, n_letters, delta })
    }

    /// A uniformly random transition table on the given dimensions. The
    /// generator is a fixed ChaCha stream, so equal seeds give equal
    /// automata on every platform.
    pub fn random(n_states: usize, n_letters: usize, seed: u64) -> Self {
        assert!(n_states >= 1 && n_letters >= 1, "dimensions must be positive");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let delta = (0..n_states * n_letters)
            .map(|_| rng.gen_range(0..n_states))
            .collect();
        Automaton { n_states, n_letters, delta }
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn n_letters(&self) -> usize {
        self.n_letters
    }

    /// `delta(q, letter)`.
    ///
    /// Panics if `q` or `letter` is out of range.
    #[inline]
    pub fn step(&self, q: StateId, letter: usize) -> StateId {
        assert!(q < self.n_states, "state {q} out of range");
        assert!(letter < self.n_letters, "letter {letter} out of range");
        self.delta[q * self.n_letters + letter]
    }

    /// Runs a word through the automaton from `q`, folding [`Automaton::step`]
    /// left to right. The empty word returns `q` unchanged.
    pub fn run(&self, q: StateId, word: &[usize]) -> StateId {
        word.iter().fold(q, |state, &letter| self.step(state, letter))
    }

    /// The transition row of one state.
    pub fn row(&self, q: StateId) -> &[StateId] {
        &self.delta[q * self.n_letters..(q + 1) * self.n_letters]
    }

    /// Reads the `.aut` format: a header line `n_states n_letters` followed by
    /// one whitespace-separated row per state. `#` starts a comment, blank
    /// lines are skipped.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut rows: Vec<Vec<StateId>> = Vec::new();
        let mut header: Option<(usize, usize)> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            match header {
                None => {
                    if tokens.len() != 2 {
                        return Err(ParseError::BadHeader { line });
                    }
                    let n: usize = tokens[0].parse().map_err(|_| ParseError::BadHeader { line })?;
                    let k: usize = tokens[1].parse().map_err(|_| ParseError::BadHeader { line })?;
                    if n == 0 || k == 0 {
                        return Err(ParseError::BadHeader { line });
                    }
                    header = Some((n, k));
                }
                Some((n, k)) => {
                    if rows.len() == n {
                        return Err(ParseError::WrongRowCount { line, expected: n, found: n + 1 });
                    }
                    if tokens.len() != k {
                        return Err(ParseError::BadRowWidth { line, expected: k, found: tokens.len() });
                    }
                    let mut row = Vec::with_capacity(k);
                    for token in tokens {
                        let value: usize = token.parse().map_err(|_| ParseError::BadToken {
                            line,
                            token: token.to_string(),
                        })?;
                        if value >= n {
                            return Err(ParseError::EntryOutOfRange { line, value, n_states: n });
                        }
                        row.push(value);
                    }
                    rows.push(row);
                }
            }
        }
        let (n, k) = header.ok_or(ParseError::Empty)?;
        if rows.len() != n {
            let last = text.lines().count();
            return Err(ParseError::WrongRowCount { line: last, expected: n, found: rows.len() });
        }
        Ok(Automaton {
            n_states: n,
            n_letters: k,
            delta: rows.into_iter().flatten().collect(),
        })
    }

    /// Canonical `.aut` text; parsing it back yields an identical automaton.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n_states, self.n_letters);
        for q in 0..self.n_states {
            let row: Vec<String> = self.row(q).iter().map(|s| s.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Automaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Automaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automaton({}x{}: {:?})", self.n_states, self.n_letters, self.delta)
    }
}

impl FromStr for Automaton {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Automaton::parse(s)
    }
}
