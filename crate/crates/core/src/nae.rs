//! MONOTONE-NAE-3SAT instances: every literal is a positive variable
//! occurrence and a clause is satisfied when its three variables are not all
//! equal. The brute-force solver here is the oracle the gadget reductions are
//! tested against.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Variable count above which [`nae_bruteforce`] refuses to enumerate.
pub const NAE_BRUTEFORCE_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NaeError {
    #[error("input contains no instance")]
    Empty,
    #[error("line {line}: expected header \"n_vars n_clauses\" with positive counts")]
    BadHeader { line: usize },
    #[error("line {line}: cannot parse '{token}' as a variable index")]
    BadToken { line: usize, token: String },
    #[error("line {line}: expected {expected} clauses, found {found}")]
    WrongClauseCount { line: usize, expected: usize, found: usize },
    #[error("clause {clause} has {found} literals, expected 3")]
    BadClauseWidth { clause: usize, found: usize },
    #[error("clause {clause}: variable {var} out of range 1..={n_vars}")]
    VarOutOfRange { clause: usize, var: usize, n_vars: usize },
    #[error("clause {clause}: variable {var} repeated within the clause")]
    RepeatedVar { clause: usize, var: usize },
    #[error("variable {var} does not occur in any clause")]
    UnusedVar { var: usize },
    #[error("{n_vars} variables exceeds the brute-force limit of {limit}")]
    TooManyVariables { n_vars: usize, limit: usize },
}

/// An instance: `n_vars` variables (1-based) and an ordered list of clauses.
/// The order of variables inside a clause is significant downstream, so it is
/// preserved exactly as given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaeInstance {
    n_vars: usize,
    clauses: Vec<[usize; 3]>,
}

impl NaeInstance {
    /// Validates: variables in range, no variable twice in a clause, every
    /// variable used at least once.
    pub fn new(n_vars: usize, clauses: Vec<[usize; 3]>) -> Result<Self, NaeError> {
        if n_vars == 0 || clauses.is_empty() {
            return Err(NaeError::Empty);
        }
        let mut used = vec![false; n_vars + 1];
        for (idx, clause) in clauses.iter().enumerate() {
            for (pos, &var) in clause.iter().enumerate() {
                if var == 0 || var > n_vars {
                    return Err(NaeError::VarOutOfRange { clause: idx + 1, var, n_vars });
                }
                if clause[..pos].contains(&var) {
                    return Err(NaeError::RepeatedVar { clause: idx + 1, var });
                }
                used[var] = true;
            }
        }
        if let Some(var) = (1..=n_vars).find(|&v| !used[v]) {
            return Err(NaeError::UnusedVar { var });
        }
        Ok(NaeInstance { n_vars, clauses })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn n_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// Not-all-equal check for every clause.
    pub fn is_satisfied_by(&self, assignment: &Assignment) -> bool {
        assert_eq!(assignment.len(), self.n_vars, "assignment length mismatch");
        self.clauses.iter().all(|&[f, g, h]| {
            let (a, b, c) = (assignment.value(f), assignment.value(g), assignment.value(h));
            !(a == b && b == c)
        })
    }

    /// Reads the `.nae` format: header `n_vars n_clauses`, then one clause of
    /// three 1-based variable indices per line. `#` comments and blank lines
    /// are allowed.
    pub fn parse(text: &str) -> Result<Self, NaeError> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses: Vec<[usize; 3]> = Vec::new();
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
                        return Err(NaeError::BadHeader { line });
                    }
                    let n: usize = tokens[0].parse().map_err(|_| NaeError::BadHeader { line })?;
                    let m: usize = tokens[1].parse().map_err(|_| NaeError::BadHeader { line })?;
                    if n == 0 || m == 0 {
                        return Err(NaeError::BadHeader { line });
                    }
                    header = Some((n, m));
                }
                Some((_, m)) => {
                    if clauses.len() == m {
                        return Err(NaeError::WrongClauseCount { line, expected: m, found: m + 1 });
                    }
                    if tokens.len() != 3 {
                        return Err(NaeError::BadClauseWidth {
                            clause: clauses.len() + 1,
                            found: tokens.len(),
                        });
                    }
                    let mut clause = [0usize; 3];
                    for (slot, token) in clause.iter_mut().zip(tokens) {
                        *slot = token.parse().map_err(|_| NaeError::BadToken {
                            line,
                            token: token.to_string(),
                        })?;
                    }
                    clauses.push(clause);
                }
            }
        }
        let (n, m) = header.ok_or(NaeError::Empty)?;
        if clauses.len() != m {
            let last = text.lines().count();
            return Err(NaeError::WrongClauseCount { line: last, expected: m, found: clauses.len() });
        }
        NaeInstance::new(n, clauses)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n_vars, self.clauses.len());
        for [f, g, h] in &self.clauses {
            out.push_str(&format!("{f} {g} {h}\n"));
        }
        out
    }
}

impl fmt::Display for NaeInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for NaeInstance {
    type Err = NaeError;

    fn from_str(s: &str) -> Result<Self, NaeError> {
        NaeInstance::parse(s)
    }
}

/// A truth assignment for an instance's variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value of the 1-based variable `var`.
    pub fn value(&self, var: usize) -> bool {
        self.values[var - 1]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    /// Flips every value. The complement of a satisfying assignment is
    /// satisfying as well, since not-all-equal is self-dual.
    pub fn complement(&self) -> Assignment {
        Assignment { values: self.values.iter().map(|v| !v).collect() }
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.values.iter().map(|&v| if v { "1" } else { "0" }).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Exhaustive 2^n search returning the lexicographically least satisfying
/// assignment (variable 1 is the most significant position), or `None` when
/// the instance is unsatisfiable.
pub fn nae_bruteforce(inst: &NaeInstance) -> Result<Option<Assignment>, NaeError> {
    let n = inst.n_vars();
    if n > NAE_BRUTEFORCE_LIMIT {
        return Err(NaeError::TooManyVariables { n_vars: n, limit: NAE_BRUTEFORCE_LIMIT });
    }
    for bits in 0u64..(1u64 << n) {
        let assignment = Assignment::new((0..n).map(|i| bits >> (n - 1 - i) & 1 == 1).collect());
        if inst.is_satisfied_by(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}
