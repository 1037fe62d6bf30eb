//! Executable hardness gadgets: the NAE-3SAT clause-gadget automaton, the
//! binary-alphabet simulation, and the sink extension that collapses
//! orientedness to monotonicity. Alongside the constructions live the two
//! converters between satisfying assignments and preserved linear orders.

use thiserror::Error;

use crate::automaton::{Automaton, StateId};
use crate::nae::{Assignment, NaeInstance};
use crate::order::{verify_linear_order, LinearOrder, OrderError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("assignment does not satisfy the instance; no order is defined for it")]
    AssignmentNotSatisfying,
    #[error("order is not preserved by the gadget automaton")]
    OrderNotPreserved,
    #[error("binary reduction needs at least 3 letters, got {n_letters}")]
    AlphabetTooSmall { n_letters: usize },
    #[error(transparent)]
    Order(#[from] OrderError),
}

/// State and letter numbering of the clause-gadget automaton for an instance
/// with `n_vars` variables and `n_clauses` clauses.
///
/// For 1-based variable `i` and clause `j`:
/// - variable pair: `p(i) = 2(i-1)`, `q(i) = 2(i-1) + 1`
/// - clause triple: `x(j) = 2n + 3(j-1)`, then `y(j)`, `z(j)`
/// - sink: `2n + 3m`
/// - letters: `a(j) = 3(j-1)`, then `b(j)`, `c(j)`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetLayout {
    pub n_vars: usize,
    pub n_clauses: usize,
}

impl GadgetLayout {
    pub fn for_instance(inst: &NaeInstance) -> Self {
        GadgetLayout { n_vars: inst.n_vars(), n_clauses: inst.n_clauses() }
    }

    pub fn n_states(&self) -> usize {
        2 * self.n_vars + 3 * self.n_clauses + 1
    }

    pub fn n_letters(&self) -> usize {
        3 * self.n_clauses
    }

    pub fn p(&self, var: usize) -> StateId {
        assert!((1..=self.n_vars).contains(&var));
        2 * (var - 1)
    }

    pub fn q(&self, var: usize) -> StateId {
        assert!((1..=self.n_vars).contains(&var));
        2 * (var - 1) + 1
    }

    pub fn x(&self, clause: usize) -> StateId {
        assert!((1..=self.n_clauses).contains(&clause));
        2 * self.n_vars + 3 * (clause - 1)
    }

    pub fn y(&self, clause: usize) -> StateId {
        self.x(clause) + 1
    }

    pub fn z(&self, clause: usize) -> StateId {
        self.x(clause) + 2
    }

    pub fn sink(&self) -> StateId {
        2 * self.n_vars + 3 * self.n_clauses
    }

    pub fn letter_a(&self, clause: usize) -> usize {
        assert!((1..=self.n_clauses).contains(&clause));
        3 * (clause - 1)
    }

    pub fn letter_b(&self, clause: usize) -> usize {
        self.letter_a(clause) + 1
    }

    pub fn letter_c(&self, clause: usize) -> usize {
        self.letter_a(clause) + 2
    }

    /// Human-readable name of a gadget state, e.g. `p_2`, `x_1`, `s`.
    pub fn state_name(&self, state: StateId) -> String {
        let vars = 2 * self.n_vars;
        if state < vars {
            let var = state / 2 + 1;
            if state.is_multiple_of(2) {
                format!("p_{var}")
            } else {
                format!("q_{var}")
            }
        } else if state < self.sink() {
            let offset = state - vars;
            let clause = offset / 3 + 1;
            match offset % 3 {
                0 => format!("x_{clause}"),
                1 => format!("y_{clause}"),
                _ => format!("z_{clause}"),
            }
        } else {
            assert_eq!(state, self.sink());
            "s".to_string()
        }
    }

    /// Human-readable name of a letter, e.g. `a_1`, `c_3`.
    pub fn letter_name(&self, letter: usize) -> String {
        assert!(letter < self.n_letters());
        let clause = letter / 3 + 1;
        match letter % 3 {
            0 => format!("a_{clause}"),
            1 => format!("b_{clause}"),
            _ => format!("c_{clause}"),
        }
    }
}

/// Builds the clause-gadget automaton of an instance.
///
/// Clause `j = (v_f, v_g, v_h)` contributes states `x_j, y_j, z_j` and
/// letters `a_j, b_j, c_j` acting as:
/// - `a_j`: `p_f -> x_j`, `q_f -> y_j`, fixes `p_i, q_i` for `i < f`,
///   sends every other state to the sink;
/// - `b_j`: `p_g -> y_j`, `q_g -> z_j`, fixes `p_i, q_i` for `i < g`,
///   sink otherwise;
/// - `c_j`: `p_h -> z_j`, `q_h -> x_j`, fixes `p_i, q_i` for `i < h`,
///   sink otherwise.
///
/// The automaton is monotonic exactly when the instance is satisfiable.
pub fn reduce_nae_to_automaton(inst: &NaeInstance) -> Automaton {
    let layout = GadgetLayout::for_instance(inst);
    let n_states = layout.n_states();
    let n_letters = layout.n_letters();
    let sink = layout.sink();
    let mut rows = vec![vec![sink; n_letters]; n_states];

    for (j0, &[f, g, h]) in inst.clauses().iter().enumerate() {
        let j = j0 + 1;
        let roles = [
            (layout.letter_a(j), f, layout.x(j), layout.y(j)),
            (layout.letter_b(j), g, layout.y(j), layout.z(j)),
            (layout.letter_c(j), h, layout.z(j), layout.x(j)),
        ];
        for (letter, var, p_image, q_image) in roles {
            for i in 1..var {
                rows[layout.p(i)][letter] = layout.p(i);
                rows[layout.q(i)][letter] = layout.q(i);
            }
            rows[layout.p(var)][letter] = p_image;
            rows[layout.q(var)][letter] = q_image;
        }
    }

    Automaton::from_rows(&rows).expect("gadget table is complete by construction")
}

/// Turns a satisfying assignment into a preserved linear order of the gadget
/// automaton.
///
/// Variable pairs come first, sorted by variable index, each pair internally
/// ordered by its truth value; then each clause triple, arranged by the case
/// analysis the letters enforce; the sink is last.
pub fn assignment_to_order(
    inst: &NaeInstance,
    sigma: &Assignment,
) -> Result<LinearOrder, ReduceError> {
    if sigma.len() != inst.n_vars() || !inst.is_satisfied_by(sigma) {
        return Err(ReduceError::AssignmentNotSatisfying);
    }
    let layout = GadgetLayout::for_instance(inst);
    let mut ranking: Vec<StateId> = Vec::with_capacity(layout.n_states());
    for i in 1..=inst.n_vars() {
        if sigma.value(i) {
            ranking.push(layout.q(i));
            ranking.push(layout.p(i));
        } else {
            ranking.push(layout.p(i));
            ranking.push(layout.q(i));
        }
    }
    for (j0, &[f, g, h]) in inst.clauses().iter().enumerate() {
        let j = j0 + 1;
        let (x, y, z) = (layout.x(j), layout.y(j), layout.z(j));
        // The letters force x<y iff sigma(f)=0, y<z iff sigma(g)=0 and
        // z<x iff sigma(h)=0; each not-all-equal combination admits exactly
        // one arrangement of the triple.
        let triple = match (sigma.value(f), sigma.value(g), sigma.value(h)) {
            (false, false, true) => [x, y, z],
            (false, true, false) => [z, x, y],
            (false, true, true) => [x, z, y],
            (true, true, false) => [z, y, x],
            (true, false, true) => [y, x, z],
            (true, false, false) => [y, z, x],
            _ => unreachable!("assignment was checked to be not-all-equal"),
        };
        ranking.extend_from_slice(&triple);
    }
    ranking.push(layout.sink());
    Ok(LinearOrder::new(ranking).expect("layout enumerates each state once"))
}

/// Extracts a satisfying assignment from a preserved linear order of the
/// gadget automaton: variable `i` is false exactly when `p_i` ranks below
/// `q_i`. Fails if the order is not in fact preserved.
pub fn order_to_assignment(
    inst: &NaeInstance,
    ord: &LinearOrder,
) -> Result<Assignment, ReduceError> {
    let automaton = reduce_nae_to_automaton(inst);
    if !verify_linear_order(&automaton, ord)? {
        return Err(ReduceError::OrderNotPreserved);
    }
    let layout = GadgetLayout::for_instance(inst);
    let ranks = ord.ranks();
    let values = (1..=inst.n_vars())
        .map(|i| ranks[layout.q(i)] < ranks[layout.p(i)])
        .collect();
    Ok(Assignment::new(values))
}

/// State numbering of the binary simulation: layer `i` in `1..=k` holds a
/// copy `q^i_j` of every original state `j in 1..=n` at index
/// `(i-1)*n + (j-1)`; the sink sits at `k*n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinaryLayout {
    pub n_states: usize,
    pub n_letters: usize,
}

impl BinaryLayout {
    pub fn for_automaton(a: &Automaton) -> Self {
        BinaryLayout { n_states: a.n_states(), n_letters: a.n_letters() }
    }

    pub fn total_states(&self) -> usize {
        self.n_letters * self.n_states + 1
    }

    pub fn state(&self, layer: usize, original: usize) -> StateId {
        assert!((1..=self.n_letters).contains(&layer));
        assert!((1..=self.n_states).contains(&original));
        (layer - 1) * self.n_states + (original - 1)
    }

    pub fn sink(&self) -> StateId {
        self.n_letters * self.n_states
    }

    pub fn state_name(&self, state: StateId) -> String {
        if state == self.sink() {
            "s".to_string()
        } else {
            let layer = state / self.n_states + 1;
            let original = state % self.n_states + 1;
            format!("q_{layer}_{original}")
        }
    }
}

/// Reduces an automaton with `k >= 3` letters to a binary one that is
/// monotonic iff the original is.
///
/// Letter 0 shifts every copy to the next layer (the last layer falls into
/// the sink); letter 1 acts inside layer `i` like the `i`-th original letter.
pub fn reduce_to_binary(a: &Automaton) -> Result<Automaton, ReduceError> {
    let k = a.n_letters();
    if k < 3 {
        return Err(ReduceError::AlphabetTooSmall { n_letters: k });
    }
    let n = a.n_states();
    let layout = BinaryLayout::for_automaton(a);
    let sink = layout.sink();
    let mut rows = vec![vec![sink; 2]; layout.total_states()];
    for layer in 1..=k {
        for original in 1..=n {
            let state = layout.state(layer, original);
            rows[state][0] = if layer < k { layout.state(layer + 1, original) } else { sink };
            rows[state][1] = layout.state(layer, a.step(original - 1, layer - 1) + 1);
        }
    }
    rows[sink][0] = sink;
    rows[sink][1] = sink;
    Ok(Automaton::from_rows(&rows).expect("simulation table is complete by construction"))
}

/// Adds a fresh sink state fixed by every letter; original transitions are
/// untouched. The result is oriented iff the original is monotonic.
pub fn add_sink(a: &Automaton) -> Automaton {
    let n = a.n_states();
    let mut rows: Vec<Vec<StateId>> = (0..n).map(|q| a.row(q).to_vec()).collect();
    rows.push(vec![n; a.n_letters()]);
    Automaton::from_rows(&rows).expect("sink extension keeps the table complete")
}
