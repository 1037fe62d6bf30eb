//! Linear-time deciders for unary automata. The single letter's transition
//! function is a functional graph: each connected component is a cycle with
//! trees hanging off it. Monotonicity requires every cycle to be a fixed
//! point; orientedness requires all cycles to share one length.

use crate::automaton::{Automaton, StateId};
use crate::order::{CyclicOrder, LinearOrder};

use super::{DecideError, Witness};

/// Cycle/tree decomposition of a unary transition function.
struct FunctionalGraph {
    on_cycle: Vec<bool>,
    /// Each cycle listed from its least state, following the letter's action;
    /// cycles sorted by that least state.
    cycles: Vec<Vec<StateId>>,
    /// preimages[p] = all q with f(q) = p, ascending.
    preimages: Vec<Vec<StateId>>,
}

impl FunctionalGraph {
    fn analyze(a: &Automaton) -> Self {
        let n = a.n_states();
        let f: Vec<StateId> = (0..n).map(|q| a.step(q, 0)).collect();

        let mut preimages = vec![Vec::new(); n];
        for q in 0..n {
            preimages[f[q]].push(q);
        }

        // peel tree states: repeatedly remove states nothing maps to
        let mut indegree: Vec<usize> = preimages.iter().map(Vec::len).collect();
        let mut stack: Vec<StateId> = (0..n).filter(|&q| indegree[q] == 0).collect();
        let mut on_cycle = vec![true; n];
        while let Some(q) = stack.pop() {
            on_cycle[q] = false;
            let target = f[q];
            indegree[target] -= 1;
            if indegree[target] == 0 {
                stack.push(target);
            }
        }

        let mut cycles = Vec::new();
        let mut seen = vec![false; n];
        for start in 0..n {
            if !on_cycle[start] || seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut q = start;
            loop {
                seen[q] = true;
                cycle.push(q);
                q = f[q];
                if q == start {
                    break;
                }
            }
            cycles.push(cycle);
        }

        FunctionalGraph { on_cycle, cycles, preimages }
    }
}

fn require_unary(a: &Automaton) -> Result<(), DecideError> {
    if a.n_letters() != 1 {
        return Err(DecideError::NotUnary { n_letters: a.n_letters() });
    }
    Ok(())
}

/// A unary automaton is monotonic iff the letter has no cycle of length two
/// or more. The witness order puts each component's states in reverse
/// breadth-first visit order from its fixed point, component blocks sorted by
/// fixed point; parents are then never ordered against their children's rank.
/// Runs in O(|Q|).
pub fn decide_unary_monotonic(a: &Automaton) -> Result<Witness<LinearOrder>, DecideError> {
    require_unary(a)?;
    let graph = FunctionalGraph::analyze(a);
    if graph.cycles.iter().any(|c| c.len() >= 2) {
        return Ok(Witness::No);
    }

    let mut ranking: Vec<StateId> = Vec::with_capacity(a.n_states());
    for cycle in &graph.cycles {
        let root = cycle[0];
        let mut visit: Vec<StateId> = vec![root];
        let mut head = 0;
        while head < visit.len() {
            let p = visit[head];
            head += 1;
            for &q in &graph.preimages[p] {
                if !graph.on_cycle[q] {
                    visit.push(q);
                }
            }
        }
        visit.reverse();
        ranking.extend_from_slice(&visit);
    }
    let order = LinearOrder::new(ranking).expect("visit covers every state once");
    Ok(Witness::Yes(order))
}

/// A unary automaton is oriented iff all cycles of the letter share one
/// length `k`. The witness cycle interleaves, for every cycle position, the
/// tree segments and cycle states of each cycle in turn. Tree states are
/// placed by a breadth-first search of the inverse graph from the cycle
/// states: a state visited at level `i` whose path enters its cycle at
/// position `g` is prepended to the segment at position `(g - i) mod k` of
/// its cycle. Runs in O(|Q|).
pub fn decide_unary_oriented(a: &Automaton) -> Result<Witness<CyclicOrder>, DecideError> {
    require_unary(a)?;
    let graph = FunctionalGraph::analyze(a);
    let k = graph.cycles[0].len();
    if graph.cycles.iter().any(|c| c.len() != k) {
        return Ok(Witness::No);
    }
    let m = graph.cycles.len();

    // segments[f][j] collects the tree states placed before position j of
    // cycle f; each new state goes to the front, so deeper states end first
    let mut segments: Vec<Vec<std::collections::VecDeque<StateId>>> =
        vec![vec![std::collections::VecDeque::new(); k]; m];

    // frontier entries carry the cycle index and entry position of the cycle
    // state their tree path leads to
    let mut frontier: Vec<(StateId, usize, usize)> = Vec::new();
    for position in 0..k {
        for (cycle_idx, cycle) in graph.cycles.iter().enumerate() {
            frontier.push((cycle[position], cycle_idx, position));
        }
    }

    let mut level = 0usize;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for &(p, cycle_idx, entry) in &frontier {
            // later-visited preimages are prepended in front of earlier
            // ones, so scanning them in descending state order leaves each
            // batch ascending inside its segment
            for &q in graph.preimages[p].iter().rev() {
                if graph.on_cycle[q] {
                    continue;
                }
                let slot = (entry + k - level % k) % k;
                segments[cycle_idx][slot].push_front(q);
                next.push((q, cycle_idx, entry));
            }
        }
        frontier = next;
    }

    let mut order: Vec<StateId> = Vec::with_capacity(a.n_states());
    for position in 0..k {
        for (cycle_segments, cycle) in segments.iter().zip(&graph.cycles) {
            order.extend(cycle_segments[position].iter());
            order.push(cycle[position]);
        }
    }
    let cycle = CyclicOrder::new(order).expect("placement covers every state once");
    Ok(Witness::Yes(cycle))
}
