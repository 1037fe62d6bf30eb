//! Order-constraint propagation. Asserting `x < y` forces, for every letter,
//! the images ordered the same way (when they differ), and transitively every
//! pair below-x/above-y. The closure engine keeps the relation transitively
//! closed under both rules on a trail, so choices can be undone, and records
//! for every derived edge which decisions produced it. Conflicts then name
//! the decision levels they depend on, letting the linear-order search jump
//! over choice points that cannot be to blame.

use std::collections::VecDeque;

use crate::automaton::{Automaton, StateId};
use crate::order::{LinearOrder, PartialOrderRelation};

use super::Witness;

/// Normal negative outcome of closing a relation: the requested pair cannot
/// coexist with the consequences already drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Contradiction;

type EdgeId = usize;

/// Why an edge is in the relation. `Image` and `Product` point at the edges
/// the derivation used, so conflicts can be traced back to decisions.
#[derive(Debug, Clone, Copy)]
enum Reason {
    Vacant,
    Axiom,
    Decision(u32),
    Image(EdgeId),
    Product { base: EdgeId, left: Option<EdgeId>, right: Option<EdgeId> },
}

/// Sorted set of decision levels a conflict depends on.
#[derive(Debug, Clone, Default)]
struct ConflictSet(Vec<u32>);

impl ConflictSet {
    fn insert(&mut self, level: u32) {
        if let Err(pos) = self.0.binary_search(&level) {
            self.0.insert(pos, level);
        }
    }

    fn contains(&self, level: u32) -> bool {
        self.0.binary_search(&level).is_ok()
    }

    fn merge_without(mut self, other: ConflictSet, drop: u32) -> ConflictSet {
        for level in other.0 {
            self.insert(level);
        }
        if let Ok(pos) = self.0.binary_search(&drop) {
            self.0.remove(pos);
        }
        self
    }
}

struct ClosureEngine<'a> {
    a: &'a Automaton,
    n: usize,
    less: Vec<bool>,
    reason: Vec<Reason>,
    trail: Vec<EdgeId>,
}

impl<'a> ClosureEngine<'a> {
    fn new(a: &'a Automaton) -> Self {
        let n = a.n_states();
        ClosureEngine {
            a,
            n,
            less: vec![false; n * n],
            reason: vec![Reason::Vacant; n * n],
            trail: Vec::new(),
        }
    }

    fn from_relation(a: &'a Automaton, rel: &PartialOrderRelation) -> Self {
        let mut engine = ClosureEngine::new(a);
        for (p, q) in rel.edges() {
            let e = p * engine.n + q;
            engine.less[e] = true;
            engine.reason[e] = Reason::Axiom;
        }
        engine
    }

    #[inline]
    fn edge(&self, x: StateId, y: StateId) -> EdgeId {
        x * self.n + y
    }

    #[inline]
    fn is_less(&self, x: StateId, y: StateId) -> bool {
        self.less[self.edge(x, y)]
    }

    fn mark(&self) -> usize {
        self.trail.len()
    }

    fn undo_to(&mut self, mark: usize) {
        for e in self.trail.drain(mark..) {
            self.less[e] = false;
            self.reason[e] = Reason::Vacant;
        }
    }

    /// Asserts `x < y` and closes the relation under image consequences and
    /// transitivity. On contradiction, reports the responsible decisions; the
    /// edges added before the contradiction stay on the trail for the caller
    /// to unwind.
    fn assert_less(&mut self, x: StateId, y: StateId, why: Reason) -> Result<(), ConflictSet> {
        let mut work: VecDeque<(StateId, StateId, Reason)> = VecDeque::new();
        work.push_back((x, y, why));
        while let Some((x, y, why)) = work.pop_front() {
            debug_assert_ne!(x, y, "image consequences never produce reflexive pairs");
            if self.is_less(x, y) {
                continue;
            }
            if self.is_less(y, x) {
                return Err(self.explain(why, Some(self.edge(y, x))));
            }
            let lefts: Vec<StateId> =
                std::iter::once(x).chain((0..self.n).filter(|&l| self.is_less(l, x))).collect();
            let rights: Vec<StateId> =
                std::iter::once(y).chain((0..self.n).filter(|&r| self.is_less(y, r))).collect();
            let base = self.edge(x, y);
            for &l in &lefts {
                for &r in &rights {
                    let e = self.edge(l, r);
                    if self.less[e] {
                        continue;
                    }
                    debug_assert!(
                        l != r && !self.is_less(r, l),
                        "closed relation cannot produce a product conflict past the entry check"
                    );
                    self.less[e] = true;
                    self.reason[e] = if e == base {
                        why
                    } else {
                        Reason::Product {
                            base,
                            left: (l != x).then(|| self.edge(l, x)),
                            right: (r != y).then(|| self.edge(y, r)),
                        }
                    };
                    self.trail.push(e);
                    for letter in 0..self.a.n_letters() {
                        let u = self.a.step(l, letter);
                        let v = self.a.step(r, letter);
                        if u != v {
                            work.push_back((u, v, Reason::Image(e)));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Decision levels reachable through the reason graph from a pending
    /// reason and (optionally) an existing edge.
    fn explain(&self, pending: Reason, opposite: Option<EdgeId>) -> ConflictSet {
        let mut set = ConflictSet::default();
        let mut visited = vec![false; self.n * self.n];
        let mut stack: Vec<EdgeId> = Vec::new();
        let expand = |reason: Reason, set: &mut ConflictSet, stack: &mut Vec<EdgeId>| match reason {
            Reason::Vacant => unreachable!("reason requested for an absent edge"),
            Reason::Axiom => {}
            Reason::Decision(level) => set.insert(level),
            Reason::Image(parent) => stack.push(parent),
            Reason::Product { base, left, right } => {
                stack.push(base);
                stack.extend(left);
                stack.extend(right);
            }
        };
        expand(pending, &mut set, &mut stack);
        stack.extend(opposite);
        while let Some(e) = stack.pop() {
            if visited[e] {
                continue;
            }
            visited[e] = true;
            expand(self.reason[e], &mut set, &mut stack);
        }
        set
    }

    /// Lexicographically least pair of states the relation does not compare.
    fn incomparable_pair(&self) -> Option<(StateId, StateId)> {
        for x in 0..self.n {
            for y in (x + 1)..self.n {
                if !self.is_less(x, y) && !self.is_less(y, x) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    fn to_relation(&self) -> PartialOrderRelation {
        PartialOrderRelation::from_closed_matrix(self.n, self.less.clone())
    }
}

/// Least fixed point of the consequence rules over `rel` plus the seed pair,
/// or [`Contradiction`] when that closure would order some pair both ways.
///
/// Panics if `rel` and `a` disagree on the state count or the seed states are
/// equal.
pub fn propagate_closure(
    rel: &PartialOrderRelation,
    a: &Automaton,
    seed: (StateId, StateId),
) -> Result<PartialOrderRelation, Contradiction> {
    assert_eq!(rel.n(), a.n_states(), "relation dimension mismatch");
    assert_ne!(seed.0, seed.1, "seed states must be distinct");
    let mut engine = ClosureEngine::from_relation(a, rel);
    match engine.assert_less(seed.0, seed.1, Reason::Axiom) {
        Ok(()) => Ok(engine.to_relation()),
        Err(_) => Err(Contradiction),
    }
}

/// Searches for any nontrivial preserved partial order by seeding every
/// ordered pair of distinct states in lexicographic order and returning the
/// first closure that survives. Automata with fewer than two states admit
/// only the trivial order and answer no.
///
/// Runs in O(|Sigma| * |Q|^6) overall.
pub fn find_nontrivial_partial_order(a: &Automaton) -> Witness<PartialOrderRelation> {
    let n = a.n_states();
    if n < 2 {
        return Witness::No;
    }
    let mut engine = ClosureEngine::new(a);
    for p in 0..n {
        for q in 0..n {
            if p == q {
                continue;
            }
            match engine.assert_less(p, q, Reason::Axiom) {
                Ok(()) => return Witness::Yes(engine.to_relation()),
                Err(_) => engine.undo_to(0),
            }
        }
    }
    Witness::No
}

/// Complete search for an underlying linear order: repeatedly order the
/// least incomparable pair (trying `x < y` before `y < x`), propagate all
/// consequences, and backtrack on contradiction. Conflict sets let the search
/// skip flipping choices that provably did not contribute, without changing
/// which certificate is found. Worst case remains exponential; propagation
/// usually cuts unordered automata down long before that.
pub fn decide_monotonic_backtracking(a: &Automaton) -> Witness<LinearOrder> {
    let mut engine = ClosureEngine::new(a);
    match search(&mut engine, 1) {
        Ok(()) => {
            let ranking = engine
                .to_relation()
                .to_linear()
                .expect("search only returns once the relation is total");
            Witness::Yes(ranking)
        }
        Err(_) => Witness::No,
    }
}

fn search(engine: &mut ClosureEngine, level: u32) -> Result<(), ConflictSet> {
    let Some((x, y)) = engine.incomparable_pair() else {
        return Ok(());
    };
    let mark = engine.mark();

    let first = try_branch(engine, x, y, level);
    let c1 = match first {
        Ok(()) => return Ok(()),
        Err(conflict) => {
            engine.undo_to(mark);
            conflict
        }
    };
    if !c1.contains(level) {
        // the conflict predates this choice; flipping it cannot help
        return Err(c1);
    }

    match try_branch(engine, y, x, level) {
        Ok(()) => Ok(()),
        Err(c2) => {
            engine.undo_to(mark);
            Err(c1.merge_without(c2, level))
        }
    }
}

fn try_branch(
    engine: &mut ClosureEngine,
    lo: StateId,
    hi: StateId,
    level: u32,
) -> Result<(), ConflictSet> {
    engine.assert_less(lo, hi, Reason::Decision(level))?;
    search(engine, level + 1)
}
