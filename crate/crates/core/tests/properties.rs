//! Property tests pitting each checker against an independent formulation
//! and pinning the structural invariants of the data model.

use proptest::prelude::*;

use monotonaut::{
    canonical_cyclic, nae_bruteforce, reduce_nae_to_automaton, verify_cyclic_order,
    verify_linear_order, verify_partial_order, Assignment, Automaton, CyclicOrder, GadgetLayout,
    LinearOrder, NaeInstance, PartialOrderRelation, StateId,
};

/// Order check straight from the definition: every pair, not just adjacent
/// ranks.
fn linear_all_pairs(a: &Automaton, ord: &LinearOrder) -> bool {
    let ranks = ord.ranks();
    for letter in 0..a.n_letters() {
        for p in 0..a.n_states() {
            for q in 0..a.n_states() {
                if ranks[p] < ranks[q] {
                    let (u, v) = (a.step(p, letter), a.step(q, letter));
                    if ranks[u] > ranks[v] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Cyclic check straight from the definition: the deduplicated image sequence
/// must be a subsequence of some rotation of the cycle.
fn cyclic_by_subsequence(a: &Automaton, ord: &CyclicOrder) -> bool {
    let n = ord.len();
    let cycle = ord.cycle();
    for letter in 0..a.n_letters() {
        let mut seq: Vec<StateId> = Vec::new();
        for &q in cycle {
            let image = a.step(q, letter);
            if seq.last() != Some(&image) {
                seq.push(image);
            }
        }
        while seq.len() > 1 && seq.first() == seq.last() {
            seq.pop();
        }
        let embeds = (0..n).any(|start| {
            let mut matched = 0;
            for offset in 0..n {
                if matched < seq.len() && cycle[(start + offset) % n] == seq[matched] {
                    matched += 1;
                }
            }
            matched == seq.len()
        });
        if !embeds {
            return false;
        }
    }
    true
}

fn automaton_strategy(max_states: usize, max_letters: usize) -> impl Strategy<Value = Automaton> {
    (1..=max_states, 1..=max_letters).prop_flat_map(|(n, k)| {
        prop::collection::vec(0..n, n * k).prop_map(move |flat| {
            let rows: Vec<Vec<usize>> = flat.chunks(k).map(<[usize]>::to_vec).collect();
            Automaton::from_rows(&rows).expect("entries drawn in range")
        })
    })
}

fn permutation_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// An automaton built to preserve a given order: each letter's images are
/// drawn rank-monotone, so the pair (automaton, order) is never vacuous.
fn monotone_pair_strategy() -> impl Strategy<Value = (Automaton, LinearOrder)> {
    (1usize..=7, 1usize..=3).prop_flat_map(|(n, k)| {
        (permutation_strategy(n), prop::collection::vec(prop::collection::vec(0..n, n), k))
            .prop_map(move |(ranking, mut image_ranks)| {
                let mut rows = vec![vec![0usize; k]; n];
                for (letter, images) in image_ranks.iter_mut().enumerate() {
                    images.sort_unstable();
                    for (rank, &target_rank) in images.iter().enumerate() {
                        rows[ranking[rank]][letter] = ranking[target_rank];
                    }
                }
                let a = Automaton::from_rows(&rows).expect("table is complete");
                let ord = LinearOrder::new(ranking).expect("permutation");
                (a, ord)
            })
    })
}

proptest! {
    #[test]
    fn parse_serialize_round_trip(a in automaton_strategy(8, 3)) {
        let text = a.to_text();
        let back = Automaton::parse(&text).unwrap();
        prop_assert_eq!(&a, &back);
        // serialized form is canonical
        prop_assert_eq!(back.to_text(), text);
    }

    #[test]
    fn word_application_folds(
        a in automaton_strategy(6, 3),
        u in prop::collection::vec(0usize..3, 0..8),
        v in prop::collection::vec(0usize..3, 0..8),
    ) {
        let u: Vec<usize> = u.into_iter().map(|l| l % a.n_letters()).collect();
        let v: Vec<usize> = v.into_iter().map(|l| l % a.n_letters()).collect();
        let mut uv = u.clone();
        uv.extend_from_slice(&v);
        for q in 0..a.n_states() {
            prop_assert_eq!(a.run(q, &uv), a.run(a.run(q, &u), &v));
        }
    }

    #[test]
    fn random_automata_satisfy_invariants(n in 1usize..=9, k in 1usize..=4, seed: u64) {
        let a = Automaton::random(n, k, seed);
        prop_assert_eq!(a.n_states(), n);
        prop_assert_eq!(a.n_letters(), k);
        for q in 0..n {
            for letter in 0..k {
                prop_assert!(a.step(q, letter) < n);
            }
        }
        prop_assert_eq!(Automaton::random(n, k, seed), a);
    }

    #[test]
    fn adjacent_rank_rule_equals_all_pairs(
        a in automaton_strategy(6, 3),
        perm_seed in any::<u64>(),
    ) {
        let n = a.n_states();
        let ord = random_permutation(n, perm_seed);
        prop_assert_eq!(
            verify_linear_order(&a, &ord).unwrap(),
            linear_all_pairs(&a, &ord)
        );
    }

    #[test]
    fn descent_rule_equals_subsequence_definition(
        a in automaton_strategy(7, 3),
        perm_seed in any::<u64>(),
    ) {
        let ord = CyclicOrder::new(random_permutation(a.n_states(), perm_seed).ranking().to_vec()).unwrap();
        prop_assert_eq!(
            verify_cyclic_order(&a, &ord).unwrap(),
            cyclic_by_subsequence(&a, &ord)
        );
    }

    #[test]
    fn cyclic_verdict_is_rotation_invariant(
        a in automaton_strategy(7, 2),
        perm_seed in any::<u64>(),
    ) {
        let n = a.n_states();
        let base = random_permutation(n, perm_seed).ranking().to_vec();
        let reference = verify_cyclic_order(&a, &CyclicOrder::new(base.clone()).unwrap()).unwrap();
        for shift in 0..n {
            let rotated: Vec<usize> = (0..n).map(|i| base[(i + shift) % n]).collect();
            let ord = CyclicOrder::new(rotated).unwrap();
            prop_assert_eq!(verify_cyclic_order(&a, &ord).unwrap(), reference);
            prop_assert_eq!(
                verify_cyclic_order(&a, &canonical_cyclic(&ord)).unwrap(),
                reference
            );
        }
    }

    #[test]
    fn preserved_linear_orders_are_preserved_cyclically(
        (a, ord) in monotone_pair_strategy(),
    ) {
        prop_assert!(verify_linear_order(&a, &ord).unwrap());
        prop_assert!(verify_cyclic_order(&a, &ord.as_cycle()).unwrap());
    }

    #[test]
    fn total_relation_agrees_with_linear_checker(
        a in automaton_strategy(6, 2),
        perm_seed in any::<u64>(),
    ) {
        let n = a.n_states();
        let ord = random_permutation(n, perm_seed);
        let ranking = ord.ranking();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push((ranking[i], ranking[j]));
            }
        }
        let rel = PartialOrderRelation::from_edges(n, &edges).unwrap();
        prop_assert!(rel.is_total());
        prop_assert_eq!(
            verify_partial_order(&a, &rel).unwrap(),
            verify_linear_order(&a, &ord).unwrap()
        );
    }

    #[test]
    fn gadget_letters_fix_or_sink_everything_else(seed: u64) {
        let inst = random_instance(5, 4, seed);
        let a = reduce_nae_to_automaton(&inst);
        let layout = GadgetLayout::for_instance(&inst);
        for (j0, &[f, g, h]) in inst.clauses().iter().enumerate() {
            let j = j0 + 1;
            let letters = [
                (layout.letter_a(j), f),
                (layout.letter_b(j), g),
                (layout.letter_c(j), h),
            ];
            for (letter, var) in letters {
                for state in 0..a.n_states() {
                    if state == layout.p(var) || state == layout.q(var) {
                        continue;
                    }
                    let image = a.step(state, letter);
                    prop_assert!(image == state || image == layout.sink());
                }
            }
        }
    }

    #[test]
    fn satisfying_assignments_come_in_complementary_pairs(seed: u64) {
        let inst = random_instance(5, 4, seed);
        if let Some(sat) = nae_bruteforce(&inst).unwrap() {
            prop_assert!(inst.is_satisfied_by(&sat));
            prop_assert!(inst.is_satisfied_by(&sat.complement()));
        }
    }
}

fn random_permutation(n: usize, seed: u64) -> LinearOrder {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut ranking: Vec<usize> = (0..n).collect();
    ranking.shuffle(&mut rng);
    LinearOrder::new(ranking).unwrap()
}

fn random_instance(max_vars: usize, max_clauses: usize, seed: u64) -> NaeInstance {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    loop {
        let n = rng.gen_range(3..=max_vars.max(3));
        let m = rng.gen_range(1..=max_clauses.max(1));
        let mut clauses = Vec::with_capacity(m);
        for _ in 0..m {
            let mut clause = [0usize; 3];
            for slot in 0..3 {
                loop {
                    let var = rng.gen_range(1..=n);
                    if !clause[..slot].contains(&var) {
                        clause[slot] = var;
                        break;
                    }
                }
            }
            clauses.push(clause);
        }
        if let Ok(inst) = NaeInstance::new(n, clauses) {
            return inst;
        }
    }
}

/// The adjacent-pair shortcut must agree with the all-pairs definition on all
/// permutations of small state sets, not just sampled ones.
#[test]
fn linear_rule_exhaustive_small() {
    for n in 1..=5usize {
        for seed in 0..20u64 {
            let a = Automaton::random(n, 2, seed * 101 + n as u64);
            let mut ranking: Vec<usize> = (0..n).collect();
            loop {
                let ord = LinearOrder::new(ranking.clone()).unwrap();
                assert_eq!(
                    verify_linear_order(&a, &ord).unwrap(),
                    linear_all_pairs(&a, &ord),
                    "automaton {a:?} ranking {ranking:?}"
                );
                if !next_permutation(&mut ranking) {
                    break;
                }
            }
        }
    }
}

/// Same exhaustive cross-check for the cyclic formulations.
#[test]
fn cyclic_rule_exhaustive_small() {
    for n in 1..=5usize {
        for seed in 0..20u64 {
            let a = Automaton::random(n, 2, seed * 313 + n as u64);
            let mut tail: Vec<usize> = (1..n).collect();
            loop {
                let mut cycle = vec![0];
                cycle.extend_from_slice(&tail);
                let ord = CyclicOrder::new(cycle).unwrap();
                assert_eq!(
                    verify_cyclic_order(&a, &ord).unwrap(),
                    cyclic_by_subsequence(&a, &ord),
                    "automaton {a:?} cycle {:?}",
                    ord.cycle()
                );
                if !next_permutation(&mut tail) {
                    break;
                }
            }
        }
    }
}

#[test]
fn witness_round_trip_on_known_assignment() {
    let inst = NaeInstance::parse("3 1\n1 2 3\n").unwrap();
    let sigma = Assignment::new(vec![false, false, true]);
    let ord = monotonaut::assignment_to_order(&inst, &sigma).unwrap();
    let back = monotonaut::order_to_assignment(&inst, &ord).unwrap();
    assert_eq!(back, sigma);
}

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
