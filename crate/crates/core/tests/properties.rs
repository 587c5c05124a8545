use proptest::prelude::*;

use degseq::elimination::{erdos_gallai, MaxFirst};
use degseq::realization::{degree_sequence, hh_realize, SimpleGraph};
use degseq::{
    apply_step, compare_dominance, conjugate, eliminate_with_order, elementary_successors,
    enumerate_elimination_sequences, hh_eliminate, is_graphic, kw_layoff, reduce_top, residue,
    DegreeSequence, DominanceVerdict, StepSpec,
};

fn any_sequence(max_len: usize, max_value: u32) -> impl Strategy<Value = DegreeSequence> {
    prop::collection::vec(0..=max_value, 0..=max_len).prop_map(DegreeSequence::from_degrees)
}

/// A random labeled graph on up to `max_n` vertices.
fn any_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn graphic_sequence(max_n: usize) -> impl Strategy<Value = DegreeSequence> {
    any_graph(max_n).prop_map(|g| degree_sequence(&g))
}

/// A graphic sequence plus a stream of choice indices for driving an elimination.
fn graphic_with_choices(max_n: usize) -> impl Strategy<Value = (DegreeSequence, Vec<usize>)> {
    graphic_sequence(max_n).prop_flat_map(|s| {
        let n = s.len();
        (Just(s), prop::collection::vec(any::<usize>(), n))
    })
}

fn edges_of(s: &DegreeSequence) -> u64 {
    s.sum() / 2
}

proptest! {
    #[test]
    fn conjugate_is_an_involution_on_positive_parts(s in any_sequence(12, 12)) {
        prop_assert_eq!(conjugate(&conjugate(&s)), s.positive_part());
        prop_assert_eq!(conjugate(&s).sum(), s.sum());
    }

    #[test]
    fn conjugation_reverses_dominance(a in any_sequence(8, 8), b in any_sequence(8, 8)) {
        let direct = compare_dominance(&a, &b);
        let conj = compare_dominance(&conjugate(&a), &conjugate(&b));
        if direct == DominanceVerdict::SumMismatch {
            prop_assert_eq!(conj, DominanceVerdict::SumMismatch);
        } else if direct == DominanceVerdict::Equal {
            prop_assert_eq!(conj, DominanceVerdict::Equal);
        } else {
            prop_assert_eq!(conj, direct.flipped());
        }
    }

    #[test]
    fn dominance_verdict_is_antisymmetric(a in any_sequence(8, 6), b in any_sequence(8, 6)) {
        prop_assert_eq!(compare_dominance(&a, &b), compare_dominance(&b, &a).flipped());
    }

    #[test]
    fn forward_steps_move_down_and_invert(s in any_sequence(10, 10), i in 1usize..12, j in 1usize..13) {
        if let Ok(t) = apply_step(&s, &StepSpec::forward(i, j)) {
            prop_assert_eq!(t.sum(), s.sum());
            prop_assert_eq!(compare_dominance(&s, &t), DominanceVerdict::Dominates);
            // the inverse addresses the same positions unless the step created a new entry
            if j <= s.len() {
                let back = apply_step(&t, &StepSpec::inverse(i, j)).unwrap();
                prop_assert_eq!(back, s);
            }
        }
    }

    #[test]
    fn inverse_steps_move_up(s in any_sequence(10, 10), i in 1usize..11, j in 1usize..11) {
        if let Ok(t) = apply_step(&s, &StepSpec::inverse(i, j)) {
            prop_assert_eq!(compare_dominance(&t, &s), DominanceVerdict::Dominates);
            prop_assert_eq!(apply_step(&t, &StepSpec::forward(i, j)).unwrap(), s);
        }
    }

    #[test]
    fn elementary_successors_are_covered(s in any_sequence(10, 10)) {
        for t in elementary_successors(&s) {
            prop_assert_eq!(compare_dominance(&s, &t), DominanceVerdict::Dominates);
            prop_assert!(t.len() == s.len() || t.len() == s.len() + 1);
        }
    }

    #[test]
    fn reductions_commute(s in any_sequence(10, 10), p in 0usize..11, q in 0usize..11) {
        if let (Ok(a), Ok(b)) = (reduce_top(&s, &[p, q]), reduce_top(&s, &[q, p])) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn reduce_top_lowers_the_sum(s in any_sequence(10, 10), schedule in prop::collection::vec(0usize..11, 0..4)) {
        if let Ok(t) = reduce_top(&s, &schedule) {
            let taken: u64 = schedule.iter().map(|&p| p as u64).sum();
            prop_assert_eq!(t.sum() + taken, s.sum());
            prop_assert_eq!(t.len(), s.len());
        }
    }

    #[test]
    fn havel_hakimi_agrees_with_erdos_gallai(s in any_sequence(9, 9)) {
        prop_assert_eq!(is_graphic(&s), erdos_gallai(&s));
    }

    #[test]
    fn graph_degree_sequences_are_graphic(s in graphic_sequence(9)) {
        prop_assert!(is_graphic(&s));
        prop_assert!(erdos_gallai(&s));
    }

    #[test]
    fn any_order_conserves_edges((s, picks) in graphic_with_choices(9)) {
        let mut k = 0;
        let mut chooser = |cur: &DegreeSequence| {
            let values = cur.distinct_values();
            let v = values.get(picks.get(k).copied().unwrap_or(0) % values.len().max(1)).copied();
            k += 1;
            v
        };
        let trace = eliminate_with_order(&s, &mut chooser).unwrap();
        prop_assert_eq!(trace.steps.len(), s.len());
        let mut before = s.clone();
        for step in &trace.steps {
            prop_assert_eq!(edges_of(&before), edges_of(&step.result) + step.laid_off as u64);
            prop_assert_eq!(step.result.len() + 1, before.len());
            before = step.result.clone();
        }
        // every order ends in the empty sequence and is one of the enumerated ones
        prop_assert!(before.is_empty());
        let all = enumerate_elimination_sequences(&s, 1_000_000).unwrap();
        prop_assert!(all.contains(&trace.elimination_sequence()));
    }

    #[test]
    fn max_first_order_is_havel_hakimi(s in graphic_sequence(9)) {
        let trace = eliminate_with_order(&s, &mut MaxFirst).unwrap();
        let laid = trace.laid_off();
        prop_assert!(laid.windows(2).all(|w| w[0] >= w[1]));
        let hh = hh_eliminate(&s).unwrap();
        prop_assert_eq!(trace.elimination_sequence(), hh.elim.clone());
        prop_assert_eq!(hh.depth + hh.residue, s.len());
        prop_assert_eq!(hh.residue, hh.elim.zeros());
    }

    #[test]
    fn havel_hakimi_dominates_every_order(s in graphic_sequence(8)) {
        let hh = hh_eliminate(&s).unwrap().elim;
        for e in enumerate_elimination_sequences(&s, 1_000_000).unwrap() {
            prop_assert!(hh.compare(&e).is_at_least(), "{} vs {}", hh, e);
            prop_assert!(e.zeros() <= hh.zeros());
        }
    }

    #[test]
    fn realization_round_trip(s in graphic_sequence(10)) {
        let g = hh_realize(&s).unwrap();
        prop_assert_eq!(degree_sequence(&g), s.clone());
        prop_assert_eq!(2 * g.edge_count() as u64, s.sum());
        let reparsed = SimpleGraph::parse_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(reparsed, g);
    }

    #[test]
    fn trailing_zeros_add_to_residue(s in graphic_sequence(8), t in 0usize..5) {
        let mut padded = s.as_slice().to_vec();
        padded.extend(std::iter::repeat_n(0, t));
        let padded = DegreeSequence::from_degrees(padded);
        prop_assert_eq!(residue(&padded).unwrap(), residue(&s).unwrap() + t);
    }

    #[test]
    fn layoff_ignores_which_copy_and_which_ties(
        s in graphic_sequence(9),
        pick in any::<usize>(),
        tie_order in any::<u64>(),
    ) {
        prop_assume!(!s.is_empty());
        let values = s.distinct_values();
        let v = values[pick % values.len()];
        let expected = kw_layoff(&s, v);

        // remove an arbitrary copy, then reduce v entries of maximal value, breaking ties
        // by a scrambled index order
        let mut rest = s.as_slice().to_vec();
        let copies: Vec<usize> = (0..rest.len()).filter(|&k| rest[k] == v).collect();
        rest.remove(copies[pick % copies.len()]);
        let mut order: Vec<usize> = (0..rest.len()).collect();
        order.sort_by_key(|&k| (std::cmp::Reverse(rest[k]), (k as u64).wrapping_mul(tie_order | 1).rotate_left(17)));
        if (v as usize) > rest.len() || order.iter().take(v as usize).any(|&k| rest[k] == 0) {
            prop_assert!(expected.is_err());
        } else {
            for &k in order.iter().take(v as usize) {
                rest[k] -= 1;
            }
            prop_assert_eq!(expected.unwrap(), DegreeSequence::from_degrees(rest));
        }
    }
}
