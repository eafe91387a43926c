mod common;

use common::*;
use promaton::automata::{Move, TapeSymbol, TwoWayTransition};
use promaton::constructions::{evenodd_dfa, evenodd_problem, trios_dfa, trios_problem};
use promaton::rational::rat;
use promaton::{all_words, promise_check, Afa, Alphabet, Machine, Pfa, Role, TwoWayMachine};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn existential_afa_matches_nfa(raw in raw_nfa(5, 2..=2, true)) {
        // ε-states carry only ε-moves and never accept, and ε-edges point
        // forward, so both readings give the same language
        let (n, sigma, edges, eps, acc) = &raw;
        let eps_src: Vec<bool> = (0..*n).map(|p| eps.iter().any(|&(s, t)| s % n == p && t % n > p)).collect();
        let eps_edges: Vec<(usize, Option<char>, usize)> = eps
            .iter()
            .filter(|&&(s, t)| t % n > s % n)
            .map(|&(s, t)| (s % n, None, t % n))
            .collect();
        let sym_edges: Vec<(usize, Option<char>, usize)> = edges
            .iter()
            .filter(|&&(p, _, _)| !eps_src[p % n])
            .map(|&(p, a, q)| (p % n, Some(SYMBOLS[a % sigma]), q % n))
            .collect();
        let accepting: Vec<usize> = (0..*n).filter(|&q| acc[q] && !eps_src[q]).collect();
        let all: Vec<_> = sym_edges.iter().chain(&eps_edges).copied().collect();
        let afa = Afa::new(alphabet(*sigma), *n, 0, all.clone(), accepting.clone(), 0..*n, *n).unwrap();
        let nfa = promaton::Nfa::new(alphabet(*sigma), *n, 0, all, accepting).unwrap();
        for w in all_words(afa.alphabet(), 12) {
            prop_assert_eq!(afa.accepts(&w).unwrap(), nfa.accepts(&w).unwrap(), "word {:?}", w);
        }
    }

    #[test]
    fn right_moving_twoway_matches_nfa(raw in raw_nfa(5, 1..=2, false)) {
        let nfa = build_nfa(&raw, false);
        let n = nfa.state_count();
        let (start, accept) = (n, n + 1);
        let mut t = vec![TwoWayTransition { from: start, read: TapeSymbol::LeftEnd, to: nfa.initial(), movement: Move::Right }];
        for (p, a, q) in nfa.transitions() {
            let a = a.expect("ε-free");
            t.push(TwoWayTransition { from: p, read: TapeSymbol::Symbol(a), to: q, movement: Move::Right });
        }
        for p in nfa.accepting_states() {
            t.push(TwoWayTransition { from: p, read: TapeSymbol::RightEnd, to: accept, movement: Move::Stay });
        }
        let two = TwoWayMachine::new(nfa.alphabet().clone(), n + 2, start, t, [accept], false).unwrap();
        for w in all_words(nfa.alphabet(), 10) {
            prop_assert_eq!(two.accepts(&w).unwrap(), nfa.accepts(&w).unwrap(), "word {:?}", w);
        }
    }

    #[test]
    fn dfa_runs_are_repeatable(raw in raw_dfa(5, 1..=3), len in 0..12usize, seed in any::<u64>()) {
        let dfa = build_dfa(&raw);
        let sigma = dfa.alphabet().len() as u64;
        let word: String = (0..len).map(|i| SYMBOLS[((seed >> (i % 32)) % sigma) as usize]).collect();
        let first = dfa.run(&word).unwrap();
        for _ in 0..3 {
            prop_assert_eq!(dfa.run(&word).unwrap(), first);
        }
    }

    #[test]
    fn verdict_survives_relabelling(k in 1u32..=2, rot in 0usize..8, wrong in any::<bool>()) {
        let problem = evenodd_problem(k).unwrap();
        let mut dfa = evenodd_dfa(k).unwrap();
        if wrong {
            // a 2^k cycle cannot separate the promise
            dfa = evenodd_dfa(k - 1 + u32::from(k == 1)).unwrap();
        }
        let n = dfa.state_count();
        let perm: Vec<usize> = (0..n).map(|q| (q + rot) % n).collect();
        let moved = dfa.permute_states(&perm).unwrap();
        let a = promise_check(&dfa, &problem, 64).unwrap();
        let b = promise_check(&moved, &problem, 64).unwrap();
        prop_assert_eq!(a.verdict(), b.verdict());
        prop_assert_eq!(a.counterexample(), b.counterexample());
    }

    #[test]
    fn pfa_rows_must_sum_to_one(weights in prop::collection::vec(1i64..20, 1..4), bump in 1i64..5) {
        let total: i64 = weights.iter().sum();
        let good: Vec<_> = weights.iter().enumerate().map(|(i, &w)| (0, 'a', i, rat(w, total))).collect();
        let roles = vec![Role::Neutral; weights.len()];
        prop_assert!(Pfa::new(Alphabet::unary(), 0, roles.clone(), good).is_ok());
        let bad: Vec<_> = weights.iter().enumerate().map(|(i, &w)| (0, 'a', i, rat(w, total + bump))).collect();
        prop_assert!(Pfa::new(Alphabet::unary(), 0, roles, bad).is_err());
    }

    #[test]
    fn machine_json_round_trips(raw in raw_nfa(5, 1..=3, true), draw in raw_dfa(5, 1..=3)) {
        for machine in [Machine::Nfa(build_nfa(&raw, true)), Machine::Dfa(build_dfa(&draw))] {
            let text = machine.to_json();
            let back = Machine::from_json(&text).unwrap();
            prop_assert_eq!(&back, &machine);
            prop_assert_eq!(back.to_json(), text);
        }
    }
}

#[test]
fn permutation_keeps_trios_verdict() {
    let problem = trios_problem(2, 1).unwrap();
    let dfa = trios_dfa(2, 1).unwrap();
    let n = dfa.state_count();
    let perm: Vec<usize> = (0..n).rev().collect();
    let moved = dfa.permute_states(&perm).unwrap();
    assert!(promise_check(&moved, &problem, 7).unwrap().is_solves());
}
