mod common;

use common::*;
use num_bigint::BigUint;
use num_traits::One;
use promaton::all_words;
use promaton::constructions::{evenodd_afa_rt, evenodd_dfa};
use promaton::conversions::{
    bound_2nfa_to_dfa, dfa_equivalent, dfa_minimize, nfa_to_dfa, remove_epsilon, unary_afa_to_dfa,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn subset_construction_keeps_language(raw in raw_nfa(5, 1..=3, true)) {
        let nfa = build_nfa(&raw, true);
        let dfa = nfa_to_dfa(&nfa).unwrap();
        for w in all_words(nfa.alphabet(), 10) {
            prop_assert_eq!(dfa.accepts(&w).unwrap(), nfa.accepts(&w).unwrap(), "word {:?}", w);
        }
    }

    #[test]
    fn epsilon_removal_keeps_size_and_language(raw in raw_nfa(5, 1..=2, true)) {
        let nfa = build_nfa(&raw, true);
        let free = remove_epsilon(&nfa);
        prop_assert!(free.state_count() <= nfa.state_count());
        prop_assert!(free.is_epsilon_free());
        for w in all_words(nfa.alphabet(), 8) {
            prop_assert_eq!(free.accepts(&w).unwrap(), nfa.accepts(&w).unwrap(), "word {:?}", w);
        }
    }

    #[test]
    fn minimization_keeps_language(raw in raw_dfa(5, 1..=2)) {
        let dfa = build_dfa(&raw);
        let min = dfa_minimize(&dfa);
        prop_assert!(min.state_count() <= dfa.state_count());
        prop_assert!(dfa_equivalent(&dfa, &min));
        for w in all_words(dfa.alphabet(), 8) {
            prop_assert_eq!(min.accepts(&w).unwrap(), dfa.accepts(&w).unwrap());
        }
    }
}

#[test]
fn afa_pipeline_reproduces_the_cycle() {
    for k in 1..=2 {
        let dfa = dfa_minimize(&unary_afa_to_dfa(&evenodd_afa_rt(k).unwrap()).unwrap());
        assert!(dfa_equivalent(&dfa, &evenodd_dfa(k).unwrap()));
    }
}

#[test]
fn two_way_bound_below_square_exponent() {
    for n in 1..=12u64 {
        let v = bound_2nfa_to_dfa(n).unwrap().value;
        assert!(v <= BigUint::one() << (n * n + n), "n={n}");
    }
}
