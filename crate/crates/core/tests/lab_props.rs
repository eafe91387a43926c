mod common;

use common::*;
use promaton::constructions::{evenodd_problem, parity_problem, up_problem};
use promaton::lab::{expeq_pumping_check, min_size, pumping_check, MachineKind, Pumpable, SearchSpec};
use promaton::rational::rat;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn unary_nfas_pump(raw in raw_nfa(5, 1..=1, true), h in 1u64..3) {
        let nfa = build_nfa(&raw, true);
        let report = pumping_check(Pumpable::Nfa(&nfa), 6, &[h]).unwrap();
        prop_assert!(report.is_solves(), "{:?}", report.counterexample());
    }

    #[test]
    fn unary_dfas_pump(raw in raw_dfa(5, 1..=1), h in 1u64..4) {
        let dfa = build_dfa(&raw);
        let report = pumping_check(Pumpable::Dfa(&dfa), 6, &[h]).unwrap();
        prop_assert!(report.is_solves(), "{:?}", report.counterexample());
        prop_assert_eq!(report.get("equal_sets"), Some(&"true".into()));
    }

    #[test]
    fn binary_dfas_obey_traversal_equalities(raw in raw_dfa(4, 2..=2), t in 1u64..4) {
        let dfa = build_dfa(&raw);
        let report = expeq_pumping_check(&dfa, t).unwrap();
        prop_assert!(report.is_solves(), "{:?}", report.counterexample());
    }
}

#[test]
fn searches_are_deterministic() {
    let specs = [
        SearchSpec { kind: MachineKind::UnaryDfa, max_states: 18, problem: evenodd_problem(2).unwrap(), max_length: 32 },
        SearchSpec { kind: MachineKind::UnaryDfa, max_states: 18, problem: up_problem(&rat(9, 10)).unwrap(), max_length: 18 },
        SearchSpec { kind: MachineKind::UnaryNfa, max_states: 4, problem: evenodd_problem(1).unwrap(), max_length: 16 },
        SearchSpec { kind: MachineKind::Dfa, max_states: 3, problem: parity_problem(|n| n % 3 == 0), max_length: 9 },
    ];
    for spec in &specs {
        let a = min_size(spec).unwrap();
        let b = min_size(spec).unwrap();
        assert_eq!(a.size, b.size);
        assert_eq!(a.witness, b.witness);
        assert!(a.witness_check.as_ref().is_some_and(|r| r.is_solves()));
    }
}

#[test]
fn nfa_and_dfa_minima_coincide_on_evenodd_one() {
    let problem = evenodd_problem(1).unwrap();
    let dfa = min_size(&SearchSpec { kind: MachineKind::UnaryDfa, max_states: 18, problem: problem.clone(), max_length: 16 });
    let nfa = min_size(&SearchSpec { kind: MachineKind::UnaryNfa, max_states: 4, problem, max_length: 16 });
    assert_eq!(dfa.unwrap().size, Some(4));
    assert_eq!(nfa.unwrap().size, Some(4));
}
