use num_traits::{One, Zero};
use promaton::constructions::{
    evenodd_afa_epsfree, evenodd_afa_rt, trios_dfa, trios_ladder, trios_lasvegas_pfa, trios_problem, trios_twoway_dfa,
};
use promaton::probabilistic::outcome_dist;
use promaton::{Class, ExactRational};

#[test]
fn realtime_afa_accepts_by_divisibility() {
    for k in 1..=5u32 {
        let afa = evenodd_afa_rt(k).unwrap();
        let period = 1usize << (k + 1);
        for n in 0..=1usize << (k + 3) {
            assert_eq!(afa.accepts(&"a".repeat(n)).unwrap(), n % period == 0, "k={k}, n={n}");
        }
    }
}

#[test]
fn epsfree_afa_accepts_only_multiples_of_four() {
    let afa = evenodd_afa_epsfree(3).unwrap();
    for n in 0..=128usize {
        if afa.accepts(&"a".repeat(n)).unwrap() {
            assert_eq!(n % 4, 0, "accepted a^{n}");
        }
    }
}

#[test]
fn ladder_ends_at_one_and_stays_in_range() {
    for n in 1..=10usize {
        let ladder = trios_ladder(n);
        assert_eq!(ladder.len(), n);
        assert_eq!(ladder[n - 1], ExactRational::one());
        assert!(ladder.iter().all(|p| p > &ExactRational::zero() && p <= &ExactRational::one()));
    }
}

#[test]
fn trios_machines_agree_with_predicates() {
    for n in 1..=2usize {
        for r in 1..=2usize {
            let problem = trios_problem(n, r).unwrap();
            let dfa = trios_dfa(n, r).unwrap();
            let two = trios_twoway_dfa(n, r).unwrap();
            let pfa = trios_lasvegas_pfa(n, r).unwrap();
            for inst in problem.instances(r * (3 * n + 1)) {
                let yes = inst.class == Class::Yes;
                assert_eq!(dfa.accepts(&inst.word).unwrap(), yes, "dfa ({n},{r}) {}", inst.word);
                assert_eq!(two.accepts(&inst.word).unwrap(), yes, "2dfa ({n},{r}) {}", inst.word);
                let d = outcome_dist(&pfa, &inst.word).unwrap();
                let wrong = if yes { &d.reject } else { &d.accept };
                assert!(wrong.is_zero(), "pfa ({n},{r}) {}", inst.word);
            }
        }
    }
}
