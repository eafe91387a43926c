use num_traits::{One, Zero};
use promaton::constructions::{trios_lasvegas_pfa, trios_problem, up_pfa};
use promaton::probabilistic::{
    accept_prob, expeq_compose, expeq_compose_capped, expeq_params, lasvegas_success, monte_carlo, outcome_dist,
    trios_success_bound, RoundModel,
};
use promaton::rational::{mul_lopsided, pow, rat};
use promaton::{Alphabet, Caps, ExactRational, Pfa, Role};
use proptest::prelude::*;

fn roles() -> impl Strategy<Value = Role> {
    prop_oneof![Just(Role::Accepting), Just(Role::Rejecting), Just(Role::Neutral)]
}

/// Random PFA over {a, b}: each row is defined with probability 3/4 and
/// normalizes the drawn weights.
fn random_pfa() -> impl Strategy<Value = Pfa> {
    (1..=4usize).prop_flat_map(|n| {
        (
            prop::collection::vec(roles(), n),
            prop::collection::vec(prop::collection::vec(0i64..4, n), 2 * n),
            prop::collection::vec(0..4u8, 2 * n),
        )
            .prop_map(move |(roles, weights, defined)| {
                let mut t = Vec::new();
                for (row, w) in weights.iter().enumerate() {
                    let total: i64 = w.iter().sum();
                    if defined[row] == 0 || total == 0 {
                        continue;
                    }
                    let (q, c) = (row / 2, ['a', 'b'][row % 2]);
                    t.extend(w.iter().enumerate().filter(|(_, &x)| x > 0).map(|(to, &x)| (q, c, to, rat(x, total))));
                }
                Pfa::new(Alphabet::new(['a', 'b']).unwrap(), 0, roles, t).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn outcome_mass_is_one(pfa in random_pfa(), word in "[ab]{0,10}") {
        let d = outcome_dist(&pfa, &word).unwrap();
        prop_assert_eq!(d.total(), ExactRational::one());
    }

    #[test]
    fn restarting_keeps_decisive_odds(a in 1i64..50, r in 1i64..50, extra in 0i64..50, t in 1u64..200) {
        let den = a + r + extra;
        let model = RoundModel::new(rat(a, den), rat(r, den), t).unwrap();
        let d = expeq_compose(&model).unwrap();
        prop_assert_eq!(&d.accept / &d.reject, rat(a, r));
        prop_assert_eq!(d.total(), ExactRational::one());
    }

    #[test]
    fn lopsided_product_is_the_product(a in -1000i64..1000, b in 1i64..1000, c in -10i64..10, d in 1i64..10, e in 0u64..40) {
        let x = pow(&rat(a, b), e);
        let y = rat(c, d);
        prop_assert_eq!(mul_lopsided(&y, &x), &y * &x);
        prop_assert_eq!(mul_lopsided(&x, &y), &x * &y);
    }

    #[test]
    fn power_matches_repeated_product(a in -20i64..20, b in 1i64..20, e in 0u64..30) {
        let x = rat(a, b);
        let mut acc = ExactRational::one();
        for _ in 0..e {
            acc *= &x;
        }
        prop_assert_eq!(pow(&x, e), acc);
    }
}

#[test]
fn up_probabilities_are_powers() {
    for p in [rat(1, 3), rat(1, 2), rat(9, 10)] {
        let pfa = up_pfa(&p).unwrap();
        for j in 0..=40u64 {
            assert_eq!(accept_prob(&pfa, &"a".repeat(j as usize)).unwrap(), pow(&p, j));
        }
    }
}

#[test]
fn lasvegas_trios_both_directions() {
    for n in 1..=3usize {
        for r in 1..=3usize {
            let pfa = trios_lasvegas_pfa(n, r).unwrap();
            let bound = trios_success_bound(n as u64, r as u64).unwrap();
            let report = lasvegas_success(&pfa, &trios_problem(n, r).unwrap(), r * (3 * n + 1), &bound).unwrap();
            assert!(report.is_solves(), "({n},{r}): {:?}", report.counterexample());
        }
    }
}

#[test]
fn undecided_mass_falls_below_one_over_c() {
    let caps = Caps { max_exact_bits: 1 << 25, ..Caps::default() };
    for c in [3u64, 4, 5] {
        for (m, n) in [(1, 1), (1, 2), (2, 1)] {
            // r = 0 leaves the most mass undecided
            let model = expeq_params(c, m, n).unwrap();
            let d = expeq_compose_capped(&model, &caps).unwrap();
            assert!(d.neutral < rat(1, c as i64), "c={c} m={m} n={n}");
            assert!(d.reject.is_zero());
        }
    }
}

#[test]
fn sampling_matches_exact_probabilities() {
    let mut cases = Vec::new();
    for (i, p) in [rat(1, 3), rat(1, 2), rat(3, 4), rat(9, 10)].iter().enumerate() {
        for j in [1usize, 2, 5] {
            cases.push((up_pfa(p).unwrap(), "a".repeat(j), 40 + i as u64 * 7 + j as u64));
        }
    }
    let trios = trios_lasvegas_pfa(3, 1).unwrap().into_inner();
    for (i, inst) in trios_problem(3, 1).unwrap().instances(10).iter().step_by(9).take(8).enumerate() {
        cases.push((trios.clone(), inst.word.clone(), 900 + i as u64));
    }
    assert_eq!(cases.len(), 20);
    for (pfa, word, seed) in &cases {
        let p = promaton::rational::to_f64(&accept_prob(pfa, word).unwrap());
        let trials = 100_000;
        let f = monte_carlo(pfa, word, trials, *seed).unwrap().accept_frequency();
        let sigma = (p * (1.0 - p) / trials as f64).sqrt();
        assert!((f - p).abs() <= 4.0 * sigma, "{word:?}: {f} vs {p}");
    }
}

#[test]
fn sampling_is_reproducible() {
    let pfa = up_pfa(&rat(1, 2)).unwrap();
    assert_eq!(monte_carlo(&pfa, "aa", 10_000, 7).unwrap(), monte_carlo(&pfa, "aa", 10_000, 7).unwrap());
}
