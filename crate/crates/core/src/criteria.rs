//! The acceptance suite, shared by the `acceptance` test target and the
//! CLI's `reproduce-all`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::automata::{promise_check, Class, Dfa, Nfa, PromiseProblem};
use crate::constructions::{
    critical_lengths, evenodd_afa_epsfree, evenodd_afa_rt, evenodd_dfa, evenodd_problem, trios_dfa,
    trios_lasvegas_pfa, trios_problem, up_dfa, up_pfa, up_problem,
};
use crate::conversions::{
    bound_2nfa_to_dfa, bound_afa_to_dfa, bound_svfa_to_dfa, dfa_equivalent, dfa_minimize, unary_afa_to_dfa,
};
use crate::error::{Error, Result};
use crate::lab::{
    expeq_pumping_check, min_dfa_size, min_unary_dfa_size, min_unary_nfa_size, pumping_check, MachineKind, Pumpable,
    SearchSpec,
};
use crate::probabilistic::{
    accept_prob, expected_rounds, expeq_compose_capped, expeq_compose_enclosure, expeq_params, lasvegas_success,
    monte_carlo, outcome_dist, sweep_bound, trios_success_bound, RoundModel,
};
use crate::rational::{format_rational, pow, rat, to_f64, ExactRational};
use crate::Caps;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Fast,
    Slow,
}

impl std::str::FromStr for Tier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Tier::Fast),
            "slow" => Ok(Tier::Slow),
            other => Err(Error::InvalidParameter(format!("unknown tier {other:?} (expected fast or slow)"))),
        }
    }
}

/// Result of one criterion. Timing is kept out of the serialized form so
/// summaries stay byte-stable.
#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub budget_seconds: u64,
    pub measured: BTreeMap<String, String>,
    pub failures: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CriterionOutcome {
    /// `PASS 3 ...` / `FAIL 3 ...` summary line.
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let measured: Vec<String> = self.measured.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut line = format!(
            "{status} {:<3} {} [{:.2}s / {}s] {}",
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget_seconds,
            measured.join(" ")
        );
        for f in &self.failures {
            line.push_str(&format!("\n       ! {f}"));
        }
        line
    }
}

#[derive(Default)]
struct Checks {
    measured: BTreeMap<String, String>,
    failures: Vec<String>,
}

impl Checks {
    fn record(&mut self, name: impl Into<String>, value: impl ToString) {
        self.measured.insert(name.into(), value.to_string());
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

struct Criterion {
    id: &'static str,
    title: &'static str,
    budget_seconds: u64,
    run: fn(Tier, &mut Checks) -> Result<()>,
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: "1", title: "state-count formulas", budget_seconds: 1, run: state_counts },
    Criterion { id: "2", title: "EvenOdd AFA correctness", budget_seconds: 10, run: evenodd_correctness },
    Criterion { id: "3", title: "EvenOdd lower bound slice", budget_seconds: 60, run: evenodd_lower_bound },
    Criterion { id: "4", title: "determinization pipeline", budget_seconds: 60, run: determinization },
    Criterion { id: "5a", title: "trade-off formulas", budget_seconds: 10, run: tradeoffs },
    Criterion { id: "5b", title: "svfa bound below 2^{0.529n}", budget_seconds: 1, run: svfa_exponent },
    Criterion { id: "6", title: "Las Vegas TRIOS", budget_seconds: 120, run: lasvegas_trios },
    Criterion { id: "7", title: "TRIOS DFA lower bound", budget_seconds: 600, run: trios_lower_bound },
    Criterion { id: "8", title: "U_p analysis", budget_seconds: 60, run: up_analysis },
    Criterion { id: "9", title: "ExpEQ composition", budget_seconds: 60, run: expeq_composition },
    Criterion { id: "10", title: "Monte Carlo consistency", budget_seconds: 60, run: monte_carlo_consistency },
    Criterion { id: "11", title: "restarting analysis", budget_seconds: 1, run: restarting },
];

/// Identifiers of every criterion, in suite order.
pub fn criterion_ids() -> Vec<&'static str> {
    CRITERIA.iter().map(|c| c.id).collect()
}

/// Runs one criterion; `None` for an unknown id.
pub fn run_criterion(id: &str, tier: Tier) -> Option<CriterionOutcome> {
    let c = CRITERIA.iter().find(|c| c.id == id)?;
    let mut checks = Checks::default();
    let start = Instant::now();
    if let Err(e) = (c.run)(tier, &mut checks) {
        checks.failures.push(format!("error: {e}"));
    }
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(c.budget_seconds * if tier == Tier::Slow { 30 } else { 1 });
    if elapsed > budget {
        checks.failures.push(format!("took {:.1}s, budget {}s", elapsed.as_secs_f64(), budget.as_secs()));
    }
    Some(CriterionOutcome {
        id: c.id,
        title: c.title,
        passed: checks.failures.is_empty(),
        budget_seconds: budget.as_secs(),
        measured: checks.measured,
        failures: checks.failures,
        elapsed,
    })
}

pub fn run_all(tier: Tier) -> Vec<CriterionOutcome> {
    CRITERIA.iter().filter_map(|c| run_criterion(c.id, tier)).collect()
}

fn state_counts(_: Tier, c: &mut Checks) -> Result<()> {
    for k in 1..=8u32 {
        let n = evenodd_afa_rt(k)?.state_count();
        c.check(n == 7 * k as usize + 2, || format!("evenodd_afa_rt({k}) has {n} states"));
    }
    for k in 3..=8u32 {
        let n = evenodd_afa_epsfree(k)?.state_count();
        c.check(n == 11 * k as usize - 14, || format!("evenodd_afa_epsfree({k}) has {n} states"));
    }
    for n in 1..=8usize {
        for r in 1..=3usize {
            let s = trios_lasvegas_pfa(n, r)?.state_count();
            c.check(s == 4 * n + 3, || format!("trios_lasvegas_pfa({n},{r}) has {s} states"));
        }
    }
    for k in 1..=10u32 {
        let n = evenodd_dfa(k)?.state_count();
        c.check(n == 1 << (k + 1), || format!("evenodd_dfa({k}) has {n} states"));
    }
    for p in [rat(1, 2), rat(9, 10)] {
        let (a, _) = critical_lengths(&p)?;
        let n = up_dfa(&p)?.state_count();
        c.check(n as u64 == a + 1, || format!("up_dfa({}) has {n} states, A_p = {a}", format_rational(&p)));
    }
    c.record("afa_rt(8)", evenodd_afa_rt(8)?.state_count());
    c.record("afa_epsfree(8)", evenodd_afa_epsfree(8)?.state_count());
    Ok(())
}

/// Independent classification: yes iff the length is an even multiple of
/// 2^k, no iff an odd one.
fn divisibility_class(k: u32, len: usize) -> Option<Class> {
    let block = 1usize << k;
    len.is_multiple_of(block).then(|| if (len / block).is_multiple_of(2) { Class::Yes } else { Class::No })
}

fn evenodd_correctness(_: Tier, c: &mut Checks) -> Result<()> {
    let mut instances = 0;
    for k in 1..=5u32 {
        let max_length = 1usize << (k + 3);
        let problem = evenodd_problem(k)?;
        let listed = problem.instances(max_length);
        let expected: Vec<(usize, Class)> =
            (0..=max_length).filter_map(|len| divisibility_class(k, len).map(|cl| (len, cl))).collect();
        let got: Vec<(usize, Class)> = listed.iter().map(|i| (i.word.len(), i.class)).collect();
        c.check(got == expected, || format!("evenodd_problem({k}) disagrees with divisibility"));
        instances += listed.len();

        let rt = promise_check(&evenodd_afa_rt(k)?, &problem, max_length)?;
        c.check(rt.is_solves(), || format!("evenodd_afa_rt({k}): {:?}", rt.counterexample()));
        let kk = k.max(3);
        let eps_len = 1usize << (kk + 3);
        let epsfree = promise_check(&evenodd_afa_epsfree(kk)?, &evenodd_problem(kk)?, eps_len)?;
        c.check(epsfree.is_solves(), || format!("evenodd_afa_epsfree({kk}): {:?}", epsfree.counterexample()));
    }
    c.record("instances", instances);
    Ok(())
}

fn random_unary_nfa(rng: &mut ChaCha8Rng, max_states: usize) -> Result<Nfa> {
    let n = rng.random_range(1..=max_states);
    let mut transitions = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if rng.random_bool(0.3) {
                transitions.push((p, Some('a'), q));
            }
            if rng.random_bool(0.05) && p != q {
                transitions.push((p, None, q));
            }
        }
    }
    let accepting: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
    Nfa::new(Alphabet::unary(), n, 0, transitions, accepting)
}

fn random_dfa(rng: &mut ChaCha8Rng, alphabet: &Alphabet, max_states: usize) -> Result<Dfa> {
    let n = rng.random_range(1..=max_states);
    let choices: Vec<Option<usize>> = std::iter::once(None).chain((0..n).map(Some)).collect();
    let delta = (0..n * alphabet.len()).map(|_| *choices.choose(rng).unwrap_or(&None)).collect();
    let accepting = (0..n).map(|_| rng.random_bool(0.5)).collect();
    Dfa::from_table(alphabet.clone(), 0, accepting, delta)
}

/// `max(4·2^{k+1}, 2^{2k+1})`. A lasso with tail `ℓ` and period `d < 2^{k+1}`
/// sends `2^k·j` and `2^k·(j+g)` to one state for `g = d/gcd(d, 2^k)`, which
/// is odd, so a yes and a no instance collide below `2^k·(⌈ℓ/2^k⌉ + g)`.
pub fn evenodd_search_length(k: u32) -> usize {
    (4usize << (k + 1)).max(1 << (2 * k + 1))
}

fn evenodd_lower_bound(tier: Tier, c: &mut Checks) -> Result<()> {
    let ks: &[u32] = match tier {
        Tier::Fast => &[1, 2],
        Tier::Slow => &[1, 2, 3],
    };
    for &k in ks {
        let spec = SearchSpec {
            kind: MachineKind::UnaryDfa,
            max_states: 18,
            problem: evenodd_problem(k)?,
            max_length: evenodd_search_length(k),
        };
        let found = min_unary_dfa_size(&spec)?;
        let want = 1usize << (k + 1);
        c.record(format!("min_dfa(k={k})"), found.size.map_or("none".into(), |s| s.to_string()));
        c.check(found.size == Some(want), || format!("min_unary_dfa_size(k={k}) = {:?}, want {want}", found.size));
        c.check(found.witness_check.as_ref().is_some_and(|r| r.is_solves()), || {
            format!("witness for k={k} fails re-validation")
        });
    }
    let spec = SearchSpec { kind: MachineKind::UnaryNfa, max_states: 4, problem: evenodd_problem(1)?, max_length: 16 };
    let nfa = min_unary_nfa_size(&spec)?;
    c.record("min_nfa(k=1)", nfa.size.map_or("none".into(), |s| s.to_string()));
    c.check(nfa.size == Some(4), || format!("min_unary_nfa_size(k=1) = {:?}", nfa.size));

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut strict_growth = 0;
    for i in 0..200 {
        let nfa = random_unary_nfa(&mut rng, 5)?;
        let report = pumping_check(Pumpable::Nfa(&nfa), 6, &[1])?;
        c.check(report.is_solves(), || format!("random NFA #{i} violates pumping: {:?}", report.counterexample()));
        if report.get("equal_sets") == Some(&"false".into()) {
            strict_growth += 1;
        }
        let dfa = random_dfa(&mut rng, &Alphabet::unary(), 5)?;
        let report = pumping_check(Pumpable::Dfa(&dfa), 6, &[1, 2])?;
        c.check(report.is_solves(), || format!("random DFA #{i} violates pumping: {:?}", report.counterexample()));
    }
    c.record("pumping_machines", 400);
    c.record("nfa_strict_inclusions", strict_growth);
    Ok(())
}

fn determinization(_: Tier, c: &mut Checks) -> Result<()> {
    for k in 1..=2u32 {
        let afa = evenodd_afa_rt(k)?;
        let vectors = unary_afa_to_dfa(&afa)?;
        let bound = 1u64 << (7 * k + 2);
        c.record(format!("vectors(k={k})"), vectors.state_count());
        c.check((vectors.state_count() as u64) <= bound, || {
            format!("k={k}: {} reachable vectors > 2^{}", vectors.state_count(), 7 * k + 2)
        });
        let minimal = dfa_minimize(&vectors);
        c.record(format!("minimal(k={k})"), minimal.state_count());
        c.check(minimal.state_count() == 1 << (k + 1), || {
            format!("k={k}: minimized to {} states", minimal.state_count())
        });
        let reference = evenodd_dfa(k)?;
        c.check(dfa_equivalent(&minimal, &reference), || format!("k={k}: not equivalent to evenodd_dfa"));
    }
    Ok(())
}

fn tradeoffs(_: Tier, c: &mut Checks) -> Result<()> {
    let first = [1u32, 7];
    for n in 1..=12u64 {
        let v = bound_2nfa_to_dfa(n)?.value;
        if let Some(&want) = first.get(n as usize - 1) {
            c.check(v == BigUint::from(want), || format!("bound_2nfa_to_dfa({n}) = {v}"));
        }
        let cap = BigUint::one() << (n * n + n);
        c.check(v <= cap, || format!("bound_2nfa_to_dfa({n}) = {v} exceeds 2^{}", n * n + n));
    }
    c.record("2nfa(12)", bound_2nfa_to_dfa(12)?.value);
    for (n, want) in [(1, 4u32), (2, 256)] {
        let v = bound_afa_to_dfa(n)?.value;
        c.check(v == BigUint::from(want), || format!("bound_afa_to_dfa({n}) = {v}"));
    }
    for (n, want) in [(4, 4u32), (7, 10)] {
        let v = bound_svfa_to_dfa(n)?;
        c.check(v.is_exact() && v.value == BigUint::from(want), || format!("bound_svfa_to_dfa({n}) = {}", v.value));
    }
    Ok(())
}

fn svfa_exponent(_: Tier, c: &mut Checks) -> Result<()> {
    let mut violations = Vec::new();
    for n in 1..=30u64 {
        let v = bound_svfa_to_dfa(n)?.as_f64();
        let cap = 2f64.powf(0.529 * n as f64);
        if v > cap + 1e-9 {
            violations.push(n);
            c.check(false, || format!("n={n}: 1+3^((n-1)/3) = {v:.6} > 2^(0.529n) = {cap:.6}"));
        }
    }
    c.record("violations", format!("{violations:?}"));
    Ok(())
}

fn sample_instances(problem: &PromiseProblem, max_length: usize, caps: &Caps) -> Vec<crate::automata::Instance> {
    let all = problem.instances(max_length);
    if all.len() <= caps.max_enumeration {
        return all;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    all.choose_multiple(&mut rng, 500).cloned().collect()
}

fn lasvegas_trios(_: Tier, c: &mut Checks) -> Result<()> {
    let caps = Caps::default();
    let mut total = 0;
    for n in 1..=3usize {
        for r in 1..=2usize {
            let pfa = trios_lasvegas_pfa(n, r)?;
            let problem = trios_problem(n, r)?;
            let bound = trios_success_bound(n as u64, r as u64)?;
            let max_length = r * (3 * n + 1);
            let instances = sample_instances(&problem, max_length, &caps);
            total += instances.len();
            let mut min_success: Option<ExactRational> = None;
            for inst in &instances {
                let d = outcome_dist(&pfa, &inst.word)?;
                let (wrong, success) = match inst.class {
                    Class::Yes => (&d.reject, &d.accept),
                    Class::No => (&d.accept, &d.reject),
                };
                c.check(wrong.is_zero() && success >= &bound, || {
                    format!("({n},{r}) {}: accept {}, reject {}", inst.word, d.accept, d.reject)
                });
                if min_success.as_ref().is_none_or(|m| success < m) {
                    min_success = Some(success.clone());
                }
            }
            if let Some(m) = min_success {
                c.record(format!("min_success({n},{r})"), format_rational(&m));
            }
            // same verdict through the parallel engine
            if instances.len() <= caps.max_enumeration {
                let report = lasvegas_success(&pfa, &problem, max_length, &bound)?;
                c.check(report.is_solves(), || format!("lasvegas_success({n},{r}) disagrees"));
            }
        }
    }
    c.record("instances", total);
    Ok(())
}

fn trios_lower_bound(_: Tier, c: &mut Checks) -> Result<()> {
    let problem = trios_problem(2, 1)?;
    let full = 7;
    let spec = SearchSpec { kind: MachineKind::Dfa, max_states: 3, problem: problem.clone(), max_length: full };
    let found = min_dfa_size(&spec)?;
    c.record("instances", found.instances);
    c.record("solver_with_3_states", found.size.is_some());
    c.check(found.size.is_none(), || format!("a {:?}-state DFA solves trios_problem(2,1)", found.size));
    let dfa = trios_dfa(2, 1)?;
    let report = promise_check(&dfa, &problem, full)?;
    c.record("trios_dfa_states", dfa.state_count());
    c.check(dfa.state_count() >= 4 && report.is_solves(), || "trios_dfa(2,1) does not solve".into());
    Ok(())
}

fn up_analysis(_: Tier, c: &mut Checks) -> Result<()> {
    for p in [rat(1, 2), rat(3, 5), rat(9, 10)] {
        let label = format_rational(&p);
        let pfa = up_pfa(&p)?;
        for j in 0..=40u64 {
            let got = accept_prob(&pfa, &"a".repeat(j as usize))?;
            c.check(got == pow(&p, j), || format!("p={label}: accept_prob(a^{j}) = {got}"));
        }
        let (a, r) = critical_lengths(&p)?;
        c.record(format!("critical({label})"), format!("({a},{r})"));
        let problem = up_problem(&p)?;
        let report = promise_check(&up_dfa(&p)?, &problem, r as usize + 5)?;
        c.check(report.is_solves(), || format!("up_dfa({label}) fails on {:?}", report.counterexample()));
        let spec = SearchSpec {
            kind: MachineKind::UnaryDfa,
            max_states: 18,
            problem,
            max_length: (r + a + 2) as usize,
        };
        let found = min_unary_dfa_size(&spec)?;
        c.record(format!("min_dfa({label})"), found.size.map_or("none".into(), |s| s.to_string()));
        c.check(found.size == Some(a as usize + 1), || format!("p={label}: min size {:?}, A_p+1 = {}", found.size, a + 1));
    }
    let half = critical_lengths(&rat(1, 2))?;
    let nine = critical_lengths(&rat(9, 10))?;
    c.check(half == (0, 2), || format!("critical_lengths(1/2) = {half:?}"));
    c.check(nine == (2, 14), || format!("critical_lengths(9/10) = {nine:?}"));
    Ok(())
}

/// `(a_t, r_t, n_t)` lower/upper bounds, exact when affordable.
fn composed_bounds(model: &RoundModel) -> Result<[(ExactRational, ExactRational); 3]> {
    match expeq_compose_capped(model, &Caps::default()) {
        Ok(d) => Ok([(d.accept.clone(), d.accept), (d.reject.clone(), d.reject), (d.neutral.clone(), d.neutral)]),
        Err(e) if e.is_resource_cap() => {
            let e = expeq_compose_enclosure(model, 256)?;
            Ok([(e.accept.lo, e.accept.hi), (e.reject.lo, e.reject.hi), (e.neutral.lo, e.neutral.hi)])
        }
        Err(e) => Err(e),
    }
}

fn expeq_composition(_: Tier, c: &mut Checks) -> Result<()> {
    let mut exact = 0;
    let mut enclosed = 0;
    for cc in [3u64, 10, 100] {
        let one_over_c = rat(1, cc as i64);
        let target = ExactRational::one() - rat(2, cc as i64 + 1);
        for (m, n) in [(1u64, 1u64), (1, 2), (2, 1)] {
            let base = expeq_params(cc, m, n)?;
            if expeq_compose_capped(&base, &Caps::default()).is_ok() {
                exact += 1;
            } else {
                enclosed += 1;
            }
            if m == n {
                let model = base.extremal_yes()?;
                let [(a_lo, _), _, (_, n_hi)] = composed_bounds(&model)?;
                c.check(n_hi < one_over_c, || format!("c={cc} m=n={m}: n_t not below 1/c"));
                c.check(a_lo > target, || format!("c={cc} m=n={m}: a_t not above 1-2/(c+1)"));
            } else {
                let model = base.extremal_no()?;
                let [_, (r_lo, _), _] = composed_bounds(&model)?;
                c.check(r_lo > target, || format!("c={cc} m={m} n={n}: r_t not above 1-2/(c+1)"));
            }
        }
    }
    c.record("exact_cases", exact);
    c.record("enclosure_cases", enclosed);

    let sigma = Alphabet::new(['a', 'b'])?;
    let mut rng = ChaCha8Rng::seed_from_u64(0xe9);
    for i in 0..200 {
        let dfa = random_dfa(&mut rng, &sigma, 4)?;
        for t in 1..=3 {
            let report = expeq_pumping_check(&dfa, t)?;
            c.check(report.is_solves(), || format!("random DFA #{i}, t={t}: {:?}", report.counterexample()));
        }
    }
    c.record("pumping_dfas", 200);
    Ok(())
}

fn monte_carlo_consistency(_: Tier, c: &mut Checks) -> Result<()> {
    const TRIALS: u64 = 100_000;
    let up = up_pfa(&rat(9, 10))?;
    let trios = trios_lasvegas_pfa(2, 2)?;
    let mut cases: Vec<(&crate::automata::Pfa, String, u64)> = Vec::new();
    for j in 0..10u64 {
        cases.push((&up, "a".repeat(j as usize * 3), 1000 + j));
    }
    for (i, inst) in trios_problem(2, 2)?.instances(14).iter().step_by(9).take(10).enumerate() {
        cases.push((&*trios, inst.word.clone(), 2000 + i as u64));
    }
    let mut worst = 0.0f64;
    for (pfa, word, seed) in &cases {
        let p = to_f64(&accept_prob(pfa, word)?);
        let sample = monte_carlo(pfa, word, TRIALS, *seed)?;
        let sigma = (p * (1.0 - p) / TRIALS as f64).sqrt();
        let dev = (sample.accept_frequency() - p).abs();
        let ok = if sigma == 0.0 { dev == 0.0 } else { dev <= 4.0 * sigma };
        if sigma > 0.0 {
            worst = worst.max(dev / sigma);
        }
        c.check(ok, || format!("word {word:?} seed {seed}: frequency {} vs {p}", sample.accept_frequency()));
    }
    c.record("cases", cases.len());
    c.record("worst_sigma", format!("{worst:.3}"));
    Ok(())
}

fn restarting(_: Tier, c: &mut Checks) -> Result<()> {
    for s in [rat(1, 1), rat(1, 2), rat(3, 7), rat(1, 1000)] {
        let e = expected_rounds(&s)?;
        c.check(e == s.recip(), || format!("expected_rounds({s}) = {e}"));
    }
    let sigma = trios_success_bound(3, 9)?;
    let rounds = to_f64(&expected_rounds(&sigma)?);
    let bound = sweep_bound(3);
    c.record("sigma", format_rational(&sigma));
    c.record("expected_rounds", format!("{rounds:.9}"));
    c.record("sweep_bound", format!("{bound:.9}"));
    c.check(rounds <= bound + 1e-9, || format!("1/σ = {rounds} exceeds {bound}"));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let ids = criterion_ids();
        let set: std::collections::BTreeSet<_> = ids.iter().collect();
        assert_eq!(set.len(), ids.len());
        assert!(run_criterion("nope", Tier::Fast).is_none());
    }

    #[test]
    fn tier_parsing() {
        assert_eq!("fast".parse::<Tier>().unwrap(), Tier::Fast);
        assert!("medium".parse::<Tier>().is_err());
    }
}
