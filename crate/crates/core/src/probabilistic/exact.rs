use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::automata::{
    ensure_same_alphabet, Class, Counterexample, Pfa, PromiseProblem, Role, VerificationReport,
};
use crate::error::{Error, Result};
use crate::rational::{format_rational, pow, rat, serde_rational, ExactRational};

/// Final probability mass split by the role of the halting state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutcomeDistribution {
    #[serde(with = "serde_rational")]
    pub accept: ExactRational,
    #[serde(with = "serde_rational")]
    pub reject: ExactRational,
    #[serde(with = "serde_rational")]
    pub neutral: ExactRational,
}

impl OutcomeDistribution {
    pub fn total(&self) -> ExactRational {
        &self.accept + &self.reject + &self.neutral
    }
}

/// Distribution over states after reading `word`, plus the mass that got
/// blocked by an undefined row before the end of the input.
fn propagate(pfa: &Pfa, word: &[usize]) -> (Vec<ExactRational>, ExactRational) {
    let n = pfa.state_count();
    let mut dist = vec![ExactRational::zero(); n];
    dist[pfa.initial()] = ExactRational::one();
    let mut blocked = ExactRational::zero();
    for &a in word {
        let mut next = vec![ExactRational::zero(); n];
        for (q, mass) in dist.iter().enumerate() {
            if mass.is_zero() {
                continue;
            }
            let row = pfa.row(q, a);
            if row.is_empty() {
                blocked += mass;
            }
            for (to, p) in row {
                next[*to] += mass * p;
            }
        }
        dist = next;
    }
    (dist, blocked)
}

/// Probability of ending the whole input in an accepting state.
pub fn accept_prob(pfa: &Pfa, word: &str) -> Result<ExactRational> {
    Ok(outcome_dist(pfa, word)?.accept)
}

/// Exact accept / reject / neutral split. Mass that halts before the end of
/// the input (undefined row) counts as neutral.
pub fn outcome_dist(pfa: &Pfa, word: &str) -> Result<OutcomeDistribution> {
    let encoded = pfa.alphabet().encode(word)?;
    let (dist, blocked) = propagate(pfa, &encoded);
    let mut out = OutcomeDistribution {
        accept: ExactRational::zero(),
        reject: ExactRational::zero(),
        neutral: blocked,
    };
    for (q, mass) in dist.into_iter().enumerate() {
        match pfa.role(q) {
            Role::Accepting => out.accept += mass,
            Role::Rejecting => out.reject += mass,
            Role::Neutral => out.neutral += mass,
        }
    }
    Ok(out)
}

/// Checks the Las Vegas contract on every enumerated instance: never the
/// wrong decisive answer and the right one with probability ≥ `threshold`.
///
/// The report records `min_success`, the smallest correct-answer
/// probability seen.
pub fn lasvegas_success(
    pfa: &Pfa,
    problem: &PromiseProblem,
    max_length: usize,
    threshold: &ExactRational,
) -> Result<VerificationReport> {
    ensure_same_alphabet(pfa.alphabet(), problem)?;
    let instances = problem.instances(max_length);
    let results: Vec<(ExactRational, Option<Counterexample>)> = instances
        .par_iter()
        .map(|inst| {
            let d = outcome_dist(pfa, &inst.word)?;
            let (success, wrong, expected) = match inst.class {
                Class::Yes => (d.accept.clone(), &d.reject, "accept"),
                Class::No => (d.reject.clone(), &d.accept, "reject"),
            };
            let violated = !wrong.is_zero() || &success < threshold;
            let ce = violated.then(|| Counterexample {
                word: inst.word.clone(),
                expected: format!("{expected} with probability ≥ {}, never the opposite", format_rational(threshold)),
                observed: format!(
                    "accept {}, reject {}, neutral {}",
                    format_rational(&d.accept),
                    format_rational(&d.reject),
                    format_rational(&d.neutral)
                ),
            });
            Ok((success, ce))
        })
        .collect::<Result<_>>()?;
    let min_success = results.iter().map(|(s, _)| s.clone()).min();
    let first_failure = results.into_iter().find_map(|(_, ce)| ce);
    let mut report = match first_failure {
        Some(ce) => VerificationReport::fails(ce),
        None => VerificationReport::solves(),
    };
    report.record("max_length", max_length);
    report.record("instances", instances.len());
    report.record("threshold", threshold.clone());
    report.record("states", pfa.state_count());
    if let Some(m) = min_success {
        report.record("min_success", m);
    }
    Ok(report)
}

/// `1 − ((n−1)/n)^r`.
pub fn trios_success_bound(n: u64, r: u64) -> Result<ExactRational> {
    if n == 0 || r == 0 {
        return Err(Error::InvalidParameter("n and r must be positive".into()));
    }
    Ok(ExactRational::one() - pow(&rat(n as i64 - 1, n as i64), r))
}

/// Expected number of rounds of a restarting machine with per-round
/// success `σ`: the mean of a geometric law, `1/σ`.
pub fn expected_rounds(success: &ExactRational) -> Result<ExactRational> {
    if success.is_zero() {
        return Err(Error::Divergence("success probability 0: the restart loop never ends".into()));
    }
    if success < &ExactRational::zero() || success > &ExactRational::one() {
        return Err(Error::InvalidParameter(format!(
            "success probability {} outside (0,1]",
            format_rational(success)
        )));
    }
    Ok(success.recip())
}

/// `(1 + 1/(e^n − 1))^2`, the float bound on the expected sweep count of
/// the restarting TRIOS(n, n²) machine.
pub fn sweep_bound(n: u32) -> f64 {
    let x = 1.0 + 1.0 / (f64::from(n).exp() - 1.0);
    x * x
}
