use num_traits::{One, Zero};

use crate::alphabet::Alphabet;
use crate::automata::{Dfa, Instance, Pfa, PromiseProblem, Role};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::rational::{format_rational, rat, ExactRational};

fn check_p(p: &ExactRational) -> Result<()> {
    if p <= &ExactRational::zero() || p >= &ExactRational::one() {
        return Err(Error::InvalidParameter(format!(
            "p must lie strictly between 0 and 1, got {}",
            format_rational(p)
        )));
    }
    Ok(())
}

/// Two states: `s_ini` stays with probability `p` per symbol, otherwise
/// falls into the rejecting sink.
pub fn up_pfa(p: &ExactRational) -> Result<Pfa> {
    check_p(p)?;
    let one = ExactRational::one();
    let t = [
        (0, 'a', 0, p.clone()),
        (0, 'a', 1, &one - p),
        (1, 'a', 1, one.clone()),
    ];
    Pfa::new(Alphabet::unary(), 0, vec![Role::Accepting, Role::Rejecting], t)?
        .with_labels(vec![Some("s_ini".into()), Some("s_rej".into())])
}

/// `(A_p, R_p)`: the last length with `p^j ≥ 3/4` and the first with `p^j ≤ 1/4`.
pub fn critical_lengths(p: &ExactRational) -> Result<(u64, u64)> {
    critical_lengths_capped(p, &Caps::default())
}

pub fn critical_lengths_capped(p: &ExactRational, caps: &Caps) -> Result<(u64, u64)> {
    check_p(p)?;
    let (high, low) = (rat(3, 4), rat(1, 4));
    let mut power = ExactRational::one();
    let mut j = 0u64;
    let mut last_high = 0u64;
    loop {
        if power >= high {
            last_high = j;
        }
        if power <= low {
            return Ok((last_high, j));
        }
        if j >= caps.max_critical_length {
            return Err(Error::cap("critical length", format!("> {j}"), caps.max_critical_length));
        }
        power *= p;
        j += 1;
    }
}

/// Unary lengths `j` with `p^j ≥ 3/4` (yes) against `p^j ≤ 1/4` (no).
pub fn up_problem(p: &ExactRational) -> Result<PromiseProblem> {
    let (a_p, r_p) = critical_lengths(p)?;
    let len_of = |w: &str| -> Option<u64> { w.chars().all(|c| c == 'a').then(|| w.chars().count() as u64) };
    Ok(PromiseProblem::new(
        format!("up(p={})", format_rational(p)),
        Alphabet::unary(),
        move |w| len_of(w).is_some_and(|j| j <= a_p),
        move |w| len_of(w).is_some_and(|j| j >= r_p),
        move |max_length| {
            (0..=max_length as u64)
                .filter_map(|j| {
                    let w = "a".repeat(j as usize);
                    if j <= a_p {
                        Some(Instance::yes(w))
                    } else if j >= r_p {
                        Some(Instance::no(w))
                    } else {
                        None
                    }
                })
                .collect()
        },
    ))
}

/// Chain of `A_p + 1` accepting states; the last one has no transition.
pub fn up_dfa(p: &ExactRational) -> Result<Dfa> {
    up_dfa_capped(p, &Caps::default())
}

pub fn up_dfa_capped(p: &ExactRational, caps: &Caps) -> Result<Dfa> {
    let (a_p, _) = critical_lengths_capped(p, caps)?;
    let size = a_p + 1;
    if size > caps.max_dfa_states as u64 {
        return Err(Error::cap("DFA states", size, caps.max_dfa_states));
    }
    let size = size as usize;
    let delta = (0..size).map(|q| (q + 1 < size).then_some(q + 1)).collect();
    Dfa::from_table(Alphabet::unary(), 0, vec![true; size], delta)?
        .with_labels((0..size).map(|q| Some(format!("c{q}"))).collect())
}
