use crate::alphabet::Alphabet;
use crate::automata::{Afa, Dfa, Instance, PromiseProblem};
use crate::caps::Caps;
use crate::error::{Error, Result};

use super::States;

fn check_k(k: u32) -> Result<()> {
    if k == 0 || k > 62 {
        return Err(Error::InvalidParameter(format!("k must be in 1..=62, got {k}")));
    }
    Ok(())
}

/// `a^{m·2^k}`: yes for even `m`, no for odd `m`.
pub fn evenodd_problem(k: u32) -> Result<PromiseProblem> {
    check_k(k)?;
    let block = 1u64 << k;
    let class = move |len: u64| -> Option<bool> {
        len.is_multiple_of(block).then(|| (len / block).is_multiple_of(2))
    };
    let len_of = |w: &str| -> Option<u64> { w.chars().all(|c| c == 'a').then(|| w.chars().count() as u64) };
    Ok(PromiseProblem::new(
        format!("evenodd(k={k})"),
        Alphabet::unary(),
        move |w| len_of(w).and_then(class) == Some(true),
        move |w| len_of(w).and_then(class) == Some(false),
        move |max_length| {
            (0..=max_length as u64)
                .step_by(block as usize)
                .map(|len| {
                    let w = "a".repeat(len as usize);
                    if class(len) == Some(true) {
                        Instance::yes(w)
                    } else {
                        Instance::no(w)
                    }
                })
                .collect()
        },
    ))
}

/// Cyclic counter modulo `2^{k+1}`, accepting at counter 0.
pub fn evenodd_dfa(k: u32) -> Result<Dfa> {
    evenodd_dfa_capped(k, &Caps::default())
}

pub fn evenodd_dfa_capped(k: u32, caps: &Caps) -> Result<Dfa> {
    check_k(k)?;
    let size = 1u128 << (k + 1);
    if size > caps.max_dfa_states as u128 {
        return Err(Error::cap("DFA states", size, caps.max_dfa_states));
    }
    let size = size as usize;
    let delta = (0..size).map(|q| Some((q + 1) % size)).collect();
    let mut accepting = vec![false; size];
    accepting[0] = true;
    Dfa::from_table(Alphabet::unary(), 0, accepting, delta)?
        .with_labels((0..size).map(|q| Some(format!("c{q}"))).collect())
}

fn bit(i: u32, x: u32) -> String {
    format!("{i}_{x}")
}

fn allone(i: u32, x: u32) -> String {
    format!("{i}_{x},allone")
}

fn exzero_x(i: u32, x: u32) -> String {
    format!("{i}_{x},exzero")
}

fn exzero(i: u32) -> String {
    format!("{i}_exzero")
}

fn delayed(i: u32, x: u32, primes: usize) -> String {
    format!("{i}{}_{x}", "'".repeat(primes))
}

struct RtLayout {
    states: States,
    s_ini: usize,
}

fn rt_states(k: u32) -> RtLayout {
    let mut states = States::default();
    for i in (0..=k).rev() {
        for x in 0..2 {
            states.add(bit(i, x));
        }
    }
    for i in (1..=k).rev() {
        for x in 0..2 {
            states.add(allone(i, x));
        }
    }
    for i in (1..=k).rev() {
        for x in 0..2 {
            states.add(exzero_x(i, x));
        }
    }
    for i in (2..=k).rev() {
        states.add(exzero(i));
    }
    let s_ini = states.add("s_ini");
    RtLayout { states, s_ini }
}

/// Builds the transition list; `target(i, x, primes)` names the state a
/// process for bit `i = x` is sent to after `primes` pending delay steps.
fn rt_transitions(
    k: u32,
    st: &States,
    delay: bool,
) -> Vec<(usize, Option<char>, usize)> {
    let d = |i: u32, x: u32, primes: usize| -> usize {
        if delay {
            st.get(&delayed(i, x, primes))
        } else {
            st.get(&bit(i, x))
        }
    };
    let mut t = Vec::new();
    for x in 0..2 {
        for i in 1..=k {
            let q = st.get(&bit(i, x));
            t.push((q, Some('a'), st.get(&exzero_x(i, x))));
            t.push((q, Some('a'), st.get(&allone(i, 1 - x))));
        }
        t.push((st.get(&bit(0, x)), Some('a'), d(0, 1 - x, 3)));
        for i in 1..=k {
            let q = st.get(&allone(i, x));
            t.push((q, None, d(i, x, 2)));
            for j in 0..i {
                t.push((q, None, d(j, 1, 2)));
            }
        }
        for i in 2..=k {
            let q = st.get(&exzero_x(i, x));
            t.push((q, None, d(i, x, 2)));
            t.push((q, None, st.get(&exzero(i))));
        }
        let q = st.get(&exzero_x(1, x));
        t.push((q, None, d(1, x, 2)));
        t.push((q, None, d(0, 0, 2)));
    }
    for i in 2..=k {
        let q = st.get(&exzero(i));
        for j in 0..i {
            t.push((q, None, d(j, 0, 1)));
        }
    }
    t.push((st.get("s_ini"), Some('a'), st.get(&allone(k, 1))));
    if delay {
        for i in 0..=k {
            for x in 0..2 {
                t.push((d(i, x, 2), None, d(i, x, 1)));
                t.push((d(i, x, 1), None, st.get(&bit(i, x))));
            }
        }
        for x in 0..2 {
            t.push((d(0, x, 3), None, d(0, x, 2)));
        }
    }
    t
}

fn existential_and_accepting(k: u32, st: &States) -> (Vec<usize>, Vec<usize>) {
    let mut existential = Vec::new();
    let mut accepting = vec![st.get("s_ini")];
    for i in 0..=k {
        for x in 0..2 {
            existential.push(st.get(&bit(i, x)));
        }
        accepting.push(st.get(&bit(i, 0)));
    }
    for i in 2..=k {
        existential.push(st.get(&exzero(i)));
    }
    (existential, accepting)
}

/// Realtime alternating automaton with `7k+2` states.
///
/// The processes `i_x` guess bit `i` of the remaining length counter and
/// verify the guesses while the counter is decremented one symbol at a time.
pub fn evenodd_afa_rt(k: u32) -> Result<Afa> {
    check_k(k)?;
    let RtLayout { states, s_ini } = rt_states(k);
    let transitions = rt_transitions(k, &states, false);
    let (existential, accepting) = existential_and_accepting(k, &states);
    Afa::new(Alphabet::unary(), states.len(), s_ini, transitions, accepting, existential, 2)?
        .with_labels(states.labels())
}

/// ε-free alternating automaton with `11k−14` states, `k ≥ 3`.
///
/// Starts from the realtime machine for `k−2`, pads every step to one
/// symbol plus exactly three ε-moves, then reads a symbol on every ε-move.
pub fn evenodd_afa_epsfree(k: u32) -> Result<Afa> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("the ε-free machine needs k ≥ 3, got {k}")));
    }
    check_k(k)?;
    let base = k - 2;
    let RtLayout { mut states, s_ini } = rt_states(base);
    let mut delay_states = Vec::new();
    for i in (0..=base).rev() {
        for x in 0..2 {
            delay_states.push(states.add(delayed(i, x, 1)));
            delay_states.push(states.add(delayed(i, x, 2)));
        }
    }
    for x in 0..2 {
        delay_states.push(states.add(delayed(0, x, 3)));
    }
    let transitions = rt_transitions(base, &states, true)
        .into_iter()
        .map(|(from, _, to)| (from, Some('a'), to));
    let (mut existential, accepting) = existential_and_accepting(base, &states);
    existential.extend(delay_states);
    Afa::new(Alphabet::unary(), states.len(), s_ini, transitions, accepting, existential, 0)?
        .with_labels(states.labels())
}
