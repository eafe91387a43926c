use std::sync::Arc;

use crate::alphabet::Alphabet;
use crate::automata::{Dfa, Instance, PromiseProblem};

/// `a^{2n}` (yes) against `a^{2n+1}` (no) for every `n` in the set `member`.
pub fn parity_problem(member: impl Fn(u64) -> bool + Send + Sync + 'static) -> PromiseProblem {
    let member = Arc::new(member);
    let len_of = |w: &str| -> Option<u64> { w.chars().all(|c| c == 'a').then(|| w.chars().count() as u64) };
    let (m_yes, m_no, m_enum) = (member.clone(), member.clone(), member);
    PromiseProblem::new(
        "parity",
        Alphabet::unary(),
        move |w| len_of(w).is_some_and(|j| j % 2 == 0 && m_yes(j / 2)),
        move |w| len_of(w).is_some_and(|j| j % 2 == 1 && m_no(j / 2)),
        move |max_length| {
            (0..=max_length as u64)
                .filter(|j| m_enum(j / 2))
                .map(|j| {
                    let w = "a".repeat(j as usize);
                    if j % 2 == 0 {
                        Instance::yes(w)
                    } else {
                        Instance::no(w)
                    }
                })
                .collect()
        },
    )
}

/// Two states swapped by every `a`; the initial one accepts.
pub fn parity_dfa() -> Dfa {
    Dfa::new(Alphabet::unary(), 2, 0, [(0, 'a', 1), (1, 'a', 0)], [0])
        .and_then(|d| d.with_labels(vec![Some("s1".into()), Some("s2".into())]))
        .expect("fixed machine")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::promise_check;

    #[test]
    fn examples() {
        let all = parity_problem(|_| true);
        assert!(all.is_yes("aaaa"));
        assert!(all.is_no("aaa"));
        assert!(promise_check(&parity_dfa(), &all, 10).unwrap().is_solves());
        let none = parity_problem(|_| false);
        assert!(none.instances(20).is_empty());
        let even = parity_problem(|n| n % 2 == 0);
        assert!(even.is_yes("aaaa") && !even.is_yes("aa"));
        assert!(promise_check(&parity_dfa(), &even, 20).unwrap().is_solves());
    }
}
