use std::collections::HashMap;
use std::collections::VecDeque;

use crate::automata::{Dfa, Nfa};
use crate::caps::Caps;
use crate::error::{Error, Result};

fn members(set: &[bool]) -> Vec<usize> {
    set.iter().enumerate().filter_map(|(q, &b)| b.then_some(q)).collect()
}

fn set_label(set: &[usize]) -> String {
    let inner: Vec<String> = set.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// Subset construction over reachable ε-closed sets.
///
/// The empty set is not materialized; its transitions stay undefined.
pub fn nfa_to_dfa(nfa: &Nfa) -> Result<Dfa> {
    nfa_to_dfa_capped(nfa, &Caps::default())
}

pub fn nfa_to_dfa_capped(nfa: &Nfa, caps: &Caps) -> Result<Dfa> {
    let sigma = nfa.alphabet().len();
    let start = nfa.closure_of(nfa.initial());
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut sets: Vec<Vec<bool>> = Vec::new();
    let mut queue = VecDeque::new();
    index.insert(members(&start), 0);
    sets.push(start);
    queue.push_back(0);
    let mut delta: Vec<Option<usize>> = Vec::new();
    while let Some(id) = queue.pop_front() {
        delta.resize((id + 1) * sigma, None);
        for a in 0..sigma {
            let next = nfa.step(&sets[id], a);
            let key = members(&next);
            if key.is_empty() {
                continue;
            }
            let target = match index.get(&key) {
                Some(&t) => t,
                None => {
                    let t = sets.len();
                    if t >= caps.max_subset_states {
                        return Err(Error::cap("subset states", format!("> {t}"), caps.max_subset_states));
                    }
                    index.insert(key, t);
                    sets.push(next);
                    queue.push_back(t);
                    t
                }
            };
            delta[id * sigma + a] = Some(target);
        }
    }
    delta.resize(sets.len() * sigma, None);
    let accepting = sets.iter().map(|s| s.iter().enumerate().any(|(q, &b)| b && nfa.is_accepting(q))).collect();
    let labels = sets.iter().map(|s| Some(set_label(&members(s)))).collect();
    Dfa::from_table(nfa.alphabet().clone(), 0, accepting, delta)?.with_labels(labels)
}

/// Equivalent ε-free NFA on the same states.
///
/// `q --a--> r` whenever some state in the closure of `q` reads `a` into a
/// state whose closure contains `r`; `q` accepts when its closure does.
pub fn remove_epsilon(nfa: &Nfa) -> Nfa {
    let n = nfa.state_count();
    let mut transitions = Vec::new();
    let mut accepting = Vec::new();
    for q in 0..n {
        let closure = nfa.closure_of(q);
        if members(&closure).into_iter().any(|p| nfa.is_accepting(p)) {
            accepting.push(q);
        }
        for a in 0..nfa.alphabet().len() {
            let c = nfa.alphabet().symbol(a);
            for r in members(&nfa.step(&closure, a)) {
                transitions.push((q, Some(c), r));
            }
        }
    }
    Nfa::new(nfa.alphabet().clone(), n, nfa.initial(), transitions, accepting)
        .and_then(|m| m.with_labels(nfa.labels().to_vec()))
        .expect("same state set as a valid machine")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn even_nfa() -> Nfa {
        Nfa::new(Alphabet::unary(), 2, 0, [(0, Some('a'), 1), (1, Some('a'), 0)], [0]).unwrap()
    }

    #[test]
    fn deterministic_input_keeps_size() {
        let d = nfa_to_dfa(&even_nfa()).unwrap();
        assert_eq!(d.state_count(), 2);
        assert!(d.accepts("aaaa").unwrap() && !d.accepts("aaa").unwrap());
    }

    #[test]
    fn unreachable_states_vanish() {
        let n = Nfa::new(Alphabet::unary(), 4, 0, [(0, Some('a'), 0), (2, Some('a'), 3)], [0, 3]).unwrap();
        assert_eq!(nfa_to_dfa(&n).unwrap().state_count(), 1);
    }

    #[test]
    fn subset_cap() {
        // a-successor sets of the last-but-k-symbol machine blow up
        let sigma = Alphabet::new(['a', 'b']).unwrap();
        let mut t = vec![(0, Some('a'), 0), (0, Some('b'), 0), (0, Some('a'), 1)];
        for q in 1..6 {
            t.push((q, Some('a'), q + 1));
            t.push((q, Some('b'), q + 1));
        }
        let n = Nfa::new(sigma, 7, 0, t, [6]).unwrap();
        let caps = Caps { max_subset_states: 8, ..Caps::default() };
        assert!(nfa_to_dfa_capped(&n, &caps).unwrap_err().is_resource_cap());
        assert_eq!(nfa_to_dfa(&n).unwrap().state_count(), 64);
    }

    #[test]
    fn epsilon_removal() {
        let n = Nfa::new(Alphabet::unary(), 3, 0, [(0, None, 1), (1, Some('a'), 2), (2, None, 0)], [2]).unwrap();
        let m = remove_epsilon(&n);
        assert!(m.is_epsilon_free());
        assert_eq!(m.state_count(), 3);
        for len in 0..6 {
            let w = "a".repeat(len);
            assert_eq!(m.accepts(&w).unwrap(), n.accepts(&w).unwrap());
        }
        let e = even_nfa();
        assert_eq!(remove_epsilon(&e).transitions(), e.transitions());
    }
}
