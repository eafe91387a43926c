#![allow(dead_code)]

use promaton::{Alphabet, Dfa, Nfa};
use proptest::prelude::*;

pub const SYMBOLS: [char; 3] = ['a', 'b', 'c'];

pub fn alphabet(size: usize) -> Alphabet {
    Alphabet::new(SYMBOLS[..size].iter().copied()).unwrap()
}

/// `(states, alphabet size, edges, eps edges, accepting mask)`, indices
/// reduced modulo the sizes when the machine is built.
pub type RawNfa = (usize, usize, Vec<(usize, usize, usize)>, Vec<(usize, usize)>, Vec<bool>);

pub fn raw_nfa(max_states: usize, sigma: std::ops::RangeInclusive<usize>, eps: bool) -> impl Strategy<Value = RawNfa> {
    let eps_len = if eps { 0..6usize } else { 0..1usize };
    (
        1..=max_states,
        sigma,
        prop::collection::vec((0..max_states, 0..3usize, 0..max_states), 0..4 * max_states),
        prop::collection::vec((0..max_states, 0..max_states), eps_len),
        prop::collection::vec(any::<bool>(), max_states),
    )
}

pub fn build_nfa(raw: &RawNfa, with_eps: bool) -> Nfa {
    let (n, sigma, edges, eps, acc) = raw;
    let mut t: Vec<(usize, Option<char>, usize)> =
        edges.iter().map(|&(p, a, q)| (p % n, Some(SYMBOLS[a % sigma]), q % n)).collect();
    if with_eps {
        t.extend(eps.iter().map(|&(p, q)| (p % n, None, q % n)));
    }
    let accepting = (0..*n).filter(|&q| acc[q]);
    Nfa::new(alphabet(*sigma), *n, 0, t, accepting).unwrap()
}

/// `(states, alphabet size, table entries, accepting mask)`; entry `e`
/// means "undefined" when `e % (n+1) == n`.
pub type RawDfa = (usize, usize, Vec<usize>, Vec<bool>);

pub fn raw_dfa(max_states: usize, sigma: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = RawDfa> {
    (
        1..=max_states,
        sigma,
        prop::collection::vec(0..=max_states, max_states * 3),
        prop::collection::vec(any::<bool>(), max_states),
    )
}

pub fn build_dfa(raw: &RawDfa) -> Dfa {
    let (n, sigma, entries, acc) = raw;
    let delta = (0..n * sigma)
        .map(|i| {
            let e = entries[i] % (n + 1);
            (e < *n).then_some(e)
        })
        .collect();
    Dfa::from_table(alphabet(*sigma), 0, acc[..*n].to_vec(), delta).unwrap()
}
