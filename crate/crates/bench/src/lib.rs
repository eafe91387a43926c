//! Fixtures shared by the benchmarks.

use promaton::{Alphabet, Nfa};

/// NFA over `{a, b}` for "the `n`-th symbol from the end is `a`"; its
/// subset construction has `2^n` reachable states.
pub fn nth_from_last(n: usize) -> Nfa {
    let sigma = Alphabet::new(['a', 'b']).expect("two symbols");
    let mut t = vec![(0, Some('a'), 0), (0, Some('b'), 0), (0, Some('a'), 1)];
    for q in 1..n {
        t.push((q, Some('a'), q + 1));
        t.push((q, Some('b'), q + 1));
    }
    Nfa::new(sigma, n + 1, 0, t, [n]).expect("valid NFA")
}
