use crate::alphabet::Alphabet;
use crate::automata::{Counterexample, Dfa, Nfa, VerificationReport};
use crate::error::{Error, Result};

/// A unary one-way machine whose traversals can be pumped.
pub enum Pumpable<'a> {
    Dfa(&'a Dfa),
    Nfa(&'a Nfa),
}

impl Pumpable<'_> {
    fn state_count(&self) -> usize {
        match self {
            Pumpable::Dfa(d) => d.state_count(),
            Pumpable::Nfa(n) => n.state_count(),
        }
    }

    fn alphabet(&self) -> &Alphabet {
        match self {
            Pumpable::Dfa(d) => d.alphabet(),
            Pumpable::Nfa(n) => n.alphabet(),
        }
    }

    /// `m[p]` = states reachable from `p` by one symbol (ε-closed).
    fn step_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.state_count();
        (0..n)
            .map(|p| match self {
                Pumpable::Dfa(d) => {
                    let mut row = vec![false; n];
                    if let Some(t) = d.next(p, 0) {
                        row[t] = true;
                    }
                    row
                }
                Pumpable::Nfa(m) => m.step(&m.closure_of(p), 0),
            })
            .collect()
    }
}

fn multiply(x: &[Vec<bool>], y: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = x.len();
    let mut out = vec![vec![false; n]; n];
    for i in 0..n {
        for k in (0..n).filter(|&k| x[i][k]) {
            for j in 0..n {
                out[i][j] |= y[k][j];
            }
        }
    }
    out
}

fn power(m: &[Vec<bool>], mut e: u64) -> Vec<Vec<bool>> {
    let n = m.len();
    let mut result: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
    let mut square = m.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = multiply(&result, &square);
        }
        e >>= 1;
        if e > 0 {
            square = multiply(&square, &square);
        }
    }
    result
}

fn set_text(row: &[bool]) -> String {
    let inner: Vec<String> = row.iter().enumerate().filter(|(_, &b)| b).map(|(q, _)| q.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// The `n → n + n!` traversal check on a unary machine.
///
/// For every start state `p` and every listed `h`, the states reachable
/// from `p` over `a^m` must also be reachable over `a^{m+h·m!}`. For a
/// DFA the two (at most one-element) sets must be equal. The report also
/// records whether the sets were equal for every pair (`equal_sets`).
pub fn pumping_check(machine: Pumpable<'_>, m: u64, h_values: &[u64]) -> Result<VerificationReport> {
    if !machine.alphabet().is_unary() {
        return Err(Error::InvalidParameter("pumping needs a unary machine".into()));
    }
    let n = machine.state_count() as u64;
    if m < n {
        return Err(Error::InvalidParameter(format!("m = {m} is below the state count {n}")));
    }
    if m > 12 {
        return Err(Error::cap("m for m!", m, 12));
    }
    let fact: u64 = (1..=m).product();
    let step = machine.step_matrix();
    let base = power(&step, m);
    let strict = matches!(machine, Pumpable::Dfa(_));
    let mut all_equal = true;
    let mut violation = None;
    'outer: for &h in h_values {
        let extra = h.checked_mul(fact).ok_or_else(|| Error::cap("pumped length", format!("{h}·{m}!"), u64::MAX))?;
        let pumped = multiply(&base, &power(&step, extra));
        for p in 0..base.len() {
            let included = base[p].iter().zip(&pumped[p]).all(|(&x, &y)| !x || y);
            let equal = base[p] == pumped[p];
            all_equal &= equal;
            if !included || (strict && !equal) {
                violation = Some(Counterexample {
                    word: format!("a^{m} vs a^{} from state {p}", m + extra),
                    expected: set_text(&base[p]),
                    observed: set_text(&pumped[p]),
                });
                break 'outer;
            }
        }
    }
    let report = match violation {
        Some(ce) => VerificationReport::fails(ce),
        None => VerificationReport::solves(),
    };
    Ok(report
        .with("states", machine.state_count())
        .with("m", m)
        .with("h_count", h_values.len())
        .with("equal_sets", if all_equal { "true" } else { "false" }))
}

/// The three-word traversal equality from the ExpEQ lower-bound argument.
///
/// With `n` the state count of `dfa` (over `{a, b}`), the final states on
/// `(a^n b^n)^t`, `(a^{n+n!} b^{n+n!})^t` and `(a^n b^{n+2n!})^t` must
/// coincide (treating a blocked run as one more outcome).
pub fn expeq_pumping_check(dfa: &Dfa, t: u64) -> Result<VerificationReport> {
    let sigma = dfa.alphabet();
    let (a, b) = (sigma.index_of('a')?, sigma.index_of('b')?);
    let n = dfa.state_count() as u64;
    if n > 10 {
        return Err(Error::cap("states for n!", n, 10));
    }
    let fact: u64 = (1..=n).product();
    let run = |ma: u64, nb: u64| -> Option<usize> {
        let mut q = Some(dfa.initial());
        for _ in 0..t {
            for _ in 0..ma {
                q = q.and_then(|s| dfa.next(s, a));
            }
            for _ in 0..nb {
                q = q.and_then(|s| dfa.next(s, b));
            }
        }
        q
    };
    let shape = |x: Option<usize>| x.map_or("stuck".to_string(), |q| q.to_string());
    let plain = run(n, n);
    let both = run(n + fact, n + fact);
    let skew = run(n, n + 2 * fact);
    let report = if plain == both && both == skew {
        VerificationReport::solves()
    } else {
        VerificationReport::fails(Counterexample {
            word: format!("(a^{n}b^{n})^{t}"),
            expected: format!("one final state, got {} first", shape(plain)),
            observed: format!("{} and {}", shape(both), shape(skew)),
        })
    };
    Ok(report.with("states", dfa.state_count()).with("t", t))
}
