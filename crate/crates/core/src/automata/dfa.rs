use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

use super::nfa::Nfa;

/// Outcome of running a one-way DFA on a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunOutcome {
    Accept,
    Reject,
    /// An undefined transition was hit before reading the symbol at this offset.
    Stuck(usize),
}

impl RunOutcome {
    pub fn is_accept(self) -> bool {
        self == RunOutcome::Accept
    }
}

/// One-way deterministic automaton with a partial transition function.
///
/// Missing transitions are premature rejection: the run halts and the word
/// is not accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: usize,
    accepting: Vec<bool>,
    // delta[state * |alphabet| + symbol]
    delta: Vec<Option<usize>>,
    labels: Vec<Option<String>>,
}

impl Dfa {
    /// Builds a DFA from `(from, symbol, to)` triples.
    pub fn new(
        alphabet: Alphabet,
        state_count: usize,
        initial: usize,
        transitions: impl IntoIterator<Item = (usize, char, usize)>,
        accepting: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let width = alphabet.len();
        let mut delta = vec![None; state_count * width];
        for (from, c, to) in transitions {
            let sym = alphabet.index_of(c)?;
            if from >= state_count || to >= state_count {
                return Err(Error::InvalidMachine(format!(
                    "transition {from} --{c}--> {to} leaves the {state_count} states"
                )));
            }
            let slot = &mut delta[from * width + sym];
            match slot {
                Some(existing) if *existing != to => {
                    return Err(Error::InvalidMachine(format!(
                        "two targets for state {from} on {c:?}"
                    )))
                }
                _ => *slot = Some(to),
            }
        }
        let mut acc = vec![false; state_count];
        for q in accepting {
            *acc.get_mut(q).ok_or_else(|| {
                Error::InvalidMachine(format!("accepting state {q} out of range"))
            })? = true;
        }
        Self::from_table(alphabet, initial, acc, delta)
    }

    /// Builds a DFA from a dense table indexed by `state * |alphabet| + symbol`.
    pub fn from_table(
        alphabet: Alphabet,
        initial: usize,
        accepting: Vec<bool>,
        delta: Vec<Option<usize>>,
    ) -> Result<Self> {
        let n = accepting.len();
        if n == 0 {
            return Err(Error::InvalidMachine("a DFA needs at least one state".into()));
        }
        if initial >= n {
            return Err(Error::InvalidMachine(format!("initial state {initial} out of range")));
        }
        if delta.len() != n * alphabet.len() {
            return Err(Error::InvalidMachine("transition table has the wrong size".into()));
        }
        if let Some(bad) = delta.iter().flatten().find(|&&t| t >= n) {
            return Err(Error::InvalidMachine(format!("transition target {bad} out of range")));
        }
        Ok(Dfa {
            alphabet,
            initial,
            labels: vec![None; n],
            accepting,
            delta,
        })
    }

    pub fn with_labels(mut self, labels: Vec<Option<String>>) -> Result<Self> {
        if labels.len() != self.state_count() {
            return Err(Error::InvalidMachine("label list has the wrong length".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.state_count()).filter(|&q| self.accepting[q])
    }

    pub fn next(&self, q: usize, symbol: usize) -> Option<usize> {
        self.delta[q * self.alphabet.len() + symbol]
    }

    pub fn label(&self, q: usize) -> Option<&str> {
        self.labels[q].as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// All defined transitions as `(from, symbol index, to)`, in table order.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let width = self.alphabet.len();
        self.delta
            .iter()
            .enumerate()
            .filter_map(move |(i, t)| t.map(|to| (i / width, i % width, to)))
    }

    pub fn is_complete(&self) -> bool {
        self.delta.iter().all(Option::is_some)
    }

    /// State reached from `q` after `word`, or `None` if the run gets stuck.
    pub fn delta_star(&self, q: usize, word: &[usize]) -> Option<usize> {
        word.iter().try_fold(q, |state, &sym| self.next(state, sym))
    }

    pub fn run_encoded(&self, word: &[usize]) -> RunOutcome {
        let mut q = self.initial;
        for (pos, &sym) in word.iter().enumerate() {
            match self.next(q, sym) {
                Some(t) => q = t,
                None => return RunOutcome::Stuck(pos),
            }
        }
        if self.accepting[q] {
            RunOutcome::Accept
        } else {
            RunOutcome::Reject
        }
    }

    pub fn run(&self, word: &str) -> Result<RunOutcome> {
        Ok(self.run_encoded(&self.alphabet.encode(word)?))
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        Ok(self.run(word)?.is_accept())
    }

    /// Adds a non-accepting absorbing state for every undefined entry.
    ///
    /// Returns the completed machine and the index of the added dead state,
    /// or `None` if the machine was already complete.
    pub fn complete(&self) -> (Dfa, Option<usize>) {
        if self.is_complete() {
            return (self.clone(), None);
        }
        let dead = self.state_count();
        let width = self.alphabet.len();
        let mut delta: Vec<Option<usize>> =
            self.delta.iter().map(|t| Some(t.unwrap_or(dead))).collect();
        delta.extend(std::iter::repeat_n(Some(dead), width));
        let mut accepting = self.accepting.clone();
        accepting.push(false);
        let mut labels = self.labels.clone();
        labels.push(Some("dead".into()));
        let dfa = Dfa {
            alphabet: self.alphabet.clone(),
            initial: self.initial,
            accepting,
            delta,
            labels,
        };
        (dfa, Some(dead))
    }

    /// Renames state `q` to `perm[q]`.
    pub fn permute_states(&self, perm: &[usize]) -> Result<Dfa> {
        let n = self.state_count();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidParameter("not a permutation of the states".into()));
        }
        let width = self.alphabet.len();
        let mut delta = vec![None; n * width];
        let mut accepting = vec![false; n];
        let mut labels = vec![None; n];
        for q in 0..n {
            accepting[perm[q]] = self.accepting[q];
            labels[perm[q]] = self.labels[q].clone();
            for a in 0..width {
                delta[perm[q] * width + a] = self.next(q, a).map(|t| perm[t]);
            }
        }
        Ok(Dfa {
            alphabet: self.alphabet.clone(),
            initial: perm[self.initial],
            accepting,
            delta,
            labels,
        })
    }

    /// The same machine viewed as an (ε-free) NFA.
    pub fn to_nfa(&self) -> Nfa {
        let transitions = self
            .transitions()
            .map(|(from, sym, to)| (from, Some(self.alphabet.symbol(sym)), to));
        let nfa = Nfa::new(
            self.alphabet.clone(),
            self.state_count(),
            self.initial,
            transitions,
            self.accepting_states(),
        )
        .expect("a valid DFA is a valid NFA");
        nfa.with_labels(self.labels.clone()).expect("same state count")
    }
}
