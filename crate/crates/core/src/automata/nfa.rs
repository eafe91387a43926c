use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// One-way nondeterministic automaton with optional ε-transitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    initial: usize,
    accepting: Vec<bool>,
    // delta[state][symbol] = sorted, deduplicated targets
    delta: Vec<Vec<Vec<usize>>>,
    eps: Vec<Vec<usize>>,
    labels: Vec<Option<String>>,
}

impl Nfa {
    /// Builds an NFA from `(from, symbol or ε, to)` triples; `None` is ε.
    pub fn new(
        alphabet: Alphabet,
        state_count: usize,
        initial: usize,
        transitions: impl IntoIterator<Item = (usize, Option<char>, usize)>,
        accepting: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        if state_count == 0 {
            return Err(Error::InvalidMachine("an NFA needs at least one state".into()));
        }
        if initial >= state_count {
            return Err(Error::InvalidMachine(format!("initial state {initial} out of range")));
        }
        let mut delta = vec![vec![Vec::new(); alphabet.len()]; state_count];
        let mut eps = vec![Vec::new(); state_count];
        for (from, label, to) in transitions {
            if from >= state_count || to >= state_count {
                return Err(Error::InvalidMachine(format!(
                    "transition {from} -> {to} leaves the {state_count} states"
                )));
            }
            match label {
                Some(c) => delta[from][alphabet.index_of(c)?].push(to),
                None => eps[from].push(to),
            }
        }
        for row in delta.iter_mut().flatten().chain(eps.iter_mut()) {
            row.sort_unstable();
            row.dedup();
        }
        let mut acc = vec![false; state_count];
        for q in accepting {
            *acc.get_mut(q).ok_or_else(|| {
                Error::InvalidMachine(format!("accepting state {q} out of range"))
            })? = true;
        }
        Ok(Nfa {
            alphabet,
            initial,
            accepting: acc,
            delta,
            eps,
            labels: vec![None; state_count],
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

    pub fn successors(&self, q: usize, symbol: usize) -> &[usize] {
        &self.delta[q][symbol]
    }

    pub fn eps_successors(&self, q: usize) -> &[usize] {
        &self.eps[q]
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn is_epsilon_free(&self) -> bool {
        self.eps.iter().all(Vec::is_empty)
    }

    /// All transitions as `(from, symbol index or ε, to)`.
    pub fn transitions(&self) -> Vec<(usize, Option<usize>, usize)> {
        let mut out = Vec::new();
        for q in 0..self.state_count() {
            for &t in &self.eps[q] {
                out.push((q, None, t));
            }
            for (a, targets) in self.delta[q].iter().enumerate() {
                out.extend(targets.iter().map(|&t| (q, Some(a), t)));
            }
        }
        out
    }

    /// Closes `set` under ε-transitions in place.
    pub fn close(&self, set: &mut [bool]) {
        let mut stack: Vec<usize> = (0..set.len()).filter(|&q| set[q]).collect();
        while let Some(q) = stack.pop() {
            for &t in &self.eps[q] {
                if !set[t] {
                    set[t] = true;
                    stack.push(t);
                }
            }
        }
    }

    pub fn closure_of(&self, q: usize) -> Vec<bool> {
        let mut set = vec![false; self.state_count()];
        set[q] = true;
        self.close(&mut set);
        set
    }

    /// ε-closed successor set of an ε-closed set.
    pub fn step(&self, set: &[bool], symbol: usize) -> Vec<bool> {
        let mut next = vec![false; self.state_count()];
        for q in (0..set.len()).filter(|&q| set[q]) {
            for &t in &self.delta[q][symbol] {
                next[t] = true;
            }
        }
        self.close(&mut next);
        next
    }

    /// States reachable from the initial state by reading `word` (ε-closed).
    pub fn reachable_after(&self, word: &[usize]) -> Vec<bool> {
        let mut set = self.closure_of(self.initial);
        for &a in word {
            set = self.step(&set, a);
        }
        set
    }

    pub fn accepts_encoded(&self, word: &[usize]) -> bool {
        let set = self.reachable_after(word);
        set.iter().zip(&self.accepting).any(|(&r, &f)| r && f)
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        Ok(self.accepts_encoded(&self.alphabet.encode(word)?))
    }
}
