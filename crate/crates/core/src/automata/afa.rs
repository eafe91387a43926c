use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// One-way alternating automaton with ε-transitions.
///
/// Every state is existential or universal. A state's outgoing transitions
/// are either all ε-labelled or all symbol-labelled, and the ε-graph is
/// acyclic with chains no longer than `max_eps_chain` (the realtime bound).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Afa {
    alphabet: Alphabet,
    initial: usize,
    accepting: Vec<bool>,
    existential: Vec<bool>,
    delta: Vec<Vec<Vec<usize>>>,
    eps: Vec<Vec<usize>>,
    max_eps_chain: usize,
    // ε-targets come before their sources
    eval_order: Vec<usize>,
    labels: Vec<Option<String>>,
}

impl Afa {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        alphabet: Alphabet,
        state_count: usize,
        initial: usize,
        transitions: impl IntoIterator<Item = (usize, Option<char>, usize)>,
        accepting: impl IntoIterator<Item = usize>,
        existential: impl IntoIterator<Item = usize>,
        max_eps_chain: usize,
    ) -> Result<Self> {
        if state_count == 0 || initial >= state_count {
            return Err(Error::InvalidMachine("initial state out of range".into()));
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
        for q in 0..state_count {
            if !eps[q].is_empty() && delta[q].iter().any(|r| !r.is_empty()) {
                return Err(Error::InvalidMachine(format!(
                    "state {q} mixes ε- and symbol transitions"
                )));
            }
        }
        let to_flags = |states: &mut dyn Iterator<Item = usize>, what: &str| -> Result<Vec<bool>> {
            let mut flags = vec![false; state_count];
            for q in states {
                *flags.get_mut(q).ok_or_else(|| {
                    Error::InvalidMachine(format!("{what} state {q} out of range"))
                })? = true;
            }
            Ok(flags)
        };
        let accepting = to_flags(&mut accepting.into_iter(), "accepting")?;
        let existential = to_flags(&mut existential.into_iter(), "existential")?;
        let (eval_order, longest) = eps_order(&eps)?;
        if longest > max_eps_chain {
            return Err(Error::InvalidMachine(format!(
                "ε-chain of length {longest} exceeds the declared bound {max_eps_chain}"
            )));
        }
        Ok(Afa {
            alphabet,
            initial,
            accepting,
            existential,
            delta,
            eps,
            max_eps_chain,
            eval_order,
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

    pub fn is_existential(&self, q: usize) -> bool {
        self.existential[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.state_count()).filter(|&q| self.accepting[q])
    }

    pub fn existential_states(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.state_count()).filter(|&q| self.existential[q])
    }

    pub fn max_eps_chain(&self) -> usize {
        self.max_eps_chain
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn label(&self, q: usize) -> Option<&str> {
        self.labels[q].as_deref()
    }

    /// Index of the first state carrying `label`.
    pub fn state_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_deref() == Some(label))
    }

    pub fn successors(&self, q: usize, symbol: usize) -> &[usize] {
        &self.delta[q][symbol]
    }

    pub fn eps_successors(&self, q: usize) -> &[usize] {
        &self.eps[q]
    }

    pub fn has_epsilon(&self) -> bool {
        self.eps.iter().any(|r| !r.is_empty())
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

    fn combine(&self, q: usize, mut values: impl Iterator<Item = bool>) -> bool {
        if self.existential[q] {
            values.any(|v| v)
        } else {
            values.all(|v| v)
        }
    }

    /// Acceptance values of every state at one input position.
    ///
    /// `next` is `None` at the end of the input, otherwise the symbol under
    /// the head together with the values one position further right.
    pub fn evaluate(&self, next: Option<(usize, &[bool])>) -> Vec<bool> {
        let mut value = vec![false; self.state_count()];
        for &q in &self.eval_order {
            value[q] = if !self.eps[q].is_empty() {
                self.combine(q, self.eps[q].iter().map(|&t| value[t]))
            } else {
                match next {
                    Some((sym, after)) if !self.delta[q][sym].is_empty() => {
                        self.combine(q, self.delta[q][sym].iter().map(|&t| after[t]))
                    }
                    Some(_) => false,
                    None => self.accepting[q],
                }
            };
        }
        value
    }

    pub fn accepts_encoded(&self, word: &[usize]) -> bool {
        let mut value = self.evaluate(None);
        for &sym in word.iter().rev() {
            value = self.evaluate(Some((sym, &value)));
        }
        value[self.initial]
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        Ok(self.accepts_encoded(&self.alphabet.encode(word)?))
    }
}

/// Post-order of the ε-graph and the length of its longest chain.
fn eps_order(eps: &[Vec<usize>]) -> Result<(Vec<usize>, usize)> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let n = eps.len();
    let mut mark = vec![Mark::New; n];
    let mut depth = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if mark[root] != Mark::New {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        mark[root] = Mark::Open;
        while let Some(&mut (q, ref mut next)) = stack.last_mut() {
            if let Some(&t) = eps[q].get(*next) {
                *next += 1;
                match mark[t] {
                    Mark::Open => {
                        return Err(Error::InvalidMachine(format!(
                            "ε-cycle through state {t}"
                        )))
                    }
                    Mark::New => {
                        mark[t] = Mark::Open;
                        stack.push((t, 0));
                    }
                    Mark::Done => {}
                }
            } else {
                stack.pop();
                mark[q] = Mark::Done;
                depth[q] = eps[q].iter().map(|&t| depth[t] + 1).max().unwrap_or(0);
                order.push(q);
            }
        }
    }
    let longest = depth.into_iter().max().unwrap_or(0);
    Ok((order, longest))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universal_branching_needs_all() {
        // 0 universal: a -> 1 ∧ 2; 1 accepting, 2 needs one more a
        let m = Afa::new(
            Alphabet::unary(),
            3,
            0,
            [(0, Some('a'), 1), (0, Some('a'), 2), (2, Some('a'), 1)],
            [1],
            [],
            0,
        )
        .unwrap();
        assert!(!m.accepts("a").unwrap());
        assert!(!m.accepts("aa").unwrap());
        let e = Afa::new(
            Alphabet::unary(),
            3,
            0,
            [(0, Some('a'), 1), (0, Some('a'), 2), (2, Some('a'), 1)],
            [1],
            [0],
            0,
        )
        .unwrap();
        assert!(e.accepts("a").unwrap());
        assert!(e.accepts("aa").unwrap());
    }

    #[test]
    fn rejects_mixing_cycles_and_long_chains() {
        let sigma = Alphabet::unary();
        let mixed = Afa::new(sigma.clone(), 2, 0, [(0, None, 1), (0, Some('a'), 1)], [], [], 3);
        assert!(mixed.is_err());
        let cycle = Afa::new(sigma.clone(), 2, 0, [(0, None, 1), (1, None, 0)], [], [], 3);
        assert!(cycle.is_err());
        let chain = Afa::new(sigma.clone(), 3, 0, [(0, None, 1), (1, None, 2)], [], [], 1);
        assert!(chain.is_err());
        assert!(Afa::new(sigma, 3, 0, [(0, None, 1), (1, None, 2)], [], [], 2).is_ok());
    }

    #[test]
    fn epsilon_state_ignores_own_acceptance() {
        // an ε-state must move on; its own accepting flag is irrelevant
        let m = Afa::new(Alphabet::unary(), 2, 0, [(0, None, 1)], [0], [0], 1).unwrap();
        assert!(!m.accepts("").unwrap());
    }
}
