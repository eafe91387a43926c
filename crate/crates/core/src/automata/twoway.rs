use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, LEFT_ENDMARKER, RIGHT_ENDMARKER};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Move {
    Left,
    Right,
    Stay,
}

/// A cell of the two-way input tape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TapeSymbol {
    LeftEnd,
    RightEnd,
    Symbol(usize),
}

impl TapeSymbol {
    fn slot(self) -> usize {
        match self {
            TapeSymbol::LeftEnd => 0,
            TapeSymbol::RightEnd => 1,
            TapeSymbol::Symbol(a) => a + 2,
        }
    }

    pub fn to_char(self, alphabet: &Alphabet) -> char {
        match self {
            TapeSymbol::LeftEnd => LEFT_ENDMARKER,
            TapeSymbol::RightEnd => RIGHT_ENDMARKER,
            TapeSymbol::Symbol(a) => alphabet.symbol(a),
        }
    }

    pub fn from_char(c: char, alphabet: &Alphabet) -> Result<Self> {
        Ok(match c {
            LEFT_ENDMARKER => TapeSymbol::LeftEnd,
            RIGHT_ENDMARKER => TapeSymbol::RightEnd,
            c => TapeSymbol::Symbol(alphabet.index_of(c)?),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoWayTransition {
    pub from: usize,
    pub read: TapeSymbol,
    pub to: usize,
    pub movement: Move,
}

/// Two-way finite automaton on an endmarked tape, deterministic or not.
///
/// The machine starts on the left endmarker and accepts by halting (no
/// executable transition) in an accepting state anywhere on the tape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoWayMachine {
    alphabet: Alphabet,
    initial: usize,
    accepting: Vec<bool>,
    deterministic: bool,
    transitions: Vec<TwoWayTransition>,
    // index[state][slot] = (to, move)
    index: Vec<Vec<Vec<(usize, Move)>>>,
    labels: Vec<Option<String>>,
}

impl TwoWayMachine {
    pub fn new(
        alphabet: Alphabet,
        state_count: usize,
        initial: usize,
        transitions: impl IntoIterator<Item = TwoWayTransition>,
        accepting: impl IntoIterator<Item = usize>,
        deterministic: bool,
    ) -> Result<Self> {
        if state_count == 0 || initial >= state_count {
            return Err(Error::InvalidMachine("initial state out of range".into()));
        }
        let slots = alphabet.len() + 2;
        let mut index = vec![vec![Vec::new(); slots]; state_count];
        let mut list: Vec<TwoWayTransition> = transitions.into_iter().collect();
        list.sort_unstable();
        list.dedup();
        for t in &list {
            if t.from >= state_count || t.to >= state_count {
                return Err(Error::InvalidMachine(format!(
                    "transition {} -> {} leaves the {state_count} states",
                    t.from, t.to
                )));
            }
            if let TapeSymbol::Symbol(a) = t.read {
                if a >= alphabet.len() {
                    return Err(Error::InvalidMachine(format!("symbol index {a} out of range")));
                }
            }
            match (t.read, t.movement) {
                (TapeSymbol::LeftEnd, Move::Left) => {
                    return Err(Error::InvalidMachine(format!(
                        "state {} moves left off the left endmarker",
                        t.from
                    )))
                }
                (TapeSymbol::RightEnd, Move::Right) => {
                    return Err(Error::InvalidMachine(format!(
                        "state {} moves right off the right endmarker",
                        t.from
                    )))
                }
                _ => {}
            }
            let row = &mut index[t.from][t.read.slot()];
            row.push((t.to, t.movement));
            if deterministic && row.len() > 1 {
                return Err(Error::InvalidMachine(format!(
                    "deterministic machine has two transitions from state {} on one symbol",
                    t.from
                )));
            }
        }
        let mut acc = vec![false; state_count];
        for q in accepting {
            *acc.get_mut(q).ok_or_else(|| {
                Error::InvalidMachine(format!("accepting state {q} out of range"))
            })? = true;
        }
        Ok(TwoWayMachine {
            alphabet,
            initial,
            accepting: acc,
            deterministic,
            transitions: list,
            index,
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

    pub fn is_deterministic(&self) -> bool {
        self.deterministic
    }

    pub fn transitions(&self) -> &[TwoWayTransition] {
        &self.transitions
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// Reachability over configurations `(state, head)` with the head in
    /// `0..=|word|+1`; endmarkers sit at both ends.
    pub fn accepts_encoded(&self, word: &[usize]) -> bool {
        let cells = word.len() + 2;
        let tape = |pos: usize| {
            if pos == 0 {
                TapeSymbol::LeftEnd
            } else if pos == cells - 1 {
                TapeSymbol::RightEnd
            } else {
                TapeSymbol::Symbol(word[pos - 1])
            }
        };
        let mut seen = vec![false; self.state_count() * cells];
        let mut queue = VecDeque::new();
        seen[self.initial * cells] = true;
        queue.push_back((self.initial, 0usize));
        while let Some((q, pos)) = queue.pop_front() {
            let moves = &self.index[q][tape(pos).slot()];
            if moves.is_empty() {
                if self.accepting[q] {
                    return true;
                }
                continue;
            }
            for &(to, mv) in moves {
                let next = match mv {
                    Move::Left => pos - 1,
                    Move::Right => pos + 1,
                    Move::Stay => pos,
                };
                let key = to * cells + next;
                if !seen[key] {
                    seen[key] = true;
                    queue.push_back((to, next));
                }
            }
        }
        false
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        Ok(self.accepts_encoded(&self.alphabet.encode(word)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(from: usize, read: TapeSymbol, to: usize, movement: Move) -> TwoWayTransition {
        TwoWayTransition { from, read, to, movement }
    }

    #[test]
    fn halting_immediately() {
        let sigma = Alphabet::unary();
        let yes = TwoWayMachine::new(sigma.clone(), 1, 0, [], [0], true).unwrap();
        let no = TwoWayMachine::new(sigma, 1, 0, [], [], true).unwrap();
        for w in ["", "a", "aaaa"] {
            assert!(yes.accepts(w).unwrap());
            assert!(!no.accepts(w).unwrap());
        }
    }

    #[test]
    fn endmarker_escape_rejected() {
        let sigma = Alphabet::unary();
        let left = TwoWayMachine::new(sigma.clone(), 1, 0, [t(0, TapeSymbol::LeftEnd, 0, Move::Left)], [], false);
        let right = TwoWayMachine::new(sigma, 1, 0, [t(0, TapeSymbol::RightEnd, 0, Move::Right)], [], false);
        assert!(left.is_err());
        assert!(right.is_err());
    }

    #[test]
    fn determinism_is_enforced() {
        let sigma = Alphabet::unary();
        let res = TwoWayMachine::new(
            sigma,
            2,
            0,
            [t(0, TapeSymbol::LeftEnd, 0, Move::Right), t(0, TapeSymbol::LeftEnd, 1, Move::Right)],
            [],
            true,
        );
        assert!(res.is_err());
    }

    #[test]
    fn infinite_loop_never_accepts() {
        let sigma = Alphabet::unary();
        // bounces between the endmarkers forever
        let m = TwoWayMachine::new(
            sigma,
            2,
            0,
            [
                t(0, TapeSymbol::LeftEnd, 0, Move::Right),
                t(0, TapeSymbol::Symbol(0), 0, Move::Right),
                t(0, TapeSymbol::RightEnd, 1, Move::Left),
                t(1, TapeSymbol::Symbol(0), 1, Move::Left),
                t(1, TapeSymbol::LeftEnd, 0, Move::Right),
            ],
            [0, 1],
            true,
        )
        .unwrap();
        assert!(!m.accepts("aaa").unwrap());
    }

    #[test]
    fn sweeping_parity() {
        // walks to the right end counting parity, then accepts if even
        let sigma = Alphabet::unary();
        let m = TwoWayMachine::new(
            sigma,
            3,
            0,
            [
                t(0, TapeSymbol::LeftEnd, 0, Move::Right),
                t(0, TapeSymbol::Symbol(0), 1, Move::Right),
                t(1, TapeSymbol::Symbol(0), 0, Move::Right),
                t(0, TapeSymbol::RightEnd, 2, Move::Left),
            ],
            [2],
            true,
        )
        .unwrap();
        assert!(m.accepts("aa").unwrap());
        assert!(m.accepts("").unwrap());
        assert!(!m.accepts("aaa").unwrap());
    }
}
