use std::ops::Deref;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::rational::{format_rational, ExactRational};

/// How a halting state is read off by the outcome analysis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Accepting,
    Rejecting,
    Neutral,
}

/// One-way ε-free probabilistic automaton with exact rational weights.
///
/// Each `(state, symbol)` row is either empty (the run halts there) or a
/// distribution summing to exactly one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pfa {
    alphabet: Alphabet,
    initial: usize,
    roles: Vec<Role>,
    rows: Vec<Vec<Vec<(usize, ExactRational)>>>,
    labels: Vec<Option<String>>,
}

impl Pfa {
    pub fn new(
        alphabet: Alphabet,
        initial: usize,
        roles: Vec<Role>,
        transitions: impl IntoIterator<Item = (usize, char, usize, ExactRational)>,
    ) -> Result<Self> {
        let n = roles.len();
        if n == 0 || initial >= n {
            return Err(Error::InvalidMachine("initial state out of range".into()));
        }
        let mut rows = vec![vec![Vec::new(); alphabet.len()]; n];
        for (from, c, to, p) in transitions {
            if from >= n || to >= n {
                return Err(Error::InvalidMachine(format!(
                    "transition {from} -> {to} leaves the {n} states"
                )));
            }
            if p < ExactRational::zero() || p > ExactRational::one() {
                return Err(Error::InvalidMachine(format!(
                    "probability {} outside [0,1]",
                    format_rational(&p)
                )));
            }
            rows[from][alphabet.index_of(c)?].push((to, p));
        }
        for (q, by_symbol) in rows.iter().enumerate() {
            for (a, row) in by_symbol.iter().enumerate() {
                if row.is_empty() {
                    continue;
                }
                let total: ExactRational = row.iter().map(|(_, p)| p).sum();
                if !total.is_one() {
                    return Err(Error::InvalidMachine(format!(
                        "row of state {q} on {:?} sums to {}",
                        alphabet.symbol(a),
                        format_rational(&total)
                    )));
                }
            }
        }
        Ok(Pfa {
            alphabet,
            initial,
            roles,
            rows,
            labels: vec![None; n],
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
        self.roles.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn role(&self, q: usize) -> Role {
        self.roles[q]
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn label(&self, q: usize) -> Option<&str> {
        self.labels[q].as_deref()
    }

    pub fn state_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_deref() == Some(label))
    }

    pub fn row(&self, q: usize, symbol: usize) -> &[(usize, ExactRational)] {
        &self.rows[q][symbol]
    }

    /// Probability of the transition `q --symbol--> to` (summed over duplicates).
    pub fn probability(&self, q: usize, symbol: usize, to: usize) -> ExactRational {
        self.rows[q][symbol]
            .iter()
            .filter(|(t, _)| *t == to)
            .map(|(_, p)| p)
            .sum()
    }

    /// All transitions as `(from, symbol index, to, probability)`.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize, &ExactRational)> + '_ {
        self.rows.iter().enumerate().flat_map(|(q, by_symbol)| {
            by_symbol.iter().enumerate().flat_map(move |(a, row)| {
                row.iter().map(move |(t, p)| (q, a, *t, p))
            })
        })
    }
}

/// A PFA read with Las Vegas semantics: accepting, rejecting and neutral
/// ("don't know") halting states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LasVegasPfa(Pfa);

impl LasVegasPfa {
    pub fn new(pfa: Pfa) -> Self {
        LasVegasPfa(pfa)
    }

    pub fn into_inner(self) -> Pfa {
        self.0
    }
}

impl Deref for LasVegasPfa {
    type Target = Pfa;

    fn deref(&self) -> &Pfa {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn rows_must_sum_to_one() {
        let sigma = Alphabet::unary();
        let roles = vec![Role::Accepting, Role::Rejecting];
        let short = Pfa::new(sigma.clone(), 0, roles.clone(), [(0, 'a', 0, rat(1, 2)), (0, 'a', 1, rat(1, 3))]);
        assert!(short.is_err());
        let over = Pfa::new(sigma.clone(), 0, roles.clone(), [(0, 'a', 0, rat(3, 2))]);
        assert!(over.is_err());
        let ok = Pfa::new(sigma, 0, roles, [(0, 'a', 0, rat(1, 2)), (0, 'a', 1, rat(1, 2))]).unwrap();
        assert_eq!(ok.probability(0, 0, 1), rat(1, 2));
        assert_eq!(ok.transitions().count(), 2);
    }
}
