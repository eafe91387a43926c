//! JSON interchange format shared by every machine type.
//!
//! ```json
//! {"type": "dfa", "states": 2, "alphabet": ["a"], "initial": 0,
//!  "accepting": [0], "transitions": [{"from": 0, "symbol": "a", "to": 1}]}
//! ```
//!
//! ε-transitions carry `"symbol": null`. Two-way transitions add `"move"`
//! and may read the endmarkers `"⊢"` / `"⊣"`. PFA transitions carry an
//! exact `"probability": "num/den"` and the machine lists `"roles"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational};

use super::afa::Afa;
use super::check::Acceptor;
use super::dfa::Dfa;
use super::nfa::Nfa;
use super::pfa::{Pfa, Role};
use super::twoway::{Move, TapeSymbol, TwoWayMachine, TwoWayTransition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MachineType {
    #[serde(rename = "dfa")]
    Dfa,
    #[serde(rename = "nfa")]
    Nfa,
    #[serde(rename = "afa")]
    Afa,
    #[serde(rename = "2way")]
    TwoWay,
    #[serde(rename = "pfa")]
    Pfa,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionRecord {
    pub from: usize,
    pub symbol: Option<String>,
    pub to: usize,
    #[serde(rename = "move", default, skip_serializing_if = "Option::is_none")]
    pub movement: Option<Move>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probability: Option<String>,
}

/// On-disk shape of a machine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineFile {
    #[serde(rename = "type")]
    pub kind: MachineType,
    pub states: usize,
    pub alphabet: Vec<String>,
    pub initial: usize,
    #[serde(default)]
    pub accepting: Vec<usize>,
    #[serde(default)]
    pub transitions: Vec<TransitionRecord>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub roles: BTreeMap<String, Role>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub existential: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_eps_chain: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deterministic: Option<bool>,
}

/// Any machine that can be stored in the interchange format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Machine {
    Dfa(Dfa),
    Nfa(Nfa),
    Afa(Afa),
    TwoWay(TwoWayMachine),
    Pfa(Pfa),
}

impl Machine {
    /// The machine as a language acceptor; `None` for probabilistic machines.
    pub fn as_acceptor(&self) -> Option<&dyn Acceptor> {
        match self {
            Machine::Dfa(m) => Some(m),
            Machine::Nfa(m) => Some(m),
            Machine::Afa(m) => Some(m),
            Machine::TwoWay(m) => Some(m),
            Machine::Pfa(_) => None,
        }
    }

    pub fn kind(&self) -> MachineType {
        match self {
            Machine::Dfa(_) => MachineType::Dfa,
            Machine::Nfa(_) => MachineType::Nfa,
            Machine::Afa(_) => MachineType::Afa,
            Machine::TwoWay(_) => MachineType::TwoWay,
            Machine::Pfa(_) => MachineType::Pfa,
        }
    }

    pub fn state_count(&self) -> usize {
        match self {
            Machine::Dfa(m) => m.state_count(),
            Machine::Nfa(m) => m.state_count(),
            Machine::Afa(m) => m.state_count(),
            Machine::TwoWay(m) => m.state_count(),
            Machine::Pfa(m) => m.state_count(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Machine::Dfa(m) => m.alphabet(),
            Machine::Nfa(m) => m.alphabet(),
            Machine::Afa(m) => m.alphabet(),
            Machine::TwoWay(m) => m.alphabet(),
            Machine::Pfa(m) => m.alphabet(),
        }
    }

    pub fn to_file(&self) -> MachineFile {
        let alphabet = self.alphabet();
        let sym = |a: usize| Some(alphabet.symbol(a).to_string());
        let plain = |from, symbol, to| TransitionRecord { from, symbol, to, movement: None, probability: None };
        let labels_of = |labels: &[Option<String>]| -> BTreeMap<String, String> {
            labels
                .iter()
                .enumerate()
                .filter_map(|(q, l)| l.as_ref().map(|l| (q.to_string(), l.clone())))
                .collect()
        };
        let mut file = MachineFile {
            kind: self.kind(),
            states: self.state_count(),
            alphabet: alphabet.symbols().iter().map(|c| c.to_string()).collect(),
            initial: 0,
            accepting: Vec::new(),
            transitions: Vec::new(),
            labels: BTreeMap::new(),
            roles: BTreeMap::new(),
            existential: None,
            max_eps_chain: None,
            deterministic: None,
        };
        match self {
            Machine::Dfa(m) => {
                file.initial = m.initial();
                file.accepting = m.accepting_states().collect();
                file.transitions = m.transitions().map(|(f, a, t)| plain(f, sym(a), t)).collect();
                file.labels = labels_of(m.labels());
            }
            Machine::Nfa(m) => {
                file.initial = m.initial();
                file.accepting = m.accepting_states().collect();
                file.transitions = m
                    .transitions()
                    .into_iter()
                    .map(|(f, a, t)| plain(f, a.and_then(sym), t))
                    .collect();
                file.labels = labels_of(m.labels());
            }
            Machine::Afa(m) => {
                file.initial = m.initial();
                file.accepting = m.accepting_states().collect();
                file.transitions = m
                    .transitions()
                    .into_iter()
                    .map(|(f, a, t)| plain(f, a.and_then(sym), t))
                    .collect();
                file.labels = labels_of(m.labels());
                file.existential = Some(m.existential_states().collect());
                file.max_eps_chain = Some(m.max_eps_chain());
            }
            Machine::TwoWay(m) => {
                file.initial = m.initial();
                file.accepting = m.accepting_states().collect();
                file.transitions = m
                    .transitions()
                    .iter()
                    .map(|t| TransitionRecord {
                        from: t.from,
                        symbol: Some(t.read.to_char(alphabet).to_string()),
                        to: t.to,
                        movement: Some(t.movement),
                        probability: None,
                    })
                    .collect();
                file.labels = labels_of(m.labels());
                file.deterministic = Some(m.is_deterministic());
            }
            Machine::Pfa(m) => {
                file.initial = m.initial();
                file.accepting = (0..m.state_count()).filter(|&q| m.role(q) == Role::Accepting).collect();
                file.transitions = m
                    .transitions()
                    .map(|(f, a, t, p)| TransitionRecord {
                        from: f,
                        symbol: sym(a),
                        to: t,
                        movement: None,
                        probability: Some(format_rational(p)),
                    })
                    .collect();
                file.labels = labels_of(m.labels());
                file.roles = m.roles().iter().enumerate().map(|(q, r)| (q.to_string(), *r)).collect();
            }
        }
        file
    }

    pub fn from_file(file: &MachineFile) -> Result<Machine> {
        let mut symbols = Vec::with_capacity(file.alphabet.len());
        for s in &file.alphabet {
            let mut chars = s.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => symbols.push(c),
                _ => return Err(Error::Parse(format!("alphabet entry {s:?} is not a single character"))),
            }
        }
        let alphabet = Alphabet::new(symbols)?;
        let n = file.states;
        let one_char = |s: &str| -> Result<char> {
            let mut chars = s.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => Ok(c),
                _ => Err(Error::Parse(format!("symbol {s:?} is not a single character"))),
            }
        };
        let mut labels = vec![None; n];
        for (k, v) in &file.labels {
            let q: usize = k.parse().map_err(|_| Error::Parse(format!("bad label key {k:?}")))?;
            *labels
                .get_mut(q)
                .ok_or_else(|| Error::Parse(format!("label for missing state {q}")))? = Some(v.clone());
        }
        let machine = match file.kind {
            MachineType::Dfa => {
                let mut triples = Vec::new();
                for t in &file.transitions {
                    let s = t.symbol.as_deref().ok_or_else(|| Error::Parse("DFA transition without a symbol".into()))?;
                    triples.push((t.from, one_char(s)?, t.to));
                }
                Machine::Dfa(Dfa::new(alphabet, n, file.initial, triples, file.accepting.iter().copied())?.with_labels(labels)?)
            }
            MachineType::Nfa | MachineType::Afa => {
                let mut triples = Vec::new();
                for t in &file.transitions {
                    let s = t.symbol.as_deref().map(one_char).transpose()?;
                    triples.push((t.from, s, t.to));
                }
                if file.kind == MachineType::Nfa {
                    Machine::Nfa(Nfa::new(alphabet, n, file.initial, triples, file.accepting.iter().copied())?.with_labels(labels)?)
                } else {
                    let existential = file.existential.clone().unwrap_or_default();
                    let chain = file.max_eps_chain.unwrap_or(3);
                    Machine::Afa(
                        Afa::new(alphabet, n, file.initial, triples, file.accepting.iter().copied(), existential, chain)?
                            .with_labels(labels)?,
                    )
                }
            }
            MachineType::TwoWay => {
                let mut list = Vec::new();
                for t in &file.transitions {
                    let s = t.symbol.as_deref().ok_or_else(|| Error::Parse("two-way transition without a symbol".into()))?;
                    let movement = t.movement.ok_or_else(|| Error::Parse("two-way transition without a move".into()))?;
                    list.push(TwoWayTransition {
                        from: t.from,
                        read: TapeSymbol::from_char(one_char(s)?, &alphabet)?,
                        to: t.to,
                        movement,
                    });
                }
                let det = file.deterministic.unwrap_or(false);
                Machine::TwoWay(
                    TwoWayMachine::new(alphabet, n, file.initial, list, file.accepting.iter().copied(), det)?
                        .with_labels(labels)?,
                )
            }
            MachineType::Pfa => {
                let mut roles = vec![Role::Neutral; n];
                for (k, r) in &file.roles {
                    let q: usize = k.parse().map_err(|_| Error::Parse(format!("bad role key {k:?}")))?;
                    *roles.get_mut(q).ok_or_else(|| Error::Parse(format!("role for missing state {q}")))? = *r;
                }
                let mut list = Vec::new();
                for t in &file.transitions {
                    let s = t.symbol.as_deref().ok_or_else(|| Error::Parse("PFA ε-transitions are not supported".into()))?;
                    let p = t.probability.as_deref().ok_or_else(|| Error::Parse("PFA transition without a probability".into()))?;
                    list.push((t.from, one_char(s)?, t.to, parse_rational(p)?));
                }
                Machine::Pfa(Pfa::new(alphabet, file.initial, roles, list)?.with_labels(labels)?)
            }
        };
        Ok(machine)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("machine files always serialize")
    }

    pub fn from_json(text: &str) -> Result<Machine> {
        let file: MachineFile = serde_json::from_str(text)?;
        Machine::from_file(&file)
    }
}

impl From<Dfa> for Machine {
    fn from(m: Dfa) -> Self {
        Machine::Dfa(m)
    }
}

impl From<Nfa> for Machine {
    fn from(m: Nfa) -> Self {
        Machine::Nfa(m)
    }
}

impl From<Afa> for Machine {
    fn from(m: Afa) -> Self {
        Machine::Afa(m)
    }
}

impl From<TwoWayMachine> for Machine {
    fn from(m: TwoWayMachine) -> Self {
        Machine::TwoWay(m)
    }
}

impl From<Pfa> for Machine {
    fn from(m: Pfa) -> Self {
        Machine::Pfa(m)
    }
}
