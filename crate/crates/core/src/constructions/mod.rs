//! Concrete machine families and the promise problems they solve.

mod evenodd;
mod parity;
mod trios;
mod up;

pub use evenodd::{
    evenodd_afa_epsfree, evenodd_afa_rt, evenodd_dfa, evenodd_dfa_capped, evenodd_problem,
};
pub use parity::{parity_dfa, parity_problem};
pub use trios::{
    parse_trios, trios_dfa, trios_dfa_capped, trios_lasvegas_pfa, trios_ladder, trios_problem,
    trios_twoway_dfa, TRIOS_DFA_CONSTANT, TRIOS_TWOWAY_CONSTANT,
};
pub use up::{
    critical_lengths, critical_lengths_capped, up_dfa, up_dfa_capped, up_pfa, up_problem,
};

use std::collections::HashMap;

/// Assigns consecutive indices to named states.
#[derive(Default)]
pub(crate) struct States {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl States {
    pub fn add(&mut self, name: impl Into<String>) -> usize {
        let name = name.into();
        assert!(!self.index.contains_key(&name), "duplicate state {name}");
        let id = self.names.len();
        self.index.insert(name.clone(), id);
        self.names.push(name);
        id
    }

    pub fn get(&self, name: &str) -> usize {
        self.index[name]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn labels(&self) -> Vec<Option<String>> {
        self.names.iter().cloned().map(Some).collect()
    }
}
