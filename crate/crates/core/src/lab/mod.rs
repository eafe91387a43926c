//! Exhaustive searches and pumping checks that confirm lower bounds at
//! small sizes.
//!
//! Minimality here is always relative to the enumerated instance set (all
//! instances up to `max_length`) and to the machine-kind cap.

mod disjoint;
mod pumping;
mod search;

pub use disjoint::disjointness_check;
pub use pumping::{expeq_pumping_check, pumping_check, Pumpable};
pub use search::{
    min_dfa_size, min_size, min_unary_dfa_size, min_unary_nfa_size, MachineKind, MinSize,
    SearchSpec, MAX_DFA_ALPHABET, MAX_DFA_STATES, MAX_UNARY_DFA_STATES, MAX_UNARY_NFA_STATES,
};
