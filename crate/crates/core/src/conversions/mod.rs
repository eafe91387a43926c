//! Determinization, normalization and the closed-form trade-off bounds.

mod bounds;
mod minimize;
mod subset;
mod unary_afa;

pub use bounds::{
    bound_2nfa_to_dfa, bound_afa_to_dfa, bound_svfa_to_dfa, bound_unary_afa_to_dfa, BoundValue,
};
pub use minimize::{dfa_equivalent, dfa_minimize};
pub use subset::{nfa_to_dfa, nfa_to_dfa_capped, remove_epsilon};
pub use unary_afa::{unary_afa_to_dfa, unary_afa_to_dfa_capped};
