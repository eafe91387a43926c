use serde::{Deserialize, Serialize};

/// Resource limits shared by builders, conversions and searches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest deterministic machine a builder may emit.
    pub max_dfa_states: usize,
    /// Largest reachable subset (or valuation) space explored by a conversion.
    pub max_subset_states: usize,
    /// Largest `A_p` / `R_p` computed by exact iteration.
    pub max_critical_length: u64,
    /// Largest instance list a promise problem may enumerate.
    pub max_enumeration: usize,
    /// Bit budget for exact rational powers before falling back to enclosures.
    pub max_exact_bits: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_dfa_states: 1 << 20,
            max_subset_states: 1 << 16,
            max_critical_length: 1_000_000,
            max_enumeration: 1_000_000,
            max_exact_bits: 1 << 22,
        }
    }
}
