//! Finite-automata workbench for promise problems.
//!
//! Deterministic, nondeterministic, two-way, alternating and probabilistic
//! (including Las Vegas) acceptors, the concrete machine families that
//! separate them on promise problems, exact probability analysis, and an
//! exhaustive search lab that checks the state lower bounds at small sizes.

pub mod alphabet;
pub mod automata;
pub mod caps;
pub mod constructions;
pub mod conversions;
pub mod criteria;
pub mod error;
pub mod lab;
pub mod probabilistic;
pub mod rational;

pub use alphabet::Alphabet;
pub use automata::*;
pub use caps::Caps;
pub use error::{Error, Result};
pub use rational::{BigNatural, ExactRational};
