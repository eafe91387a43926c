//! Machine types, promise problems and their execution semantics.

mod afa;
mod check;
mod dfa;
mod json;
mod nfa;
mod pfa;
mod problem;
mod report;
mod twoway;

pub use afa::Afa;
pub use check::{promise_check, Acceptor};
pub(crate) use check::ensure_same_alphabet;
pub use dfa::{Dfa, RunOutcome};
pub use json::{Machine, MachineFile, MachineType, TransitionRecord};
pub use nfa::Nfa;
pub use pfa::{LasVegasPfa, Pfa, Role};
pub use problem::{all_words, Class, Instance, PromiseProblem};
pub use report::{Counterexample, Measured, Verdict, VerificationReport};
pub use twoway::{Move, TapeSymbol, TwoWayMachine, TwoWayTransition};
