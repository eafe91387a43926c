use crate::error::{Error, Result};

use super::afa::Afa;
use super::dfa::Dfa;
use super::nfa::Nfa;
use super::problem::{Class, PromiseProblem};
use super::report::{Counterexample, VerificationReport};
use super::twoway::TwoWayMachine;
use crate::alphabet::Alphabet;

/// A non-probabilistic machine that accepts or rejects words.
pub trait Acceptor {
    fn alphabet(&self) -> &Alphabet;
    fn state_count(&self) -> usize;
    fn accepts_encoded(&self, word: &[usize]) -> bool;
}

impl Acceptor for Dfa {
    fn alphabet(&self) -> &Alphabet {
        Dfa::alphabet(self)
    }
    fn state_count(&self) -> usize {
        Dfa::state_count(self)
    }
    fn accepts_encoded(&self, word: &[usize]) -> bool {
        self.run_encoded(word).is_accept()
    }
}

impl Acceptor for Nfa {
    fn alphabet(&self) -> &Alphabet {
        Nfa::alphabet(self)
    }
    fn state_count(&self) -> usize {
        Nfa::state_count(self)
    }
    fn accepts_encoded(&self, word: &[usize]) -> bool {
        Nfa::accepts_encoded(self, word)
    }
}

impl Acceptor for Afa {
    fn alphabet(&self) -> &Alphabet {
        Afa::alphabet(self)
    }
    fn state_count(&self) -> usize {
        Afa::state_count(self)
    }
    fn accepts_encoded(&self, word: &[usize]) -> bool {
        Afa::accepts_encoded(self, word)
    }
}

impl Acceptor for TwoWayMachine {
    fn alphabet(&self) -> &Alphabet {
        TwoWayMachine::alphabet(self)
    }
    fn state_count(&self) -> usize {
        TwoWayMachine::state_count(self)
    }
    fn accepts_encoded(&self, word: &[usize]) -> bool {
        TwoWayMachine::accepts_encoded(self, word)
    }
}

pub(crate) fn ensure_same_alphabet(machine: &Alphabet, problem: &PromiseProblem) -> Result<()> {
    if machine != problem.alphabet() {
        return Err(Error::AlphabetMismatch {
            machine: format!("{machine:?}"),
            problem: format!("{:?}", problem.alphabet()),
        });
    }
    Ok(())
}

/// Checks that `acceptor` accepts every yes-instance and rejects every
/// no-instance of length at most `max_length`.
///
/// The first violated instance (shortest first) is the counterexample.
pub fn promise_check<A: Acceptor + ?Sized>(
    acceptor: &A,
    problem: &PromiseProblem,
    max_length: usize,
) -> Result<VerificationReport> {
    ensure_same_alphabet(acceptor.alphabet(), problem)?;
    let instances = problem.instances(max_length);
    let (mut yes, mut no) = (0usize, 0usize);
    for inst in &instances {
        let word = problem.alphabet().encode(&inst.word)?;
        let accepted = acceptor.accepts_encoded(&word);
        let expected = inst.class == Class::Yes;
        match inst.class {
            Class::Yes => yes += 1,
            Class::No => no += 1,
        }
        if accepted != expected {
            let verdict = |b: bool| if b { "accept" } else { "reject" }.to_owned();
            return Ok(VerificationReport::fails(Counterexample {
                word: inst.word.clone(),
                expected: verdict(expected),
                observed: verdict(accepted),
            })
            .with("max_length", max_length)
            .with("states", acceptor.state_count()));
        }
    }
    Ok(VerificationReport::solves()
        .with("max_length", max_length)
        .with("states", acceptor.state_count())
        .with("yes_instances", yes)
        .with("no_instances", no))
}
