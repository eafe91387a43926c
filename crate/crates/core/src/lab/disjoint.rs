use std::collections::HashMap;

use crate::automata::{Class, Counterexample, PromiseProblem, VerificationReport};

/// Checks that no enumerated word is both a yes- and a no-instance.
pub fn disjointness_check(problem: &PromiseProblem, max_length: usize) -> VerificationReport {
    let instances = problem.instances(max_length);
    let mut seen: HashMap<&str, Class> = HashMap::new();
    let mut clash = None;
    for inst in &instances {
        let both = problem.is_yes(&inst.word) && problem.is_no(&inst.word);
        let twice = seen.insert(&inst.word, inst.class).is_some_and(|c| c != inst.class);
        if both || twice {
            clash = Some(inst.word.clone());
            break;
        }
    }
    let report = match clash {
        Some(word) => VerificationReport::fails(Counterexample {
            word,
            expected: "yes or no, not both".into(),
            observed: "both".into(),
        }),
        None => VerificationReport::solves(),
    };
    report.with("max_length", max_length).with("instances", instances.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::constructions::{evenodd_problem, trios_problem};

    #[test]
    fn examples() {
        assert!(disjointness_check(&evenodd_problem(3).unwrap(), 128).is_solves());
        assert!(disjointness_check(&trios_problem(2, 2).unwrap(), 14).is_solves());
        let broken = PromiseProblem::from_finite("broken", Alphabet::unary(), [""], [""]);
        let report = disjointness_check(&broken, 3);
        assert!(!report.is_solves());
        assert_eq!(report.counterexample().unwrap().word, "");
    }
}
