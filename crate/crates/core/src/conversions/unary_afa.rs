use std::collections::HashMap;

use crate::automata::{Afa, Dfa};
use crate::caps::Caps;
use crate::error::{Error, Result};

/// Deterministic machine over the acceptance vectors of a unary AFA.
///
/// State `j` is the vector `v_j` with `v_j(q)` = "the AFA accepts `a^j`
/// from `q`"; reading `a` maps `v_j` to `v_{j+1}`. Only the reachable lasso
/// is built.
pub fn unary_afa_to_dfa(afa: &Afa) -> Result<Dfa> {
    unary_afa_to_dfa_capped(afa, &Caps::default())
}

pub fn unary_afa_to_dfa_capped(afa: &Afa, caps: &Caps) -> Result<Dfa> {
    if !afa.alphabet().is_unary() {
        return Err(Error::InvalidParameter(format!(
            "unary AFA expected, alphabet is {:?}",
            afa.alphabet()
        )));
    }
    let mut seen: HashMap<Vec<bool>, usize> = HashMap::new();
    let mut vectors = Vec::new();
    let mut current = afa.evaluate(None);
    let loop_target = loop {
        if let Some(&j) = seen.get(&current) {
            break j;
        }
        if vectors.len() >= caps.max_dfa_states {
            return Err(Error::cap("valuation vectors", format!("> {}", vectors.len()), caps.max_dfa_states));
        }
        seen.insert(current.clone(), vectors.len());
        let next = afa.evaluate(Some((0, &current)));
        vectors.push(current);
        current = next;
    };
    let size = vectors.len();
    let delta = (0..size).map(|j| Some(if j + 1 < size { j + 1 } else { loop_target })).collect();
    let accepting = vectors.iter().map(|v| v[afa.initial()]).collect();
    let labels = vectors
        .iter()
        .map(|v| Some(v.iter().map(|&b| if b { '1' } else { '0' }).collect()))
        .collect();
    Dfa::from_table(afa.alphabet().clone(), 0, accepting, delta)?.with_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    #[test]
    fn rejects_binary_alphabet() {
        let sigma = Alphabet::new(['a', 'b']).unwrap();
        let afa = Afa::new(sigma, 1, 0, [], [0], [0], 0).unwrap();
        assert!(unary_afa_to_dfa(&afa).is_err());
    }

    #[test]
    fn universal_pair() {
        // accepts a^n iff n is divisible by both 2 and 3
        let t = [
            (0, None, 1),
            (0, None, 3),
            (1, Some('a'), 2),
            (2, Some('a'), 1),
            (3, Some('a'), 4),
            (4, Some('a'), 5),
            (5, Some('a'), 3),
        ];
        let afa = Afa::new(Alphabet::unary(), 6, 0, t, [1, 3], [1, 2, 3, 4, 5], 1).unwrap();
        let d = unary_afa_to_dfa(&afa).unwrap();
        assert_eq!(d.state_count(), 6);
        for len in 0..20 {
            assert_eq!(d.accepts(&"a".repeat(len)).unwrap(), len % 6 == 0);
        }
    }
}
