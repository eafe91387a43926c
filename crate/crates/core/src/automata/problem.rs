use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::alphabet::Alphabet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Class {
    Yes,
    No,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Instance {
    pub word: String,
    pub class: Class,
}

impl Instance {
    pub fn yes(word: impl Into<String>) -> Self {
        Instance { word: word.into(), class: Class::Yes }
    }

    pub fn no(word: impl Into<String>) -> Self {
        Instance { word: word.into(), class: Class::No }
    }
}

type Predicate = Arc<dyn Fn(&str) -> bool + Send + Sync>;
type Enumerator = Arc<dyn Fn(usize) -> Vec<Instance> + Send + Sync>;

/// A pair of membership predicates (yes, no) with a bounded enumerator.
///
/// The enumerator must list exactly the strings of length at most
/// `max_length` satisfying either predicate, one entry per satisfied
/// predicate.
#[derive(Clone)]
pub struct PromiseProblem {
    name: String,
    alphabet: Alphabet,
    yes: Predicate,
    no: Predicate,
    enumerate: Enumerator,
}

impl PromiseProblem {
    pub fn new(
        name: impl Into<String>,
        alphabet: Alphabet,
        yes: impl Fn(&str) -> bool + Send + Sync + 'static,
        no: impl Fn(&str) -> bool + Send + Sync + 'static,
        enumerate: impl Fn(usize) -> Vec<Instance> + Send + Sync + 'static,
    ) -> Self {
        PromiseProblem {
            name: name.into(),
            alphabet,
            yes: Arc::new(yes),
            no: Arc::new(no),
            enumerate: Arc::new(enumerate),
        }
    }

    /// A problem whose enumerator filters every word over the alphabet.
    ///
    /// Exponential in `max_length`; intended for small alphabets.
    pub fn from_predicates(
        name: impl Into<String>,
        alphabet: Alphabet,
        yes: impl Fn(&str) -> bool + Send + Sync + 'static,
        no: impl Fn(&str) -> bool + Send + Sync + 'static,
    ) -> Self {
        let yes: Predicate = Arc::new(yes);
        let no: Predicate = Arc::new(no);
        let (y, n, sigma) = (yes.clone(), no.clone(), alphabet.clone());
        PromiseProblem {
            name: name.into(),
            alphabet,
            yes,
            no,
            enumerate: Arc::new(move |max_length| {
                let mut out = Vec::new();
                for w in all_words(&sigma, max_length) {
                    if y(&w) {
                        out.push(Instance::yes(w.clone()));
                    }
                    if n(&w) {
                        out.push(Instance::no(w));
                    }
                }
                out
            }),
        }
    }

    /// A problem given by two finite word lists.
    pub fn from_finite(
        name: impl Into<String>,
        alphabet: Alphabet,
        yes: impl IntoIterator<Item = impl Into<String>>,
        no: impl IntoIterator<Item = impl Into<String>>,
    ) -> Self {
        let yes: Vec<String> = yes.into_iter().map(Into::into).collect();
        let no: Vec<String> = no.into_iter().map(Into::into).collect();
        let (ys, ns) = (yes.clone(), no.clone());
        let yes_member = move |w: &str| yes.iter().any(|y| y == w);
        let no_member = move |w: &str| no.iter().any(|n| n == w);
        PromiseProblem::new(name, alphabet, yes_member, no_member, move |max_length| {
            let yes = ys.iter().filter(|w| w.chars().count() <= max_length).map(Instance::yes);
            let no = ns.iter().filter(|w| w.chars().count() <= max_length).map(Instance::no);
            yes.chain(no).collect()
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn is_yes(&self, word: &str) -> bool {
        (self.yes)(word)
    }

    pub fn is_no(&self, word: &str) -> bool {
        (self.no)(word)
    }

    /// Instances of length at most `max_length`, sorted by length then word.
    pub fn instances(&self, max_length: usize) -> Vec<Instance> {
        let mut list = (self.enumerate)(max_length);
        list.sort_by(|a, b| {
            (a.word.chars().count(), &a.word, a.class).cmp(&(b.word.chars().count(), &b.word, b.class))
        });
        list.dedup();
        list
    }
}

impl fmt::Debug for PromiseProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PromiseProblem")
            .field("name", &self.name)
            .field("alphabet", &self.alphabet)
            .finish_non_exhaustive()
    }
}

/// Every word over `alphabet` of length at most `max_length`, shortest first.
pub fn all_words(alphabet: &Alphabet, max_length: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max_length {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for &c in alphabet.symbols() {
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_words_counts() {
        let sigma = Alphabet::new("ab".chars()).unwrap();
        assert_eq!(all_words(&sigma, 3).len(), 1 + 2 + 4 + 8);
        assert_eq!(all_words(&Alphabet::unary(), 4).len(), 5);
    }

    #[test]
    fn finite_problem_enumerates_by_length() {
        let p = PromiseProblem::from_finite("t", Alphabet::unary(), ["aa", ""], ["aaa"]);
        assert_eq!(p.instances(2), vec![Instance::yes(""), Instance::yes("aa")]);
        assert_eq!(p.instances(3).len(), 3);
        assert!(p.is_yes("aa") && p.is_no("aaa") && !p.is_no("aa"));
    }

    #[test]
    fn overlapping_predicates_list_both_classes() {
        let p = PromiseProblem::from_predicates("bad", Alphabet::unary(), |w| w.is_empty(), |w| w.is_empty());
        assert_eq!(p.instances(3), vec![Instance::yes(""), Instance::no("")]);
    }
}
