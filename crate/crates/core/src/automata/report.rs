use std::collections::BTreeMap;

use serde::ser::{Serialize, SerializeMap, Serializer};
use serde::Serialize as DeriveSerialize;

use crate::rational::{format_rational, BigNatural, ExactRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, DeriveSerialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Solves,
    Fails,
    Inconclusive,
}

/// The first instance on which a machine disagreed with the problem.
#[derive(Clone, Debug, PartialEq, Eq, DeriveSerialize)]
pub struct Counterexample {
    pub word: String,
    pub expected: String,
    pub observed: String,
}

/// A measured quantity. Rationals serialize as `"num/den"`, naturals as
/// decimal strings.
#[derive(Clone, Debug, PartialEq)]
pub enum Measured {
    Rational(ExactRational),
    Natural(BigNatural),
    Float(f64),
    Text(String),
}

impl Measured {
    pub fn as_rational(&self) -> Option<&ExactRational> {
        match self {
            Measured::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_natural(&self) -> Option<&BigNatural> {
        match self {
            Measured::Natural(n) => Some(n),
            _ => None,
        }
    }
}

impl From<ExactRational> for Measured {
    fn from(x: ExactRational) -> Self {
        Measured::Rational(x)
    }
}

impl From<BigNatural> for Measured {
    fn from(x: BigNatural) -> Self {
        Measured::Natural(x)
    }
}

impl From<usize> for Measured {
    fn from(x: usize) -> Self {
        Measured::Natural(BigNatural::from(x))
    }
}

impl From<u64> for Measured {
    fn from(x: u64) -> Self {
        Measured::Natural(BigNatural::from(x))
    }
}

impl From<f64> for Measured {
    fn from(x: f64) -> Self {
        Measured::Float(x)
    }
}

impl From<&str> for Measured {
    fn from(x: &str) -> Self {
        Measured::Text(x.to_owned())
    }
}

impl From<String> for Measured {
    fn from(x: String) -> Self {
        Measured::Text(x)
    }
}

impl Serialize for Measured {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Measured::Rational(r) => s.serialize_str(&format_rational(r)),
            Measured::Natural(n) => s.serialize_str(&n.to_string()),
            Measured::Float(x) => s.serialize_f64(*x),
            Measured::Text(t) => s.serialize_str(t),
        }
    }
}

/// Outcome of a solves / minimality / probability experiment.
///
/// A counterexample is present exactly when the verdict is `Fails`.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    verdict: Verdict,
    counterexample: Option<Counterexample>,
    measured: BTreeMap<String, Measured>,
}

impl VerificationReport {
    pub fn solves() -> Self {
        VerificationReport {
            verdict: Verdict::Solves,
            counterexample: None,
            measured: BTreeMap::new(),
        }
    }

    pub fn fails(counterexample: Counterexample) -> Self {
        VerificationReport {
            verdict: Verdict::Fails,
            counterexample: Some(counterexample),
            measured: BTreeMap::new(),
        }
    }

    pub fn inconclusive() -> Self {
        VerificationReport {
            verdict: Verdict::Inconclusive,
            counterexample: None,
            measured: BTreeMap::new(),
        }
    }

    pub fn with(mut self, name: &str, value: impl Into<Measured>) -> Self {
        self.measured.insert(name.to_owned(), value.into());
        self
    }

    pub fn record(&mut self, name: &str, value: impl Into<Measured>) {
        self.measured.insert(name.to_owned(), value.into());
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    pub fn is_solves(&self) -> bool {
        self.verdict == Verdict::Solves
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        self.counterexample.as_ref()
    }

    pub fn measured(&self) -> &BTreeMap<String, Measured> {
        &self.measured
    }

    pub fn get(&self, name: &str) -> Option<&Measured> {
        self.measured.get(name)
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("verdict", &self.verdict)?;
        map.serialize_entry("counterexample", &self.counterexample)?;
        map.serialize_entry("measured", &self.measured)?;
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn serializes_exact_values_as_strings() {
        let r = VerificationReport::solves()
            .with("min_success", rat(1, 2))
            .with("instances", 14usize);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"verdict":"solves","counterexample":null,"measured":{"instances":"14","min_success":"1/2"}}"#
        );
    }

    #[test]
    fn counterexample_iff_fails() {
        assert!(VerificationReport::solves().counterexample().is_none());
        assert!(VerificationReport::inconclusive().counterexample().is_none());
        let f = VerificationReport::fails(Counterexample {
            word: "aa".into(),
            expected: "reject".into(),
            observed: "accept".into(),
        });
        assert_eq!(f.verdict(), Verdict::Fails);
        assert!(f.counterexample().is_some());
    }
}
