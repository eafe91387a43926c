use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::automata::{Instance, PromiseProblem};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::rational::{
    ceil_ln, format_rational, mul_lopsided, pow, pow_enclosure, rat, serde_rational, Enclosure, ExactRational,
};

use super::exact::OutcomeDistribution;

/// The parameters a round model was derived from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExpEqOrigin {
    pub c: u64,
    pub m: u64,
    pub n: u64,
}

/// `t` independent rounds, each accepting with probability `a`, rejecting
/// with `r`, and undecided with `1 − a − r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundModel {
    #[serde(with = "serde_rational")]
    pub a: ExactRational,
    #[serde(with = "serde_rational")]
    pub r: ExactRational,
    pub t: u64,
    #[serde(skip_serializing_if = "Option::is_none", flatten)]
    pub origin: Option<ExpEqOrigin>,
}

impl RoundModel {
    pub fn new(a: ExactRational, r: ExactRational, t: u64) -> Result<Self> {
        let model = RoundModel { a, r, t, origin: None };
        model.validate()?;
        Ok(model)
    }

    fn validate(&self) -> Result<()> {
        if self.a < ExactRational::zero() || self.r < ExactRational::zero() {
            return Err(Error::InvalidParameter("round probabilities must be non-negative".into()));
        }
        if &self.a + &self.r > ExactRational::one() {
            return Err(Error::InvalidParameter(format!(
                "a + r = {} exceeds 1",
                format_rational(&(&self.a + &self.r))
            )));
        }
        Ok(())
    }

    /// Same model with per-round reject probability `r`.
    ///
    /// For a model built by [`expeq_params`] the round bound is enforced:
    /// `r ≤ a/c` when `m = n`, and `a ≤ r/c` otherwise.
    pub fn with_reject(&self, r: ExactRational) -> Result<Self> {
        let model = RoundModel { r, ..self.clone() };
        model.validate()?;
        if let Some(o) = model.origin {
            let c = rat(o.c as i64, 1);
            let ok = if o.m == o.n { &model.r * &c <= model.a } else { &model.a * &c <= model.r };
            if !ok {
                return Err(Error::InvalidParameter(format!(
                    "r = {} violates the per-round bound for m={}, n={}",
                    format_rational(&model.r),
                    o.m,
                    o.n
                )));
            }
        }
        Ok(model)
    }

    /// The yes-side extreme `r = a/c` (requires an ExpEQ origin).
    pub fn extremal_yes(&self) -> Result<Self> {
        let o = self.origin.ok_or_else(|| Error::InvalidParameter("model has no ExpEQ origin".into()))?;
        let r = &self.a / rat(o.c as i64, 1);
        Ok(RoundModel { r, ..self.clone() })
    }

    /// The no-side extreme `r = c·a` (requires an ExpEQ origin).
    pub fn extremal_no(&self) -> Result<Self> {
        let o = self.origin.ok_or_else(|| Error::InvalidParameter("model has no ExpEQ origin".into()))?;
        let r = &self.a * rat(o.c as i64, 1);
        let model = RoundModel { r, ..self.clone() };
        model.validate()?;
        Ok(model)
    }

    pub fn undecided(&self) -> ExactRational {
        ExactRational::one() - &self.a - &self.r
    }
}

/// `3·(2c²)^{m+n}·⌈ln c⌉`, or `None` on `u64` overflow.
pub fn expeq_repetitions(c: u64, m: u64, n: u64) -> Option<u64> {
    let base = 2u64.checked_mul(c.checked_mul(c)?)?;
    let exp = u32::try_from(m.checked_add(n)?).ok()?;
    3u64.checked_mul(base.checked_pow(exp)?)?.checked_mul(ceil_ln(c))
}

fn check_expeq(c: u64, m: u64, n: u64) -> Result<()> {
    if c < 3 {
        return Err(Error::InvalidParameter(format!("c must be at least 3, got {c}")));
    }
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("m and n must be positive".into()));
    }
    Ok(())
}

/// `a = 1/(3·(2c²)^{m+n})` and `t = 3·(2c²)^{m+n}·⌈ln c⌉`; `r` starts at 0.
pub fn expeq_params(c: u64, m: u64, n: u64) -> Result<RoundModel> {
    check_expeq(c, m, n)?;
    let t = expeq_repetitions(c, m, n)
        .ok_or_else(|| Error::cap("ExpEQ repetitions", format!("3·(2·{c}²)^{}·⌈ln {c}⌉", m + n), u64::MAX))?;
    let block = t / ceil_ln(c);
    let a = ExactRational::new(One::one(), block.into());
    Ok(RoundModel {
        a,
        r: ExactRational::zero(),
        t,
        origin: Some(ExpEqOrigin { c, m, n }),
    })
}

/// Exact `t`-round totals: `n_t = (1−a−r)^t`, `a_t = a(1−n_t)/(a+r)`,
/// `r_t = r(1−n_t)/(a+r)`.
pub fn expeq_compose(model: &RoundModel) -> Result<OutcomeDistribution> {
    expeq_compose_capped(model, &Caps::default())
}

fn bit_estimate(x: &ExactRational) -> u64 {
    x.numer().bits().max(x.denom().bits())
}

pub fn expeq_compose_capped(model: &RoundModel, caps: &Caps) -> Result<OutcomeDistribution> {
    model.validate()?;
    let decided = &model.a + &model.r;
    if decided.is_zero() {
        return Ok(OutcomeDistribution {
            accept: ExactRational::zero(),
            reject: ExactRational::zero(),
            neutral: ExactRational::one(),
        });
    }
    let base = model.undecided();
    let needed = bit_estimate(&base).saturating_mul(model.t);
    if needed > caps.max_exact_bits {
        return Err(Error::cap("exact bits", needed, caps.max_exact_bits));
    }
    let neutral = pow(&base, model.t);
    // (d − n)/d is already in lowest terms when n/d is
    let spread = ExactRational::new_raw(neutral.denom() - neutral.numer(), neutral.denom().clone());
    Ok(OutcomeDistribution {
        accept: mul_lopsided(&(&model.a / &decided), &spread),
        reject: mul_lopsided(&(&model.r / &decided), &spread),
        neutral,
    })
}

/// Rigorous enclosures of the `t`-round totals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposedEnclosure {
    pub accept: Enclosure,
    pub reject: Enclosure,
    pub neutral: Enclosure,
}

/// Enclosures of `a_t`, `r_t`, `n_t` with `bits`-bit dyadic rounding; works
/// for any `t`. All end points are exact rationals.
pub fn expeq_compose_enclosure(model: &RoundModel, bits: u32) -> Result<ComposedEnclosure> {
    model.validate()?;
    let decided = &model.a + &model.r;
    if decided.is_zero() {
        let zero = Enclosure::exact(ExactRational::zero());
        return Ok(ComposedEnclosure {
            accept: zero.clone(),
            reject: zero,
            neutral: Enclosure::exact(ExactRational::one()),
        });
    }
    let neutral = pow_enclosure(&model.undecided(), &BigUint::from(model.t), bits);
    let one = ExactRational::one();
    let scale = |share: &ExactRational| {
        let f = share / &decided;
        Enclosure { lo: &f * (&one - &neutral.hi), hi: &f * (&one - &neutral.lo) }
    };
    Ok(ComposedEnclosure {
        accept: scale(&model.a),
        reject: scale(&model.r),
        neutral,
    })
}

/// Words `(a^m b^n)^t` with `t` from [`expeq_repetitions`]: yes when
/// `m = n`, no otherwise.
pub fn expeq_problem(c: u64) -> Result<PromiseProblem> {
    if c < 3 {
        return Err(Error::InvalidParameter(format!("c must be at least 3, got {c}")));
    }
    let shape = move |w: &str| -> Option<(u64, u64)> {
        let bytes = w.as_bytes();
        let m = bytes.iter().take_while(|&&b| b == b'a').count();
        let n = bytes[m..].iter().take_while(|&&b| b == b'b').count();
        if m == 0 || n == 0 {
            return None;
        }
        let t = expeq_repetitions(c, m as u64, n as u64)?;
        let period = m + n;
        if (bytes.len() as u64) != (period as u64).checked_mul(t)? {
            return None;
        }
        let block = &bytes[..period];
        bytes.chunks(period).all(|chunk| chunk == block).then_some((m as u64, n as u64))
    };
    let enumerate = move |max_length: usize| {
        let mut out = Vec::new();
        for total in 2u64.. {
            let t = match expeq_repetitions(c, 1, total - 1) {
                Some(t) => t,
                None => break,
            };
            // t depends only on m + n
            if total.saturating_mul(t) > max_length as u64 {
                break;
            }
            for m in 1..total {
                let n = total - m;
                let w = format!("{}{}", "a".repeat(m as usize), "b".repeat(n as usize)).repeat(t as usize);
                out.push(if m == n { Instance::yes(w) } else { Instance::no(w) });
            }
        }
        out
    };
    Ok(PromiseProblem::new(
        format!("expeq(c={c})"),
        Alphabet::new(['a', 'b'])?,
        move |w| shape(w).is_some_and(|(m, n)| m == n),
        move |w| shape(w).is_some_and(|(m, n)| m != n),
        enumerate,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_examples() {
        let p = expeq_params(3, 1, 1).unwrap();
        assert_eq!(p.a, rat(1, 972));
        assert_eq!(p.t, 1944);
        assert_eq!(expeq_params(3, 1, 2).unwrap().a, rat(1, 17496));
        assert!(expeq_params(2, 1, 1).is_err());
        assert!(expeq_params(3, 0, 1).is_err());
        assert!(expeq_params(1 << 20, 2, 2).unwrap_err().is_resource_cap());
    }

    #[test]
    fn compose_examples() {
        let d = expeq_compose(&RoundModel::new(rat(1, 2), rat(1, 4), 1).unwrap()).unwrap();
        assert_eq!((d.accept, d.reject, d.neutral), (rat(1, 2), rat(1, 4), rat(1, 4)));
        let d = expeq_compose(&RoundModel::new(rat(1, 3), rat(1, 3), 2).unwrap()).unwrap();
        assert_eq!(d.accept, rat(4, 9));
        assert_eq!(d.total(), rat(1, 1));
        let d = expeq_compose(&RoundModel::new(rat(0, 1), rat(0, 1), 5).unwrap()).unwrap();
        assert_eq!(d.neutral, rat(1, 1));
    }

    #[test]
    fn yes_case_bound() {
        let m = expeq_params(3, 1, 1).unwrap().extremal_yes().unwrap();
        let d = expeq_compose(&m).unwrap();
        assert!(d.accept > rat(1, 2));
        assert!(d.neutral < rat(1, 3));
    }

    #[test]
    fn enclosure_brackets_exact() {
        let m = expeq_params(3, 1, 1).unwrap().extremal_no().unwrap();
        let exact = expeq_compose(&m).unwrap();
        let enc = expeq_compose_enclosure(&m, 128).unwrap();
        assert!(enc.neutral.contains(&exact.neutral));
        assert!(enc.accept.contains(&exact.accept));
        assert!(enc.reject.contains(&exact.reject));
    }

    #[test]
    fn with_reject_enforces_round_bound() {
        let m = expeq_params(3, 1, 1).unwrap();
        assert!(m.with_reject(rat(1, 972 * 3)).is_ok());
        assert!(m.with_reject(rat(1, 972 * 2)).is_err());
        let m = expeq_params(3, 1, 2).unwrap();
        assert!(m.with_reject(rat(3, 17496)).is_ok());
        assert!(m.with_reject(rat(2, 17496)).is_err());
    }

    #[test]
    fn exact_cap() {
        let m = expeq_params(100, 2, 1).unwrap().extremal_yes().unwrap();
        assert!(expeq_compose(&m).unwrap_err().is_resource_cap());
        assert!(expeq_compose_enclosure(&m, 256).is_ok());
    }

    #[test]
    fn problem_examples() {
        let p = expeq_problem(3).unwrap();
        let yes = "ab".repeat(1944);
        assert!(p.is_yes(&yes) && !p.is_no(&yes));
        let t = 3 * 18u64.pow(3) * 2;
        let no = "abb".repeat(t as usize);
        assert!(p.is_no(&no));
        assert!(!p.is_yes("ab") && !p.is_no("ab"));
        let inst = p.instances(4000);
        assert_eq!(inst.len(), 1);
        assert_eq!(inst[0].word, yes);
    }
}
