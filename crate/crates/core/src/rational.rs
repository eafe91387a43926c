//! Exact arithmetic carriers.
//!
//! Probabilities and trade-off bounds are kept as arbitrary-precision
//! rationals and naturals. Where an exact value is out of reach (powers with
//! astronomically large exponents) a rigorous enclosure with dyadic end
//! points is computed instead; every comparison made against an enclosure
//! is still an exact rational comparison.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type ExactRational = BigRational;
pub type BigNatural = BigUint;

pub fn rat(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"num/den"` or a plain integer.
pub fn parse_rational(text: &str) -> Result<ExactRational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not an exact rational: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Formats a rational as `"num/den"` in lowest terms, always with a denominator.
pub fn format_rational(x: &ExactRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Exact power. Powers of a reduced fraction stay reduced, so no gcd is taken.
pub fn pow(base: &ExactRational, exp: u64) -> ExactRational {
    ExactRational::new_raw(
        num_traits::Pow::pow(base.numer(), exp),
        num_traits::Pow::pow(base.denom(), exp),
    )
}

fn gcd_lopsided(x: &BigInt, y: &BigInt) -> BigInt {
    let (small, big) = if x.bits() <= y.bits() { (x, y) } else { (y, x) };
    if small.is_zero() {
        return big.abs();
    }
    small.gcd(&(big % small))
}

/// `x·y` with cross-cancellation, fast when one factor has short terms.
pub fn mul_lopsided(x: &ExactRational, y: &ExactRational) -> ExactRational {
    if x.is_zero() || y.is_zero() {
        return ExactRational::zero();
    }
    let g1 = gcd_lopsided(x.numer(), y.denom());
    let g2 = gcd_lopsided(y.numer(), x.denom());
    ExactRational::new_raw(
        (x.numer() / &g1) * (y.numer() / &g2),
        (x.denom() / &g2) * (y.denom() / &g1),
    )
}

pub fn to_f64(x: &ExactRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn bit_len(x: &BigInt) -> i64 {
    x.bits() as i64
}

fn dyadic(m: BigInt, e: i64) -> ExactRational {
    if e >= 0 {
        BigRational::from_integer(m << (e as usize))
    } else {
        BigRational::new(m, BigInt::one() << ((-e) as usize))
    }
}

fn round_dyadic(x: &ExactRational, bits: u32, up: bool) -> ExactRational {
    if x.is_zero() {
        return x.clone();
    }
    assert!(x.is_positive(), "directed rounding is only used on positive values");
    let (p, q) = (x.numer(), x.denom());
    let e = bit_len(p) - bit_len(q) - bits as i64;
    let (num, den) = if e >= 0 {
        (p.clone(), q << (e as usize))
    } else {
        (p << ((-e) as usize), q.clone())
    };
    let (quot, rem) = num.div_rem(&den);
    let m = if up && !rem.is_zero() { quot + 1 } else { quot };
    dyadic(m, e)
}

/// Smallest dyadic with `bits` significant bits that is `>= x` (for `x >= 0`).
pub fn round_up(x: &ExactRational, bits: u32) -> ExactRational {
    round_dyadic(x, bits, true)
}

/// Largest dyadic with `bits` significant bits that is `<= x` (for `x >= 0`).
pub fn round_down(x: &ExactRational, bits: u32) -> ExactRational {
    round_dyadic(x, bits, false)
}

/// A closed interval `[lo, hi]` with exact rational end points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: ExactRational,
    pub hi: ExactRational,
}

impl Enclosure {
    pub fn exact(x: ExactRational) -> Self {
        Enclosure {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn contains(&self, x: &ExactRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn width(&self) -> ExactRational {
        &self.hi - &self.lo
    }
}

/// Encloses `base^exp` for `base` in `[0, 1]`, rounding outward to
/// `bits`-bit dyadics after every multiplication.
pub fn pow_enclosure(base: &ExactRational, exp: &BigUint, bits: u32) -> Enclosure {
    assert!(!base.is_negative() && base <= &ExactRational::one());
    let mut lo = ExactRational::one();
    let mut hi = ExactRational::one();
    let mut sq_lo = round_down(base, bits);
    let mut sq_hi = round_up(base, bits);
    let nbits = exp.bits();
    for i in 0..nbits {
        if exp.bit(i) {
            lo = round_down(&(&lo * &sq_lo), bits);
            hi = round_up(&(&hi * &sq_hi), bits);
        }
        if i + 1 < nbits {
            sq_lo = round_down(&(&sq_lo * &sq_lo), bits);
            sq_hi = round_up(&(&sq_hi * &sq_hi), bits);
        }
    }
    Enclosure { lo, hi }
}

/// Encloses Euler's number using `terms` terms of `sum 1/i!`.
///
/// The tail after `terms` terms is below `2/terms!`.
pub fn e_enclosure(terms: u32) -> Enclosure {
    assert!(terms >= 2);
    let mut sum = ExactRational::zero();
    let mut fact = BigInt::one();
    for i in 0..terms {
        if i > 0 {
            fact *= BigInt::from(i);
        }
        sum += BigRational::new(BigInt::one(), fact.clone());
    }
    let tail = BigRational::new(BigInt::from(2), fact * BigInt::from(terms));
    Enclosure {
        hi: &sum + tail,
        lo: sum,
    }
}

/// `⌈ln c⌉` for an integer `c >= 1`: the least `k` with `e^k >= c`.
///
/// Decided with exact rational enclosures of `e^k`; precision is raised
/// until the enclosure clears `c`. `e^k = c` is impossible for `k >= 1`
/// (e is transcendental), so the loop terminates.
pub fn ceil_ln(c: u64) -> u64 {
    assert!(c >= 1);
    if c == 1 {
        return 0;
    }
    let target = BigRational::from_integer(BigInt::from(c));
    let mut terms = 30;
    'precision: loop {
        let e = e_enclosure(terms);
        let mut lo = ExactRational::one();
        let mut hi = ExactRational::one();
        let mut k = 0u64;
        loop {
            k += 1;
            lo *= &e.lo;
            hi *= &e.hi;
            if lo >= target {
                return k;
            }
            if hi < target {
                continue;
            }
            // target lies inside the enclosure of e^k: refine
            terms *= 2;
            continue 'precision;
        }
    }
}

/// Serde adapter storing a rational as a `"num/den"` string.
pub mod serde_rational {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &ExactRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<ExactRational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("3").unwrap(), rat_int(3));
        assert_eq!(format_rational(&rat(6, 8)), "3/4");
        assert_eq!(format_rational(&rat_int(1)), "1/1");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn exact_power() {
        assert_eq!(pow(&rat(9, 10), 2), rat(81, 100));
        assert_eq!(pow(&rat(1, 2), 0), rat_int(1));
        assert_eq!(pow(&rat(2, 3), 9), rat(512, 19683));
    }

    #[test]
    fn enclosure_brackets_exact_power() {
        let base = rat(2912, 2916);
        for exp in [1u64, 2, 7, 1944] {
            let exact = pow(&base, exp);
            let enc = pow_enclosure(&base, &BigUint::from(exp), 64);
            assert!(enc.contains(&exact), "exp {exp}");
        }
    }

    #[test]
    fn euler_enclosure() {
        let e = e_enclosure(20);
        assert!(to_f64(&e.lo) <= std::f64::consts::E);
        assert!(to_f64(&e.hi) >= std::f64::consts::E);
    }

    #[test]
    fn ceil_ln_small_values() {
        // e ≈ 2.718, e^2 ≈ 7.389, e^3 ≈ 20.09, e^4 ≈ 54.6, e^5 ≈ 148.4
        let expect = [(2, 1), (3, 2), (7, 2), (8, 3), (10, 3), (20, 3), (21, 4), (100, 5), (148, 5), (149, 6)];
        for (c, k) in expect {
            assert_eq!(ceil_ln(c), k, "c = {c}");
        }
    }
}
