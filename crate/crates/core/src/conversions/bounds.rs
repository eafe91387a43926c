use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::BigNatural;

// 2^22 bits of output is far beyond anything worth printing
const MAX_BOUND_BITS: u64 = 1 << 22;

/// Value of a trade-off formula at one `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundValue {
    pub formula: &'static str,
    pub n: u64,
    /// Exact value, or the ceiling of `real` when the value is irrational.
    pub value: BigNatural,
    /// Present only when the formula is not an integer at this `n`.
    pub real: Option<f64>,
}

impl BoundValue {
    pub fn is_exact(&self) -> bool {
        self.real.is_none()
    }

    /// The value as a float (possibly rounded).
    pub fn as_f64(&self) -> f64 {
        self.real.unwrap_or_else(|| self.value.to_string().parse().unwrap_or(f64::INFINITY))
    }
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("formula", self.formula)?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("value", &self.value.to_string())?;
        if let Some(real) = self.real {
            map.serialize_entry("real", &real)?;
            map.serialize_entry("rounding", "ceiling")?;
        }
        map.end()
    }
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    Ok(())
}

fn two_to(bits: u64) -> Result<BigNatural> {
    if bits > MAX_BOUND_BITS {
        return Err(Error::cap("bound bits", bits, MAX_BOUND_BITS));
    }
    Ok(BigNatural::one() << bits)
}

/// `2^{n·2^n}`: alternating to deterministic, one-way.
pub fn bound_afa_to_dfa(n: u64) -> Result<BoundValue> {
    check_n(n)?;
    let bits = if n >= 40 { u64::MAX } else { n << n };
    Ok(BoundValue { formula: "afa-to-dfa", n, value: two_to(bits)?, real: None })
}

/// `2^n`: unary alternating to deterministic.
pub fn bound_unary_afa_to_dfa(n: u64) -> Result<BoundValue> {
    check_n(n)?;
    Ok(BoundValue { formula: "unary-afa-to-dfa", n, value: two_to(n)?, real: None })
}

fn binomial(n: u64, k: u64) -> BigNatural {
    let mut acc = BigNatural::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `Σ_{i<n} Σ_{j<n} C(n,i)·C(n,j)·(2^i − 1)^j` with `0^0 = 1`: two-way
/// nondeterministic to one-way deterministic.
pub fn bound_2nfa_to_dfa(n: u64) -> Result<BoundValue> {
    check_n(n)?;
    if n.saturating_mul(n) > MAX_BOUND_BITS {
        return Err(Error::cap("bound bits", n.saturating_mul(n), MAX_BOUND_BITS));
    }
    let mut total = BigNatural::zero();
    for i in 0..n {
        let base = (BigNatural::one() << i) - BigNatural::one();
        let ci = binomial(n, i);
        let mut power = BigNatural::one();
        for j in 0..n {
            total += &ci * binomial(n, j) * &power;
            power *= &base;
        }
    }
    Ok(BoundValue { formula: "2nfa-to-dfa", n, value: total, real: None })
}

/// `1 + 3^{(n−1)/3}`: self-verifying to deterministic.
///
/// Exact when `3 | n−1`; otherwise the value is irrational and both the
/// float and its exact ceiling are reported.
pub fn bound_svfa_to_dfa(n: u64) -> Result<BoundValue> {
    check_n(n)?;
    if n > 3 * MAX_BOUND_BITS / 2 {
        return Err(Error::cap("bound bits", n, 3 * MAX_BOUND_BITS / 2));
    }
    let cube = Pow::pow(BigUint::from(3u32), n - 1);
    if (n - 1).is_multiple_of(3) {
        let value = BigNatural::one() + Pow::pow(BigUint::from(3u32), (n - 1) / 3);
        return Ok(BoundValue { formula: "svfa-to-dfa", n, value, real: None });
    }
    // 3^{n−1} is not a cube, so its cube root is irrational
    let floor = cube.cbrt();
    let value = BigNatural::one() + floor + BigNatural::one();
    let real = 1.0 + 3f64.powf((n - 1) as f64 / 3.0);
    Ok(BoundValue { formula: "svfa-to-dfa", n, value, real: Some(real) })
}
