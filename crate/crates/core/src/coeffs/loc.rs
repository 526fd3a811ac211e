use std::fmt;

use super::{Laurent, Scalar, Q};
use crate::error::{Error, Result};

/// `numerator / (q-1)^den` with `numerator ∈ ℚ[q, q⁻¹]`.
///
/// Canonical: when `den > 0` the numerator is not divisible by `(q-1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LocScalar {
    num: Laurent,
    den: u32,
}

impl LocScalar {
    pub fn new(num: Laurent, den: u32) -> Self {
        let mut s = LocScalar { num, den };
        s.canonicalize();
        s
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = 0;
            return;
        }
        if self.den == 0 {
            return;
        }
        let v = self.num.valuation_at_one().unwrap_or(0).min(self.den);
        if v > 0 {
            self.num = self
                .num
                .divide_by_qminus1(v)
                .expect("valuation already checked");
            self.den -= v;
        }
    }

    pub fn from_laurent(num: Laurent) -> Self {
        LocScalar { num, den: 0 }
    }

    pub fn from_rational(c: Q) -> Self {
        LocScalar::from_laurent(Laurent::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        LocScalar::from_laurent(Laurent::from_int(n))
    }

    pub fn q_pow(k: i32) -> Self {
        LocScalar::from_laurent(Laurent::q_pow(k))
    }

    pub fn numerator(&self) -> &Laurent {
        &self.num
    }

    pub fn denominator_power(&self) -> u32 {
        self.den
    }

    /// `(q-1)`-adic valuation; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        self.num
            .valuation_at_one()
            .map(|v| v as i64 - self.den as i64)
    }

    /// The underlying Laurent polynomial when there is no denominator.
    pub fn to_laurent(&self) -> Option<&Laurent> {
        (self.den == 0).then_some(&self.num)
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> Result<Q> {
        if self.den > 0 {
            return Err(Error::NegativeValuation(-(self.den as i64)));
        }
        Ok(self.num.eval_at_one())
    }

    pub fn div_qminus1(&self, k: u32) -> Self {
        LocScalar::new(self.num.clone(), self.den + k)
    }

    pub fn mul_qminus1(&self, k: u32) -> Self {
        if k <= self.den {
            LocScalar::new(self.num.clone(), self.den - k)
        } else {
            LocScalar::from_laurent(self.num.times(&Laurent::q_minus_one_pow(k - self.den)))
        }
    }

    pub fn scale_laurent(&self, l: &Laurent) -> Self {
        LocScalar::new(self.num.times(l), self.den)
    }

    /// Applies `q ↦ q⁻¹` (the denominator picks up a unit `-q⁻¹`).
    pub fn invert_q(&self) -> Self {
        // (q⁻¹ - 1)^k = (-q⁻¹)^k (q - 1)^k
        let k = self.den as i32;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let unit = Laurent::monomial(super::q_int(sign), k);
        LocScalar::new(self.num.invert_q().times(&unit), self.den)
    }

    /// Multiplicative inverse; only units `c · q^a · (q-1)^b` have one.
    pub fn inverse(&self) -> Result<Self> {
        let v = self
            .num
            .valuation_at_one()
            .ok_or_else(|| Error::NotUnit("0".into()))?;
        let rest = self.num.divide_by_qminus1(v)?;
        let (c, a) = rest
            .as_monomial()
            .ok_or_else(|| Error::NotUnit(self.to_string()))?;
        let inv_rest = Laurent::monomial(c.recip(), -a);
        // (q-1)^{den - v}
        if self.den >= v {
            Ok(LocScalar::from_laurent(
                inv_rest.times(&Laurent::q_minus_one_pow(self.den - v)),
            ))
        } else {
            Ok(LocScalar::new(inv_rest, v - self.den))
        }
    }

    pub fn div_unit(&self, unit: &LocScalar) -> Result<Self> {
        Ok(self.times(&unit.inverse()?))
    }
}

impl LocScalar {
    pub fn zero() -> Self {
        LocScalar::default()
    }

    pub fn one() -> Self {
        LocScalar::from_laurent(Laurent::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Scalar for LocScalar {
    fn plus(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return LocScalar::new(self.num.plus(&rhs.num), self.den);
        }
        let den = self.den.max(rhs.den);
        let a = self.num.times(&Laurent::q_minus_one_pow(den - self.den));
        let b = rhs.num.times(&Laurent::q_minus_one_pow(den - rhs.den));
        LocScalar::new(a.plus(&b), den)
    }

    fn times(&self, rhs: &Self) -> Self {
        LocScalar::new(self.num.times(&rhs.num), self.den + rhs.den)
    }

    fn negated(&self) -> Self {
        LocScalar {
            num: self.num.negated(),
            den: self.den,
        }
    }
}

impl From<Laurent> for LocScalar {
    fn from(l: Laurent) -> Self {
        LocScalar::from_laurent(l)
    }
}

impl fmt::Display for LocScalar {
    /// `(q^2-1)/(q-1)^1` style; plain Laurent syntax when there is no denominator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/(q-1)^{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for LocScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LocScalar({self})")
    }
}
