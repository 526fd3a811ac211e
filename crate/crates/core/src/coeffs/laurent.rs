use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{fmt_rational, Scalar, Q};
use crate::error::{Error, Result};

/// Laurent polynomial in `q` with rational coefficients.
///
/// Stored densely as `q^low · (c_0 + c_1 q + …)`; the first and last
/// coefficients are nonzero, and zero is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    low: i32,
    coeffs: Vec<Q>,
}

impl Laurent {
    fn from_parts(low: i32, coeffs: Vec<Q>) -> Self {
        let mut l = Laurent { low, coeffs };
        l.trim();
        l
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Laurent::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Laurent::constant(super::q_int(n))
    }

    /// `c · q^k`.
    pub fn monomial(c: Q, k: i32) -> Self {
        Laurent::from_parts(k, vec![c])
    }

    pub fn q() -> Self {
        Laurent::q_pow(1)
    }

    pub fn q_pow(k: i32) -> Self {
        Laurent::monomial(Q::one(), k)
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        Laurent::from_parts(0, vec![-Q::one(), Q::one()])
    }

    /// `q - q⁻¹`.
    pub fn q_minus_q_inv() -> Self {
        Laurent::from_parts(-1, vec![-Q::one(), Q::zero(), Q::one()])
    }

    /// `(q - 1)^k`.
    pub fn q_minus_one_pow(k: u32) -> Self {
        self::pow(&Laurent::q_minus_one(), k)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, Q)>>(terms: I) -> Self {
        terms.into_iter().fold(Laurent::zero(), |acc, (k, c)| {
            acc.plus(&Laurent::monomial(c, k))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Q)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    pub fn coeff(&self, k: i32) -> Q {
        let idx = k - self.low;
        if idx < 0 {
            return Q::zero();
        }
        self.coeffs
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    /// Lowest and highest exponent, `None` for zero.
    pub fn exponent_range(&self) -> Option<(i32, i32)> {
        if self.is_zero() {
            None
        } else {
            Some((self.low, self.low + self.coeffs.len() as i32 - 1))
        }
    }

    /// `Some((c, k))` when `self = c · q^k`.
    pub fn as_monomial(&self) -> Option<(Q, i32)> {
        if self.coeffs.len() == 1 {
            Some((self.coeffs[0].clone(), self.low))
        } else {
            None
        }
    }

    /// Value at `q = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> Q {
        self.coeffs.iter().fold(Q::zero(), |acc, c| acc + c)
    }

    pub fn eval(&self, q: &Q) -> Q {
        assert!(
            !q.is_zero() || self.low >= 0,
            "evaluating a negative power at 0"
        );
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        if self.low >= 0 {
            acc * pow_q(q, self.low as u32)
        } else {
            acc / pow_q(q, (-self.low) as u32)
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Applies `q ↦ q⁻¹`.
    pub fn invert_q(&self) -> Self {
        if self.is_zero() {
            return Laurent::zero();
        }
        let high = self.low + self.coeffs.len() as i32 - 1;
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Laurent { low: -high, coeffs }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplicity of `q = 1` as a root.
    pub fn valuation_at_one(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut v = 0;
        let mut cur = self.clone();
        loop {
            let (quot, rem) = cur.div_rem_qminus1();
            if !rem.is_zero() {
                return Some(v);
            }
            cur = quot;
            v += 1;
        }
    }

    /// Synthetic division by `(q - 1)`; the remainder is the value at 1.
    fn div_rem_qminus1(&self) -> (Laurent, Q) {
        if self.is_zero() {
            return (Laurent::zero(), Q::zero());
        }
        // P(q) = Σ c_i q^i, P = (q-1) B + P(1), with b_{d-1} = c_d, b_{i-1} = c_i + b_i.
        let d = self.coeffs.len() - 1;
        let mut b = vec![Q::zero(); d];
        let mut carry = Q::zero();
        for i in (1..=d).rev() {
            carry += &self.coeffs[i];
            b[i - 1] = carry.clone();
        }
        let rem = carry + &self.coeffs[0];
        (Laurent::from_parts(self.low, b), rem)
    }

    /// Exact quotient `self / (q-1)^k`.
    pub fn divide_by_qminus1(&self, k: u32) -> Result<Laurent> {
        let mut cur = self.clone();
        for done in 0..k {
            let (quot, rem) = cur.div_rem_qminus1();
            if !rem.is_zero() {
                return Err(Error::NotDivisible {
                    needed: k,
                    valuation: done as i64,
                });
            }
            cur = quot;
        }
        Ok(cur)
    }

    /// Exact quotient in `ℚ[q, q⁻¹]`, `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Laurent) -> Option<Laurent> {
        assert!(!d.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        // Both stored polynomials have nonzero constant term, so the
        // polynomial quotient carries the whole answer up to a shift.
        let n = &self.coeffs;
        let dv = &d.coeffs;
        if n.len() < dv.len() {
            return None;
        }
        let mut rem = n.clone();
        let dl = dv.len() - 1;
        let lead_inv = dv[dl].recip();
        let mut quot = vec![Q::zero(); n.len() - dl];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dl] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in dv.iter().enumerate() {
                    let t = &c * dc;
                    rem[i + j] -= t;
                }
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Laurent::from_parts(self.low - d.low, quot))
    }
}

fn pow_q(q: &Q, k: u32) -> Q {
    (0..k).fold(Q::one(), |acc, _| acc * q)
}

fn pow(base: &Laurent, k: u32) -> Laurent {
    (0..k).fold(Laurent::one(), |acc, _| acc.times(base))
}

impl Scalar for Laurent {
    fn plus(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = (self.low + self.coeffs.len() as i32).max(rhs.low + rhs.coeffs.len() as i32);
        let mut coeffs = vec![Q::zero(); (high - low) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + i] += c;
        }
        Laurent::from_parts(low, coeffs)
    }

    fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent::from_parts(self.low + rhs.low, coeffs)
    }

    fn negated(&self) -> Self {
        Laurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Laurent {
    /// Writes `3*q^2 - 1/2*q^-1`, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let q_part = match k {
                0 => None,
                1 => Some("q".to_string()),
                _ => Some(format!("q^{k}")),
            };
            match (abs.is_one(), q_part) {
                (_, None) => write!(f, "{}", fmt_rational(&abs))?,
                (true, Some(qp)) => write!(f, "{qp}")?,
                (false, Some(qp)) => write!(f, "{}*{qp}", fmt_rational(&abs))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{q_frac, q_int};

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(Laurent::q_minus_q_inv().eval_at_one(), q_int(0));
        assert_eq!(Laurent::one().eval_at_one(), q_int(1));
    }

    #[test]
    fn divide_by_qminus1_examples() {
        let q2m1 = Laurent::from_terms([(2, q_int(1)), (0, q_int(-1))]);
        assert_eq!(
            q2m1.divide_by_qminus1(1).unwrap(),
            Laurent::from_terms([(1, q_int(1)), (0, q_int(1))])
        );
        // q - q^-1 = q^-1 (q-1)(q+1)
        assert_eq!(
            Laurent::q_minus_q_inv().divide_by_qminus1(1).unwrap(),
            Laurent::from_terms([(0, q_int(1)), (-1, q_int(1))])
        );
        assert!(matches!(
            Laurent::q().divide_by_qminus1(1),
            Err(Error::NotDivisible { .. })
        ));
    }

    #[test]
    fn display_matches_grammar() {
        let s = Laurent::from_terms([(2, q_int(3)), (-1, q_frac(-1, 2))]);
        assert_eq!(s.to_string(), "3*q^2 - 1/2*q^-1");
        assert_eq!(Laurent::q_minus_q_inv().to_string(), "q - q^-1");
        assert_eq!(Laurent::from_int(-1).to_string(), "-1");
    }

    #[test]
    fn div_exact_recovers_factor() {
        let a = Laurent::from_terms([(3, q_int(2)), (0, q_int(1)), (-2, q_frac(1, 3))]);
        let b = Laurent::from_terms([(1, q_int(1)), (-1, q_int(-5))]);
        let prod = a.times(&b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(Laurent::q()
            .plus(&Laurent::one())
            .div_exact(&Laurent::q_minus_one())
            .is_none());
    }

    #[test]
    fn invert_q_is_involution() {
        let a = Laurent::from_terms([(3, q_int(2)), (-2, q_frac(1, 3))]);
        assert_eq!(a.invert_q().invert_q(), a);
        assert_eq!(Laurent::q().invert_q(), Laurent::q_pow(-1));
    }

    #[test]
    fn valuation_counts_root_multiplicity() {
        let p = Laurent::q_minus_one_pow(3)
            .times(&Laurent::q_pow(-2))
            .times(&Laurent::from_int(5));
        assert_eq!(p.valuation_at_one(), Some(3));
        assert_eq!(Laurent::zero().valuation_at_one(), None);
    }
}
