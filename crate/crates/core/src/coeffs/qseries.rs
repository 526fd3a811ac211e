use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{fmt_rational, Laurent, LocScalar, Scalar, Q};
use crate::error::{Error, Result};

/// Marker for series that are exact polynomials in `(q-1)`.
pub const EXACT: usize = usize::MAX;

/// `Σ_{k<order} c_k (q-1)^k`, known modulo `(q-1)^order`.
///
/// `order == EXACT` marks an exact polynomial in `t = q - 1` (the constants
/// `0` and `1` are exact). Combining two series keeps the smaller order.
#[derive(Clone, Eq)]
pub struct QSeries {
    coeffs: Vec<Q>,
    order: usize,
}

impl QSeries {
    fn from_parts(mut coeffs: Vec<Q>, order: usize) -> Self {
        if coeffs.len() > order {
            coeffs.truncate(order);
        }
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QSeries { coeffs, order }
    }

    /// Series from explicit coefficients `c_0, c_1, …` modulo `(q-1)^order`.
    pub fn new(coeffs: Vec<Q>, order: usize) -> Self {
        QSeries::from_parts(coeffs, order)
    }

    pub fn exact(coeffs: Vec<Q>) -> Self {
        QSeries::from_parts(coeffs, EXACT)
    }

    pub fn constant(c: Q) -> Self {
        QSeries::exact(vec![c])
    }

    /// `(q-1)^k`, exact.
    pub fn t_pow(k: usize) -> Self {
        let mut coeffs = vec![Q::zero(); k + 1];
        coeffs[k] = Q::one();
        QSeries::exact(coeffs)
    }

    /// `(q-1)`-adic expansion of a Laurent polynomial, via
    /// `q^k = (1 + t)^k = Σ_j binom(k, j) t^j` (generalized binomial for `k < 0`).
    pub fn from_laurent(l: &Laurent, order: usize) -> Self {
        assert!(order != EXACT, "expansion needs a finite order");
        let mut coeffs = vec![Q::zero(); order];
        for (k, c) in l.terms() {
            let kq = Q::from_integer(k.into());
            let mut binom = Q::one();
            for (j, slot) in coeffs.iter_mut().enumerate() {
                if binom.is_zero() {
                    break;
                }
                *slot += c * &binom;
                // binom(k, j+1) = binom(k, j) (k - j) / (j + 1)
                let jq = Q::from_integer((j as i64).into());
                binom = binom * (&kq - &jq) / (jq + Q::one());
            }
        }
        QSeries::from_parts(coeffs, order)
    }

    /// Expansion of a localized scalar; fails when the valuation is negative.
    pub fn expand(s: &LocScalar, order: usize) -> Result<Self> {
        if let Some(v) = s.valuation() {
            if v < 0 {
                return Err(Error::NegativeValuation(v));
            }
        }
        let d = s.denominator_power() as usize;
        // den > 0 only when valuation < 0, so d == 0 here.
        debug_assert_eq!(d, 0);
        Ok(QSeries::from_laurent(s.numerator(), order))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order == EXACT
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    /// Constant term, the value at `q = 1`.
    pub fn constant_term(&self) -> Q {
        self.coeff(0)
    }

    /// Index of the first nonzero coefficient; `order` when none is known.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.order)
    }

    /// Reduces modulo `(q-1)^order` (never raises the order).
    pub fn truncate(&self, order: usize) -> Self {
        QSeries::from_parts(self.coeffs.clone(), order.min(self.order))
    }

    /// Multiplies by `(q-1)^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![Q::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        let order = if self.order == EXACT {
            EXACT
        } else {
            self.order + k
        };
        QSeries::from_parts(coeffs, order)
    }

    /// Exact division by `(q-1)^k`; loses `k` orders of precision.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        let v = self.valuation();
        if v < k {
            return Err(Error::NotDivisible {
                needed: k as u32,
                valuation: v as i64,
            });
        }
        let coeffs = self.coeffs.iter().skip(k).cloned().collect();
        let order = if self.order == EXACT {
            EXACT
        } else {
            self.order - k
        };
        Ok(QSeries::from_parts(coeffs, order))
    }

    pub fn scale(&self, c: &Q) -> Self {
        QSeries::from_parts(self.coeffs.iter().map(|x| x * c).collect(), self.order)
    }
}

impl PartialEq for QSeries {
    /// Equality up to the common known precision.
    fn eq(&self, other: &Self) -> bool {
        let order = self.order.min(other.order);
        let len = self.coeffs.len().max(other.coeffs.len()).min(order);
        (0..len).all(|k| self.coeff(k) == other.coeff(k))
    }
}

impl QSeries {
    pub fn zero() -> Self {
        QSeries::exact(Vec::new())
    }

    pub fn one() -> Self {
        QSeries::constant(Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl Scalar for QSeries {
    fn plus(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let len = self.coeffs.len().max(rhs.coeffs.len()).min(order);
        let coeffs = (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        QSeries::from_parts(coeffs, order)
    }

    fn times(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return QSeries::from_parts(Vec::new(), order);
        }
        let len = (self.coeffs.len() + rhs.coeffs.len() - 1).min(order);
        let mut coeffs = vec![Q::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] += a * b;
            }
        }
        QSeries::from_parts(coeffs, order)
    }

    fn negated(&self) -> Self {
        QSeries::from_parts(self.coeffs.iter().map(|c| -c).collect(), self.order)
    }
}

impl fmt::Display for QSeries {
    /// `2 - (q-1) + O((q-1)^3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
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
            let t = match k {
                0 => None,
                1 => Some("(q-1)".to_string()),
                _ => Some(format!("(q-1)^{k}")),
            };
            match (abs.is_one(), t) {
                (_, None) => write!(f, "{}", fmt_rational(&abs))?,
                (true, Some(t)) => write!(f, "{t}")?,
                (false, Some(t)) => write!(f, "{}*{t}", fmt_rational(&abs))?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        if self.order != EXACT {
            write!(f, " + O((q-1)^{})", self.order)?;
        }
        Ok(())
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::q_int;

    fn ints(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q_int(x)).collect()
    }

    /// Geometric-series oracle for q⁻¹ = 1/(1+t) = Σ (-t)^k.
    #[test]
    fn q_inverse_is_geometric_series() {
        let s = QSeries::from_laurent(&Laurent::q_pow(-1), 3);
        assert_eq!(s, QSeries::new(ints(&[1, -1, 1]), 3));
    }

    #[test]
    fn q_expands_to_one_plus_t() {
        let s = QSeries::from_laurent(&Laurent::q(), 2);
        assert_eq!(s, QSeries::new(ints(&[1, 1]), 2));
    }

    #[test]
    fn division_oracle_example() {
        let s = LocScalar::new(Laurent::q_minus_q_inv(), 1);
        let e = QSeries::expand(&s, 2).unwrap();
        assert_eq!(e, QSeries::new(ints(&[2, -1]), 2));
    }

    #[test]
    fn expansion_rejects_negative_valuation() {
        let s = LocScalar::new(Laurent::one(), 1);
        assert!(matches!(
            QSeries::expand(&s, 3),
            Err(Error::NegativeValuation(-1))
        ));
    }

    #[test]
    fn shift_round_trip_loses_precision() {
        let s = QSeries::new(ints(&[0, 0, 3, 4]), 5);
        let d = s.shift_down(2).unwrap();
        assert_eq!(d.order(), 3);
        assert_eq!(d.shift_up(2), s.truncate(5));
        assert!(s.shift_down(3).is_err());
    }

    #[test]
    fn exact_constants_adopt_finite_order() {
        let one = QSeries::one();
        let s = QSeries::new(ints(&[1, 2, 3]), 3);
        let p = one.plus(&s);
        assert_eq!(p.order(), 3);
        assert_eq!(p, QSeries::new(ints(&[2, 2, 3]), 3));
    }

    #[test]
    fn display_shows_precision() {
        let s = QSeries::new(ints(&[2, -1]), 2);
        assert_eq!(s.to_string(), "2 - (q-1) + O((q-1)^2)");
    }
}
