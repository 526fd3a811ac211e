//! Exact coefficient rings.
//!
//! Everything in the crate is computed over one of these:
//!
//! * [`Laurent`]: `ℚ[q, q⁻¹]`, the ground ring of the quantum algebras;
//! * [`LocScalar`]: `ℚ[q, q⁻¹]` with only `(q-1)` inverted;
//! * [`QSeries`]: truncated `(q-1)`-adic expansions `Σ c_k (q-1)^k mod (q-1)^N`;
//! * [`Q`]: plain rationals, used once `q = 1` has been substituted.

mod laurent;
mod loc;
mod qseries;

use std::fmt::{Debug, Display};

pub use laurent::Laurent;
pub use loc::LocScalar;
pub use qseries::QSeries;

use num_traits::{One, Zero};

/// Arbitrary-precision rational.
pub type Q = num_rational::BigRational;

/// A commutative coefficient ring for [`crate::ncalg::NCPoly`].
pub trait Scalar: Clone + PartialEq + Debug + Display + Zero + One + Send + Sync + 'static {
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
}

impl Scalar for Q {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
}

/// `Add`, `Mul`, `Zero`, `One` in terms of the inherent constructors and
/// [`Scalar::plus`] / [`Scalar::times`].
macro_rules! scalar_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                Scalar::plus(&self, &rhs)
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                Scalar::times(&self, &rhs)
            }
        }
        impl Zero for $t {
            fn zero() -> $t {
                <$t>::zero()
            }
            fn is_zero(&self) -> bool {
                <$t>::is_zero(self)
            }
        }
        impl One for $t {
            fn one() -> $t {
                <$t>::one()
            }
        }
    };
}

scalar_ops!(Laurent);
scalar_ops!(LocScalar);
scalar_ops!(QSeries);

/// Rational from an integer.
pub fn q_int(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Rational `n / d`.
pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Formats a rational the way the expression grammar reads it back (`-3/2`).
pub(crate) fn fmt_rational(r: &Q) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Which way round the Manin relations are written.
///
/// `Inverted` applies `q ↦ q⁻¹` to every defining formula (relations,
/// determinants, minors, big-cell prefactors). Under it the semiclassical
/// brackets change sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum QConv {
    #[default]
    Standard,
    Inverted,
}

impl QConv {
    /// The deformation parameter as it appears in the printed formulas.
    pub fn q(self) -> Laurent {
        match self {
            QConv::Standard => Laurent::q(),
            QConv::Inverted => Laurent::q_pow(-1),
        }
    }

    /// `q^k` in this convention.
    pub fn q_pow(self, k: i32) -> Laurent {
        match self {
            QConv::Standard => Laurent::q_pow(k),
            QConv::Inverted => Laurent::q_pow(-k),
        }
    }

    /// Sign of the Poisson bracket `(q-1)⁻¹[a, b]|_{q=1}` relative to the
    /// standard convention.
    pub fn semiclassical_sign(self) -> i64 {
        match self {
            QConv::Standard => 1,
            QConv::Inverted => -1,
        }
    }
}
