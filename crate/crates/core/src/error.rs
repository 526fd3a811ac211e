use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalar is not divisible by (q-1)^{needed} (valuation {valuation})")]
    NotDivisible { needed: u32, valuation: i64 },

    #[error("negative (q-1)-adic valuation {0}")]
    NegativeValuation(i64),

    #[error("scalar {0} is not a unit")]
    NotUnit(String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("rewriting exceeded the step budget of {0}")]
    StepBudgetExceeded(usize),

    #[error("index out of range: {0}")]
    IndexError(String),

    #[error("element does not q-commute with D_0: {0}")]
    NotQCommuting(String),

    #[error("{0} is not central")]
    NotCentral(String),

    #[error("commutator leaves the dual algebra: {0}")]
    NotInVee(String),

    #[error("element is not congruent to 1 mod (q-1): {0}")]
    NotUnitAtOne(String),

    #[error("valuation {found} is below the required {required}")]
    ValuationTooLow { required: i64, found: i64 },

    #[error("not a Lie element after specialization: {0}")]
    NotLinear(String),
}

pub type Result<T> = std::result::Result<T, Error>;
