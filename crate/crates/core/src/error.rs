use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field configuration: {0}")]
    InvalidConfig(String),
    #[error("characteristic p = {p} divides r = {r}")]
    CharacteristicDividesR { p: u32, r: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("both operands are zero")]
    BothZero,
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,
    #[error("the morphism parameter C must be nonzero")]
    ZeroC,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("operand has negative X-valuation where a polynomial is required")]
    NotPolynomial,
    #[error("denominator does not split into linear factors over F")]
    UnsplitDenominator,
    #[error("quotient elements live modulo different ideals")]
    MixedModuli,
    #[error("the point must be a nonzero element of F")]
    ZeroPoint,
    #[error("point {0} is not an element of F")]
    PointNotInBase(u32),
    #[error("insufficient precision: need {needed}, have {have}")]
    InsufficientPrecision { needed: i64, have: i64 },
    #[error("series is zero to the computed precision")]
    ZeroToPrecision,
    #[error("a simple pole is required at {point}, found pole order {order}")]
    SimplePoleRequired { point: String, order: i64 },
    #[error("point is not regular for the change of variables")]
    NotRegular,
    #[error("expected a central element (coefficients in F, powers of X^r only)")]
    NotCentral,
    #[error("point index j = {j} outside 0..{r}")]
    IndexOutOfRange { j: i64, r: usize },
}
