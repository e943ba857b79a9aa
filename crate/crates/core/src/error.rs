use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree tuple must be non-empty with every part >= 1")]
    InvalidTuple,

    #[error("enumeration budget s1_max = {got} is below the ample threshold {min}")]
    BudgetTooSmall { got: u32, min: u32 },

    #[error("corner index {0} is invalid; corners are p_1, p_2, ... and p_inf")]
    InvalidIndex(u32),

    #[error(
        "hull was built with budget s1_max = {s1_max}, cannot match corners up to m_max = {m_max}"
    )]
    BudgetMismatch { s1_max: u32, m_max: u32 },

    #[error("quadratic has leading coefficient {lead}; the endpoint-minimum argument needs a strictly negative one")]
    WrongConcavity { lead: String },

    #[error("symbolic expansion disagrees with the closed form: {0}")]
    ExpansionMismatch(String),

    #[error("vertex-value polynomial has degree {degree}, expected a cubic")]
    NotCubic { degree: usize },

    #[error("positivity on an integer ray is impossible: leading coefficient is negative")]
    NegativeLeadingCoefficient,

    #[error("the zero polynomial carries no positivity information")]
    ZeroPolynomial,

    #[error("cleared denominator {0} is not strictly positive over the certified range")]
    DenominatorSignChange(String),

    #[error("vector lies outside every fan cell spanned by edges up to m_max = {m_max}")]
    NotRepresentable { m_max: u32 },

    #[error("cannot parse {0:?} as an exact rational (expected \"p\" or \"p/q\")")]
    ParseError(String),

    #[error("division by zero while computing {0}")]
    DivisionByZero(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
