use thiserror::Error;

/// Errors raised by the engine.
///
/// Budget exhaustion is kept separate from mathematical failures so callers can
/// report it as an indeterminate outcome instead of a wrong answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("{q} is not a power of the characteristic {p}")]
    NotPowerOfCharacteristic { q: u64, p: u32 },
    #[error("operands live in different ambient rings")]
    AmbientMismatch,
    #[error("exponent vectors have lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { max: usize, got: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("element is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("element is zero in the ring")]
    ZeroElement,
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("the module is zero")]
    ZeroModule,
    #[error("the module has infinite length")]
    InfiniteLength,
    #[error("not a complex: composite d{0} o d{1} is nonzero")]
    NotAComplex(usize, usize),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("hypothesis not met: {0}")]
    UnmetHypothesis(String),
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}
