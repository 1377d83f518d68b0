use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown token {token:?} at position {position}")]
    UnknownToken { token: String, position: usize },
    #[error("real branch count violated at position {position}")]
    BranchCountViolation { position: usize },
    #[error("scheme has no terminal symbol")]
    MissingTerminal,
    #[error("rewrite pattern does not match at position {position}")]
    PatternMismatch { position: usize },
    #[error("terminal {terminal} is not legal for y-degree {b}")]
    IllegalTerminalForBidegree { terminal: String, b: u32 },
    #[error("search budget exhausted after {expanded} expansions with {frontier} schemes pending")]
    StepBudgetExceeded { expanded: usize, frontier: usize },
    #[error("y-degree {0} is divisible by 3 after one reduction step")]
    NotReducible(usize),
    #[error("degenerate curve: {0}")]
    DegenerateCurve(String),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("interpolation system is singular")]
    SingularSystem,
    #[error("diagram has {found} crossings, expected {expected}")]
    WrongCrossingCount { expected: usize, found: usize },
    #[error("diagram is not readable as a trigonal two-bridge diagram: {0}")]
    NotTwoBridgeTrigonal(String),
    #[error("alternating bound needs degree at least 6, got {0}")]
    AlternatingBoundRequiresD6(u32),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
