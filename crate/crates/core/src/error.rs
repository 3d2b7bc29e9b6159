use std::fmt;

use serde::Serialize;

/// Line/column position in surface source text (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("jet shape mismatch: {0}")]
    JetShapeMismatch(String),
    #[error("division by a jet with zero constant term")]
    DivisionBySingularJet,
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("requested derivative order {requested} exceeds jet order {order}")]
    OrderExceeded { requested: usize, order: usize },
    #[error("jet is not divisible by v (constant-in-v part {residual:e})")]
    NotDivisibleByV { residual: f64 },

    #[error("syntax error at {pos}: expected {}, found {found}", .expected.join(" or "))]
    SyntaxError {
        pos: Pos,
        expected: Vec<String>,
        found: String,
    },
    #[error("unknown identifier '{name}' at {pos}")]
    UnknownIdentifier { pos: Pos, name: String },
    #[error("exponent must be an integer literal at {pos}")]
    NonIntegerExponent { pos: Pos },
    #[error("invalid header at {pos}: {msg}")]
    InvalidHeader { pos: Pos, msg: String },

    #[error("coordinates are not adapted: {0}")]
    AdaptedCoordinateViolation(String),
    #[error("degenerate frame: {0}")]
    DegenerateFrame(String),
    #[error("point is not singular (|λ| = {0:e})")]
    NotSingular(f64),
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("not a parabolic point (value {0:e})")]
    NotParabolic(f64),
    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),
    #[error("height function is not corank 2: {0}")]
    NotCorank2(String),
    #[error("order exceeded: all derivatives up to order {0} vanish")]
    Exceeded(usize),

    #[error("branch ambiguity: {0}")]
    BranchAmbiguity(String),
    #[error("inconsistent identifier: residual {residual:e} > {bound:e}")]
    InconsistentIdentifier { residual: f64, bound: f64 },
    #[error("classifier disagreement: {0}")]
    ClassifierDisagreement(String),
    #[error("corank check contradicts parabolicity: {0}")]
    CorankPropositionViolated(String),
    #[error("closed form mismatch: raw {raw:e}, closed form {closed:e}")]
    ClosedFormMismatch { raw: f64, closed: f64 },
    #[error("consistency violation ({check}): {detail}")]
    ConsistencyViolation { check: String, detail: String },

    #[error("seed is not on the curve: {0}")]
    SeedNotOnCurve(String),
    #[error("singular gradient at ({u}, {v})")]
    SingularGradient { u: f64, v: f64 },
    #[error("corpus generation exhausted after {0} candidates")]
    GenerationExhausted(usize),

    #[error("usage: {0}")]
    Usage(String),
    #[error("io: {0}")]
    Io(String),
}

/// Coarse error classes, mapped to process exit codes by the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Category {
    Usage,
    Parse,
    Precondition,
    Numerical,
}

impl Category {
    pub fn exit_code(self) -> i32 {
        match self {
            Category::Usage => 1,
            Category::Parse => 2,
            Category::Precondition => 3,
            Category::Numerical => 4,
        }
    }
}

impl Error {
    pub fn category(&self) -> Category {
        use Error::*;
        match self {
            Usage(_) | Io(_) => Category::Usage,
            SyntaxError { .. }
            | UnknownIdentifier { .. }
            | NonIntegerExponent { .. }
            | InvalidHeader { .. } => Category::Parse,
            AdaptedCoordinateViolation(_)
            | DegenerateFrame(_)
            | NotSingular(_)
            | KindMismatch(_)
            | NotParabolic(_)
            | PreconditionNotMet(_)
            | NotCorank2(_)
            | SeedNotOnCurve(_)
            | NotDivisibleByV { .. }
            | JetShapeMismatch(_)
            | OrderExceeded { .. } => Category::Precondition,
            DivisionBySingularJet
            | DomainError(_)
            | Exceeded(_)
            | BranchAmbiguity(_)
            | InconsistentIdentifier { .. }
            | ClassifierDisagreement(_)
            | CorankPropositionViolated(_)
            | ClosedFormMismatch { .. }
            | ConsistencyViolation { .. }
            | SingularGradient { .. }
            | GenerationExhausted(_) => Category::Numerical,
        }
    }

    /// Stable short name, used in JSON reports.
    pub fn kind_name(&self) -> &'static str {
        use Error::*;
        match self {
            JetShapeMismatch(_) => "JetShapeMismatch",
            DivisionBySingularJet => "DivisionBySingularJet",
            DomainError(_) => "DomainError",
            OrderExceeded { .. } => "OrderExceeded",
            NotDivisibleByV { .. } => "NotDivisibleByV",
            SyntaxError { .. } => "SyntaxError",
            UnknownIdentifier { .. } => "UnknownIdentifier",
            NonIntegerExponent { .. } => "NonIntegerExponent",
            InvalidHeader { .. } => "InvalidHeader",
            AdaptedCoordinateViolation(_) => "AdaptedCoordinateViolation",
            DegenerateFrame(_) => "DegenerateFrame",
            NotSingular(_) => "NotSingular",
            KindMismatch(_) => "KindMismatch",
            NotParabolic(_) => "NotParabolic",
            PreconditionNotMet(_) => "PreconditionNotMet",
            NotCorank2(_) => "NotCorank2",
            Exceeded(_) => "Exceeded",
            BranchAmbiguity(_) => "BranchAmbiguity",
            InconsistentIdentifier { .. } => "InconsistentIdentifier",
            ClassifierDisagreement(_) => "ClassifierDisagreement",
            CorankPropositionViolated(_) => "CorankPropositionViolated",
            ClosedFormMismatch { .. } => "ClosedFormMismatch",
            ConsistencyViolation { .. } => "ConsistencyViolation",
            SeedNotOnCurve(_) => "SeedNotOnCurve",
            SingularGradient { .. } => "SingularGradient",
            GenerationExhausted(_) => "GenerationExhausted",
            Usage(_) => "Usage",
            Io(_) => "Io",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
