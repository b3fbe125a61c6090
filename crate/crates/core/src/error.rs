use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ChromaError {
    /// A family constructor or evaluator received an out-of-range parameter.
    #[error("bad parameter: {0}")]
    BadParameter(String),

    /// Brute-force enumeration guard exceeded (n ≤ 12, q ≤ 8).
    #[error("graph too large for brute-force enumeration: {0}")]
    TooLarge(String),

    /// The Brown bound u(G) is undefined for graphs this small.
    #[error("Brown bound undefined for n = {0} (< 3)")]
    BrownUndefined(usize),

    /// Bisection refinement found no sign change over the interval
    /// (root of even multiplicity; refine the square-free part instead).
    #[error("no sign change on the isolating interval (even multiplicity?)")]
    NoSignChange,

    /// Aberth iteration failed to reach the residual target.
    #[error("root iteration did not converge after {0} iterations")]
    NoConvergence(usize),

    /// Structured-form evaluation left a nontrivial denominator, which
    /// signals a transcription bug in a coefficient tensor.
    #[error("denominator failed to cancel while evaluating {0}")]
    DenominatorNoCancel(String),

    /// A polynomial sequence does not fit the three-term λ-basis structure.
    #[error("sequence does not fit the λ-basis structural form: {0}")]
    NotThisForm(String),

    /// Unknown or unsupported family name.
    #[error("unknown family: {0}")]
    UnknownFamily(String),

    /// Two λ's coincide at the evaluation point, so partial fractions
    /// degenerate (e.g. q = 3 for the cubic-λ family).
    #[error("degenerate λ values at the evaluation point")]
    DegenerateLambdas,

    /// A Tutte-bound ratio exceeded 1, which no valid planar-triangulation
    /// chromatic polynomial can do.
    #[error("Tutte bound violated: r = {0} > 1")]
    BoundViolated(f64),

    /// W-function evaluation outside the family's convention domain.
    #[error("q = {q} outside the W-function domain of {family} (needs q ≥ {min})")]
    OutsideDomain { family: String, q: f64, min: f64 },

    /// Division by zero in exact arithmetic.
    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T> = std::result::Result<T, ChromaError>;
