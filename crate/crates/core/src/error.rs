use thiserror::Error;

/// Errors raised by graph construction, exact algebra and the operation formulas.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("invalid generator parameters: {0}")]
    InvalidGenerator(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("operation requires {0}")]
    Precondition(String),
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("rational function has a pole at the origin")]
    PoleAtOrigin,
    #[error("expression did not reduce to a polynomial: denominator {0}")]
    NotPolynomial(String),
    #[error("degenerate denominator in {0}")]
    DegenerateDenominator(&'static str),
    #[error("graph is not regular")]
    NotRegular,
    #[error("leading eigenvalue {found} differs from 2r = {expected}")]
    PerronMismatch { expected: f64, found: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
