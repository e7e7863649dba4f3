use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable tables differ: [{left}] vs [{right}]")]
    TableMismatch { left: String, right: String },
    #[error("variable `{0}` is declared twice")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no assignment for variable `{0}`")]
    MissingAssignment(String),
    #[error("polynomial is not exactly divisible")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("expected a univariate polynomial, found variables {0:?}")]
    NotUnivariate(Vec<String>),
    #[error("expected a non-constant polynomial")]
    ConstantInput,
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("matrix determinant is not identically 1")]
    DeterminantNotOne,
    #[error("sl2 bracket relation {relation} fails on generator `{generator}`")]
    BracketViolation { relation: String, generator: String },
    #[error("no invariant of a supported type in this representation: {0}")]
    UnsupportedBlock(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("derivation is not graded-linear")]
    NotGradedLinear,
    #[error("iteration bound {0} exceeded; derivation is not locally nilpotent on the input")]
    IterationBound(usize),
    #[error("graph is not invariant under the derivation: chain rule fails for `{0}`")]
    InconsistentGraph(String),
    #[error("graph does not identify `{0}` with any coordinate")]
    UnidentifiedGraphVariable(String),

    #[error("polynomial is not invariant: D(f) = {0}")]
    NotInvariant(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("input is not a hypersurface: {0}")]
    NotHypersurface(String),
    #[error("phi(0) = -1 puts the origin on the hypersurface")]
    OriginOnHypersurface,
    #[error("phi has a repeated root")]
    NotSquarefree,
    #[error("invalid invariant choice: {0}")]
    InvalidDelta(String),
    #[error("not certified everywhere stable: {0}")]
    NotCertified(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}
