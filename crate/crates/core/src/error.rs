//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operands have {left} and {right} variables")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },

    #[error("the zero polynomial has no multiplicity")]
    ZeroPolynomialMultiplicity,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("division by zero")]
    DivisionByZero,

    #[error("exact division failed: divisor does not divide")]
    InexactDivision,

    #[error("interpolation nodes must be distinct")]
    DuplicateInterpolationNode,

    #[error("system must contain at least one form")]
    EmptySystem,

    #[error("form {index} is zero")]
    ZeroForm { index: usize },

    #[error("form {index} has {got} variables, expected {expected}")]
    FormVariableMismatch {
        index: usize,
        expected: usize,
        got: usize,
    },

    #[error("form {index} is not homogeneous")]
    FormNotHomogeneous { index: usize },

    #[error("form {index} has degree {got}, expected {expected}")]
    FormDegreeMismatch {
        index: usize,
        expected: u32,
        got: u32,
    },

    #[error("forms are linearly dependent")]
    DependentForms,

    #[error("family polynomial is not homogeneous in the point variables")]
    FamilyNotHomogeneous,

    #[error("family polynomial does not involve the point variables")]
    FamilyConstantInX,

    #[error("operation `{op}` requires a finite field")]
    InfiniteField { op: &'static str },

    #[error("operation `{op}` requires positive characteristic")]
    CharacteristicZero { op: &'static str },

    #[error("enumeration needs {needed} points, exceeding the cap of {cap}")]
    EnumerationCap { needed: u128, cap: u64 },

    #[error("search space of {needed} candidates exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("operation requires a pencil (two forms), system has {got}")]
    NotPencil { got: usize },

    #[error("operation requires a one-parameter family, got {got} parameters")]
    NotOneParameter { got: usize },

    #[error("system has a nontrivial fixed component")]
    NontrivialFixedComponent,

    #[error("polynomial is not univariate")]
    NotUnivariate,

    #[error("projective point must have a nonzero coordinate")]
    ZeroProjectivePoint,

    #[error("parameter point of length {got}, expected {expected}")]
    ParameterLength { expected: usize, got: usize },

    #[error("ambient hypersurface is not squarefree")]
    AmbientNotSquarefree,

    #[error("coefficient {coeff} has no image in characteristic {p}")]
    CoefficientNotDefined { coeff: String, p: u64 },

    #[error("all sampled basepoints lie in the base locus")]
    NoBasepointOutsideBaseLocus,

    #[error("decomposition target degree {w} does not divide the member degree {m}")]
    DecompositionDegree { w: u32, m: u32 },

    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    #[error("{file_line}: {msg}")]
    Document { file_line: usize, msg: String },
}
