use std::fmt;

/// Crate-wide error type. Every fallible operation returns one of these;
/// axiom checkers report failures through [`crate::algebra::AxiomReport`]
/// instead of erroring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Inverse of zero requested.
    ZeroInverse,
    /// A value claimed to be prime is not.
    NotPrime(u64),
    /// Matrix operation requires a square matrix.
    NotSquare { rows: usize, cols: usize },
    /// Incompatible dimensions in a linear-algebra or module operation.
    DimensionMismatch(String),
    /// Elements belong to different parent algebras.
    ParentMismatch,
    /// Tensor factors live over different fields.
    FieldMismatch,
    /// Element has no two-sided inverse.
    NotInvertible,
    /// An enumeration would visit more candidates than the configured budget.
    EnumerationOverBudget { needed: u128, budget: u64 },
    /// Exhaustive enumeration over the rationals is impossible.
    RationalFieldNotEnumerable,
    /// Enumeration requires a prime below 2^16.
    PrimeTooLargeForEnumeration(u64),
    /// A multiplication table fails the group axioms.
    NotAGroup(String),
    /// The given subset is not a subgroup.
    NotASubgroup(String),
    /// Operation requires commutative algebras.
    NotCommutative(String),
    /// Map expected to be injective is not.
    NotInjective,
    /// Map is not a morphism of the required kind.
    NotAMorphism(String),
    /// Connecting-map lift leaves the subalgebra; signals a convention or
    /// exactness violation in the ambient data.
    LiftNotInSubalgebra,
    /// Hom-space elements live at different levels.
    LevelMismatch { expected: usize, found: usize },
    /// Coboundary index out of range for the level.
    BadIndex { level: usize, index: usize },
    /// The comparison map between Hom-space levels is not bijective.
    ConditionFFailed(usize),
    /// Element is not in the distinguished unit set of the module.
    NotInTBullet,
    /// Input file is not syntactically valid.
    ParseError { line: usize, col: usize, msg: String },
    /// Parsed structure fails an axiom check.
    AxiomError { name: String, witness: String },
    /// Structural dimension error in an input file.
    DimensionError(String),
    /// Underlying I/O failure.
    Io(String),
    /// Command-line usage error.
    Usage(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroInverse => write!(f, "inverse of zero"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::DimensionMismatch(msg) => write!(f, "dimension mismatch: {msg}"),
            Error::ParentMismatch => write!(f, "elements belong to different algebras"),
            Error::FieldMismatch => write!(f, "algebras are defined over different fields"),
            Error::NotInvertible => write!(f, "element is not invertible"),
            Error::EnumerationOverBudget { needed, budget } => {
                write!(f, "enumeration needs {needed} candidates, budget is {budget}")
            }
            Error::RationalFieldNotEnumerable => {
                write!(f, "cannot enumerate elements over the rationals")
            }
            Error::PrimeTooLargeForEnumeration(p) => {
                write!(f, "prime {p} exceeds the 2^16 enumeration bound")
            }
            Error::NotAGroup(w) => write!(f, "not a group: {w}"),
            Error::NotASubgroup(w) => write!(f, "not a subgroup: {w}"),
            Error::NotCommutative(w) => write!(f, "commutativity required: {w}"),
            Error::NotInjective => write!(f, "map is not injective"),
            Error::NotAMorphism(w) => write!(f, "not a morphism: {w}"),
            Error::LiftNotInSubalgebra => write!(f, "connecting-map lift leaves the subalgebra"),
            Error::LevelMismatch { expected, found } => {
                write!(f, "level mismatch: expected {expected}, found {found}")
            }
            Error::BadIndex { level, index } => {
                write!(f, "coboundary index {index} invalid at level {level}")
            }
            Error::ConditionFFailed(n) => {
                write!(f, "comparison map at tensor degree {n} is not an isomorphism")
            }
            Error::NotInTBullet => write!(f, "element is not in the unit set of the module"),
            Error::ParseError { line, col, msg } => {
                write!(f, "parse error at line {line}, column {col}: {msg}")
            }
            Error::AxiomError { name, witness } => {
                write!(f, "axiom `{name}` fails at {witness}")
            }
            Error::DimensionError(msg) => write!(f, "dimension error: {msg}"),
            Error::Io(msg) => write!(f, "io error: {msg}"),
            Error::Usage(msg) => write!(f, "usage error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
