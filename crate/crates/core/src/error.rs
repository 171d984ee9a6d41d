use thiserror::Error;

/// Every failure the library can report.
///
/// Variants are grouped by the module that raises them; the CLI maps
/// them all to exit code 2 except [`Error::BoundViolated`] and
/// [`Error::ClosedFormMismatch`], which indicate a verification failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // finite fields
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("modulus {0:?} is not a monic irreducible polynomial of the requested degree")]
    ReducibleModulus(Vec<u32>),
    #[error("field of order {p}^{m} exceeds 65536 elements")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("element index {index} out of range for a field of order {q}")]
    ElementOutOfRange { index: u32, q: u32 },

    // linear algebra
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    // codes and search
    #[error("generator matrix is zero")]
    ZeroMatrix,
    #[error("the dual of the full space is the zero code")]
    FullSpaceDual,
    #[error("enumeration of {size} codewords exceeds the cap of {cap}")]
    EnumerationTooLarge { size: u128, cap: u128 },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("search budget must be positive")]
    BudgetZero,
    #[error("exhaustive search is limited to n <= {max}, got n = {n}")]
    ExhaustiveTooLarge { n: usize, max: usize },
    #[error("weight vector has a zero entry at coordinate {0}")]
    ZeroWeightEntry(usize),

    // gonality
    #[error("plane curve degree parameter r must be at least 2, got {0}")]
    DegreeTooSmall(u32),
    #[error("genus must be at least {min}, got {got}")]
    GenusTooSmall { min: u32, got: u32 },
    #[error("sequence has {got} entries, expected genus {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("gonality sequence must start at 0, got {0}")]
    FirstNotZero(i64),
    #[error("gonality sequence is not strictly increasing at position {0}")]
    NotIncreasing(usize),
    #[error("gamma_{index} = {value} lies outside [{lower}, {upper}]")]
    BoundsViolated {
        index: usize,
        value: i64,
        lower: i64,
        upper: i64,
    },
    #[error("symmetry violated: {a} and {mirror} are both {state} the sequence")]
    SymmetryViolated {
        a: i64,
        mirror: i64,
        state: &'static str,
    },
    #[error("argument {0} is below -1")]
    BelowDomain(i64),
    #[error("argument {arg} outside [-1, {max}]")]
    OutOfDomain { arg: i64, max: i64 },
    #[error("closed form disagrees with brute force: {0}")]
    ClosedFormMismatch(String),

    // AG codes and bounds
    #[error("unsupported Hermitian subfield order q = {0} (supported: 2, 3, 4, 5)")]
    UnsupportedQ(u32),
    #[error("degree m = {m} is not below the length n = {n}")]
    AbundantRegime { m: i64, n: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("bound violated: {0}")]
    BoundViolated(String),

    // file formats
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
