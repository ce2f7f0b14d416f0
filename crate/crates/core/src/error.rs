use thiserror::Error;

/// Evidence that a modulus is reducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Root(u64),
    /// Monic nontrivial factor, little-endian.
    Factor(Vec<u64>),
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::Root(r) => write!(f, "root {r}"),
            Witness::Factor(g) => write!(f, "factor {g:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus must have degree >= 1")]
    DegreeTooSmall,
    #[error("modulus is reducible over GF(p): {witness}")]
    Reducible { witness: Witness },
    #[error("coefficient {value} is not a residue mod {p}")]
    CoefficientOutOfRange { value: u64, p: u64 },
    #[error("field p={p}, m={m} exceeds 2^32 elements")]
    FieldTooLarge { p: u64, m: usize },
    #[error("cannot parse field spec {0:?}")]
    ParseField(String),
    #[error("cannot parse field element {0:?}")]
    ParseElement(String),
    #[error("cannot parse algebra element {0:?}")]
    ParseAlgebraElement(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields or algebras")]
    MixedContexts,
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("no primitive {n}-th root of unity in GF({q}): {n} does not divide q-1")]
    NoSuchRoot { n: u64, q: u64 },
    #[error("expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrix dimensions do not agree: {0}")]
    DimensionMismatch(String),
    #[error("column index {index} out of range for {cols} columns")]
    IndexOutOfRange { index: usize, cols: usize },
    #[error("column index {0} listed twice")]
    DuplicateIndex(usize),
    #[error("characteristic {p} divides the group order 2n={order}")]
    CharDividesOrder { p: u64, order: u64 },
    #[error("n must be at least 1")]
    InvalidN,
    #[error("n={0} must be odd")]
    EvenN(usize),
    #[error("n={0} must be odd and at least 3 for code constructions")]
    NTooSmall(usize),
    #[error("no generators supplied")]
    EmptyGenerators,
    #[error("row ideal spec (x,y) must not be (0,0)")]
    InvalidRowSpec,
    #[error("invalid ideal spec: {0}")]
    InvalidIdealSpec(String),
    #[error("Wedderburn transform is singular")]
    SingularTransform,
    #[error("ord(beta)={order} <= 2n={bound}")]
    BadOrder { order: u64, bound: u64 },
    #[error("beta^n = 1 (n={n})")]
    BetaIsNthRoot { n: usize },
    #[error("beta must be nonzero")]
    ZeroBeta,
    #[error("twist index s={s} needs 1 <= s <= (n-1)/2 and gcd(s,n)=1 (n={n})")]
    NotCoprime { s: usize, n: usize },
    #[error("style=paper needs a code built by construct_code")]
    UnsupportedStyle,
    #[error("exhaustive search needs {needed} codewords, cap is {cap}")]
    CapExceeded { needed: u128, cap: u128 },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("invalid JSON document: {0}")]
    Json(String),
}

impl Error {
    /// Stable diagnostic code for command-line reporting.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not-prime",
            Error::NotMonic => "not-monic",
            Error::DegreeTooSmall => "degree-too-small",
            Error::Reducible { .. } => "reducible",
            Error::CoefficientOutOfRange { .. } => "coefficient-range",
            Error::FieldTooLarge { .. } => "field-too-large",
            Error::ParseField(_) => "parse-field",
            Error::ParseElement(_) => "parse-element",
            Error::ParseAlgebraElement(_) => "parse-algebra-element",
            Error::DivisionByZero => "division-by-zero",
            Error::MixedContexts => "mixed-contexts",
            Error::ZeroElement => "zero-element",
            Error::NoSuchRoot { .. } => "no-such-root",
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::DimensionMismatch(_) => "dimension-mismatch",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::DuplicateIndex(_) => "duplicate-index",
            Error::CharDividesOrder { .. } => "char-divides-order",
            Error::InvalidN => "invalid-n",
            Error::EvenN(_) => "even-n",
            Error::NTooSmall(_) => "n-too-small",
            Error::EmptyGenerators => "empty-generators",
            Error::InvalidRowSpec => "invalid-row-spec",
            Error::InvalidIdealSpec(_) => "invalid-ideal-spec",
            Error::SingularTransform => "singular-transform",
            Error::BadOrder { .. } => "bad-order",
            Error::BetaIsNthRoot { .. } => "beta-is-nth-root",
            Error::ZeroBeta => "zero-beta",
            Error::NotCoprime { .. } => "not-coprime",
            Error::UnsupportedStyle => "unsupported-style",
            Error::CapExceeded { .. } => "cap-exceeded",
            Error::ZeroCode => "zero-code",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
