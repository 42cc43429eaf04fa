use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division or remainder by the zero polynomial.
    DivisionByZero,
    /// `gcd(0, 0)` has no monic representative.
    GcdOfZeros,
    /// A polynomial would exceed the configured degree cap.
    DegreeCapExceeded { degree: usize, cap: usize },
    /// Extension degree outside the supported range.
    UnsupportedDegree { n: u32, max: u32 },
    /// The supplied polynomial is not primitive of the expected degree.
    NotPrimitive,
    /// `d` was required to divide `n`.
    NotADivisor { d: u32, n: u32 },
    InverseOfZero,
    /// A field element is not in the requested subfield.
    NotInSubfield { e: u32 },
    /// Element encoding does not belong to this context.
    ContextMismatch,
    /// The ring value produced by `⊕` is not a Teichmueller element.
    NotTeichmuller,
    /// Coefficient index outside `[1, ⌊(m-1)/2⌋]`.
    IndexOutOfRange { index: u32, max: u32 },
    /// Tap exponent outside `[0, n)`.
    TapOutOfRange { tap: u32, n: u32 },
    /// `alpha` is not in `T_e^*`.
    AlphaNotInSubgroup { alpha_exp: u32, e: u32 },
    InvalidParams(&'static str),
    /// Family parameters outside their admissible range.
    ParameterOutOfRange(&'static str),
    /// Two generated coefficient indices coincide.
    IndexCollision { index: u32 },
    /// Exhaustive search would exceed the candidate cap.
    SearchCapExceeded { bits: u32, cap: u32 },
    /// A value table has the wrong length or an out-of-range entry.
    MalformedTable(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by the zero polynomial"),
            Error::GcdOfZeros => write!(f, "gcd of two zero polynomials is undefined"),
            Error::DegreeCapExceeded { degree, cap } => {
                write!(f, "polynomial degree {degree} exceeds the cap {cap}")
            }
            Error::UnsupportedDegree { n, max } => {
                write!(f, "extension degree {n} is outside 1..={max}")
            }
            Error::NotPrimitive => write!(f, "polynomial is not primitive"),
            Error::NotADivisor { d, n } => write!(f, "{d} does not divide {n}"),
            Error::InverseOfZero => write!(f, "zero has no multiplicative inverse"),
            Error::NotInSubfield { e } => write!(f, "element is not in the subfield of degree {e}"),
            Error::ContextMismatch => write!(f, "element does not belong to this context"),
            Error::NotTeichmuller => {
                write!(f, "ring value is not in the Teichmueller set (broken lift)")
            }
            Error::IndexOutOfRange { index, max } => {
                write!(f, "coefficient index {index} is outside 1..={max}")
            }
            Error::TapOutOfRange { tap, n } => write!(f, "tap {tap} is outside 0..{n}"),
            Error::AlphaNotInSubgroup { alpha_exp, e } => {
                let order = (1u64 << e) - 1;
                write!(
                    f,
                    "alpha = xi^{alpha_exp} is not in T_{e}^*: its order must divide 2^{e}-1 = {order}"
                )
            }
            Error::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            Error::ParameterOutOfRange(msg) => write!(f, "parameter out of range: {msg}"),
            Error::IndexCollision { index } => {
                write!(f, "generated coefficient index {index} appears twice")
            }
            Error::SearchCapExceeded { bits, cap } => {
                write!(f, "search space of 2^{bits} candidates exceeds the cap 2^{cap}")
            }
            Error::MalformedTable(msg) => write!(f, "malformed value table: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
