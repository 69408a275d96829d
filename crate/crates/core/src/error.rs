use alloc::string::String;

/// Failure modes shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Polynomial data whose variable nesting is inconsistent.
    #[error("structural error: {0}")]
    Structural(String),
    /// Input outside the domain of an operation (zero divisor, odd degree, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A coefficient division that does not come out exact.
    #[error("divisibility error: {0}")]
    Divisibility(String),
    /// A square or fourth root that is not rational.
    #[error("irrational value: {0}")]
    Irrational(String),
    /// Bad arguments: too few family members, missing bindings, N = 0, ...
    #[error("usage error: {0}")]
    Usage(String),
    /// A precondition that the caller promised but did not hold.
    #[error("consistency error: {0}")]
    Consistency(String),
    /// A structural property of the oscillator failed to hold.
    #[error("property violated: {property} ({reference})")]
    PropertyViolation {
        property: String,
        reference: &'static str,
    },
    /// Input that makes a computed quantity vanish identically.
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn violation(property: impl Into<String>, reference: &'static str) -> Self {
        Error::PropertyViolation {
            property: property.into(),
            reference,
        }
    }
}
