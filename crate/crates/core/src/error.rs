use core::fmt;

use crate::bounds::CheckId;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Zero was passed where a positive integer is required.
    Zero,
    /// Enumerating the abelian groups of order `n` would exceed the class cap.
    ClassCapExceeded { n: u64, classes: u64, cap: u64 },
    /// The brute-force oracle was asked to walk a group larger than its cap.
    ElementCapExceeded { order: u64, cap: u64 },
    /// `n` lies outside the domain of the requested check.
    NotApplicable { check: CheckId, n: u64 },
    /// Every abelian group of order `n` is cyclic.
    NoNonCyclicClass { n: u64 },
    /// Group order does not fit in a `u64`.
    Overflow,
    /// Malformed group signature.
    Parse { pos: usize, msg: &'static str },
    /// A closed-form identity that must always hold did not.
    IdentityViolated { check: CheckId, n: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Zero => f.write_str("expected a positive integer, got 0"),
            Error::ClassCapExceeded { n, classes, cap } => write!(
                f,
                "order {n} has {classes} abelian isomorphism classes, over the cap of {cap}"
            ),
            Error::ElementCapExceeded { order, cap } => write!(
                f,
                "group of order {order} exceeds the brute-force element cap of {cap}"
            ),
            Error::NotApplicable { check, n } => {
                write!(f, "check {} does not apply to n = {n}", check.as_str())
            }
            Error::NoNonCyclicClass { n } => {
                write!(f, "every abelian group of order {n} is cyclic")
            }
            Error::Overflow => f.write_str("group order overflows u64"),
            Error::Parse { pos, msg } => write!(f, "parse error at position {pos}: {msg}"),
            Error::IdentityViolated { check, n } => {
                write!(f, "identity behind {} violated at n = {n}", check.as_str())
            }
        }
    }
}

impl core::error::Error for Error {}
