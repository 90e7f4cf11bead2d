use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the range an operation is defined on.
    #[error("invalid parameter {name} = {value}: {requirement}")]
    OutOfRange { name: &'static str, value: f64, requirement: String },

    #[error("invalid parameter {name}: value is not finite")]
    NonFinite { name: &'static str },

    /// A parameter combination with a dedicated representation elsewhere.
    #[error("invalid parameter {name}: {guidance}")]
    Unsupported { name: &'static str, guidance: String },

    /// The containment margin did not cross zero exactly once on (0, 1).
    #[error("single-crossing assumption falsified: {crossings} sign changes in the containment margin")]
    CrossingCount { crossings: usize },

    /// The center of the class disc left the admissible interval before the
    /// containment margin turned negative.
    #[error("disc center a = {center} left the admissible interval at r = {r} before the margin crossed zero")]
    CenterEscaped { center: f64, r: f64 },
}

impl Error {
    pub(crate) fn out_of_range(name: &'static str, value: f64, requirement: impl Into<String>) -> Self {
        Error::OutOfRange { name, value, requirement: requirement.into() }
    }

    /// Name of the offending parameter, when the error stems from an input.
    pub fn parameter(&self) -> Option<&'static str> {
        match self {
            Error::OutOfRange { name, .. } | Error::NonFinite { name } | Error::Unsupported { name, .. } => Some(name),
            Error::CrossingCount { .. } | Error::CenterEscaped { .. } => None,
        }
    }

    /// True for errors raised by the oracles' self-checks rather than by bad input.
    pub fn is_diagnostic(&self) -> bool {
        matches!(self, Error::CrossingCount { .. } | Error::CenterEscaped { .. })
    }
}

pub(crate) fn finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { name })
    }
}
