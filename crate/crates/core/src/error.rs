use thiserror::Error;

use crate::colorful::RefutationCertificate;
use crate::set::ElementSet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("convex family must contain both the empty set and the full ground set")]
    MissingEmptyOrFull,

    #[error("family is not closed under intersection: {a} ∩ {b} = {meet} is missing")]
    NotIntersectionClosed {
        a: ElementSet,
        b: ElementSet,
        meet: ElementSet,
    },

    #[error("element index {index} is out of range for a ground set of size {ground_size}")]
    IndexOutOfRange { index: usize, ground_size: usize },

    #[error("ground set of size {0} is not supported (maximum {max})", max = ElementSet::MAX_GROUND)]
    GroundTooLarge(usize),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("unsupported dimension {0}; only planar point sets are supported")]
    UnsupportedDimension(usize),

    #[error("family of {size} sets exceeds the size cap of {cap}")]
    SizeCapExceeded { size: usize, cap: usize },

    #[error("search budget of {limit} steps exhausted")]
    BudgetExceeded { limit: u64 },

    #[error("set {0} is not a member of the convex family")]
    SetNotConvex(ElementSet),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("claimed Radon bound is refuted: {0}")]
    RadonBoundRefuted(Box<RefutationCertificate>),

    #[error("infeasible: member {0} is empty and cannot be hit")]
    Infeasible(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("witness failed re-validation: {0}")]
    WitnessInvalid(String),

    #[error("malformed document: {0}")]
    Parse(String),
}

impl Error {
    /// Stable snake_case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MissingEmptyOrFull => "missing_empty_or_full",
            Error::NotIntersectionClosed { .. } => "not_intersection_closed",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::GroundTooLarge(_) => "ground_too_large",
            Error::DegenerateInput(_) => "degenerate_input",
            Error::UnsupportedDimension(_) => "unsupported_dimension",
            Error::SizeCapExceeded { .. } => "size_cap_exceeded",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::SetNotConvex(_) => "set_not_convex",
            Error::PreconditionViolation(_) => "precondition_violation",
            Error::RadonBoundRefuted(_) => "radon_bound_refuted",
            Error::Infeasible(_) => "infeasible",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::WitnessInvalid(_) => "witness_invalid",
            Error::Parse(_) => "parse",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}
