use thiserror::Error;

/// Library-wide error type. `name()` is stable and is what the CLI prints
/// on its diagnostic stream.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    InvalidSpec(String),

    #[error("closure produced more than {expected} elements (bad generators?)")]
    ClosureOverflow { expected: usize },

    #[error("line {line}: {msg}")]
    ConfigParse { line: usize, msg: String },

    #[error("{0}")]
    NumericalDegeneracy(String),

    #[error("value {value} is {residue} away from an integer")]
    NonIntegralMultiplicity { value: f64, residue: f64 },

    #[error("{0}")]
    NotBinaryGroup(String),

    #[error("twice_j = {twice_j} is odd but the group has no central -1")]
    HalfIntegerOnNonBinary { twice_j: u32 },

    /// Spin restriction asked of a group that is not a rotation group
    /// (product groups carry no single rotation angle per class).
    #[error("{0}")]
    RequiresRotationGroup(String),

    /// Product-module checks are defined over plain SO(3) subgroups only.
    #[error("{0}")]
    RequiresSo3Group(String),

    #[error("gamma = 0 is a degenerate case")]
    DegenerateImmirzi,

    #[error("{required} candidate tuples exceed the budget of {budget}")]
    SearchBudgetExceeded { budget: u64, required: u64 },

    #[error("{0}")]
    InvalidDiagram(String),
}

impl Error {
    /// Stable machine-readable error name.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::ClosureOverflow { .. } => "ClosureOverflow",
            Error::ConfigParse { .. } => "ConfigParse",
            Error::NumericalDegeneracy(_) => "NumericalDegeneracy",
            Error::NonIntegralMultiplicity { .. } => "NonIntegralMultiplicity",
            Error::NotBinaryGroup(_) => "NotBinaryGroup",
            Error::HalfIntegerOnNonBinary { .. } => "HalfIntegerOnNonBinary",
            Error::RequiresRotationGroup(_) => "RequiresRotationGroup",
            Error::RequiresSo3Group(_) => "RequiresSo3Group",
            Error::DegenerateImmirzi => "DegenerateImmirzi",
            Error::SearchBudgetExceeded { .. } => "SearchBudgetExceeded",
            Error::InvalidDiagram(_) => "InvalidDiagram",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
