use rootloop_core::{ClassifyError, GroupError, QuiverError, SeedError, WordParseError};
use thiserror::Error;

/// Failures of a command, each with its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input: file syntax, words, modes, unknown names.
    #[error("{0}")]
    Parse(String),
    /// Well-formed input breaking a quiver or seed invariant.
    #[error("{0}")]
    Invariant(String),
    /// Finiteness was required and the seed is of infinite type.
    #[error("{0}")]
    Infinite(String),
    /// A cap was exhausted or the verdict is unknown.
    #[error("{0}")]
    Unknown(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;
pub const EXIT_INFINITE: i32 = 4;
pub const EXIT_UNKNOWN: i32 = 5;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Invariant(_) => EXIT_INVARIANT,
            CliError::Infinite(_) => EXIT_INFINITE,
            CliError::Unknown(_) => EXIT_UNKNOWN,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl From<QuiverError> for CliError {
    fn from(e: QuiverError) -> Self {
        CliError::Invariant(e.to_string())
    }
}

impl From<WordParseError> for CliError {
    fn from(e: WordParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<SeedError> for CliError {
    fn from(e: SeedError) -> Self {
        CliError::Invariant(e.to_string())
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::Seed(e) => e.into(),
            GroupError::Infinite(_) => CliError::Infinite(e.to_string()),
            GroupError::PatternIncomplete { .. }
            | GroupError::TooManyElements { .. }
            | GroupError::TooManyVariables { .. } => CliError::Unknown(e.to_string()),
            GroupError::NotALoop(_) => CliError::Invariant(e.to_string()),
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Seed(e) => e.into(),
            ClassifyError::Group(e) => e.into(),
            ClassifyError::NotFinite { ref verdict, .. } if verdict == "infinite" => {
                CliError::Infinite(e.to_string())
            }
            ClassifyError::NotFinite { .. } => CliError::Unknown(e.to_string()),
            ClassifyError::WrongRank(_) | ClassifyError::NoDynkinMember => {
                CliError::Invariant(e.to_string())
            }
        }
    }
}
