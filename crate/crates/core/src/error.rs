use thiserror::Error;

/// Problems found while loading tables into a [`crate::TwoCat`] or a
/// [`crate::groupoids::FiniteGroupoid`]. These are input errors, not axiom
/// failures: axiom failures are report entries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("document declares no objects")]
    NoObjects,
    #[error("duplicate identifier `{0}`")]
    Duplicate(String),
    #[error("table `{table}` references undeclared identifier `{id}`")]
    Dangling { table: &'static str, id: String },
    #[error("table `{table}` has no entry for ({entry})")]
    Missing { table: &'static str, entry: String },
    #[error("table `{table}` has conflicting entries for ({entry})")]
    Conflict { table: &'static str, entry: String },
    #[error("table `{table}`: entry ({entry}) is not composable")]
    Ill { table: &'static str, entry: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("not composable: {0}")]
    NotComposable(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("axiom {axiom} has no filler for {detail}")]
    Axiom { axiom: &'static str, detail: String },
    #[error("(BF) conditions fail: {0}")]
    BfFailed(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
