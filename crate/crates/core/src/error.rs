use thiserror::Error;

use crate::report::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("scalars from different fields were combined")]
    FieldMismatch,
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch { what: String, expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("linear map is singular")]
    SingularMap,
    #[error("{0} is not bijective")]
    NonBijective(String),
    #[error("missing structure data: {0}")]
    MissingData(String),
    #[error("prerequisite check `{check}` failed: {}", .report.first_failure_summary())]
    PrerequisiteFailed { check: String, report: Box<AxiomReport> },
    #[error("not an endomorphism: {}", .report.first_failure_summary())]
    NotAnEndomorphism { report: Box<AxiomReport> },
    #[error("structure maps are incompatible: {}", .report.first_failure_summary())]
    IncompatibleEndomorphisms { report: Box<AxiomReport> },
    #[error("braid condition failed: {}", .report.first_failure_summary())]
    BraidConditionFailed { report: Box<AxiomReport> },
    #[error("Q is not invertible")]
    SingularQ,
    #[error("action is not unital: {}", .report.first_failure_summary())]
    UnitalActionMissing { report: Box<AxiomReport> },
    #[error("Hom-twistor conditions failed: {}", .report.first_failure_summary())]
    TwistorCheckFailed { report: Box<AxiomReport> },
    #[error("module compatibility failed: {}", .report.first_failure_summary())]
    CompatibilityFailed { report: Box<AxiomReport> },
    #[error("quasitriangular structure check failed: {}", .report.first_failure_summary())]
    QtCheckFailed { report: Box<AxiomReport> },
    #[error("dimension {dim} exceeds the configured limit {limit}")]
    DimensionTooLarge { dim: usize, limit: usize },
    #[error("structures live over different base objects: {0}")]
    BaseMismatch(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid structure file: {}", .0.join("; "))]
    Validation(Vec<String>),
    #[error("unknown structure `{0}`")]
    UnknownStructure(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn prerequisite(check: &str, report: AxiomReport) -> Error {
        Error::PrerequisiteFailed { check: check.to_string(), report: Box::new(report) }
    }
}
