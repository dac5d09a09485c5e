use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContextError {
    #[error("duplicate object label `{0}`")]
    DuplicateObject(String),
    #[error("duplicate attribute label `{0}`")]
    DuplicateAttribute(String),
    #[error("expected {expected} incidence rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row} has {found} cells, expected {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScaleError {
    #[error("{family} scales need arity at least {min}, got {n}")]
    Arity { family: &'static str, min: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeasureError {
    #[error("map is defined on {found} objects but the source context has {expected}")]
    SourceMismatch { expected: usize, found: usize },
    #[error("map targets {found} objects but the scale context has {expected}")]
    TargetMismatch { expected: usize, found: usize },
    #[error("map is not total: object {0} has no image")]
    NotTotal(usize),
    #[error("object {object} is mapped to {target}, outside the scale")]
    TargetOutOfRange { object: usize, target: usize },
    #[error("the domain of a local scale-measure must not be empty")]
    EmptyDomain,
    #[error("restriction set is not contained in the domain of the map")]
    NotInDomain,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MotifError {
    #[error("crown motifs are not hereditary; use the crown search")]
    NotHereditary,
    #[error(transparent)]
    Scale(#[from] ScaleError),
    #[error("domain has {0} objects; motif domains are limited to 64")]
    DomainTooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("reductions need at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// Failure while reading one of the text formats, with a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected magic line `B`")]
    BadMagic,
    #[error("expected a count, found `{0}`")]
    BadCount(String),
    #[error("unexpected end of input")]
    Truncated,
    #[error("row has length {found}, expected {expected}")]
    RowLength { expected: usize, found: usize },
    #[error("illegal cell character `{0}`")]
    IllegalCell(String),
    #[error("trailing content after the incidence rows")]
    Trailing,
    #[error("{0}")]
    Context(#[from] ContextError),
    #[error("malformed CSV: {0}")]
    Csv(String),
    #[error("malformed map JSON: {0}")]
    Json(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
}

impl ParseError {
    pub fn new(line: usize, kind: ParseErrorKind) -> Self {
        Self { line, kind }
    }
}
