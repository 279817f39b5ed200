use thiserror::Error;

/// Errors raised by the library. Contract violations by the caller are
/// reported here; they never indicate a numerical failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator {generator} is outside gl({m}|{n})")]
    OutOfContext { generator: String, m: u16, n: u16 },

    #[error("context mismatch: gl({0}|{1}) vs gl({2}|{3})")]
    ContextMismatch(u16, u16, u16, u16),

    #[error("normal form rewriting exceeded its budget ({0}); this is a bug")]
    RewriteBudget(String),

    #[error("input not in Virt(m,n): residual word {0}")]
    NotVirtual(String),

    #[error("invalid shape: {0}")]
    Shape(String),

    #[error("shape mismatch: {0:?} vs {1:?}")]
    ShapeMismatch(Vec<usize>, Vec<usize>),

    #[error("virtual pool exhausted: need {need} symbols, have {have}")]
    PoolExhausted { need: usize, have: usize },

    #[error("duplicate entry in word")]
    DuplicateEntry,

    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("element is not central: {0}")]
    NotCentral(String),

    #[error("not an eigenvector: {0}")]
    NotEigen(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
