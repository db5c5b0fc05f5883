use std::path::PathBuf;

/// Crate-wide error type. Variants map onto the CLI exit-code contract:
/// `Config`/`Usage` are operator mistakes (exit 2), `Io`/`Format` are file
/// problems (exit 3), `NonFinite` is a numeric failure (exit 4).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid configuration (bad dimensions, unsatisfiable split, ...).
    #[error("config error: {0}")]
    Config(String),

    /// Invalid use of an operation (shape mismatch, out-of-range index, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// Underlying I/O failure, annotated with the path involved.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A file declares a format version this build does not support.
    #[error("unsupported format version {found} (supported: {supported}) in {path}")]
    Version {
        path: PathBuf,
        found: u32,
        supported: u32,
    },

    /// A payload failed its integrity check.
    #[error("corrupt data: {0}")]
    Corrupt(String),

    /// A stored tensor does not match the expected shape.
    #[error("shape mismatch for tensor `{tensor}`: expected {expected}, found {found}")]
    Shape {
        tensor: String,
        expected: String,
        found: String,
    },

    /// A loss term or update became NaN/inf; carries the offending term name.
    #[error("non-finite value in `{term}`")]
    NonFinite { term: String },
}

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
