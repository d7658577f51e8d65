use thiserror::Error;

/// Exit status for malformed flags or configuration.
pub const EXIT_USAGE: i32 = 64;
/// Exit status for points outside every supported domain.
pub const EXIT_DOMAIN: i32 = 2;
/// Exit status for everything else that went wrong.
pub const EXIT_INTERNAL: i32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{message}")]
    Domain {
        message: String,
        /// Methods whose hypotheses the point satisfies, when known.
        applicable: Option<Vec<&'static str>>,
    },
    #[error("{0}")]
    Internal(String),
    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain { .. } => EXIT_DOMAIN,
            CliError::Internal(_) | CliError::Io { .. } => EXIT_INTERNAL,
        }
    }

    /// Attaches the applicable methods to a domain error.
    pub fn with_regimes(self, regimes: Vec<&'static str>) -> Self {
        match self {
            CliError::Domain { message, .. } => CliError::Domain {
                message,
                applicable: Some(regimes),
            },
            other => other,
        }
    }

    /// Multi-line diagnostic for stderr.
    pub fn diagnostic(&self) -> String {
        match self {
            CliError::Domain {
                message,
                applicable: Some(r),
            } => {
                let list = if r.is_empty() {
                    "none".to_string()
                } else {
                    r.join(", ")
                };
                format!("error: {message}\napplicable regimes: {list}")
            }
            other => format!("error: {other}"),
        }
    }
}

impl From<humbert::Error> for CliError {
    fn from(e: humbert::Error) -> Self {
        if e.is_domain() {
            CliError::Domain {
                message: e.to_string(),
                applicable: None,
            }
        } else {
            CliError::Internal(e.to_string())
        }
    }
}
