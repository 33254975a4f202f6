use std::fmt;

/// Command errors, sorted into the three exit-code categories the
/// binary reports: 2 for I/O, 3 for malformed data, 4 for invalid
/// flag combinations or parameters.
#[derive(Debug)]
pub enum CliError {
    Io { context: String, source: std::io::Error },
    Data(String),
    Flags(String),
}

impl CliError {
    pub fn io(context: impl Into<String>, source: std::io::Error) -> CliError {
        CliError::Io {
            context: context.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 2,
            CliError::Data(_) => 3,
            CliError::Flags(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { context, source } => write!(f, "{context}: {source}"),
            CliError::Data(msg) => write!(f, "{msg}"),
            CliError::Flags(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CliError::Io { source, .. } => Some(source),
            _ => None,
        }
    }
}

impl From<nnhier::Error> for CliError {
    fn from(err: nnhier::Error) -> CliError {
        CliError::Data(err.to_string())
    }
}
