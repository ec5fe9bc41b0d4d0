use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown symbol '{symbol}' at position {position}")]
    UnknownSymbol { symbol: String, position: usize },
    #[error("the divisor at position {position} is not a nonzero element of F(Y)")]
    NonCentralDenominator { position: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error(transparent)]
    Math(#[from] skewres_core::Error),
}

impl CliError {
    pub fn syntax(position: usize, message: impl Into<String>) -> CliError {
        CliError::Syntax { position, message: message.into() }
    }

    /// The process exit code: 2 for input that cannot be read, 3 for
    /// mathematical preconditions.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Syntax { .. } | CliError::UnknownSymbol { .. } | CliError::NonCentralDenominator { .. } => 2,
            CliError::Config(_) | CliError::Argument(_) => 2,
            CliError::Math(_) => 3,
        }
    }

    /// A stable machine-readable name.
    pub fn kind(&self) -> String {
        match self {
            CliError::Syntax { .. } => "SyntaxError".into(),
            CliError::UnknownSymbol { .. } => "UnknownSymbol".into(),
            CliError::NonCentralDenominator { .. } => "NonCentralDenominator".into(),
            CliError::Config(_) => "InvalidConfig".into(),
            CliError::Argument(_) => "InvalidArgument".into(),
            CliError::Math(e) => {
                let debug = format!("{e:?}");
                debug.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
            }
        }
    }
}
