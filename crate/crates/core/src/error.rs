use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mode mismatch: cannot combine {left} and {right} values")]
    ModeMismatch { left: &'static str, right: &'static str },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent error at position {pos}: {msg}")]
    Exponent { pos: usize, msg: String },
    #[error("malformed serialized form: {0}")]
    Format(String),
}

impl Error {
    /// True for errors raised while reading expression text.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::Exponent { .. } | Error::DivisionByZero | Error::Format(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
