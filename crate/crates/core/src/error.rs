use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid character {found:?} at position {position}")]
    Parse { position: usize, found: char },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("operation requires a binary alphabet, got size {size}")]
    UnsupportedAlphabet { size: u8 },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A closed form was evaluated outside the range where it agrees with
    /// direct computation.
    #[error("formula outside its valid domain: {0}")]
    FormulaDomain(String),
}
