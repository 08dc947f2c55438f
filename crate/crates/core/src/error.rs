use crate::game::MoveError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("value {value} is outside the supported range (at most {max})")]
    OutOfRange { value: u128, max: u64 },

    #[error("count overflowed the 128-bit result range")]
    Overflow,

    #[error("illegal move: {0}")]
    IllegalMove(#[from] MoveError),

    #[error("solver budget of {limit} positions exceeded")]
    BudgetExceeded { limit: usize },

    #[error("cycle detected while evaluating the game graph")]
    CycleDetected,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown sweep `{0}`")]
    UnknownSweep(String),

    #[error("invalid position `{0}`")]
    Parse(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by input magnitude or solver limits rather than
    /// by malformed requests.
    pub fn is_range(&self) -> bool {
        matches!(
            self,
            Error::OutOfRange { .. } | Error::Overflow | Error::BudgetExceeded { .. }
        )
    }
}
