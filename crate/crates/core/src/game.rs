//! Positions, moves and move generation for Classic Nim and Sharing Nim.

use std::fmt;
use std::str::FromStr;

use crate::bitops::{self, BitValue};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ruleset {
    ClassicNim,
    SharingNim,
}

impl Ruleset {
    pub fn name(self) -> &'static str {
        match self {
            Ruleset::ClassicNim => "classic",
            Ruleset::SharingNim => "sharing",
        }
    }

    /// Checks `mv` against these rules and applies it.
    pub fn play(self, position: &Position, mv: Move) -> Result<Position, MoveError> {
        if self == Ruleset::ClassicNim && matches!(mv, Move::Transfer { .. }) {
            return Err(MoveError::TransferNotAllowed);
        }
        position.apply(mv)
    }
}

impl fmt::Display for Ruleset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Ruleset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "classic" | "nim" | "classic-nim" => Ok(Ruleset::ClassicNim),
            "sharing" | "sharing-nim" => Ok(Ruleset::SharingNim),
            other => Err(Error::Parse(other.to_string())),
        }
    }
}

/// A single move. Pile indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    Remove { pile: usize, count: u64 },
    Transfer { from: usize, to: usize, count: u64 },
}

impl Move {
    pub fn remove(pile: usize, count: u64) -> Self {
        Move::Remove { pile, count }
    }

    pub fn transfer(from: usize, to: usize, count: u64) -> Self {
        Move::Transfer { from, to, count }
    }

    /// Human-facing description with 1-based pile numbers.
    pub fn describe(&self) -> String {
        match *self {
            Move::Remove { pile, count } => format!("remove {count} from pile {}", pile + 1),
            Move::Transfer { from, to, count } => {
                format!("transfer {count} from pile {} to pile {}", from + 1, to + 1)
            }
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::Remove { pile, count } => write!(f, "Remove({pile},{count})"),
            Move::Transfer { from, to, count } => write!(f, "Transfer({from}->{to},{count})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MoveError {
    #[error("pile {pile} does not exist")]
    NoSuchPile { pile: usize },
    #[error("a move must involve at least one object")]
    ZeroCount,
    #[error("pile {pile} holds only {available} objects, cannot take {requested}")]
    NotEnoughObjects {
        pile: usize,
        available: u64,
        requested: u64,
    },
    #[error("cannot transfer a pile onto itself")]
    SamePile,
    #[error("cannot transfer from a larger pile to a smaller pile")]
    LargerToSmaller,
    #[error("transfers are not allowed in classic Nim")]
    TransferNotAllowed,
    #[error("pile size overflow")]
    Overflow,
}

/// Pile sizes. Piles may be empty mid-game; empty piles stay in place so
/// that pile numbering does not shift during play.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Position {
    piles: Vec<u64>,
}

impl Position {
    pub fn new(piles: impl Into<Vec<u64>>) -> Self {
        Position { piles: piles.into() }
    }

    /// A starting position: at least one pile and every pile non-empty.
    pub fn starting(piles: impl Into<Vec<u64>>) -> Result<Self, Error> {
        let p = Position::new(piles);
        if p.piles.is_empty() {
            return Err(Error::Precondition("a game needs at least one pile".into()));
        }
        if p.piles.contains(&0) {
            return Err(Error::Precondition(
                "starting piles must hold at least one object".into(),
            ));
        }
        Ok(p)
    }

    pub fn piles(&self) -> &[u64] {
        &self.piles
    }

    pub fn len(&self) -> usize {
        self.piles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.piles.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.piles.iter().sum()
    }

    pub fn nim_sum(&self) -> u64 {
        bitops::nim_sum(&self.piles)
    }

    pub fn is_terminal(&self) -> bool {
        self.piles.iter().all(|&p| p == 0)
    }

    /// Sorted copy. Both rulesets only look at the multiset of pile sizes.
    pub fn canonical(&self) -> Position {
        let mut piles = self.piles.clone();
        piles.sort_unstable();
        Position { piles }
    }

    /// Legal moves in a fixed order: removals before transfers, then by pile
    /// index, then by count.
    pub fn legal_moves(&self, rules: Ruleset) -> Vec<Move> {
        let mut moves = Vec::new();
        for (pile, &size) in self.piles.iter().enumerate() {
            moves.extend((1..=size).map(|count| Move::Remove { pile, count }));
        }
        if rules == Ruleset::SharingNim {
            for (from, &src) in self.piles.iter().enumerate() {
                if src == 0 {
                    continue;
                }
                for (to, &dst) in self.piles.iter().enumerate() {
                    if from != to && src <= dst {
                        moves.extend((1..=src).map(|count| Move::Transfer { from, to, count }));
                    }
                }
            }
        }
        moves
    }

    /// Applies a move after checking sizes and the transfer direction rule.
    /// Whether transfers are allowed at all is a ruleset question; see
    /// [`Ruleset::play`].
    pub fn apply(&self, mv: Move) -> Result<Position, MoveError> {
        let size = |i: usize| self.piles.get(i).copied().ok_or(MoveError::NoSuchPile { pile: i });
        let mut piles = self.piles.clone();
        match mv {
            Move::Remove { pile, count } => {
                let available = size(pile)?;
                if count == 0 {
                    return Err(MoveError::ZeroCount);
                }
                if count > available {
                    return Err(MoveError::NotEnoughObjects {
                        pile,
                        available,
                        requested: count,
                    });
                }
                piles[pile] -= count;
            }
            Move::Transfer { from, to, count } => {
                let src = size(from)?;
                let dst = size(to)?;
                if from == to {
                    return Err(MoveError::SamePile);
                }
                if count == 0 {
                    return Err(MoveError::ZeroCount);
                }
                if count > src {
                    return Err(MoveError::NotEnoughObjects {
                        pile: from,
                        available: src,
                        requested: count,
                    });
                }
                // compared on sizes before the move
                if src > dst {
                    return Err(MoveError::LargerToSmaller);
                }
                piles[from] -= count;
                piles[to] = dst.checked_add(count).ok_or(MoveError::Overflow)?;
            }
        }
        Ok(Position { piles })
    }
}

impl From<Vec<u64>> for Position {
    fn from(piles: Vec<u64>) -> Self {
        Position { piles }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.piles.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses comma- or whitespace-separated pile sizes, e.g. `"7 11 12"` or
/// `"7,11,12"`.
impl FromStr for Position {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let piles = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|tok| !tok.is_empty())
            .map(|tok| tok.parse::<BitValue>().map(BitValue::get))
            .collect::<Result<Vec<_>, _>>()?;
        if piles.is_empty() {
            return Err(Error::Parse(s.to_string()));
        }
        Ok(Position { piles })
    }
}
