//! Nim and Sharing Nim: a move engine, a memoized outcome solver, a generic
//! Sprague-Grundy evaluator, closed-form counting of zero-nim positions and a
//! set of brute-force oracles that every closed form is checked against.
//!
//! Sharing Nim plays like Nim, except that a player may instead move objects
//! from one pile onto another, provided the source pile is not larger than the
//! destination pile.

pub mod bitops;
pub mod enumeration;
mod error;
pub mod game;
pub mod oracle;
pub mod solver;

pub use enumeration::Count;
pub use error::{Error, Result};
pub use game::{Move, MoveError, Position, Ruleset};
pub use solver::{Classification, Outcome, Rule, Solver};
