//! Outcome classification and move advice.
//!
//! [`Solver::outcome`] is the ground truth: an exhaustive, memoized search over
//! the game graph that uses no theory at all. Everything else in this module
//! (family shortcuts, the Nim winning move, the `1, a, b` reduction) is a fast
//! path whose answers are checked against that search before they are handed
//! out.

pub mod grundy;

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use crate::bitops::{bit_length, nim_sum};
use crate::game::{Move, Position, Ruleset};
use crate::{Error, Result};

/// Default cap on the number of memoized positions per ruleset.
pub const DEFAULT_BUDGET: usize = 5_000_000;

/// Normal-play outcome class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// The previous player (who just moved) wins.
    P,
    /// The next player (to move) wins.
    N,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::P => "P",
            Outcome::N => "N",
        })
    }
}

/// Which argument decided a classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// Nim-sum test: classic Nim, or Sharing Nim with at most two non-empty piles.
    NimSum,
    /// Two equal piles plus a third: removing the third leaves a mirrored pair.
    EqualPair,
    /// Piles `a, b, a + b` with `a < b`: moving `a` onto `b` leaves a mirrored pair.
    SumTriple,
    /// `1, a, b` with `|a - b| > 1`, where the search agreed with the
    /// virtual-pile prediction `(a - 2) xor (b - 4) = 0`.
    OneAb,
    /// Exhaustive search.
    Search,
}

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::NimSum => "nim-sum",
            Rule::EqualPair => "a-a-b",
            Rule::SumTriple => "a-b-a+b",
            Rule::OneAb => "1-a-b",
            Rule::Search => "search",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub outcome: Outcome,
    pub rule: Rule,
}

/// Memo key: sorted sizes of the non-empty piles. Empty piles can neither
/// give (nothing to move) nor receive (the source would have to be empty
/// too), so dropping them does not change the game.
type Key = Box<[u64]>;

fn memo_key(piles: &[u64]) -> Key {
    let mut k: Vec<u64> = piles.iter().copied().filter(|&p| p != 0).collect();
    k.sort_unstable();
    k.into_boxed_slice()
}

pub(crate) fn follower_keys(key: &[u64], rules: Ruleset) -> Vec<Key> {
    let p = Position::new(key.to_vec());
    let mut out: Vec<Key> = p
        .legal_moves(rules)
        .into_iter()
        .map(|mv| memo_key(p.apply(mv).expect("generated move is legal").piles()))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

struct Frame {
    key: Key,
    children: Vec<Key>,
    next: usize,
}

/// Memoized P/N solver. The memo is shared behind a lock, so one solver can
/// serve several threads; racing inserts of the same key store the same value.
pub struct Solver {
    budget: usize,
    memo: [RwLock<HashMap<Key, Outcome>>; 2],
}

impl Default for Solver {
    fn default() -> Self {
        Solver::new()
    }
}

impl Solver {
    pub fn new() -> Self {
        Solver::with_budget(DEFAULT_BUDGET)
    }

    pub fn with_budget(budget: usize) -> Self {
        Solver {
            budget,
            memo: [RwLock::default(), RwLock::default()],
        }
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Number of memoized positions under `rules`.
    pub fn memo_len(&self, rules: Ruleset) -> usize {
        self.table(rules).read().unwrap().len()
    }

    fn table(&self, rules: Ruleset) -> &RwLock<HashMap<Key, Outcome>> {
        match rules {
            Ruleset::ClassicNim => &self.memo[0],
            Ruleset::SharingNim => &self.memo[1],
        }
    }

    fn lookup(&self, rules: Ruleset, key: &[u64]) -> Option<Outcome> {
        if key.is_empty() {
            return Some(Outcome::P);
        }
        self.table(rules).read().unwrap().get(key).copied()
    }

    fn store(&self, rules: Ruleset, key: Key, outcome: Outcome) -> Result<()> {
        let mut table = self.table(rules).write().unwrap();
        if table.len() >= self.budget && !table.contains_key(&key) {
            return Err(Error::BudgetExceeded { limit: self.budget });
        }
        table.insert(key, outcome);
        Ok(())
    }

    /// Exhaustive normal-play classification: N iff some move reaches a P
    /// position. Depth-first with an explicit stack, since game lines in
    /// Sharing Nim can be far longer than the total object count.
    pub fn outcome(&self, position: &Position, rules: Ruleset) -> Result<Outcome> {
        let root = memo_key(position.piles());
        if let Some(o) = self.lookup(rules, &root) {
            return Ok(o);
        }
        let mut stack = vec![Frame {
            children: follower_keys(&root, rules),
            key: root.clone(),
            next: 0,
        }];
        while let Some(top) = stack.last_mut() {
            let mut winning = false;
            let mut pending = None;
            while let Some(child) = top.children.get(top.next) {
                match self.lookup(rules, child) {
                    Some(Outcome::P) => {
                        winning = true;
                        break;
                    }
                    Some(Outcome::N) => top.next += 1,
                    None => {
                        pending = Some(child.clone());
                        break;
                    }
                }
            }
            if let Some(child) = pending {
                stack.push(Frame {
                    children: follower_keys(&child, rules),
                    key: child,
                    next: 0,
                });
                continue;
            }
            let frame = stack.pop().expect("stack is non-empty");
            let outcome = if winning { Outcome::N } else { Outcome::P };
            self.store(rules, frame.key, outcome)?;
        }
        Ok(self.lookup(rules, &root).expect("root was just solved"))
    }

    /// Outcome together with the argument that settles it. Family rules are
    /// proven shortcuts; the `1, a, b` prediction is only reported as the
    /// deciding rule when the search agrees with it.
    pub fn classify(&self, position: &Position, rules: Ruleset) -> Result<Classification> {
        let shape = Shape::of(position);
        if rules == Ruleset::ClassicNim || shape.live.len() <= 2 {
            let outcome = if position.nim_sum() == 0 {
                Outcome::P
            } else {
                Outcome::N
            };
            return Ok(Classification {
                outcome,
                rule: Rule::NimSum,
            });
        }
        if shape.live.len() == 3 {
            if shape.equal_pair_move().is_some() {
                return Ok(Classification {
                    outcome: Outcome::N,
                    rule: Rule::EqualPair,
                });
            }
            if shape.sum_triple_move().is_some() {
                return Ok(Classification {
                    outcome: Outcome::N,
                    rule: Rule::SumTriple,
                });
            }
            if let Some(predicted_p) = shape.one_ab_prediction() {
                let outcome = self.outcome(position, rules)?;
                let rule = if predicted_p == (outcome == Outcome::P) {
                    Rule::OneAb
                } else {
                    Rule::Search
                };
                return Ok(Classification { outcome, rule });
            }
        }
        Ok(Classification {
            outcome: self.outcome(position, rules)?,
            rule: Rule::Search,
        })
    }

    /// A move to a P position, or `None` if `position` is already P.
    ///
    /// Shortcut candidates are tried first and only accepted once the solver
    /// confirms they reach a P position. Otherwise the first winning move in
    /// [`Position::legal_moves`] order is returned.
    pub fn advise(&self, position: &Position, rules: Ruleset) -> Result<Option<Move>> {
        for candidate in fast_path_moves(position, rules) {
            let next = rules.play(position, candidate)?;
            if self.outcome(&next, rules)? == Outcome::P {
                return Ok(Some(candidate));
            }
        }
        for mv in position.legal_moves(rules) {
            let next = position.apply(mv)?;
            if self.outcome(&next, rules)? == Outcome::P {
                return Ok(Some(mv));
            }
        }
        Ok(None)
    }

    /// Does two-pile Sharing Nim have the same winner as two-pile Nim?
    pub fn two_pile_equivalence_check(&self, a: u64, b: u64) -> Result<bool> {
        let p = Position::new(vec![a, b]);
        Ok(self.outcome(&p, Ruleset::SharingNim)? == self.outcome(&p, Ruleset::ClassicNim)?)
    }
}

/// Classic Nim winning move: pick a pile carrying the top bit of the nim-sum
/// `s` and shrink it to `s xor pile`. `None` when the nim-sum is already 0.
pub fn nim_winning_move(piles: &[u64]) -> Option<Move> {
    let s = nim_sum(piles);
    if s == 0 {
        return None;
    }
    let top = 1u64 << (bit_length(s) - 1);
    piles
        .iter()
        .position(|&x| x & top != 0)
        .map(|pile| Move::remove(pile, piles[pile] - (piles[pile] ^ s)))
}

/// Candidate shortcut moves, in the order they are tried.
fn fast_path_moves(position: &Position, rules: Ruleset) -> Vec<Move> {
    let shape = Shape::of(position);
    if rules == Ruleset::ClassicNim || shape.live.len() <= 2 {
        return nim_winning_move(position.piles()).into_iter().collect();
    }
    if shape.live.len() != 3 {
        return Vec::new();
    }
    [shape.equal_pair_move(), shape.sum_triple_move(), shape.one_ab_move()]
        .into_iter()
        .flatten()
        .collect()
}

/// Non-empty piles as `(index, size)`, sorted by size then index.
struct Shape {
    live: Vec<(usize, u64)>,
}

impl Shape {
    fn of(position: &Position) -> Shape {
        let mut live: Vec<(usize, u64)> = position
            .piles()
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, s)| s != 0)
            .collect();
        live.sort_by_key(|&(i, s)| (s, i));
        Shape { live }
    }

    /// `a, a, b`: remove `b` entirely.
    fn equal_pair_move(&self) -> Option<Move> {
        let [(ix, x), (_, y), (iz, z)] = self.live[..] else {
            return None;
        };
        if x == y {
            // a, a, a also lands here
            Some(Move::remove(iz, z))
        } else if y == z {
            Some(Move::remove(ix, x))
        } else {
            None
        }
    }

    /// `a, b, a + b` with `a < b`: move all of `a` onto `b`.
    fn sum_triple_move(&self) -> Option<Move> {
        let [(ix, x), (iy, y), (_, z)] = self.live[..] else {
            return None;
        };
        (x < y && x + y == z).then(|| Move::transfer(ix, iy, x))
    }

    /// For `1, a, b` with `a < b - 1`: whether the virtual piles
    /// `a - 2, b - 4` have zero nim-sum.
    fn one_ab_prediction(&self) -> Option<bool> {
        let [(_, 1), (_, a), (_, b)] = self.live[..] else {
            return None;
        };
        (b - a > 1 && a >= 2 && b >= 4).then(|| (a - 2) ^ (b - 4) == 0)
    }

    /// Nim winning move on the virtual piles `a - 2, b - 4`, mapped back onto
    /// the real piles.
    fn one_ab_move(&self) -> Option<Move> {
        if self.one_ab_prediction()? {
            return None;
        }
        let [_, (ia, a), (ib, b)] = self.live[..] else {
            return None;
        };
        let (va, vb) = (a - 2, b - 4);
        Some(if va > vb {
            Move::remove(ia, va - vb)
        } else {
            Move::remove(ib, vb - va)
        })
    }
}
