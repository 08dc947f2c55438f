//! Closed-form counts of Nim characteristics.
//!
//! All counts are of unordered positions (or unordered pairs) and are exact.
//! Counts are carried in a 128-bit [`Count`]; any overflow is reported as
//! [`Error::Overflow`].

use std::fmt;

use crate::bitops::{ensure_width, nim_sum, pext, popcount};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Count(u128);

impl Count {
    pub const ZERO: Count = Count(0);

    pub fn new(value: u128) -> Self {
        Count(value)
    }

    pub fn get(self) -> u128 {
        self.0
    }

    pub fn checked_add(self, other: Count) -> Result<Count> {
        self.0.checked_add(other.0).map(Count).ok_or(Error::Overflow)
    }

    /// Sums counts, failing on overflow.
    pub fn try_sum<I: IntoIterator<Item = Result<Count>>>(items: I) -> Result<Count> {
        items.into_iter().try_fold(Count::ZERO, |acc, c| acc.checked_add(c?))
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count(v as u128)
    }
}

impl PartialEq<u128> for Count {
    fn eq(&self, other: &u128) -> bool {
        self.0 == *other
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn pow(base: u128, exp: u32) -> Result<u128> {
    base.checked_pow(exp).ok_or(Error::Overflow)
}

/// Unordered pairs of positive integers `{a, b}` with `a + b = sum` and
/// `a xor b = xor`.
///
/// Since `a + b = (a xor b) + 2 (a and b)`, the common bits are fixed at
/// `(sum - xor) / 2` and must not overlap `xor`; each bit of `xor` can then go
/// to either number.
pub fn pair_count(sum: u64, xor: u64) -> Result<Count> {
    ensure_width(sum)?;
    ensure_width(xor)?;
    if xor == 0 {
        // only the diagonal pair {sum/2, sum/2}
        return Ok(Count::from(u64::from(sum >= 2 && sum.is_multiple_of(2))));
    }
    if sum < xor || (sum - xor) % 2 == 1 {
        return Ok(Count::ZERO);
    }
    let common = (sum - xor) / 2;
    if common & xor != 0 {
        return Ok(Count::ZERO);
    }
    let half = 1u128 << (popcount(xor) - 1);
    // sum == xor admits the split {0, xor}, which is not a pair of positives
    Ok(Count(if sum == xor { half - 1 } else { half }))
}

/// Three-pile zero-nim positions with one pile fixed at `fixed` and the other
/// two (positive) summing to `rest_sum`. The other two must XOR to `fixed`.
pub fn zero_nim_count_fixed(rest_sum: u64, fixed: u64) -> Result<Count> {
    if fixed == 0 {
        return Err(Error::Precondition(
            "the fixed pile must hold at least one object".into(),
        ));
    }
    pair_count(rest_sum, fixed)
}

/// Unordered triples of positive integers with the given total and zero
/// nim-sum.
///
/// Every pile value `x` from 1 to `total - 3` is tried as the fixed pile.
/// Zero nim-sum forces the three piles to be distinct, so each triple is seen
/// exactly three times.
pub fn zero_nim_count_by_sum(total: u64) -> Result<Count> {
    ensure_width(total)?;
    let ordered = Count::try_sum((1..total.saturating_sub(2)).map(|x| pair_count(total - x, x)))?;
    if ordered.0 % 3 != 0 {
        return Err(Error::Internal(format!(
            "fixed-pile sum {} for total {total} is not divisible by 3",
            ordered
        )));
    }
    Ok(Count(ordered.0 / 3))
}

/// Zero-nim triples of positive integers with total at most `limit`.
pub fn zero_nim_count_upto(limit: u64) -> Result<Count> {
    ensure_width(limit)?;
    Count::try_sum((3..=limit).map(zero_nim_count_by_sum))
}

/// Positions `{a, b, a + b}` with `a < b` and zero nim-sum whose two larger
/// piles have exactly `digits` binary digits: `3^(k-1) - 2^(k-1)`.
///
/// Zero nim-sum means `a + b` is carry-free, so each lower digit column is one
/// of `(0,0,0)`, `(1,0,1)`, `(0,1,1)`; the top column is `(0,1,1)`. Columns
/// that leave `a = 0` are excluded.
pub fn absum_count_exact_digits(digits: u32) -> Result<Count> {
    if digits == 0 {
        return Err(Error::Precondition("digit count must be at least 1".into()));
    }
    Ok(Count(pow(3, digits - 1)? - pow(2, digits - 1)?))
}

/// Positions `{a, b, a + b}` with every pile at most `digits` binary digits:
/// `(3^k + 1) / 2 - 2^k`.
pub fn absum_count_upto_digits(digits: u32) -> Result<Count> {
    if digits == 0 {
        return Err(Error::Precondition("digit count must be at least 1".into()));
    }
    Ok(Count(pow(3, digits)?.div_ceil(2) - pow(2, digits)?))
}

/// Digit places where the smaller pile has a 1 and the larger a 0.
pub fn transferable_pair_count(a: u64, b: u64) -> u32 {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    popcount(lo & !hi)
}

fn zero_nim_triple(piles: &[u64]) -> Result<[u64; 3]> {
    let &[a, b, c] = piles else {
        return Err(Error::Precondition(format!("expected 3 piles, got {}", piles.len())));
    };
    for &p in piles {
        ensure_width(p)?;
    }
    if nim_sum(piles) != 0 {
        return Err(Error::Precondition("position does not have zero nim-sum".into()));
    }
    Ok([a, b, c])
}

const PILE_PAIRS: [(usize, usize); 3] = [(0, 1), (1, 2), (0, 2)];

/// Sharing Nim moves from a three-pile zero-nim position that keep the
/// nim-sum at zero.
///
/// Only transfers can (a removal changes one pile alone). A transfer of `t`
/// from `x` to `y >= x` keeps both the pair's sum and its XOR `d = x xor y`,
/// so the new source `x - t` is another member of the same sum/XOR family:
/// the fixed common bits plus any subset of the bits of `d`. Members below
/// `x` are exactly the subsets of `d` that sort below `x`'s own subset, and
/// their number is `x`'s bits at the positions of `d`, read as a binary number.
pub fn zero_nim_follower_count(piles: &[u64]) -> Result<Count> {
    let p = zero_nim_triple(piles)?;
    Ok(PILE_PAIRS
        .iter()
        .map(|&(i, j)| {
            let (lo, hi) = (p[i].min(p[j]), p[i].max(p[j]));
            Count::from(pext(lo, lo ^ hi))
        })
        .fold(Count::ZERO, |acc, c| Count(acc.0 + c.0)))
}

/// Zero-nim followers reached by carry-free transfers only: the moved amount
/// is a nonempty set of transferable pairs, `sum over pile pairs of 2^t - 1`.
/// Never larger than [`zero_nim_follower_count`], and equal to it exactly
/// when no follower needs a carry.
pub fn carry_free_follower_count(piles: &[u64]) -> Result<Count> {
    let p = zero_nim_triple(piles)?;
    Ok(PILE_PAIRS
        .iter()
        .map(|&(i, j)| (1u128 << transferable_pair_count(p[i], p[j])) - 1)
        .fold(Count::ZERO, |acc, c| Count(acc.0 + c)))
}

/// Number of zero-nim triples of a given total, all of which lie in one
/// transfer-connected family.
pub fn transferable_sequence_size(total: u64) -> Result<Count> {
    zero_nim_count_by_sum(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_count_examples() {
        assert_eq!(pair_count(5, 4).unwrap(), 0);
        assert_eq!(pair_count(6, 4).unwrap(), 1);
        assert_eq!(pair_count(6, 6).unwrap(), 1);
        assert_eq!(pair_count(4, 4).unwrap(), 0);
        assert_eq!(pair_count(6, 0).unwrap(), 1);
        assert_eq!(pair_count(0, 0).unwrap(), 0);
        assert_eq!(pair_count(3, 5).unwrap(), 0);
        assert_eq!(pair_count(10, 2).unwrap(), 1); // {4, 6}
        assert_eq!(pair_count(10, 6).unwrap(), 0); // common bits 2 overlap the xor
    }

    #[test]
    fn pair_count_at_width_limit() {
        let x = crate::bitops::MAX_VALUE;
        assert_eq!(pair_count(x, x).unwrap(), (1u128 << 62) - 1);
        assert!(matches!(pair_count(u64::MAX, 1), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn fixed_pile_examples() {
        assert_eq!(zero_nim_count_fixed(5, 1).unwrap(), 1);
        assert_eq!(zero_nim_count_fixed(3, 3).unwrap(), 1);
        assert_eq!(zero_nim_count_fixed(4, 2).unwrap(), 1);
        assert!(zero_nim_count_fixed(4, 0).is_err());
    }

    #[test]
    fn by_sum_examples() {
        assert_eq!(zero_nim_count_by_sum(6).unwrap(), 1);
        assert_eq!(zero_nim_count_by_sum(7).unwrap(), 0);
        assert_eq!(zero_nim_count_by_sum(12).unwrap(), 1);
        assert_eq!(zero_nim_count_by_sum(14).unwrap(), 4);
        assert_eq!(zero_nim_count_by_sum(30).unwrap(), 13);
        assert_eq!(zero_nim_count_by_sum(0).unwrap(), 0);
        assert_eq!(zero_nim_count_by_sum(3).unwrap(), 0);
    }

    #[test]
    fn upto_examples() {
        assert_eq!(zero_nim_count_upto(5).unwrap(), 0);
        assert_eq!(zero_nim_count_upto(6).unwrap(), 1);
        assert_eq!(zero_nim_count_upto(14).unwrap(), 7);
        assert_eq!(zero_nim_count_upto(30).unwrap(), 35);
        assert_eq!(zero_nim_count_upto(100).unwrap(), 284);
    }

    #[test]
    fn absum_examples() {
        let exact: Vec<u128> = (1..=12).map(|k| absum_count_exact_digits(k).unwrap().get()).collect();
        assert_eq!(exact, vec![0, 1, 5, 19, 65, 211, 665, 2059, 6305, 19171, 58025, 175099]);
        assert_eq!(absum_count_upto_digits(1).unwrap(), 0);
        assert_eq!(absum_count_upto_digits(2).unwrap(), 1);
        assert_eq!(absum_count_upto_digits(3).unwrap(), 6);
        assert_eq!(absum_count_upto_digits(12).unwrap(), 261625);
        assert!(absum_count_exact_digits(0).is_err());
        assert_eq!(absum_count_exact_digits(200), Err(Error::Overflow));
    }

    #[test]
    fn upto_is_cumulative_exact() {
        let mut running = 0u128;
        for k in 1..=60 {
            running += absum_count_exact_digits(k).unwrap().get();
            assert_eq!(absum_count_upto_digits(k).unwrap(), running);
        }
    }

    #[test]
    fn transferable_pairs() {
        assert_eq!(transferable_pair_count(7, 12), 2);
        assert_eq!(transferable_pair_count(12, 7), 2);
        assert_eq!(transferable_pair_count(7, 11), 1);
        assert_eq!(transferable_pair_count(5, 5), 0);
    }

    #[test]
    fn follower_examples() {
        assert_eq!(zero_nim_follower_count(&[7, 11, 12]).unwrap(), 7);
        assert_eq!(zero_nim_follower_count(&[1, 2, 3]).unwrap(), 1);
        assert_eq!(zero_nim_follower_count(&[0, 0, 0]).unwrap(), 0);
        // (2,5,7): 2 -> 5 by 2 gives (0,7,7), and by 1 gives (1,6,7) with a carry
        assert_eq!(zero_nim_follower_count(&[2, 5, 7]).unwrap(), 2);
        assert_eq!(carry_free_follower_count(&[2, 5, 7]).unwrap(), 1);
        assert_eq!(carry_free_follower_count(&[7, 11, 12]).unwrap(), 7);
        assert!(zero_nim_follower_count(&[1, 2, 4]).is_err());
        assert!(zero_nim_follower_count(&[1, 1]).is_err());
    }

    #[test]
    fn sequence_size_examples() {
        assert_eq!(transferable_sequence_size(6).unwrap(), 1);
        assert_eq!(transferable_sequence_size(14).unwrap(), 4);
        assert_eq!(transferable_sequence_size(30).unwrap(), 13);
    }

    #[test]
    fn count_overflow_is_reported() {
        let big = Count::new(u128::MAX);
        assert_eq!(big.checked_add(Count::new(1)), Err(Error::Overflow));
    }
}
