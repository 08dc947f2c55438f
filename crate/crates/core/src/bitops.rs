//! Exact bit-level primitives: nim-sum, population count, mex and bit
//! extraction. Everything here is integer arithmetic on `u64`.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Number of usable bits for pile sizes, sums and XOR targets.
pub const MAX_BITS: u32 = 63;

/// Largest accepted value, `2^63 - 1`.
pub const MAX_VALUE: u64 = (1 << MAX_BITS) - 1;

/// A non-negative integer inside the supported bit width.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BitValue(u64);

impl BitValue {
    pub fn new(value: u64) -> Result<Self> {
        ensure_width(value).map(BitValue)
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for BitValue {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        BitValue::new(value)
    }
}

impl From<BitValue> for u64 {
    fn from(v: BitValue) -> u64 {
        v.0
    }
}

impl fmt::Display for BitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for BitValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let value: u128 = s.parse().map_err(|_| Error::Parse(s.to_string()))?;
        if value > MAX_VALUE as u128 {
            return Err(Error::OutOfRange { value, max: MAX_VALUE });
        }
        Ok(BitValue(value as u64))
    }
}

/// Rejects values that do not fit in [`MAX_BITS`] bits.
pub fn ensure_width(value: u64) -> Result<u64> {
    if value > MAX_VALUE {
        Err(Error::OutOfRange {
            value: value as u128,
            max: MAX_VALUE,
        })
    } else {
        Ok(value)
    }
}

/// XOR of all pile sizes. The empty sum is 0.
pub fn nim_sum(piles: &[u64]) -> u64 {
    piles.iter().fold(0, |acc, &p| acc ^ p)
}

pub fn popcount(n: u64) -> u32 {
    n.count_ones()
}

/// Set-bit count by the halving recurrence `g(n) = n mod 2 + g(n / 2)`.
pub fn popcount_recursive(n: u64) -> u32 {
    match n {
        0 => 0,
        1 => 1,
        _ => (n % 2) as u32 + popcount_recursive(n / 2),
    }
}

/// Set-bit count as `sum_i floor(n / 2^i) mod 2`. Terms past the bit length
/// of `n` are all zero, so the sum stops there.
pub fn popcount_floor_sum(n: u64) -> u32 {
    (0..bit_length(n)).map(|i| ((n >> i) % 2) as u32).sum()
}

/// Number of binary digits of `n`; 0 for `n = 0`.
pub fn bit_length(n: u64) -> u32 {
    u64::BITS - n.leading_zeros()
}

/// Minimum excludant: the smallest non-negative integer missing from `values`.
pub fn mex<I>(values: I) -> u64
where
    I: IntoIterator<Item = u64>,
{
    let mut seen: Vec<u64> = values.into_iter().collect();
    seen.sort_unstable();
    seen.dedup();
    // after dedup, seen[i] == i for every i below the answer
    seen.iter()
        .enumerate()
        .find(|&(i, &v)| v != i as u64)
        .map_or(seen.len() as u64, |(i, _)| i as u64)
}

/// Parallel bit extract: gathers the bits of `value` selected by `mask` and
/// packs them into the low bits of the result, preserving order.
pub fn pext(value: u64, mask: u64) -> u64 {
    let mut out = 0;
    let mut k = 0;
    let mut m = mask;
    while m != 0 {
        let low = m & m.wrapping_neg();
        if value & low != 0 {
            out |= 1 << k;
        }
        k += 1;
        m &= m - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn nim_sum_examples() {
        assert_eq!(nim_sum(&[7, 11, 12]), 0);
        assert_eq!(nim_sum(&[6, 11, 13]), 0);
        assert_eq!(nim_sum(&[]), 0);
        assert_eq!(nim_sum(&[5]), 5);
        assert_eq!(nim_sum(&[3, 5]), 6);
    }

    #[test]
    fn popcount_examples() {
        assert_eq!(popcount(0), 0);
        assert_eq!(popcount(1), 1);
        assert_eq!(popcount(6), 2);
        assert_eq!(popcount(1 << 40), 1);
        assert_eq!(popcount_recursive(1 << 40), 1);
        assert_eq!(popcount_floor_sum(1 << 40), 1);
    }

    #[test]
    fn popcount_forms_agree_below_2_pow_20() {
        for n in 0..(1u64 << 20) {
            let r = popcount_recursive(n);
            assert_eq!(r, popcount_floor_sum(n), "n = {n}");
            assert_eq!(r, popcount(n), "n = {n}");
        }
    }

    #[test]
    fn mex_examples() {
        assert_eq!(mex([]), 0);
        assert_eq!(mex([0, 1, 2]), 3);
        assert_eq!(mex([1, 2, 5]), 0);
        assert_eq!(mex([2, 0, 0, 1, 4]), 3);
    }

    #[test]
    fn sum_identity_exhaustive_16_bits() {
        for a in 0u64..(1 << 16) {
            for b in (0u64..(1 << 16)).step_by(7) {
                assert_eq!(a + b, (a ^ b) + 2 * (a & b));
            }
        }
    }

    #[test]
    fn width_is_enforced() {
        assert!(BitValue::new(MAX_VALUE).is_ok());
        assert!(BitValue::new(1 << 62).is_ok());
        assert!(matches!(BitValue::new(u64::MAX), Err(Error::OutOfRange { .. })));
        assert!("9223372036854775808".parse::<BitValue>().is_err());
        assert!("-1".parse::<BitValue>().is_err());
        assert_eq!("42".parse::<BitValue>().unwrap().get(), 42);
    }

    #[test]
    fn pext_packs_selected_bits() {
        assert_eq!(pext(0b1011, 0b1010), 0b11);
        assert_eq!(pext(7, 12), 1);
        assert_eq!(pext(7, 11), 3);
        assert_eq!(pext(u64::MAX, 0), 0);
    }

    proptest! {
        #[test]
        fn nim_sum_self_inverse(xs in prop::collection::vec(0u64..=MAX_VALUE, 0..8), v in 0u64..=MAX_VALUE) {
            let mut ys = xs.clone();
            ys.push(v);
            ys.push(v);
            prop_assert_eq!(nim_sum(&ys), nim_sum(&xs));
        }

        #[test]
        fn nim_sum_permutation_invariant(mut xs in prop::collection::vec(0u64..1 << 20, 0..8)) {
            let before = nim_sum(&xs);
            xs.reverse();
            let mid = xs.len() / 2;
            xs.rotate_left(mid);
            prop_assert_eq!(nim_sum(&xs), before);
        }

        #[test]
        fn mex_is_least_absent(values in prop::collection::vec(0u64..12, 0..12)) {
            let m = mex(values.iter().copied());
            prop_assert!(!values.contains(&m));
            for k in 0..m {
                prop_assert!(values.contains(&k));
            }
        }

        #[test]
        fn pext_matches_bit_walk(value in any::<u64>(), mask in any::<u64>()) {
            let mut expected = 0u64;
            let mut k = 0;
            for i in 0..64 {
                if mask >> i & 1 == 1 {
                    expected |= (value >> i & 1) << k;
                    k += 1;
                }
            }
            prop_assert_eq!(pext(value, mask), expected);
        }
    }
}
