//! Fixed-length binary words.
//!
//! A [`BitWord`] is a string over `{0,1}` of length at most 64. Coordinate `i`
//! (0-based, counted from the left of the printed string) lives in bit `i` of
//! the backing `u64`, so `"1000"` is stored as `0b0001`. Ordering follows the
//! printed string, not the integer value.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_LEN: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitWord {
    bits: u64,
    len: u8,
}

impl BitWord {
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_LEN, "word length {len} exceeds {MAX_LEN}");
        BitWord { bits: 0, len: len as u8 }
    }

    /// All-ones word of the given length.
    pub fn ones(len: usize) -> Self {
        BitWord::from_bits(low_mask(len), len)
    }

    /// The standard basis word `e_i` (a single 1 at coordinate `i`).
    pub fn unit(i: usize, len: usize) -> Self {
        assert!(i < len, "coordinate {i} out of range for length {len}");
        BitWord::from_bits(1 << i, len)
    }

    /// Builds a word from a raw mask; bits above `len` are discarded.
    pub fn from_bits(bits: u64, len: usize) -> Self {
        assert!(len <= MAX_LEN, "word length {len} exceeds {MAX_LEN}");
        BitWord {
            bits: bits & low_mask(len),
            len: len as u8,
        }
    }

    pub fn from_bools(bools: &[bool]) -> Result<Self> {
        if bools.len() > MAX_LEN {
            return Err(Error::WordTooLong(bools.len()));
        }
        let bits = bools
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &b)| acc | ((b as u64) << i));
        Ok(BitWord::from_bits(bits, bools.len()))
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn get(self, i: usize) -> bool {
        i < self.len() && (self.bits >> i) & 1 == 1
    }

    pub fn with(self, i: usize, value: bool) -> Self {
        assert!(i < self.len(), "coordinate {i} out of range");
        let bits = if value {
            self.bits | (1 << i)
        } else {
            self.bits & !(1 << i)
        };
        BitWord { bits, ..self }
    }

    /// Toggles coordinate `i`, i.e. adds `e_i`.
    pub fn flip(self, i: usize) -> Self {
        assert!(i < self.len(), "coordinate {i} out of range");
        BitWord {
            bits: self.bits ^ (1 << i),
            ..self
        }
    }

    /// Number of 1s.
    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn xor(self, other: BitWord) -> Result<BitWord> {
        self.check_len(other)?;
        Ok(BitWord {
            bits: self.bits ^ other.bits,
            ..self
        })
    }

    pub fn and(self, other: BitWord) -> Result<BitWord> {
        self.check_len(other)?;
        Ok(BitWord {
            bits: self.bits & other.bits,
            ..self
        })
    }

    /// Coordinates holding a 1, in increasing order.
    pub fn support(self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// Leftmost coordinate holding a 1.
    pub fn leading_one(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    /// Concatenation `self ‖ other`.
    pub fn concat(self, other: BitWord) -> Result<BitWord> {
        let len = self.len() + other.len();
        if len > MAX_LEN {
            return Err(Error::WordTooLong(len));
        }
        Ok(BitWord::from_bits(
            self.bits | other.bits.checked_shl(self.len as u32).unwrap_or(0),
            len,
        ))
    }

    /// The subword on coordinates `start..start + len`.
    pub fn slice(self, start: usize, len: usize) -> BitWord {
        assert!(start + len <= self.len(), "slice out of range");
        BitWord::from_bits(self.bits.checked_shr(start as u32).unwrap_or(0), len)
    }

    /// Applies a coordinate permutation: coordinate `i` moves to `perm[i]`.
    pub fn permute(self, perm: &[usize]) -> BitWord {
        debug_assert_eq!(perm.len(), self.len());
        let bits = self.support().fold(0u64, |acc, i| acc | (1 << perm[i]));
        BitWord { bits, ..self }
    }

    /// Key whose integer order matches the printed-string order.
    fn lex_key(self) -> u64 {
        if self.len == 0 {
            0
        } else {
            self.bits.reverse_bits() >> (64 - self.len as u32)
        }
    }

    pub(crate) fn check_len(self, other: BitWord) -> Result<()> {
        if self.len != other.len {
            Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Every word of length `len`, in printed-string order.
    pub fn all(len: usize) -> impl Iterator<Item = BitWord> {
        assert!(len < MAX_LEN, "cannot enumerate words of length {len}");
        (0u64..(1u64 << len)).map(move |k| {
            let bits = if len == 0 { 0 } else { k.reverse_bits() >> (64 - len) };
            BitWord::from_bits(bits, len)
        })
    }
}

fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl Ord for BitWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.lex_key().cmp(&other.lex_key()))
    }
}

impl PartialOrd for BitWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() > MAX_LEN {
            return Err(Error::WordTooLong(s.len()));
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(Error::Parse(format!("invalid bit {c:?} in word {s:?}"))),
            }
        }
        Ok(BitWord::from_bits(bits, s.len()))
    }
}

impl Serialize for BitWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a word literal. Panics on malformed input; meant for fixtures.
pub fn w(s: &str) -> BitWord {
    s.parse().unwrap_or_else(|e| panic!("bad word literal {s:?}: {e}"))
}
