//! Core binary-sequence value type.
//!
//! A [`BitSeq`] is a finite binary sequence `(s_0, s_1, ..., s_{n-1})` of
//! length `1 <= n <= MAX_LEN`, bit-packed into a single machine word with
//! `s_i` stored at bit position `i`. Values are immutable after construction
//! and `Copy`, so they can be shared freely across threads.
//!
//! Besides construction and indexing, this module provides the rotation
//! operators `L^k` (left) and `R^k` (right), the aperiodicity test,
//! canonicalization to the lexicographically least rotation (the necklace
//! representative used as shift-class identity throughout the crate), and
//! cyclic run / weight statistics.
//!
//! Indexing outside `[0, n)` is a programming error and panics; cyclic access
//! that reduces indices mod `n` is the explicit, separate accessor
//! [`BitSeq::get_cyclic`]. The text form is an ASCII '0'/'1' string with
//! index 0 leftmost.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Maximum supported sequence length (bits of the packing word).
pub const MAX_LEN: usize = 64;

/// A finite binary sequence of length `n`, bit-packed into a `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitSeq {
    /// Sequence length, `1 <= n <= MAX_LEN`. Immutable for a given value.
    n: usize,
    /// Packed symbols; `s_i` is bit `i`. Bits at positions `>= n` are zero.
    bits: u64,
}

/// Errors raised when parsing a `BitSeq` from text.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input: a sequence must have at least one symbol")]
    Empty,
    #[error("input of length {len} exceeds the maximum supported length {MAX_LEN}")]
    TooLong { len: usize },
    #[error("foreign character {ch:?} at index {index}: only '0' and '1' are allowed")]
    ForeignChar { index: usize, ch: char },
}

/// Error raised when run statistics are requested for a constant sequence.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("no runs defined: a constant sequence has no flanking symbol")]
pub struct NoRunsError;

/// Histogram of maximal cyclic runs per symbol: length -> count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunHistogram {
    pub zero_runs: BTreeMap<usize, usize>,
    pub one_runs: BTreeMap<usize, usize>,
}

impl RunHistogram {
    /// Total mass `sum(length * count)` over both symbols; always equals `n`.
    pub fn mass(&self) -> usize {
        self.zero_runs
            .iter()
            .chain(self.one_runs.iter())
            .map(|(len, count)| len * count)
            .sum()
    }
}

impl BitSeq {
    /// Parses an ASCII '0'/'1' string, index 0 leftmost.
    pub fn from_bits(text: &str) -> Result<Self, ParseError> {
        if text.is_empty() {
            return Err(ParseError::Empty);
        }
        if text.chars().count() > MAX_LEN {
            return Err(ParseError::TooLong {
                len: text.chars().count(),
            });
        }
        let mut bits = 0u64;
        for (index, ch) in text.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << index,
                _ => return Err(ParseError::ForeignChar { index, ch }),
            }
        }
        Ok(BitSeq { n: text.len(), bits })
    }

    /// Builds a sequence from a packed word. Bits at positions `>= n` must be
    /// zero. Panics on length violations; intended for generator internals
    /// where candidates are assembled by bit arithmetic.
    pub fn from_word(n: usize, bits: u64) -> Self {
        assert!(n >= 1 && n <= MAX_LEN, "length {n} out of range");
        assert!(
            n == MAX_LEN || bits >> n == 0,
            "set bits beyond length {n}"
        );
        BitSeq { n, bits }
    }

    /// Sequence length `n`.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false // length is always >= 1
    }

    /// The packed word with `s_i` at bit `i`.
    pub fn word(&self) -> u64 {
        self.bits
    }

    /// Strict accessor for `s_i`; panics when `i >= n`.
    pub fn get(&self, i: usize) -> u8 {
        assert!(i < self.n, "index {i} out of range for length {}", self.n);
        ((self.bits >> i) & 1) as u8
    }

    /// Cyclic accessor: `s_{i mod n}` of the periodic extension.
    pub fn get_cyclic(&self, i: usize) -> u8 {
        ((self.bits >> (i % self.n)) & 1) as u8
    }

    /// Left circular shift `L^k`: result `r` has `r_i = s_{(i+k) mod n}`.
    pub fn rotate_left(&self, k: usize) -> Self {
        let k = k % self.n;
        if k == 0 {
            return *self;
        }
        let mask = Self::mask(self.n);
        let bits = ((self.bits >> k) | (self.bits << (self.n - k))) & mask;
        BitSeq { n: self.n, bits }
    }

    /// Right circular shift `R^k = L^{n-k}`.
    pub fn rotate_right(&self, k: usize) -> Self {
        let k = k % self.n;
        self.rotate_left((self.n - k) % self.n)
    }

    /// True iff the sequence is not a repetition `(s_0..s_{p-1})^{n/p}` for
    /// any proper divisor `p` of `n`.
    pub fn is_aperiodic(&self) -> bool {
        for p in 1..self.n {
            if self.n % p == 0 && self.rotate_left(p) == *self {
                return false;
            }
        }
        true
    }

    /// Least period: the smallest `p` dividing `n` with `s_i = s_{i mod p}`.
    pub fn least_period(&self) -> usize {
        for p in 1..self.n {
            if self.n % p == 0 && self.rotate_left(p) == *self {
                return p;
            }
        }
        self.n
    }

    /// Lexicographically least rotation ('0' < '1') and the smallest `k`
    /// with `rotate_left(self, k)` equal to it.
    pub fn canonical_rotation(&self) -> (Self, usize) {
        let mut best = *self;
        let mut shift = 0;
        for k in 1..self.n {
            let candidate = self.rotate_left(k);
            if candidate.lex_lt(&best) {
                best = candidate;
                shift = k;
            }
        }
        (best, shift)
    }

    /// Lexicographic order of the symbol strings (equal lengths assumed in
    /// practice; shorter compares by its symbols first, then by length).
    pub fn lex_lt(&self, other: &Self) -> bool {
        self.lex_cmp(other) == std::cmp::Ordering::Less
    }

    fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        let common = self.n.min(other.n);
        for i in 0..common {
            match self.get(i).cmp(&other.get(i)) {
                std::cmp::Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.n.cmp(&other.n)
    }

    /// Histogram of maximal cyclic runs of each symbol.
    pub fn cyclic_runs(&self) -> Result<RunHistogram, NoRunsError> {
        // A run boundary is a position i with s_i != s_{i+1 mod n}.
        let boundary = (0..self.n)
            .find(|&i| self.get(i) != self.get_cyclic(i + 1))
            .ok_or(NoRunsError)?;
        let mut zero_runs = BTreeMap::new();
        let mut one_runs = BTreeMap::new();
        // Walk one full period starting just after a boundary.
        let mut i = boundary + 1;
        let mut consumed = 0;
        while consumed < self.n {
            let symbol = self.get_cyclic(i);
            let mut len = 0;
            while len < self.n && self.get_cyclic(i + len) == symbol {
                len += 1;
            }
            let map = if symbol == 0 { &mut zero_runs } else { &mut one_runs };
            *map.entry(len).or_insert(0) += 1;
            i += len;
            consumed += len;
        }
        Ok(RunHistogram { zero_runs, one_runs })
    }

    /// Number of ones.
    pub fn hamming_weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Symbols as a byte vector (`0`/`1` values), for the complexity engines.
    pub fn to_vec(&self) -> Vec<u8> {
        (0..self.n).map(|i| self.get(i)).collect()
    }

    fn mask(n: usize) -> u64 {
        if n == MAX_LEN {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }
}

impl fmt::Display for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitSeq({self})")
    }
}

impl FromStr for BitSeq {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BitSeq::from_bits(s)
    }
}

impl PartialOrd for BitSeq {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BitSeq {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.lex_cmp(other)
    }
}
