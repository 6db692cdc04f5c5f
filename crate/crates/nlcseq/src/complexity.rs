//! Nonlinear-complexity engines and per-rotation profiles.
//!
//! The nonlinear complexity (also called maximum-order complexity) of a
//! sequence is the length of the shortest feedback shift register that
//! generates it; equivalently, it is one plus the length of the longest
//! subsequence that occurs twice with two different successor symbols.
//!
//! Two independent engines implement that characterization:
//!
//! * [`nlc_finite`] — the reference engine: a transparent descending-order
//!   scan over window lengths with a position-bucketing table. It is the
//!   ground truth that the exhaustive verifier builds on.
//! * [`nlc_finite_fast`] — a suffix-automaton engine. A state of the
//!   automaton with outgoing transitions on both symbols witnesses a
//!   repeated substring with two different successors, so the answer is the
//!   maximum state length plus one. The two engines never share code paths.
//!
//! For an `n`-periodic sequence, `nlc(s^inf) = nlc(s s)`, so the periodic
//! complexity is computed on one doubled period (after reducing to the least
//! period). The periodic complexity is invariant under rotation and, for an
//! aperiodic period, lies in `[ceil(log2 n), n-1]`.

use std::collections::HashMap;

use thiserror::Error;

use crate::bitseq::BitSeq;
use crate::structure::{self, BForm};

/// A pair of equal-length windows of the periodic extension agreeing on all
/// but their final symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompanionPair {
    /// Index `i` of the first window (into one period, `0 <= i < n`).
    pub start: usize,
    /// Spacing `d` to the partner window at `i + d`, normalized to
    /// `1 <= d <= floor(n/2)`.
    pub spacing: usize,
    /// Window length (the order `omega` of the pair).
    pub order: usize,
}

/// Rotation direction for [`shift_profile`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

/// Per-rotation record of finite nonlinear complexity and structural
/// membership data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftProfile {
    pub direction: Direction,
    /// Entry `k` is `nlc` of the `k`-th rotation in `direction`.
    pub values: Vec<usize>,
    /// Entry `k` is the decomposition witness of the `k`-th rotation (the
    /// form with maximal `c`, ties to the smallest spacing) together with
    /// its added-term count, when the rotation decomposes at all.
    pub memberships: Vec<Option<(BForm, usize)>>,
}

/// Error for companion-pair location on a periodic repetition.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("companion pairs require an aperiodic period (least period {least_period} < {n})")]
pub struct PeriodicInputError {
    pub n: usize,
    pub least_period: usize,
}

/// Reference engine over a raw symbol slice (values `0`/`1`).
///
/// For window lengths `k` from the longest possible downward, buckets all
/// `k`-windows by content and returns `k + 1` as soon as some bucket has seen
/// both successor symbols. Returns 0 when no repeated window with two
/// different successors exists (e.g. constant input).
pub fn nlc_slice(bits: &[u8]) -> usize {
    let m = bits.len();
    if m < 2 {
        return 0;
    }
    // Windows longer than m - 2 cannot occur at two positions with successors.
    for k in (0..=m - 2).rev() {
        let mut buckets: HashMap<u128, u8> = HashMap::new();
        let mut window: u128 = 0;
        // Prime the first window s_0..s_{k-1}.
        for (i, &b) in bits.iter().enumerate().take(k) {
            window |= (b as u128) << i;
        }
        for i in 0..m - k {
            let successor = bits[i + k];
            let seen = buckets.entry(window).or_insert(0);
            *seen |= 1 << successor;
            if *seen == 0b11 {
                return k + 1;
            }
            // Slide to the window starting at i + 1.
            if k > 0 && i + k < m {
                window >>= 1;
                window |= (bits[i + k] as u128) << (k - 1);
            }
        }
    }
    0
}

/// Fast engine over a raw symbol slice: suffix automaton.
pub fn nlc_slice_fast(bits: &[u8]) -> usize {
    if bits.len() < 2 {
        return 0;
    }
    let sam = SuffixAutomaton::build(bits);
    let mut best: Option<usize> = None;
    for state in &sam.states {
        if state.next[0] != NONE && state.next[1] != NONE {
            best = Some(best.map_or(state.len, |b: usize| b.max(state.len)));
        }
    }
    match best {
        Some(len) => len + 1,
        None => 0,
    }
}

/// Nonlinear complexity of a finite sequence (reference engine).
pub fn nlc_finite(s: &BitSeq) -> usize {
    nlc_slice(&s.to_vec())
}

/// Nonlinear complexity of a finite sequence (suffix-automaton engine).
pub fn nlc_finite_fast(s: &BitSeq) -> usize {
    nlc_slice_fast(&s.to_vec())
}

/// Nonlinear complexity of the periodic extension `s^inf`.
///
/// Reduces to the least period `p` and evaluates the finite complexity of
/// one doubled period, using the fast engine.
pub fn nlc_periodic(s: &BitSeq) -> usize {
    nlc_slice_fast(&doubled_least_period(s))
}

/// Periodic nonlinear complexity via the reference engine. Kept separate so
/// the exhaustive oracle never shares a code path with the fast engine.
pub fn nlc_periodic_reference(s: &BitSeq) -> usize {
    nlc_slice(&doubled_least_period(s))
}

fn doubled_least_period(s: &BitSeq) -> Vec<u8> {
    let p = s.least_period();
    let mut doubled = Vec::with_capacity(2 * p);
    for i in 0..2 * p {
        doubled.push(s.get(i % p));
    }
    doubled
}

/// Locates all companion pairs of order `nlc_periodic(s)` in the periodic
/// extension of an aperiodic sequence.
pub fn find_companion_pairs(s: &BitSeq) -> Result<Vec<CompanionPair>, PeriodicInputError> {
    let n = s.len();
    let p = s.least_period();
    if p < n {
        return Err(PeriodicInputError { n, least_period: p });
    }
    let order = nlc_periodic(s);
    let mut pairs = Vec::new();
    if order == 0 {
        return Ok(pairs);
    }
    for start in 0..n {
        for spacing in 1..=n / 2 {
            if 2 * spacing == n && start >= n / 2 {
                continue; // the (i, i + n/2) pair equals (i + n/2, i)
            }
            if is_companion(s, start, start + spacing, order) {
                pairs.push(CompanionPair { start, spacing, order });
            }
        }
    }
    Ok(pairs)
}

fn is_companion(s: &BitSeq, i: usize, j: usize, order: usize) -> bool {
    for k in 0..order - 1 {
        if s.get_cyclic(i + k) != s.get_cyclic(j + k) {
            return false;
        }
    }
    s.get_cyclic(i + order - 1) != s.get_cyclic(j + order - 1)
}

/// Finite nonlinear complexity of every rotation of `s`, with structural
/// membership data per rotation.
pub fn shift_profile(s: &BitSeq, direction: Direction) -> ShiftProfile {
    let n = s.len();
    let mut values = Vec::with_capacity(n);
    let mut memberships = Vec::with_capacity(n);
    for k in 0..n {
        let rotated = match direction {
            Direction::Left => s.rotate_left(k),
            Direction::Right => s.rotate_right(k),
        };
        values.push(nlc_finite_fast(&rotated));
        let membership = structure::decompose(&rotated)
            .into_iter()
            // Most informative witness: maximal c, ties to smallest spacing.
            .max_by(|a, b| a.c.cmp(&b.c).then(b.d.cmp(&a.d)))
            .map(|form| {
                let add = structure::add_count(&rotated, &form)
                    .expect("form returned by decompose is always valid");
                (form, add)
            });
        memberships.push(membership);
    }
    ShiftProfile { direction, values, memberships }
}

const NONE: i32 = -1;

struct SamState {
    next: [i32; 2],
    link: i32,
    len: usize,
}

/// Suffix automaton over the binary alphabet (standard online construction).
struct SuffixAutomaton {
    states: Vec<SamState>,
}

impl SuffixAutomaton {
    fn build(bits: &[u8]) -> Self {
        let mut states = vec![SamState { next: [NONE; 2], link: NONE, len: 0 }];
        let mut last = 0i32;
        for &b in bits {
            let c = b as usize;
            let cur = states.len() as i32;
            states.push(SamState {
                next: [NONE; 2],
                link: NONE,
                len: states[last as usize].len + 1,
            });
            let mut p = last;
            while p != NONE && states[p as usize].next[c] == NONE {
                states[p as usize].next[c] = cur;
                p = states[p as usize].link;
            }
            if p == NONE {
                states[cur as usize].link = 0;
            } else {
                let q = states[p as usize].next[c];
                if states[p as usize].len + 1 == states[q as usize].len {
                    states[cur as usize].link = q;
                } else {
                    let clone = states.len() as i32;
                    states.push(SamState {
                        next: states[q as usize].next,
                        link: states[q as usize].link,
                        len: states[p as usize].len + 1,
                    });
                    while p != NONE && states[p as usize].next[c] == q {
                        states[p as usize].next[c] = clone;
                        p = states[p as usize].link;
                    }
                    states[q as usize].link = clone;
                    states[cur as usize].link = clone;
                }
            }
            last = cur;
        }
        SuffixAutomaton { states }
    }
}
