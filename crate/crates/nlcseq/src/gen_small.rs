//! Constructive generation of `B(n,c)`, `B0(n,c)`, `S(n,omega)` and
//! `P(n,omega)` for `ceil(log2 n) <= omega <= floor(n/2)`.
//!
//! The generator builds every member of `B(n, c, d)` directly from its
//! defining pattern instead of searching: for each spacing `d` and each
//! aperiodic `d`-prefix `a`, the first `c + d` symbols are forced
//! (`s_i = a_{i mod d}` with the last one flipped) and the tail is free.
//! `B0(n, c)` additionally forces the final symbol to `!a_{d-1}` so that the
//! added-term count is zero. A full aperiodicity check is skipped when
//! `c >= floor(n/2)` (the pattern already forces complexity at least
//! `floor(n/2)`, which rules out periodic repetitions) or when `n` is prime.
//!
//! `S(n, omega)` keeps the members of `B0(n, omega)` none of whose
//! rotations (the trivial one included — a sequence can carry a
//! higher-complexity pattern through a second spacing) lies in
//! `B(n, omega+1)`; the rotation test probes a precomputed membership set.
//! The rotation closure of `S(n, omega)`,
//! deduplicated by canonical rotation, yields the shift classes of all
//! `n`-periodic sequences with nonlinear complexity exactly `omega`.
//!
//! Every public operation has a `*_counted` twin that also reports the
//! dominating loop count (one tick per constructed candidate), used by the
//! benchmark surface: the structured loop is `Theta(n * 2^(n-c-1))`-bounded,
//! versus `Theta(n * log2(n) * 2^n)` for the exhaustive baseline.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::bitseq::BitSeq;
use crate::structure::{self, BForm};

/// A rotation-equivalence class of `n`-periodic sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftClass {
    /// Lexicographically least rotation; the identity of the class.
    pub canonical: BitSeq,
    /// Nonlinear complexity of the periodic extension.
    pub omega: usize,
    /// Generating member and its structural metadata, when the class was
    /// produced constructively (the exhaustive oracle leaves this empty).
    pub witness: Option<Witness>,
}

/// Structural metadata of the generating member of a shift class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub seq: BitSeq,
    pub form: BForm,
    pub add: usize,
}

/// Parameter-range errors for the generators.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("c = {c} out of range [1, {max}] for n = {n}")]
    COutOfRange { n: usize, c: usize, max: usize },
    #[error("omega = {omega} out of range [{lo}, {hi}] for n = {n}")]
    OmegaOutOfRange { n: usize, omega: usize, lo: usize, hi: usize },
    #[error("n = {n} out of range [{lo}, {hi}]")]
    NOutOfRange { n: usize, lo: usize, hi: usize },
}

/// The set `B(n, c)` (union over all spacings).
pub fn gen_b(n: usize, c: usize) -> Result<BTreeSet<BitSeq>, GenError> {
    gen_b_counted(n, c, &mut 0)
}

/// [`gen_b`] with an operation counter (one tick per candidate sequence).
pub fn gen_b_counted(n: usize, c: usize, ops: &mut u64) -> Result<BTreeSet<BitSeq>, GenError> {
    check_c(n, c)?;
    let mut out = BTreeSet::new();
    for_each_pattern(n, c, |d, prefix, pattern| {
        let tail_len = n - c - d;
        for tail in 0u64..1 << tail_len {
            *ops += 1;
            let s = BitSeq::from_word(n, pattern | (tail << (c + d)));
            if aperiodicity_guaranteed(n, c) || s.is_aperiodic() {
                out.insert(s);
            }
        }
        let _ = prefix;
    });
    Ok(out)
}

/// The set `B0(n, c)` of B-form sequences with zero added terms: the final
/// symbol is forced to `!a_{d-1}`.
pub fn gen_b0(n: usize, c: usize) -> Result<BTreeSet<BitSeq>, GenError> {
    gen_b0_counted(n, c, &mut 0)
}

/// [`gen_b0`] with an operation counter.
pub fn gen_b0_counted(n: usize, c: usize, ops: &mut u64) -> Result<BTreeSet<BitSeq>, GenError> {
    check_c(n, c)?;
    let mut out = BTreeSet::new();
    for_each_pattern(n, c, |d, prefix, pattern| {
        let last_forced = (1 - ((prefix >> (d - 1)) & 1)) << (n - 1);
        if c + d == n {
            // The flipped pattern symbol *is* the final symbol; keep the
            // candidate only if it already has zero added terms.
            *ops += 1;
            let s = BitSeq::from_word(n, pattern);
            if (pattern >> (n - 1)) != ((prefix >> (d - 1)) & 1)
                && (aperiodicity_guaranteed(n, c) || s.is_aperiodic())
            {
                out.insert(s);
            }
            return;
        }
        let tail_len = n - c - d - 1; // free symbols s_{c+d} .. s_{n-2}
        for tail in 0u64..1 << tail_len {
            *ops += 1;
            let s = BitSeq::from_word(n, pattern | (tail << (c + d)) | last_forced);
            if aperiodicity_guaranteed(n, c) || s.is_aperiodic() {
                out.insert(s);
            }
        }
    });
    Ok(out)
}

/// The set `S(n, omega)`: members of `B0(n, omega)` whose rotation orbit
/// avoids `B(n, omega + 1)` entirely.
pub fn gen_s_small(n: usize, omega: usize) -> Result<BTreeSet<BitSeq>, GenError> {
    gen_s_small_counted(n, omega, &mut 0)
}

/// [`gen_s_small`] with an operation counter.
pub fn gen_s_small_counted(
    n: usize,
    omega: usize,
    ops: &mut u64,
) -> Result<BTreeSet<BitSeq>, GenError> {
    check_omega_small(n, omega)?;
    let b0 = gen_b0_counted(n, omega, ops)?;
    let blocker = gen_b_counted(n, omega + 1, ops)?;
    // The whole rotation orbit must avoid B(n, omega + 1), including the
    // trivial rotation: a sequence can satisfy the zero-added-terms pattern
    // for one spacing while lying in B(n, omega + 1) through another.
    Ok(b0
        .into_iter()
        .filter(|s| {
            (0..n).all(|k| {
                *ops += 1;
                !blocker.contains(&s.rotate_left(k))
            })
        })
        .collect())
}

/// All shift classes of `n`-periodic sequences with nonlinear complexity
/// exactly `omega <= floor(n/2)`: the rotation closure of `S(n, omega)`,
/// deduplicated by canonical rotation. Classes are ordered by canonical
/// bit pattern; the witness of a class is its least generating member.
pub fn gen_p_small(n: usize, omega: usize) -> Result<Vec<ShiftClass>, GenError> {
    gen_p_small_counted(n, omega, &mut 0)
}

/// [`gen_p_small`] with an operation counter.
pub fn gen_p_small_counted(
    n: usize,
    omega: usize,
    ops: &mut u64,
) -> Result<Vec<ShiftClass>, GenError> {
    let witnesses = gen_s_small_counted(n, omega, ops)?;
    Ok(classes_from_witnesses(omega, &witnesses))
}

/// Builds deduplicated shift classes from a witness set, keeping the least
/// witness per class.
pub(crate) fn classes_from_witnesses(
    omega: usize,
    witnesses: &BTreeSet<BitSeq>,
) -> Vec<ShiftClass> {
    let mut classes: Vec<ShiftClass> = Vec::new();
    let mut seen = BTreeSet::new();
    for s in witnesses {
        let (canonical, _) = s.canonical_rotation();
        if !seen.insert(canonical) {
            continue;
        }
        let forms = structure::decompose(s);
        let form = forms
            .iter()
            .find(|f| f.c == omega)
            .or_else(|| forms.first())
            .copied();
        let witness = form.map(|form| Witness {
            seq: *s,
            form,
            add: structure::add_count(s, &form).expect("decompose form is valid"),
        });
        classes.push(ShiftClass { canonical, omega, witness });
    }
    classes.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    classes
}

/// Iterates over every `(d, prefix, pattern)` of the B-form construction:
/// `pattern` holds the forced first `c + d` bits (flip included).
fn for_each_pattern(n: usize, c: usize, mut visit: impl FnMut(usize, u64, u64)) {
    for d in 1..=(n - c).min(n / 2) {
        for prefix in 0u64..1 << d {
            if !BitSeq::from_word(d, prefix).is_aperiodic() {
                continue;
            }
            let mut pattern = 0u64;
            for i in 0..c + d - 1 {
                pattern |= ((prefix >> (i % d)) & 1) << i;
            }
            let flip = 1 - ((prefix >> ((c + d - 1) % d)) & 1);
            pattern |= flip << (c + d - 1);
            visit(d, prefix, pattern);
        }
    }
}

/// True when the construction already guarantees aperiodicity (complexity
/// at least `floor(n/2)`, or prime length with a non-constant pattern).
fn aperiodicity_guaranteed(n: usize, c: usize) -> bool {
    c >= n / 2 || is_prime(n)
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|p| p * p <= n).all(|p| n % p != 0)
}

fn check_c(n: usize, c: usize) -> Result<(), GenError> {
    if n < 2 || n > crate::bitseq::MAX_LEN {
        return Err(GenError::NOutOfRange { n, lo: 2, hi: crate::bitseq::MAX_LEN });
    }
    if c < 1 || c >= n {
        return Err(GenError::COutOfRange { n, c, max: n - 1 });
    }
    Ok(())
}

fn check_omega_small(n: usize, omega: usize) -> Result<(), GenError> {
    check_c(n, omega)?;
    let lo = structure::ceil_log2(n);
    let hi = n / 2;
    if omega < lo || omega > hi {
        return Err(GenError::OmegaOutOfRange { n, omega, lo, hi });
    }
    Ok(())
}
