//! Structural calculus on finite sequences: B-form decomposition, added
//! terms, rotation-equivalence sets and representatives, and shift laws.
//!
//! A length-`n` aperiodic sequence lies in the set `B(n, c, d)` when it
//! starts with the pattern
//!
//! ```text
//! s_{c+d} = s_d^q (s_0, ..., s_{r-1}, !s_r),   q = floor((c+d-1)/d),
//!                                              r = (c+d-1) - q*d,
//! ```
//!
//! i.e. `s_i = s_{i+d}` for `0 <= i <= c-2` and `s_{c-1} != s_{c+d-1}`, with
//! an aperiodic `d`-prefix (when `r = 0` the flipped symbol is `!s_0`). The
//! parameter `d` is called the spacing, and `B(n, c)` is the union over all
//! admissible `d <= min(n-c, floor(n/2))`. Any sequence starting with such a
//! pattern has nonlinear complexity at least `c`, with equality when
//! `c >= floor(n/2)`.
//!
//! The added-term count `add(s) = t` is the number of trailing symbols that
//! continue the `d`-periodic pattern cyclically: `s_{n-1-i} = s_{(d-1-i) mod d}`
//! for `0 <= i < t`, with a mismatch at `i = t`. Right rotations of a B-form
//! sequence raise its complexity by one per step for `k <= min(t, n-c-d)` and
//! then plateau at `c + t` up to `k = n-c-d`.
//!
//! `E(s)` collects the rotations `R^k(s)` that stay inside `B(n, c)`; a
//! member with maximal added-term count is a representative of the class.
//! For a representative `s`, the periodic complexity satisfies
//! `nlc(s^inf) = nlc(s) + add(s)`.

use thiserror::Error;

use crate::bitseq::BitSeq;
use crate::complexity;

/// A decomposition witness that a sequence lies in `B(n, c, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BForm {
    /// Nonlinear-complexity parameter of the pattern.
    pub c: usize,
    /// Spacing (companion-pair distance), `1 <= d <= min(n-c, floor(n/2))`.
    pub d: usize,
    /// Repetition count `floor((c+d-1)/d)` of the `d`-prefix.
    pub q: usize,
    /// Remainder `(c+d-1) - q*d`, `0 <= r < d`.
    pub r: usize,
}

/// Errors from structural operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("form (c={c}, d={d}) is not a decomposition of the sequence")]
    MismatchedForm { c: usize, d: usize },
    #[error("sequence does not lie in B(n, {c})")]
    NotInB { c: usize },
    #[error("precondition c >= floor(n/2) violated: c={c}, n={n}")]
    ComplexityTooSmall { c: usize, n: usize },
    #[error("sequence is not a maximal-add member of its equivalence class")]
    NotARepresentative,
    #[error("structural law violated: {detail}")]
    TheoryViolation { detail: String },
}

/// Pass/fail report of the shift-law checks for one sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftLawReport {
    /// Number of individual law instances checked.
    pub checked: usize,
    /// First counterexample, if any (human-readable description).
    pub counterexample: Option<String>,
}

impl ShiftLawReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Outcome of [`max_rotated_nlc`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxRotatedNlc {
    /// `max_k nlc(R^k(s))` over all `n` rotations.
    pub max: usize,
    /// True when `t <= n-c-d` (the regime where the maximum equals `c+t`).
    pub within_add_window: bool,
    /// In the regime `t > n-c-d`: whether the maximum exactly equals `n-d`.
    /// Evidence for an open question; never asserted as an invariant.
    pub equals_n_minus_d: Option<bool>,
}

/// All decompositions of `s` into B-forms, ordered by spacing.
///
/// For each spacing `d` with an aperiodic `d`-prefix, the candidate `c` is
/// forced: `c - 1` is the first index where `s_i != s_{i+d}`. The form is
/// included iff `c < n`, `d <= n - c` and the full sequence is aperiodic.
/// An empty result means the sequence lies in no `B(n, c, d)`.
pub fn decompose(s: &BitSeq) -> Vec<BForm> {
    let n = s.len();
    let mut forms = Vec::new();
    if !s.is_aperiodic() {
        return forms;
    }
    for d in 1..=n / 2 {
        let prefix_word = s.word() & ((1u64 << d) - 1);
        if !BitSeq::from_word(d, prefix_word).is_aperiodic() {
            continue;
        }
        let Some(mismatch) = (0..n - d).find(|&i| s.get(i) != s.get(i + d)) else {
            continue; // no flipped symbol within reach of this spacing
        };
        let c = mismatch + 1;
        if c < n && d <= n - c {
            let q = (c + d - 1) / d;
            let r = (c + d - 1) - q * d;
            forms.push(BForm { c, d, q, r });
        }
    }
    forms
}

/// Added-term count of `s` relative to one of its decompositions.
///
/// Counts how far the tail continues the `d`-periodic pattern cyclically:
/// the unique `t >= 0` with `s_{n-1-i} = s_{(d-1-i) mod d}` for `i < t` and a
/// mismatch at `i = t`.
pub fn add_count(s: &BitSeq, form: &BForm) -> Result<usize, StructureError> {
    validate_form(s, form)?;
    let n = s.len();
    let d = form.d as i64;
    let mut t = 0;
    while t < n {
        let tail = s.get(n - 1 - t);
        let pattern = s.get((d - 1 - t as i64).rem_euclid(d) as usize);
        if tail != pattern {
            break;
        }
        t += 1;
    }
    Ok(t)
}

fn validate_form(s: &BitSeq, form: &BForm) -> Result<(), StructureError> {
    if decompose(s).iter().any(|f| f == form) {
        Ok(())
    } else {
        Err(StructureError::MismatchedForm { c: form.c, d: form.d })
    }
}

/// The rotations of `s` that remain in `B(n, c)`: entries `(k, form, add)`
/// for every `R^k(s)` in `B(n, c)`, `k` ascending, with the smallest-spacing
/// form witnessing the membership. `s` itself appears at `k = 0`.
pub fn equivalence_set(
    s: &BitSeq,
    c: usize,
) -> Result<Vec<(usize, BForm, usize)>, StructureError> {
    let n = s.len();
    let mut members = Vec::new();
    for k in 0..n {
        let rotated = s.rotate_right(k);
        if let Some(form) = decompose(&rotated).into_iter().find(|f| f.c == c) {
            let add = add_count(&rotated, &form)?;
            members.push((k, form, add));
        }
    }
    if members.first().map(|(k, _, _)| *k) != Some(0) {
        return Err(StructureError::NotInB { c });
    }
    Ok(members)
}

/// A representative of `E(s)`: a member with maximal added-term count, ties
/// broken by the least rotation index `k`. Returns the sequence and its add.
pub fn representative(s: &BitSeq, c: usize) -> Result<(BitSeq, usize), StructureError> {
    let members = equivalence_set(s, c)?;
    let (k, _, add) = members
        .iter()
        .copied()
        .max_by(|a, b| a.2.cmp(&b.2).then(b.0.cmp(&a.0)))
        .expect("equivalence set always contains k = 0");
    Ok((s.rotate_right(k), add))
}

/// Verifies the shift laws on `s` with the given decomposition:
///
/// * left shifts lower the pattern: `L^t(s)` lies in `B(n, c-t, d)` for
///   `0 < t < c`, with `nlc = c - t` whenever `c - t >= floor(n/2)`;
/// * right shifts climb through the added terms: `nlc(R^k(s)) = c + k` and
///   `R^k(s)` is in `B(n, c+k, d)` for `1 <= k <= min(t, n-c-d)`, then
///   `nlc(R^k(s)) = c + t` for `t < k <= n-c-d`.
///
/// Requires `c >= floor(n/2)`. Returns the first counterexample, if any.
pub fn check_shift_laws(s: &BitSeq, form: &BForm) -> Result<ShiftLawReport, StructureError> {
    validate_form(s, form)?;
    let n = s.len();
    let (c, d) = (form.c, form.d);
    if c < n / 2 {
        return Err(StructureError::ComplexityTooSmall { c, n });
    }
    let t = add_count(s, form)?;
    let mut checked = 0;
    let fail = |msg: String, report: &mut Option<String>| {
        if report.is_none() {
            *report = Some(msg);
        }
    };
    let mut counterexample = None;

    for shift in 1..c {
        let shifted = s.rotate_left(shift);
        checked += 1;
        let expected = BForm {
            c: c - shift,
            d,
            q: (c - shift + d - 1) / d,
            r: (c - shift + d - 1) % d,
        };
        if !decompose(&shifted).contains(&expected) {
            fail(
                format!("L^{shift}({s}) not in B({n}, {}, {d})", c - shift),
                &mut counterexample,
            );
        }
        if c - shift >= n / 2 {
            checked += 1;
            let nlc = complexity::nlc_finite(&shifted);
            if nlc != c - shift {
                fail(
                    format!("nlc(L^{shift}({s})) = {nlc}, expected {}", c - shift),
                    &mut counterexample,
                );
            }
        }
    }

    let plateau_end = n - c - d;
    for k in 1..=t.min(plateau_end) {
        let rotated = s.rotate_right(k);
        checked += 2;
        let nlc = complexity::nlc_finite(&rotated);
        if nlc != c + k {
            fail(
                format!("nlc(R^{k}({s})) = {nlc}, expected {}", c + k),
                &mut counterexample,
            );
        }
        if !decompose(&rotated).iter().any(|f| f.c == c + k && f.d == d) {
            fail(
                format!("R^{k}({s}) not in B({n}, {}, {d})", c + k),
                &mut counterexample,
            );
        }
    }
    for k in t + 1..=plateau_end {
        let rotated = s.rotate_right(k);
        checked += 1;
        let nlc = complexity::nlc_finite(&rotated);
        if nlc != c + t {
            fail(
                format!("nlc(R^{k}({s})) = {nlc}, expected plateau {}", c + t),
                &mut counterexample,
            );
        }
    }

    Ok(ShiftLawReport { checked, counterexample })
}

/// Maximum finite complexity over all rotations of a representative, with
/// its classification:
///
/// * `t <= n-c-d`: the maximum must equal `c + t` (asserted, error on
///   violation);
/// * `t > n-c-d`: the maximum must be at least `n - d` (asserted); whether
///   it exactly equals `n - d` is recorded as open-question evidence.
pub fn max_rotated_nlc(
    s: &BitSeq,
    form: &BForm,
    t: usize,
) -> Result<MaxRotatedNlc, StructureError> {
    validate_form(s, form)?;
    let n = s.len();
    let (c, d) = (form.c, form.d);
    if c < n / 2 {
        return Err(StructureError::ComplexityTooSmall { c, n });
    }
    if add_count(s, form)? != t {
        return Err(StructureError::MismatchedForm { c, d });
    }
    let max_add = equivalence_set(s, c)?
        .iter()
        .map(|(_, _, add)| *add)
        .max()
        .expect("equivalence set is non-empty");
    if t < max_add {
        return Err(StructureError::NotARepresentative);
    }
    let max = (0..n)
        .map(|k| complexity::nlc_finite(&s.rotate_right(k)))
        .max()
        .expect("n >= 1");
    if t <= n - c - d {
        if max != c + t {
            return Err(StructureError::TheoryViolation {
                detail: format!("max_k nlc(R^k({s})) = {max}, expected c + t = {}", c + t),
            });
        }
        Ok(MaxRotatedNlc { max, within_add_window: true, equals_n_minus_d: None })
    } else {
        if max < n - d {
            return Err(StructureError::TheoryViolation {
                detail: format!("max_k nlc(R^k({s})) = {max} below bound n - d = {}", n - d),
            });
        }
        Ok(MaxRotatedNlc {
            max,
            within_add_window: false,
            equals_n_minus_d: Some(max == n - d),
        })
    }
}

/// The admissible range gate for the set identity
/// `union of P(n, omega) over omega >= c == rotation closure of B(n, c)`:
/// `ceil(log2 n) <= c <= floor(n/2) + 1`.
pub fn admissible_c(n: usize, c: usize) -> bool {
    c >= ceil_log2(n) && c <= n / 2 + 1
}

/// `ceil(log2 n)` for `n >= 1`.
pub fn ceil_log2(n: usize) -> usize {
    (usize::BITS - (n - 1).leading_zeros()) as usize
}
