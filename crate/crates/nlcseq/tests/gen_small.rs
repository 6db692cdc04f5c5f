//! Unit tests for the small-complexity generator: pattern sets, the
//! zero-added-terms subset, the orbit filter, and class emission.

use std::collections::BTreeSet;

use nlcseq::bitseq::BitSeq;
use nlcseq::complexity::nlc_periodic;
use nlcseq::gen_small::{gen_b, gen_b0, gen_p_small, gen_s_small, GenError};
use nlcseq::structure::{add_count, decompose};

fn seq(bits: &str) -> BitSeq {
    bits.parse().expect("valid bit string")
}

fn set(items: &[&str]) -> BTreeSet<BitSeq> {
    items.iter().map(|s| seq(s)).collect()
}

#[test]
fn gen_b_matches_the_decomposition_predicate() {
    // The constructive enumeration equals a brute-force filter over all
    // words: membership iff some decomposition has the requested c.
    for n in 2..=12usize {
        for c in 1..n {
            let generated = gen_b(n, c).unwrap();
            let filtered: BTreeSet<BitSeq> = (0..1u64 << n)
                .map(|word| BitSeq::from_word(n, word))
                .filter(|s| decompose(s).iter().any(|f| f.c == c))
                .collect();
            assert_eq!(generated, filtered, "n = {n}, c = {c}");
        }
    }
}

#[test]
fn gen_b_worked_sizes() {
    assert_eq!(gen_b(8, 4).unwrap().len(), 48);
    assert_eq!(gen_b(7, 3).unwrap().len(), 36);
}

#[test]
fn gen_b_members_have_the_requested_complexity_floor() {
    for s in gen_b(9, 4).unwrap() {
        assert!(nlcseq::complexity::nlc_finite(&s) >= 4, "s = {s}");
    }
    // At c >= floor(n/2) the bound is tight.
    for s in gen_b(8, 4).unwrap() {
        assert_eq!(nlcseq::complexity::nlc_finite(&s), 4, "s = {s}");
    }
}

#[test]
fn gen_b0_is_the_zero_add_slice() {
    assert_eq!(gen_b0(7, 3).unwrap().len(), 18);
    for n in 4..=11usize {
        for c in 2..n - 1 {
            let b0 = gen_b0(n, c).unwrap();
            let expected: BTreeSet<BitSeq> = gen_b(n, c)
                .unwrap()
                .into_iter()
                .filter(|s| {
                    decompose(s)
                        .iter()
                        .filter(|f| f.c == c)
                        .any(|f| add_count(s, f).unwrap() == 0)
                })
                .collect();
            assert_eq!(b0, expected, "n = {n}, c = {c}");
        }
    }
}

#[test]
fn s_set_worked_example() {
    let expected = set(&[
        "0001101", "0110100", "1010001", "0001011", "0101100", "1011000", "1110100",
        "1010011", "0100111", "1110010", "1001011", "0101110",
    ]);
    assert_eq!(gen_s_small(7, 3).unwrap(), expected);
}

#[test]
fn s_set_members_have_exact_periodic_complexity() {
    for n in 4..=12usize {
        let lo = nlcseq::structure::ceil_log2(n);
        for omega in lo..=n / 2 {
            for s in gen_s_small(n, omega).unwrap() {
                assert_eq!(nlc_periodic(&s), omega, "s = {s}");
            }
        }
    }
}

#[test]
fn orbit_filter_covers_the_trivial_rotation() {
    // 00010000110 satisfies the omega = 4 zero-add pattern with spacing 1
    // but carries a c = 5 pattern through spacing 5; its class has periodic
    // complexity 7 and must not appear at omega = 4.
    let s = seq("00010000110");
    assert!(gen_b0(11, 4).unwrap().contains(&s));
    assert!(decompose(&s).iter().any(|f| f.c == 5));
    assert_eq!(nlc_periodic(&s), 7);
    assert!(!gen_s_small(11, 4).unwrap().contains(&s));
}

#[test]
fn classes_worked_example() {
    let classes = gen_p_small(7, 3).unwrap();
    assert_eq!(classes.len(), 4);
    let mut members = BTreeSet::new();
    for class in &classes {
        assert_eq!(class.omega, 3);
        assert_eq!(class.canonical, class.canonical.canonical_rotation().0);
        assert_eq!(nlc_periodic(&class.canonical), 3);
        let witness = class.witness.expect("constructive witness");
        assert_eq!(witness.seq.canonical_rotation().0, class.canonical);
        assert_eq!(witness.form.c, 3);
        assert_eq!(witness.add, add_count(&witness.seq, &witness.form).unwrap());
        // The witness comes from the zero-add construction through some
        // spacing, not necessarily the recorded one.
        assert!(decompose(&witness.seq)
            .iter()
            .filter(|f| f.c == 3)
            .any(|f| add_count(&witness.seq, f).unwrap() == 0));
        for k in 0..7 {
            members.insert(class.canonical.rotate_left(k));
        }
    }
    // The four orbits expand to 28 distinct periodic sequences.
    assert_eq!(members.len(), 28);
    // Every S-set member lies in some orbit.
    for s in gen_s_small(7, 3).unwrap() {
        assert!(members.contains(&s));
    }
}

#[test]
fn table_classes_at_n8() {
    let classes = gen_p_small(8, 4).unwrap();
    assert_eq!(classes.len(), 10);
    let canonicals: BTreeSet<BitSeq> = classes.iter().map(|c| c.canonical).collect();
    let expected = set(&[
        "00001011", "00001101", "00001111", "00010011", "00011001", "00101101",
        "00101111", "00110111", "00111011", "00111101",
    ]);
    assert_eq!(canonicals, expected);
}

#[test]
fn range_gates() {
    assert!(matches!(
        gen_s_small(8, 2),
        Err(GenError::OmegaOutOfRange { lo: 3, .. })
    ));
    assert!(matches!(
        gen_s_small(8, 5),
        Err(GenError::OmegaOutOfRange { hi: 4, .. })
    ));
    assert!(matches!(gen_b(8, 0), Err(GenError::COutOfRange { .. })));
    assert!(matches!(gen_b(8, 8), Err(GenError::COutOfRange { .. })));
    assert!(matches!(gen_b(1, 1), Err(GenError::NOutOfRange { .. })));
}
