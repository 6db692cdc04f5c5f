//! Unit tests for the packed bit-sequence type: parsing, rotation,
//! periodicity, canonicalization and cyclic run statistics.

use std::collections::BTreeMap;

use nlcseq::bitseq::{BitSeq, ParseError, MAX_LEN};

fn seq(bits: &str) -> BitSeq {
    BitSeq::from_bits(bits).expect("valid bit string")
}

#[test]
fn parse_and_display_roundtrip() {
    for bits in ["0", "1", "01", "0010010010", "1111111111111111"] {
        assert_eq!(seq(bits).to_string(), bits);
    }
    let max = "01".repeat(MAX_LEN / 2);
    assert_eq!(seq(&max).to_string(), max);
}

#[test]
fn parse_rejects_bad_input() {
    assert_eq!(BitSeq::from_bits(""), Err(ParseError::Empty));
    assert_eq!(
        BitSeq::from_bits(&"0".repeat(MAX_LEN + 1)),
        Err(ParseError::TooLong { len: MAX_LEN + 1 })
    );
    assert_eq!(
        BitSeq::from_bits("0012"),
        Err(ParseError::ForeignChar { index: 3, ch: '2' })
    );
    assert_eq!(
        BitSeq::from_bits("x001"),
        Err(ParseError::ForeignChar { index: 0, ch: 'x' })
    );
    assert!("0a1".parse::<BitSeq>().is_err());
}

#[test]
fn from_word_matches_string_form() {
    // Index 0 is the least significant bit of the word.
    assert_eq!(BitSeq::from_word(4, 0b0001), seq("1000"));
    assert_eq!(BitSeq::from_word(4, 0b1000), seq("0001"));
    assert_eq!(seq("0010010010").word(), 0b0100100100);
}

#[test]
fn indexing_and_cyclic_access() {
    let s = seq("0110");
    assert_eq!(
        (0..4).map(|i| s.get(i)).collect::<Vec<_>>(),
        vec![0, 1, 1, 0]
    );
    assert_eq!(s.get_cyclic(4), 0);
    assert_eq!(s.get_cyclic(5), 1);
    assert_eq!(s.get_cyclic(4 * 7 + 2), 1);
}

#[test]
#[should_panic]
fn get_panics_out_of_bounds() {
    seq("0110").get(4);
}

#[test]
fn rotations() {
    let s = seq("0010010010");
    assert_eq!(s.rotate_left(0), s);
    assert_eq!(s.rotate_left(1), seq("0100100100"));
    assert_eq!(s.rotate_right(1), seq("0001001001"));
    assert_eq!(s.rotate_left(3).rotate_right(3), s);
    assert_eq!(s.rotate_left(s.len()), s);
    // Right rotation by k brings the last k symbols to the front.
    assert_eq!(seq("000010010").rotate_right(5), seq("100100000"));
}

#[test]
fn periodicity() {
    assert!(seq("0110").is_aperiodic());
    assert!(!seq("0101").is_aperiodic());
    assert!(!seq("001001").is_aperiodic());
    assert!(seq("0010010").is_aperiodic());
    assert_eq!(seq("010101").least_period(), 2);
    assert_eq!(seq("001001").least_period(), 3);
    assert_eq!(seq("0010010").least_period(), 7);
    assert_eq!(seq("0000").least_period(), 1);
}

#[test]
fn canonical_rotation_is_least_left_shift() {
    let (canonical, k) = seq("0110").canonical_rotation();
    assert_eq!(canonical, seq("0011"));
    assert_eq!(k, 3);
    let (canonical, k) = seq("0001").canonical_rotation();
    assert_eq!(canonical, seq("0001"));
    assert_eq!(k, 0);
}

#[test]
fn ordering_is_lexicographic() {
    assert!(seq("0011") < seq("0101"));
    assert!(seq("0011").lex_lt(&seq("0101")));
    assert!(seq("10") > seq("01"));
    // Zero sorts below one at the first differing index.
    assert!(seq("0111") < seq("1000"));
}

#[test]
fn cyclic_run_histogram() {
    let s = seq("0000111101100101");
    let runs = s.cyclic_runs().expect("non-constant");
    let expected: BTreeMap<usize, usize> = [(1, 2), (2, 1), (4, 1)].into_iter().collect();
    assert_eq!(runs.zero_runs, expected);
    assert_eq!(runs.one_runs, expected);
    assert_eq!(runs.mass(), s.len());
}

#[test]
fn cyclic_runs_reject_constant_input() {
    assert!(seq("0000").cyclic_runs().is_err());
    assert!(seq("1").cyclic_runs().is_err());
}

#[test]
fn run_mass_equals_length_for_non_constant() {
    for n in 2..=10usize {
        for word in 1..(1u64 << n) - 1 {
            let s = BitSeq::from_word(n, word);
            assert_eq!(s.cyclic_runs().unwrap().mass(), n, "s = {s}");
        }
    }
}

#[test]
fn hamming_weight_counts_ones() {
    assert_eq!(seq("0000").hamming_weight(), 0);
    assert_eq!(seq("0110100").hamming_weight(), 3);
    assert_eq!(seq("1111").hamming_weight(), 4);
}

#[test]
fn to_vec_exposes_symbols() {
    assert_eq!(seq("0110").to_vec(), vec![0, 1, 1, 0]);
}

#[test]
fn aperiodicity_is_rotation_invariant_exhaustive() {
    for n in 2..=8usize {
        for word in 0..1u64 << n {
            let s = BitSeq::from_word(n, word);
            let aper = s.is_aperiodic();
            for k in 0..n {
                assert_eq!(s.rotate_left(k).is_aperiodic(), aper, "s = {s}, k = {k}");
            }
        }
    }
}
