//! Unit tests for the exhaustive verifier: catalog coverage, the
//! theorem checkers, the generation cross-check and the scanner guards.

use std::collections::BTreeSet;

use nlcseq::bitseq::BitSeq;
use nlcseq::oracle::{
    aperiodic_necklace_count, oracle_catalog, oracle_p, scan_open_problem, verify_generation,
    verify_theorem1, verify_theorem2, OracleError, DEFAULT_MAX_N,
};
use nlcseq::structure::ceil_log2;

fn seq(bits: &str) -> BitSeq {
    bits.parse().expect("valid bit string")
}

#[test]
fn catalog_counts_match_necklace_arithmetic() {
    for n in 2..=13usize {
        let catalog = oracle_catalog(n, DEFAULT_MAX_N).unwrap();
        assert_eq!(
            catalog.class_count() as u64,
            aperiodic_necklace_count(n),
            "n = {n}"
        );
        for (omega, classes) in &catalog.classes {
            assert!((ceil_log2(n)..n).contains(omega), "n = {n}");
            assert_eq!(catalog.totals[omega], (classes.len() * n) as u64);
            for s in classes {
                assert!(s.is_aperiodic());
                assert_eq!(*s, s.canonical_rotation().0);
            }
        }
        // Modeled baseline cost: every one of the 2^n words pays the
        // per-word classification price.
        assert_eq!(catalog.ops, (1u64 << n) * (n * ceil_log2(n)) as u64);
    }
}

#[test]
fn necklace_count_values() {
    let expected = [(1, 2), (2, 1), (3, 2), (4, 3), (6, 9), (12, 335)];
    for (n, count) in expected {
        assert_eq!(aperiodic_necklace_count(n), count, "n = {n}");
    }
}

#[test]
fn classes_below_the_log_bound_are_empty() {
    assert!(oracle_p(4, 0).unwrap().is_empty());
    assert!(oracle_p(4, 1).unwrap().is_empty());
    assert!(oracle_p(8, 2).unwrap().is_empty());
}

#[test]
fn maximal_complexity_classes_at_n8() {
    let classes = oracle_p(8, 7).unwrap();
    let canonicals: BTreeSet<BitSeq> = classes.iter().map(|c| c.canonical).collect();
    let expected: BTreeSet<BitSeq> = ["00001000", "01001010", "10110101", "11110111"]
        .iter()
        .map(|s| seq(s).canonical_rotation().0)
        .collect();
    assert_eq!(canonicals, expected);
    for class in classes {
        assert_eq!(class.omega, 7);
        assert!(class.witness.is_none(), "oracle classes carry no witness");
    }
}

#[test]
fn closure_identity_small_cases() {
    assert!(verify_theorem1(8, 4).unwrap());
    assert!(verify_theorem1(9, 4).unwrap());
    assert!(verify_theorem1(12, 7).unwrap()); // boundary c = floor(n/2) + 1
}

#[test]
fn closure_identity_range_gate() {
    assert!(matches!(
        verify_theorem1(12, 8),
        Err(OracleError::InadmissibleC { n: 12, c: 8, lo: 4, hi: 7 })
    ));
    assert!(matches!(
        verify_theorem1(12, 3),
        Err(OracleError::InadmissibleC { .. })
    ));
}

#[test]
fn representative_law_report_at_n8() {
    let report = verify_theorem2(8).unwrap();
    assert_eq!(report.n, 8);
    assert_eq!(report.checked, 28);
    assert!(report.violations.is_empty());
    let histogram: Vec<(usize, usize)> =
        report.add_histogram.iter().map(|(k, v)| (*k, *v)).collect();
    assert_eq!(histogram, vec![(0, 10), (1, 8), (2, 6), (3, 4)]);
}

#[test]
fn representative_law_holds_for_tiny_lengths() {
    for n in 4..=10 {
        let report = verify_theorem2(n).unwrap();
        assert!(report.violations.is_empty(), "n = {n}: {:?}", report.violations);
    }
}

#[test]
fn generation_cross_check_small_lengths() {
    for n in 4..=10usize {
        let checks = verify_generation(n).unwrap();
        assert_eq!(checks.len(), n - ceil_log2(n));
        for check in &checks {
            assert!(check.pass, "n = {n}, omega = {}", check.omega);
        }
    }
    let n7: Vec<(usize, usize)> = verify_generation(7)
        .unwrap()
        .iter()
        .map(|c| (c.omega, c.class_count))
        .collect();
    assert_eq!(n7[0], (3, 4));
}

#[test]
fn open_problem_scan_is_empty_at_small_scale() {
    assert!(scan_open_problem(12).unwrap().is_empty());
}

#[test]
fn enumeration_guards() {
    assert!(matches!(
        oracle_catalog(25, DEFAULT_MAX_N),
        Err(OracleError::GuardExceeded { n: 25, .. })
    ));
    assert!(matches!(
        scan_open_problem(25),
        Err(OracleError::GuardExceeded { .. })
    ));
    assert!(oracle_catalog(1, DEFAULT_MAX_N).is_err());
}
