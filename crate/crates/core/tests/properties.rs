mod common;

use common::{classical_up_to_eight, diagram, symbol_strategy, word_symbol, SMALL_PINS};
use num_traits::Signed;
use proptest::prelude::*;
use pseudoknot::invariants::{
    coloring_numbers, det_progression, determinant, is_colorable, is_strong_colorable, pseudodeterminant,
    ColoringSystem,
};
use pseudoknot::linalg::minor_determinant;

#[test]
fn every_minor_has_the_same_determinant() {
    let mut checked = 0;
    for (s, d) in classical_up_to_eight() {
        assert!(d.node_count() <= 8, "{s}");
        let m = ColoringSystem::new(&d, false).into_matrix();
        if !m.is_square() || m.rows() == 0 {
            continue;
        }
        let first = minor_determinant(&m, 0, 0).unwrap();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                assert_eq!(minor_determinant(&m, i, j).unwrap().abs(), first, "{s}: minor ({i},{j})");
            }
        }
        assert_eq!(u64::try_from(first).unwrap(), determinant(&d).unwrap(), "{s}");
        checked += 1;
    }
    assert!(checked > 250, "only {checked} diagrams checked");
}

/// A pseudoknot colorable mod p passes colorability to each of its
/// pseudoresolutions, whose resolutions are among its own.
#[test]
fn pseudoresolutions_inherit_colorability() {
    let mut inherited = 0;
    for s in SMALL_PINS {
        let d = diagram(s);
        let partial = d.pseudoresolutions(20).unwrap();
        assert!(!partial.is_empty() || d.precrossing_count() == 1, "{s}");
        for p in 2..=13 {
            if !is_colorable(&d, p).unwrap() {
                continue;
            }
            for r in &partial {
                let e = d.resolve(r).unwrap();
                assert!(e.precrossing_count() > 0);
                assert!(is_colorable(&e, p).unwrap(), "{s} [{r}] mod {p}");
                inherited += 1;
            }
        }
    }
    assert!(inherited > 0);
}

/// Every divisor above 1 of the pseudodeterminant is a coloring number.
#[test]
fn divisors_of_the_pseudodeterminant_are_coloring_numbers() {
    for s in SMALL_PINS {
        let d = diagram(s);
        let pd = pseudodeterminant(&d).unwrap();
        let numbers = coloring_numbers(&d, pd.max(13)).unwrap();
        for p in (2..=pd).filter(|p| pd.is_multiple_of(*p)) {
            assert!(numbers.contains(&p), "{s}: {p} divides {pd}");
            if p <= 13 {
                assert!(is_colorable(&d, p).unwrap(), "{s} mod {p}");
            }
        }
    }
}

#[test]
fn strong_colorability_implies_colorability_on_pins() {
    for s in SMALL_PINS {
        let d = diagram(s);
        for p in 2..=13 {
            if is_strong_colorable(&d, p).unwrap() {
                assert!(is_colorable(&d, p).unwrap(), "{s} mod {p}");
            }
        }
    }
}

/// The gcd shortcut behind coloring numbers agrees with solving each
/// resolution's system.
#[test]
fn coloring_numbers_match_direct_solving() {
    for s in SMALL_PINS {
        let d = diagram(s);
        let direct: Vec<u64> = (2..=13).filter(|&p| is_colorable(&d, p).unwrap()).collect();
        assert_eq!(coloring_numbers(&d, 13).unwrap(), direct, "{s}");
    }
}

#[test]
fn classical_strong_and_weak_agree() {
    for s in ["3", "2 2", "5", "3 2", "2 1 1", "3,3,-3", "6*"] {
        let d = diagram(s);
        for p in 2..=13 {
            assert_eq!(is_strong_colorable(&d, p).unwrap(), is_colorable(&d, p).unwrap(), "{s} mod {p}");
        }
    }
}

#[test]
fn determinants_of_twist_families_progress_arithmetically() {
    let twists = [diagram("3"), diagram("5"), diagram("7")];
    assert!(det_progression(&twists).unwrap());
    let clasps = [diagram("2 2"), diagram("2 4"), diagram("2 6")];
    assert!(det_progression(&clasps).unwrap());
    let unrelated = [diagram("3"), diagram("2 2"), diagram("5")];
    assert!(!det_progression(&unrelated).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn appending_twists_keeps_progression(prefix in proptest::collection::vec(1i64..=4, 0..3), n in 1i64..=4) {
        let member = |k: i64| {
            let mut w = prefix.clone();
            w.push(k);
            diagram(&word_symbol(&w))
        };
        prop_assert!(det_progression(&[member(n), member(n + 2), member(n + 4)]).unwrap());
    }

    #[test]
    fn strong_implies_weak_on_random_symbols(s in symbol_strategy(3), p in 2u64..=7) {
        let d = diagram(&s);
        prop_assume!(d.precrossing_count() <= 6);
        if is_strong_colorable(&d, p).unwrap() {
            prop_assert!(is_colorable(&d, p).unwrap(), "{} mod {}", s, p);
        }
    }

    #[test]
    fn mirror_keeps_every_resolution_determinant(s in symbol_strategy(3)) {
        let d = diagram(&s);
        prop_assume!(d.precrossing_count() <= 6);
        prop_assert_eq!(pseudodeterminant(&d).unwrap(), pseudodeterminant(&d.mirror()).unwrap());
    }
}
