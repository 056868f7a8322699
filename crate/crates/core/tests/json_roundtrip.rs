mod common;

use common::{diagram, symbol_strategy, SMALL_PINS};
use proptest::prelude::*;
use pseudoknot::diagram::DiagramJson;
use pseudoknot::invariants::pseudodeterminant;
use pseudoknot::PseudoDiagram;

fn round_trip(d: &PseudoDiagram) -> PseudoDiagram {
    let text = serde_json::to_string(&d.to_json()).unwrap();
    let back: DiagramJson = serde_json::from_str(&text).unwrap();
    PseudoDiagram::from_json(&back).unwrap()
}

#[test]
fn pins_survive_serialization() {
    for s in SMALL_PINS {
        let d = diagram(s);
        let e = round_trip(&d);
        assert!(d.is_isomorphic(&e), "{s}");
        assert_eq!(pseudodeterminant(&d).unwrap(), pseudodeterminant(&e).unwrap(), "{s}");
    }
}

#[test]
fn split_loops_survive_serialization() {
    let d = diagram("3,0,0");
    assert!(d.free_loops() > 0);
    assert_eq!(round_trip(&d).free_loops(), d.free_loops());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn random_symbols_survive_serialization(s in symbol_strategy(3)) {
        let d = diagram(&s);
        let e = round_trip(&d);
        prop_assert!(d.is_isomorphic(&e));
        prop_assert_eq!(d.component_count(), e.component_count());
        prop_assert_eq!(d.to_json(), e.to_json());
    }
}
