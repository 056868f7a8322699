#![allow(dead_code)]

use pseudoknot::families::FamilySpec;
use pseudoknot::PseudoDiagram;

/// Pseudodeterminant pins with their expected values.
pub const PSEUDODET_PINS: [(&str, u64); 8] = [
    ("3 i 3", 3),
    ("(3)(i)(-3)", 9),
    ("(5)(i)(-5)", 25),
    ("2 1 i,3,-3", 27),
    ("4 1 i,5,-5", 125),
    ("9*.i", 15),
    ("45 i 9", 27),
    ("495 i 99", 297),
];

/// Every pseudodiagram named in a pin, small enough for mod-p sweeps.
pub const SMALL_PINS: [&str; 13] = [
    "3 i 3",
    "(3)(i)(-3)",
    "(5)(i)(-5)",
    "2 1 i,3,-3",
    "4 1 i,5,-5",
    "9*.i",
    "45 i 9",
    "2 1 i 1 2",
    "6*2.2 0.i.1.1.1",
    "6*2.2 0.1.1.1.i",
    "8*i.1.1.1.i.1.1.1",
    "(i,i,i),3,-3",
    "2 1,2 1,-(i,1,1)",
];

pub fn diagram(symbol: &str) -> PseudoDiagram {
    PseudoDiagram::from_symbol(symbol).unwrap_or_else(|e| panic!("{symbol}: {e}"))
}

/// Numerator of the continued fraction a_n + 1/(a_{n-1} + 1/(... + 1/a_1)),
/// the fraction of the rational tangle written `a_1 a_2 ... a_n`.
pub fn continued_fraction_numerator(word: &[i64]) -> u64 {
    let (mut p, mut q) = (1i128, 0i128);
    for &a in word {
        // x -> a + 1/x
        let next = i128::from(a) * p + q;
        q = p;
        p = next;
    }
    p.unsigned_abs() as u64
}

/// All words of length 1..=max_len over 1..=max_entry.
pub fn rational_words(max_len: usize, max_entry: i64) -> Vec<Vec<i64>> {
    let mut all = Vec::new();
    let mut layer: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (1..=max_entry).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

pub fn word_symbol(word: &[i64]) -> String {
    word.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

/// Copy of `spec` with its first pseudotwist fixed at length `n`.
pub fn with_first_pseudotwist(spec: &FamilySpec, n: u32) -> FamilySpec {
    let t = spec.template;
    let start = t.find("i^{").expect("template has a pseudotwist");
    let end = start + t[start..].find('}').expect("closed placeholder");
    let template = format!("{}i^{{{n}}}{}", &t[..start], &t[end + 1..]);
    FamilySpec { template: Box::leak(template.into_boxed_str()), ..*spec }
}

/// Random pseudo-symbols built from small twists and `i` with product,
/// sum, ramification and mirror, at most `depth` levels deep.
pub fn symbol_strategy(depth: u32) -> impl proptest::strategy::Strategy<Value = String> {
    use proptest::prelude::*;
    let leaf = prop_oneof![Just("1"), Just("2"), Just("3"), Just("-1"), Just("-2"), Just("i"), Just("i")]
        .prop_map(String::from);
    leaf.prop_recursive(depth, 12, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a}) ({b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})+({b})")),
            proptest::collection::vec(inner.clone(), 2..4)
                .prop_map(|v| v.iter().map(|x| format!("({x})")).collect::<Vec<_>>().join(",")),
            inner.prop_map(|a| format!("-({a})")),
        ]
    })
}

/// Classical diagrams with at most eight crossings: rational knots and
/// links, small pretzels, the first basic polyhedra and the resolutions of
/// the small pins.
pub fn classical_up_to_eight() -> Vec<(String, PseudoDiagram)> {
    let mut out = Vec::new();
    for w in rational_words(8, 8) {
        if w.iter().sum::<i64>() <= 8 {
            let s = word_symbol(&w);
            out.push((s.clone(), diagram(&s)));
        }
    }
    for a in 1..=4i64 {
        for b in 1..=4 {
            for c in 1..=4 {
                if a + b + c <= 8 {
                    let s = format!("{a},{b},{c}");
                    out.push((s.clone(), diagram(&s)));
                    let s = format!("{a},{b},-{c}");
                    out.push((s.clone(), diagram(&s)));
                }
            }
        }
    }
    for s in ["6*", "6*2", "6*2.2", "6*-1", "8*"] {
        out.push((s.to_string(), diagram(s)));
    }
    for s in SMALL_PINS {
        let d = diagram(s);
        if d.node_count() <= 8 {
            for r in d.resolutions(20).unwrap() {
                out.push((format!("{s} [{r}]"), d.resolve(&r).unwrap()));
            }
        }
    }
    out
}
