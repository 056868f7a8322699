//! Search vertex numberings of the basic polyhedra against the family
//! table and a few known colorability facts, and write the template file.
//!
//!     cargo run --release --example polyhedron_search -- search 8* [budget]
//!     cargo run --release --example polyhedron_search -- write 6*:0,1,2,3,4,5:000000 ...
//!
//! A numbering is `name:order:flags`, where `order[j]` is the base-graph
//! edge that becomes vertex `j + 1` and flag `j` marks it as reflected.

use std::collections::HashMap;

use pseudoknot::diagram::polyhedra::{base_graph, medial_template, one_star, PolyhedronTemplate, Registry};
use pseudoknot::diagram::Tangle;
use pseudoknot::exec::Strategy;
use pseudoknot::families::family_table;
use pseudoknot::invariants::{self, Settings};
use pseudoknot::notation::ConwayExpr;

enum Expect {
    Pseudodet(u64),
    Colorable(u64),
}

struct Test {
    label: String,
    slots: Vec<ConwayExpr>,
    relevant: Vec<usize>,
    expect: Expect,
}

fn tests_for(name: &str, vertices: usize) -> Vec<Test> {
    let mut out = Vec::new();
    let mut push = |label: String, expr: ConwayExpr, expect: Expect| {
        let ConwayExpr::Polyhedral { slots, .. } = expr else { panic!("{label} is not polyhedral") };
        let relevant = (0..vertices).filter(|&j| !slots[j].is_one()).collect();
        out.push(Test { label, slots, relevant, expect });
    };
    let prefix = name.to_string();
    for f in family_table().iter().filter(|f| f.template.starts_with(&prefix)) {
        let params = f.parameters();
        for p in f.grid(&[1, 2]) {
            // Twist lengths at their smallest value keep the search cheap.
            if p.iter().any(|(k, v)| "kmn".contains(*k) && *v > 1) {
                continue;
            }
            let expr = f.expression(&p).unwrap();
            let d = f.predicted_d(&p).unwrap();
            let label = format!("row {} {:?}", f.row, params.iter().map(|c| p[c]).collect::<Vec<_>>());
            push(label, expr, Expect::Pseudodet(d));
        }
    }
    let pins: &[(&str, Expect)] = match name {
        "6*" => &[("6*2.2 0.i.1.1.1", Expect::Colorable(7)), ("6*2.2 0.1.1.1.i", Expect::Colorable(5))],
        "8*" => &[
            ("8*i.1.1.1.i.1.1.1", Expect::Colorable(3)),
            ("8*i.1.1.1.1.1.1.1", Expect::Colorable(3)),
            ("8*i.1.1.1.-1.1.1.1", Expect::Colorable(3)),
        ],
        "9*" => &[("9*.i", Expect::Pseudodet(15))],
        _ => &[],
    };
    for (s, e) in pins {
        let e = match e {
            Expect::Pseudodet(d) => Expect::Pseudodet(*d),
            Expect::Colorable(p) => Expect::Colorable(*p),
        };
        push(s.to_string(), pseudoknot::parse(s).unwrap(), e);
    }
    out
}

fn passes(t: &PolyhedronTemplate, test: &Test) -> bool {
    let tangles: Vec<Tangle> = test.slots.iter().map(|e| Tangle::build(e).unwrap()).collect();
    let d = t.substitute(&tangles).unwrap();
    let s = Settings::default().with_strategy(Strategy::Sequential);
    match test.expect {
        Expect::Pseudodet(x) => invariants::pseudodeterminant_with(&d, &s).unwrap() == x,
        Expect::Colorable(p) => invariants::is_colorable_with(&d, p, &s).unwrap(),
    }
}

struct Search<'a> {
    name: &'a str,
    edges: usize,
    tests: &'a [Test],
    /// Positions in assignment order.
    order: Vec<usize>,
    /// Tests decided once the first `d + 1` positions are assigned.
    due: Vec<Vec<usize>>,
    budget: usize,
    found: Vec<(Vec<usize>, Vec<bool>, Vec<String>)>,
    cache: HashMap<(usize, Vec<(usize, bool)>), bool>,
    relevant: Vec<bool>,
}

impl Search<'_> {
    fn run(&mut self) {
        let mut assign = vec![usize::MAX; self.edges];
        let mut flips = vec![false; self.edges];
        let mut used = vec![false; self.edges];
        self.go(0, &mut assign, &mut flips, &mut used, &mut Vec::new());
    }

    fn template(&self, assign: &[usize], flips: &[bool]) -> PolyhedronTemplate {
        let g = base_graph(self.name).unwrap();
        let mut free = (0..self.edges).filter(|e| !assign.contains(e));
        let order: Vec<usize> = assign.iter().map(|&e| if e == usize::MAX { free.next().unwrap() } else { e }).collect();
        medial_template(self.name, &g, &order, flips)
    }

    fn go(&mut self, depth: usize, assign: &mut Vec<usize>, flips: &mut Vec<bool>, used: &mut Vec<bool>, failed: &mut Vec<String>) {
        if depth == self.edges {
            self.found.push((assign.clone(), flips.clone(), failed.clone()));
            return;
        }
        let pos = self.order[depth];
        // The reflection of a vertex only matters where a test puts a tangle.
        let flip_options: &[bool] = if self.relevant[pos] { &[false, true] } else { &[false] };
        for e in 0..self.edges {
            if used[e] {
                continue;
            }
            for &flip in flip_options {
                assign[pos] = e;
                flips[pos] = flip;
                used[e] = true;
                let mut newly = Vec::new();
                for &ti in &self.due[depth] {
                    let test = &self.tests[ti];
                    let key = (ti, test.relevant.iter().map(|&j| (assign[j], flips[j])).collect::<Vec<_>>());
                    let ok = match self.cache.get(&key) {
                        Some(&ok) => ok,
                        None => {
                            let ok = passes(&self.template(assign, flips), test);
                            self.cache.insert(key, ok);
                            ok
                        }
                    };
                    if !ok {
                        newly.push(test.label.clone());
                    }
                }
                if failed.len() + newly.len() <= self.budget {
                    let n = newly.len();
                    failed.extend(newly);
                    self.go(depth + 1, assign, flips, used, failed);
                    failed.truncate(failed.len() - n);
                }
                used[e] = false;
                assign[pos] = usize::MAX;
                flips[pos] = false;
            }
        }
    }
}

fn search(name: &str, budget: usize) {
    let g = base_graph(name).expect("known polyhedron");
    let n = g.edges.len();
    let tests = tests_for(name, n);
    eprintln!("{} tests", tests.len());
    // Most constrained positions first.
    let mut weight = vec![0usize; n];
    for t in &tests {
        for &j in &t.relevant {
            weight[j] += 1;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&j| std::cmp::Reverse(weight[j]));
    let mut due = vec![Vec::new(); n];
    for (ti, t) in tests.iter().enumerate() {
        let last = t.relevant.iter().map(|j| order.iter().position(|o| o == j).unwrap()).max().unwrap_or(0);
        due[last].push(ti);
    }
    let relevant = weight.iter().map(|&w| w > 0).collect();
    let mut s = Search { name, edges: n, tests: &tests, order, due, budget, found: Vec::new(), cache: HashMap::new(), relevant };
    s.run();
    s.found.sort_by_key(|f| (f.2.len(), f.1.iter().filter(|&&x| x).count(), f.0.clone()));
    println!("{} numberings within budget {budget}", s.found.len());
    for (order, flips, failed) in s.found.iter().take(std::env::var("SHOW").ok().and_then(|v| v.parse().ok()).unwrap_or(20)) {
        let list: Vec<String> = order.iter().map(|e| e.to_string()).collect();
        let flags: String = flips.iter().map(|&f| if f { '1' } else { '0' }).collect();
        println!("{name}:{}:{flags}  failures {:?}", list.join(","), failed);
    }
}

fn write(specs: &[String]) {
    let mut r = Registry::default();
    r.insert(one_star()).unwrap();
    for spec in specs {
        let mut parts = spec.split(':');
        let name = parts.next().unwrap();
        let order: Vec<usize> = parts.next().unwrap().split(',').map(|x| x.parse().unwrap()).collect();
        let flips: Vec<bool> = parts.next().unwrap().chars().map(|c| c == '1').collect();
        let g = base_graph(name).unwrap();
        r.insert(medial_template(name, &g, &order, &flips)).unwrap();
    }
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/polyhedra.json");
    std::fs::write(path, r.to_json() + "\n").unwrap();
    eprintln!("wrote {path}");
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.first().map(String::as_str) {
        Some("search") => search(&args[1], args.get(2).map_or(0, |b| b.parse().unwrap())),
        Some("write") => write(&args[1..]),
        _ => eprintln!("usage: polyhedron_search search NAME [BUDGET] | write NAME:ORDER:FLAGS..."),
    }
}
