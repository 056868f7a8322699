use super::{NodeKind, PseudoDiagram};

/// Code of the component containing `root`, relabelled breadth-first in
/// rotation order starting from that half-edge.
fn rooted_code(d: &PseudoDiagram, root: usize) -> Vec<u64> {
    let n = d.node_count();
    let mut label = vec![usize::MAX; n];
    let mut entry = vec![0usize; n];
    let mut order = vec![root / 4];
    label[root / 4] = 0;
    entry[root / 4] = root % 4;
    let mut code = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        let r = entry[v];
        code.push(match d.kind(v) {
            NodeKind::Pre => 2,
            k => ((k.over().expect("classical") + r) % 2) as u64,
        });
        for k in 0..4 {
            let p = d.partner(4 * v + (r + k) % 4);
            let (w, t) = (p / 4, p % 4);
            if label[w] == usize::MAX {
                label[w] = order.len();
                entry[w] = t;
                order.push(w);
            }
            code.push(label[w] as u64);
            code.push(((t + 4 - entry[w]) % 4) as u64);
        }
        i += 1;
    }
    code
}

pub(super) fn code(d: &PseudoDiagram) -> Vec<u64> {
    let mut parts: Vec<Vec<u64>> = d
        .graph_components()
        .into_iter()
        .map(|members| {
            members
                .iter()
                .flat_map(|&v| (0..4).map(move |s| 4 * v + s))
                .map(|h| rooted_code(d, h))
                .min()
                .unwrap_or_default()
        })
        .collect();
    parts.sort();
    let mut out = vec![d.free_loops() as u64, parts.len() as u64];
    for p in parts {
        out.push(p.len() as u64);
        out.extend(p);
    }
    out
}
