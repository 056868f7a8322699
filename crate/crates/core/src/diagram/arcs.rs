use super::{NodeKind, PseudoDiagram};

pub type ArcId = usize;

/// Arcs meeting a node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeArcs {
    /// `under[0]` enters on the slot following the over-diagonal clockwise.
    Classical { over: ArcId, under: [ArcId; 2] },
    /// The arcs on diagonals 0-2 and 1-3.
    Pre { through: [ArcId; 2] },
}

/// Partition of a diagram's strands into arcs. An arc ends only where it
/// passes under a classical crossing; it runs through over-passes and
/// precrossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arcs {
    count: usize,
    half_edge_arc: Vec<ArcId>,
    nodes: Vec<NodeArcs>,
    circular: Vec<bool>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

impl Arcs {
    pub fn of(d: &PseudoDiagram) -> Arcs {
        let h = 4 * d.node_count();
        let mut parent: Vec<usize> = (0..h).collect();
        for x in 0..h {
            union(&mut parent, x, d.partner(x));
        }
        for v in 0..d.node_count() {
            let through: &[usize] = match d.kind(v).over() {
                None => &[0, 1],
                Some(o) => &[o],
            };
            for &s in through {
                union(&mut parent, 4 * v + s, 4 * v + s + 2);
            }
        }
        // Number classes by first half-edge.
        let mut id_of_root = vec![usize::MAX; h];
        let mut half_edge_arc = vec![0; h];
        let mut count = 0;
        for x in 0..h {
            let r = find(&mut parent, x);
            if id_of_root[r] == usize::MAX {
                id_of_root[r] = count;
                count += 1;
            }
            half_edge_arc[x] = id_of_root[r];
        }
        let mut circular = vec![true; count + d.free_loops()];
        let nodes = (0..d.node_count())
            .map(|v| {
                let a = |s: usize| half_edge_arc[4 * v + s];
                match d.kind(v) {
                    NodeKind::Pre => NodeArcs::Pre { through: [a(0), a(1)] },
                    k => {
                        let o = k.over().expect("classical");
                        let under = [a(o + 1), a((o + 3) % 4)];
                        circular[under[0]] = false;
                        circular[under[1]] = false;
                        NodeArcs::Classical { over: a(o), under }
                    }
                }
            })
            .collect();
        Arcs { count: count + d.free_loops(), half_edge_arc, nodes, circular }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn node(&self, v: usize) -> NodeArcs {
        self.nodes[v]
    }

    pub fn nodes(&self) -> &[NodeArcs] {
        &self.nodes
    }

    /// Arc containing half-edge `4 * node + slot`.
    pub fn arc_of_half_edge(&self, h: usize) -> ArcId {
        self.half_edge_arc[h]
    }

    /// Closed arcs that never pass under anything (free loops included).
    pub fn is_circular(&self, arc: ArcId) -> bool {
        self.circular[arc]
    }

    pub fn circular_count(&self) -> usize {
        self.circular.iter().filter(|&&c| c).count()
    }
}
