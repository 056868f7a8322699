use super::{DiagramError, NodeKind, PseudoDiagram};
use crate::notation::{ConwayExpr, Elementary, TwistKind};

/// Boundary position of a tangle, in clockwise order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Position {
    NW = 0,
    NE = 1,
    SE = 2,
    SW = 3,
}

impl Position {
    pub const ALL: [Position; 4] = [Position::NW, Position::NE, Position::SE, Position::SW];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Position {
        Self::ALL[i % 4]
    }
}

/// Where a strand end leads: a node half-edge or a boundary position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum End {
    Half(usize),
    Term(usize),
}

/// A 4-ended diagram fragment. Node `n` owns half-edges `4n..4n+4` in
/// clockwise order; the boundary ends sit on the outer face in the order
/// NW, NE, SE, SW.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tangle {
    pub(crate) kinds: Vec<NodeKind>,
    pub(crate) link: Vec<End>,
    pub(crate) boundary: [End; 4],
    pub(crate) free_loops: usize,
}

impl Tangle {
    /// Two horizontal strands, NW-NE and SW-SE.
    pub fn zero() -> Tangle {
        Tangle {
            kinds: Vec::new(),
            link: Vec::new(),
            boundary: [End::Term(1), End::Term(0), End::Term(3), End::Term(2)],
            free_loops: 0,
        }
    }

    /// A single node with slots NW, NE, SE, SW.
    pub fn crossing(kind: NodeKind) -> Tangle {
        Tangle {
            kinds: vec![kind],
            link: (0..4).map(End::Term).collect(),
            boundary: [End::Half(0), End::Half(1), End::Half(2), End::Half(3)],
            free_loops: 0,
        }
    }

    pub fn elementary(e: Elementary) -> Tangle {
        match e {
            Elementary::Zero => Tangle::zero(),
            Elementary::Pos => Tangle::crossing(NodeKind::Pos),
            Elementary::Neg => Tangle::crossing(NodeKind::Neg),
            Elementary::Pre => Tangle::crossing(NodeKind::Pre),
        }
    }

    /// `count` crossings of one kind placed side by side.
    pub fn twist(kind: TwistKind, count: u32) -> Tangle {
        let unit = Tangle::elementary(kind.into());
        let mut acc = unit.clone();
        for _ in 1..count {
            acc = acc.sum(&unit);
        }
        acc
    }

    /// Build the tangle of a non-polyhedral expression.
    pub fn build(expr: &ConwayExpr) -> Result<Tangle, DiagramError> {
        Ok(match expr {
            ConwayExpr::Elementary(e) => Tangle::elementary(*e),
            ConwayExpr::Twist { kind, count } => Tangle::twist(*kind, *count),
            ConwayExpr::Sum(a, b) => Tangle::build(a)?.sum(&Tangle::build(b)?),
            ConwayExpr::Product(a, b) => Tangle::build(a)?.product(&Tangle::build(b)?),
            ConwayExpr::Ramification(items) => {
                let mut it = items.iter();
                let first = it.next().ok_or(DiagramError::NotATangle)?;
                let mut acc = Tangle::build(first)?.reflect();
                for item in it {
                    acc = acc.sum(&Tangle::build(item)?.reflect());
                }
                acc
            }
            ConwayExpr::Mirror(a) => Tangle::build(a)?.mirror(),
            ConwayExpr::Polyhedral { .. } => return Err(DiagramError::NotATangle),
        })
    }

    pub fn node_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn kinds(&self) -> &[NodeKind] {
        &self.kinds
    }

    /// `a + b`: east ends of `self` joined to west ends of `other`.
    pub fn sum(&self, other: &Tangle) -> Tangle {
        let mut asm = Assembly::default();
        let a = asm.add(self);
        let b = asm.add(other);
        asm.finish(
            &[(a + 1, b), (a + 2, b + 3)],
            [Some(a), Some(b + 1), Some(b + 2), Some(a + 3)],
        )
    }

    /// `a b = -a + b`, with `-a` the reflection in the NW-SE diagonal.
    pub fn product(&self, other: &Tangle) -> Tangle {
        self.reflect().sum(other)
    }

    /// Reflection of the picture in the line through NW and SE. Crossing
    /// information is kept, so the rotation at every node reverses.
    pub fn reflect(&self) -> Tangle {
        let flip = |i: usize| i - i % 4 + (4 - i % 4) % 4;
        let map = |e: End| match e {
            End::Half(h) => End::Half(flip(h)),
            End::Term(t) => End::Term(flip(t)),
        };
        let mut link = vec![End::Term(0); self.link.len()];
        for (h, &e) in self.link.iter().enumerate() {
            link[flip(h)] = map(e);
        }
        let mut boundary = self.boundary;
        for (t, &e) in self.boundary.iter().enumerate() {
            boundary[flip(t)] = map(e);
        }
        Tangle { kinds: self.kinds.clone(), link, boundary, free_loops: self.free_loops }
    }

    /// Mirror image: classical crossings switched, geometry unchanged.
    pub fn mirror(&self) -> Tangle {
        Tangle { kinds: self.kinds.iter().map(|k| k.mirrored()).collect(), ..self.clone() }
    }

    /// Quarter turn clockwise: the end at NW moves to NE.
    pub fn rotate(&self) -> Tangle {
        let turn = |t: usize| (t + 1) % 4;
        let link = self
            .link
            .iter()
            .map(|&e| match e {
                End::Term(t) => End::Term(turn(t)),
                h => h,
            })
            .collect();
        let mut boundary = self.boundary;
        for (t, &e) in self.boundary.iter().enumerate() {
            boundary[turn(t)] = match e {
                End::Term(u) => End::Term(turn(u)),
                h => h,
            };
        }
        Tangle { kinds: self.kinds.clone(), link, boundary, free_loops: self.free_loops }
    }

    /// Join NW to NE and SW to SE.
    pub fn numerator_closure(&self) -> PseudoDiagram {
        self.close(&[(0, 1), (3, 2)])
    }

    /// Join NE to SE and NW to SW.
    pub fn denominator_closure(&self) -> PseudoDiagram {
        self.close(&[(1, 2), (0, 3)])
    }

    fn close(&self, pairs: &[(usize, usize)]) -> PseudoDiagram {
        let mut asm = Assembly::default();
        asm.add(self);
        let t = asm.finish(pairs, [None; 4]);
        PseudoDiagram::from_half_edges(t.kinds, t.link.iter().map(|e| e.half()).collect(), t.free_loops)
    }
}

impl End {
    fn half(self) -> usize {
        match self {
            End::Half(h) => h,
            End::Term(_) => panic!("closed diagram has a free end"),
        }
    }
}

/// Disjoint union of tangles whose boundary ends are then glued in pairs.
/// Terminal `4k + p` is boundary position `p` of the `k`-th added piece.
#[derive(Default)]
pub(crate) struct Assembly {
    kinds: Vec<NodeKind>,
    link: Vec<End>,
    terms: Vec<End>,
    free_loops: usize,
}

impl Assembly {
    /// Add a piece; returns the index of its NW terminal.
    pub(crate) fn add(&mut self, t: &Tangle) -> usize {
        let h0 = self.link.len();
        let t0 = self.terms.len();
        let shift = |e: End| match e {
            End::Half(h) => End::Half(h + h0),
            End::Term(t) => End::Term(t + t0),
        };
        self.kinds.extend_from_slice(&t.kinds);
        self.link.extend(t.link.iter().map(|&e| shift(e)));
        self.terms.extend(t.boundary.iter().map(|&e| shift(e)));
        self.free_loops += t.free_loops;
        t0
    }

    /// Identify the terminals in `glue` pairwise; `outputs[p]` names the
    /// terminal that becomes boundary position `p` of the result. Every
    /// terminal must be glued or output exactly once.
    pub(crate) fn finish(self, glue: &[(usize, usize)], outputs: [Option<usize>; 4]) -> Tangle {
        let n = self.terms.len();
        let mut mate = vec![usize::MAX; n];
        for &(a, b) in glue {
            debug_assert!(mate[a] == usize::MAX && mate[b] == usize::MAX, "terminal glued twice");
            mate[a] = b;
            mate[b] = a;
        }
        let mut out_pos = vec![usize::MAX; n];
        for (p, t) in outputs.iter().enumerate() {
            if let Some(t) = *t {
                out_pos[t] = p;
            }
        }
        let mut visited = vec![false; n];
        let resolve = |mut e: End, visited: &mut Vec<bool>| loop {
            match e {
                End::Half(_) => return e,
                End::Term(t) if out_pos[t] != usize::MAX => return End::Term(out_pos[t]),
                End::Term(t) => {
                    let m = mate[t];
                    assert!(m != usize::MAX, "terminal {t} is neither glued nor output");
                    visited[t] = true;
                    visited[m] = true;
                    e = self.terms[m];
                }
            }
        };
        let link: Vec<End> = self.link.iter().map(|&e| resolve(e, &mut visited)).collect();
        let mut boundary = [End::Term(0); 4];
        for (p, t) in outputs.iter().enumerate() {
            if let Some(t) = *t {
                visited[t] = true;
                boundary[p] = resolve(self.terms[t], &mut visited);
            }
        }
        // Whatever glued terminals are left form closed loops without nodes.
        let mut loops = self.free_loops;
        for start in 0..n {
            if visited[start] || mate[start] == usize::MAX {
                continue;
            }
            loops += 1;
            let mut t = start;
            while !visited[t] {
                visited[t] = true;
                let m = mate[t];
                visited[m] = true;
                match self.terms[m] {
                    End::Term(u) => t = u,
                    End::Half(_) => unreachable!("reached from a half-edge"),
                }
            }
        }
        Tangle { kinds: self.kinds, link, boundary, free_loops: loops }
    }
}
