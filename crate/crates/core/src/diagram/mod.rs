//! Planar pseudodiagrams and the tangle calculus that builds them.
//!
//! A diagram is a 4-valent planar map. Each node lists its four half-edge
//! endpoints in clockwise order; the strands run straight through a node
//! along slots 0-2 and 1-3. A classical node records which of the two
//! diagonals passes over, a precrossing records nothing.

mod arcs;
mod canonical;
mod json;
pub mod polyhedra;
mod resolve;
mod tangle;

use std::collections::HashMap;

use thiserror::Error;

use crate::notation::{ConwayExpr, ParseError};

pub use arcs::{ArcId, Arcs, NodeArcs};
pub use json::{DiagramJson, KindJson, NodeJson};
pub use polyhedra::{PolyhedronTemplate, TemplateVertex};
pub use resolve::{Choice, Resolution, ResolutionIter, DEFAULT_MAX_PRECROSSINGS};
pub use tangle::{Position, Tangle};

/// Crossing type of a node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeKind {
    /// Slots 0-2 pass over.
    Pos,
    /// Slots 1-3 pass over.
    Neg,
    Pre,
}

impl NodeKind {
    /// Index of the over-diagonal: 0 for slots 0-2, 1 for slots 1-3.
    pub fn over(self) -> Option<usize> {
        match self {
            NodeKind::Pos => Some(0),
            NodeKind::Neg => Some(1),
            NodeKind::Pre => None,
        }
    }

    pub fn from_over(over: usize) -> NodeKind {
        if over % 2 == 0 {
            NodeKind::Pos
        } else {
            NodeKind::Neg
        }
    }

    pub fn mirrored(self) -> NodeKind {
        match self {
            NodeKind::Pos => NodeKind::Neg,
            NodeKind::Neg => NodeKind::Pos,
            NodeKind::Pre => NodeKind::Pre,
        }
    }

    pub fn is_classical(self) -> bool {
        self != NodeKind::Pre
    }
}

pub type EndpointId = u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub id: u32,
    pub kind: NodeKind,
    /// Endpoint ids in clockwise planar order.
    pub slots: [EndpointId; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("endpoint {0} is used more than once")]
    DuplicateEndpoint(EndpointId),
    #[error("endpoint {0} is not a node slot")]
    UnknownEndpoint(EndpointId),
    #[error("endpoint {0} is not joined")]
    UnjoinedEndpoint(EndpointId),
    #[error("duplicate node id {0}")]
    DuplicateNode(u32),
    #[error("node {0} is not in the diagram")]
    UnknownNode(u32),
    #[error("node {0} is not a precrossing")]
    NotAPrecrossing(u32),
    #[error("node {id}: kind {kind} does not match over-diagonal {over:?}")]
    InconsistentOver { id: u32, kind: String, over: Option<u8> },
    #[error("{count} precrossings exceed the resolution cap of {cap}")]
    TooManyPrecrossings { count: usize, cap: usize },
    #[error("polyhedral symbol used where a tangle is required")]
    NotATangle,
    #[error("unsupported basic polyhedron {0}")]
    UnsupportedPolyhedron(String),
    #[error("invalid polyhedron template: {0}")]
    BadTemplate(String),
    #[error("malformed diagram JSON: {0}")]
    Json(String),
}

/// A closed pseudodiagram.
#[derive(Clone, Debug)]
pub struct PseudoDiagram {
    nodes: Vec<Node>,
    joins: Vec<[EndpointId; 2]>,
    free_loops: usize,
    /// `partner[4 * node + slot]` is the half-edge joined to that slot.
    partner: Vec<usize>,
}

impl PartialEq for PseudoDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.nodes == other.nodes && self.joins == other.joins && self.free_loops == other.free_loops
    }
}

impl Eq for PseudoDiagram {}

impl PseudoDiagram {
    /// Validate and index a diagram given by nodes and endpoint joins.
    /// `free_loops` counts closed strands that meet no node.
    pub fn new(
        nodes: Vec<Node>,
        joins: Vec<[EndpointId; 2]>,
        free_loops: usize,
    ) -> Result<Self, DiagramError> {
        let mut slot_of: HashMap<EndpointId, usize> = HashMap::new();
        let mut ids = std::collections::HashSet::new();
        for (n, node) in nodes.iter().enumerate() {
            if !ids.insert(node.id) {
                return Err(DiagramError::DuplicateNode(node.id));
            }
            for (s, &e) in node.slots.iter().enumerate() {
                if slot_of.insert(e, 4 * n + s).is_some() {
                    return Err(DiagramError::DuplicateEndpoint(e));
                }
            }
        }
        let mut partner = vec![usize::MAX; 4 * nodes.len()];
        for &[a, b] in &joins {
            let ha = *slot_of.get(&a).ok_or(DiagramError::UnknownEndpoint(a))?;
            let hb = *slot_of.get(&b).ok_or(DiagramError::UnknownEndpoint(b))?;
            if a == b || partner[ha] != usize::MAX {
                return Err(DiagramError::DuplicateEndpoint(a));
            }
            if partner[hb] != usize::MAX {
                return Err(DiagramError::DuplicateEndpoint(b));
            }
            partner[ha] = hb;
            partner[hb] = ha;
        }
        if let Some(h) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(DiagramError::UnjoinedEndpoint(nodes[h / 4].slots[h % 4]));
        }
        Ok(PseudoDiagram { nodes, joins, free_loops, partner })
    }

    /// Diagram whose endpoints are numbered `4 * node + slot`.
    pub(crate) fn from_half_edges(kinds: Vec<NodeKind>, partner: Vec<usize>, free_loops: usize) -> Self {
        debug_assert_eq!(partner.len(), 4 * kinds.len());
        let nodes = kinds
            .into_iter()
            .enumerate()
            .map(|(i, kind)| {
                let b = 4 * i as u32;
                Node { id: i as u32, kind, slots: [b, b + 1, b + 2, b + 3] }
            })
            .collect();
        let joins = partner
            .iter()
            .enumerate()
            .filter(|&(h, &p)| h < p)
            .map(|(h, &p)| [h as u32, p as u32])
            .collect();
        PseudoDiagram { nodes, joins, free_loops, partner }
    }

    /// Parse a Conway symbol and build its diagram: polyhedral symbols are
    /// substituted into their basic polyhedron, everything else is closed
    /// by the numerator closure.
    pub fn from_symbol(symbol: &str) -> Result<Self, DiagramError> {
        Self::from_expr(&crate::notation::parse(symbol)?)
    }

    pub fn from_expr(expr: &ConwayExpr) -> Result<Self, DiagramError> {
        if expr.is_polyhedral() {
            polyhedra::build_polyhedral(expr)
        } else {
            Ok(Tangle::build(expr)?.numerator_closure())
        }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn joins(&self) -> &[[EndpointId; 2]] {
        &self.joins
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn kind(&self, node: usize) -> NodeKind {
        self.nodes[node].kind
    }

    /// Half-edge joined to half-edge `h = 4 * node + slot`.
    pub fn partner(&self, h: usize) -> usize {
        self.partner[h]
    }

    /// Indices of precrossing nodes, in node order.
    pub fn precrossings(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].kind == NodeKind::Pre).collect()
    }

    pub fn precrossing_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.kind == NodeKind::Pre).count()
    }

    pub fn classical_count(&self) -> usize {
        self.nodes.len() - self.precrossing_count()
    }

    pub fn node_index(&self, id: u32) -> Option<usize> {
        self.nodes.iter().position(|n| n.id == id)
    }

    /// Same map with node kinds replaced.
    pub(crate) fn with_kinds(&self, kinds: impl Fn(usize, NodeKind) -> NodeKind) -> Self {
        let mut d = self.clone();
        for (i, n) in d.nodes.iter_mut().enumerate() {
            n.kind = kinds(i, n.kind);
        }
        d
    }

    /// Mirror image: every classical crossing switched.
    pub fn mirror(&self) -> Self {
        self.with_kinds(|_, k| k.mirrored())
    }

    /// Number of closed strands, counting free loops.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.partner.len()];
        let mut count = self.free_loops;
        for start in 0..self.partner.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut h = start;
            loop {
                // Leave through the opposite slot, then cross the join.
                let out = h - h % 4 + (h % 4 + 2) % 4;
                seen[h] = true;
                seen[out] = true;
                h = self.partner[out];
                if h == start {
                    break;
                }
            }
        }
        count
    }

    /// Connected pieces of the underlying 4-valent graph (free loops excluded).
    pub fn graph_components(&self) -> Vec<Vec<usize>> {
        let n = self.nodes.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                for slot in 0..4 {
                    let w = self.partner[4 * v + slot] / 4;
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
                i += 1;
            }
            out.push(members);
        }
        out
    }

    /// Number of faces of the embedded map.
    pub fn face_count(&self) -> usize {
        let mut seen = vec![false; self.partner.len()];
        let mut faces = 0;
        for start in 0..self.partner.len() {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                let p = self.partner[h];
                h = p - p % 4 + (p % 4 + 1) % 4;
            }
        }
        faces
    }

    /// `V - E + F` summed over the map; equals `2 * components` exactly when
    /// every component is embedded in the sphere.
    pub fn euler_characteristic(&self) -> i64 {
        let v = self.nodes.len() as i64;
        let e = 2 * v;
        v - e + self.face_count() as i64
    }

    pub fn is_planar(&self) -> bool {
        self.euler_characteristic() == 2 * self.graph_components().len() as i64
    }

    /// Export in the JSON exchange schema.
    pub fn to_json(&self) -> DiagramJson {
        DiagramJson::from(self)
    }

    pub fn from_json(json: &DiagramJson) -> Result<Self, DiagramError> {
        json.to_diagram()
    }

    /// Orientation-preserving isomorphism invariant of the labelled map.
    pub fn canonical_code(&self) -> Vec<u64> {
        canonical::code(self)
    }

    pub fn is_isomorphic(&self, other: &PseudoDiagram) -> bool {
        self.canonical_code() == other.canonical_code()
    }
}
