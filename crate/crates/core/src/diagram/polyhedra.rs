//! Basic polyhedra and substitution of tangles into their vertices.
//!
//! A template is a closed 4-valent map whose vertices carry a fixed
//! numbering and, at each vertex, a labelling of the four incident
//! half-edges as NW, NE, SE, SW. The labels run clockwise or, at a
//! reflected vertex, counterclockwise; a tangle placed at a reflected vertex
//! is drawn in the mirror of its usual frame. Substituting the tangle `1` at
//! every vertex gives an alternating diagram either way.
//!
//! The shipped templates live in `data/polyhedra.json`. They were produced
//! by [`medial_template`] from small plane graphs: the basic polyhedron is
//! the medial map of the graph, with one vertex per graph edge.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::json::{DiagramJson, KindJson, NodeJson};
use super::tangle::{Assembly, Tangle};
use super::{DiagramError, EndpointId, PseudoDiagram};
use crate::notation::ConwayExpr;

/// Version of the template file format understood by this build.
pub const TEMPLATE_FORMAT_VERSION: u32 = 1;

const BUILTIN: &str = include_str!("../../data/polyhedra.json");

/// Registry key of the basic polyhedron with `vertices` vertices and
/// `index` stars, e.g. `6*` or `10**`.
pub fn key(vertices: usize, index: usize) -> String {
    format!("{vertices}{}", "*".repeat(index))
}

pub fn is_registered(vertices: usize, index: usize) -> bool {
    builtin().get(&key(vertices, index)).is_some()
}

/// The built-in registry.
pub fn builtin() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(|| Registry::from_json(BUILTIN).expect("shipped polyhedron templates are valid"))
}

/// Labelled boundary stubs of one template vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TemplateVertex {
    pub nw: EndpointId,
    pub ne: EndpointId,
    pub se: EndpointId,
    pub sw: EndpointId,
}

impl TemplateVertex {
    fn by_position(&self) -> [EndpointId; 4] {
        [self.nw, self.ne, self.se, self.sw]
    }

    /// Stubs in clockwise order starting at NW.
    fn clockwise(&self, reflected: bool) -> [EndpointId; 4] {
        if reflected {
            [self.nw, self.sw, self.se, self.ne]
        } else {
            self.by_position()
        }
    }
}

/// Whether `order` lists `slots` cyclically.
fn is_rotation(slots: &[EndpointId; 4], order: [EndpointId; 4]) -> bool {
    let start = slots.iter().position(|&e| e == order[0]);
    start.is_some_and(|s| (0..4).all(|p| slots[(s + p) % 4] == order[p]))
}

/// One basic polyhedron: the diagram schema plus stubs per vertex, listed
/// in vertex-numbering order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyhedronTemplate {
    pub name: String,
    pub nodes: Vec<NodeJson>,
    pub joins: Vec<[EndpointId; 2]>,
    pub stubs: Vec<TemplateVertex>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TemplateFile {
    version: u32,
    polyhedra: Vec<PolyhedronTemplate>,
}

impl PolyhedronTemplate {
    pub fn vertex_count(&self) -> usize {
        self.stubs.len()
    }

    /// The bare map with a positive crossing at every vertex.
    pub fn diagram(&self) -> Result<PseudoDiagram, DiagramError> {
        DiagramJson { nodes: self.nodes.clone(), joins: self.joins.clone(), free_loops: 0 }.to_diagram()
    }

    fn validate(&self) -> Result<(), DiagramError> {
        let bad = |msg: String| DiagramError::BadTemplate(format!("{}: {msg}", self.name));
        let d = self.diagram()?;
        if self.stubs.len() != self.nodes.len() {
            return Err(bad(format!("{} stubs for {} nodes", self.stubs.len(), self.nodes.len())));
        }
        if !d.is_planar() || d.graph_components().len() != 1 {
            return Err(bad("map is not a connected plane map".into()));
        }
        for (node, stub) in self.nodes.iter().zip(&self.stubs) {
            if !is_rotation(&node.slots, stub.clockwise(false)) && !is_rotation(&node.slots, stub.clockwise(true)) {
                return Err(bad(format!("stubs of node {} do not follow its slots", node.id)));
            }
        }
        Ok(())
    }

    /// Whether vertex `j` is labelled counterclockwise.
    pub fn is_reflected(&self, j: usize) -> bool {
        !is_rotation(&self.nodes[j].slots, self.stubs[j].clockwise(false))
    }

    /// Substitute one tangle per vertex.
    pub fn substitute(&self, tangles: &[Tangle]) -> Result<PseudoDiagram, DiagramError> {
        if tangles.len() != self.stubs.len() {
            return Err(DiagramError::BadTemplate(format!(
                "{}: {} tangles for {} vertices",
                self.name,
                tangles.len(),
                self.stubs.len()
            )));
        }
        let mut terminal: HashMap<EndpointId, usize> = HashMap::new();
        let mut asm = Assembly::default();
        for (j, (t, stub)) in tangles.iter().zip(&self.stubs).enumerate() {
            let reflected = self.is_reflected(j);
            let base = if reflected { asm.add(&t.reflect()) } else { asm.add(t) };
            for (p, e) in stub.clockwise(reflected).into_iter().enumerate() {
                terminal.insert(e, base + p);
            }
        }
        let glue: Vec<(usize, usize)> = self.joins.iter().map(|[a, b]| (terminal[a], terminal[b])).collect();
        let closed = asm.finish(&glue, [None; 4]);
        Ok(closed_diagram(closed))
    }
}

fn closed_diagram(t: Tangle) -> PseudoDiagram {
    let partner = t
        .link
        .iter()
        .map(|e| match e {
            super::tangle::End::Half(h) => *h,
            super::tangle::End::Term(_) => unreachable!("all terminals glued"),
        })
        .collect();
    PseudoDiagram::from_half_edges(t.kinds, partner, t.free_loops)
}

/// Polyhedron templates by key.
#[derive(Clone, Debug, Default)]
pub struct Registry {
    templates: Vec<PolyhedronTemplate>,
}

impl Registry {
    /// Load a versioned template file.
    pub fn from_json(text: &str) -> Result<Registry, DiagramError> {
        let file: TemplateFile = serde_json::from_str(text).map_err(|e| DiagramError::Json(e.to_string()))?;
        if file.version != TEMPLATE_FORMAT_VERSION {
            return Err(DiagramError::BadTemplate(format!("unsupported template file version {}", file.version)));
        }
        let mut r = Registry::default();
        for t in file.polyhedra {
            r.insert(t)?;
        }
        Ok(r)
    }

    pub fn to_json(&self) -> String {
        let file = TemplateFile { version: TEMPLATE_FORMAT_VERSION, polyhedra: self.templates.clone() };
        serde_json::to_string_pretty(&file).expect("templates serialize")
    }

    /// Add or replace a template after checking it.
    pub fn insert(&mut self, t: PolyhedronTemplate) -> Result<(), DiagramError> {
        t.validate()?;
        match self.templates.iter_mut().find(|x| x.name == t.name) {
            Some(slot) => *slot = t,
            None => self.templates.push(t),
        }
        Ok(())
    }

    pub fn get(&self, key: &str) -> Option<&PolyhedronTemplate> {
        self.templates.iter().find(|t| t.name == key)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.templates.iter().map(|t| t.name.as_str())
    }

    /// Diagram of a polyhedral expression.
    pub fn build(&self, expr: &ConwayExpr) -> Result<PseudoDiagram, DiagramError> {
        let ConwayExpr::Polyhedral { vertices, index, slots } = expr else {
            return Ok(Tangle::build(expr)?.numerator_closure());
        };
        let name = key(*vertices, *index);
        let template = self.get(&name).ok_or(DiagramError::UnsupportedPolyhedron(name))?;
        let tangles = slots.iter().map(Tangle::build).collect::<Result<Vec<_>, _>>()?;
        template.substitute(&tangles)
    }
}

/// Build a polyhedral expression with the built-in templates.
pub fn build_polyhedral(expr: &ConwayExpr) -> Result<PseudoDiagram, DiagramError> {
    builtin().build(expr)
}

/// A straight-line plane graph, enough to read off rotations.
#[derive(Clone, Debug)]
pub struct PlaneGraph {
    pub points: Vec<(f64, f64)>,
    pub edges: Vec<(usize, usize)>,
}

impl PlaneGraph {
    /// Edge ids at each vertex in clockwise order.
    fn rotations(&self) -> Vec<Vec<usize>> {
        let mut rot: Vec<Vec<usize>> = vec![Vec::new(); self.points.len()];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            rot[u].push(e);
            rot[v].push(e);
        }
        for (u, list) in rot.iter_mut().enumerate() {
            let (x0, y0) = self.points[u];
            let angle = |e: &usize| {
                let (a, b) = self.edges[*e];
                let w = if a == u { b } else { a };
                let (x, y) = self.points[w];
                (y - y0).atan2(x - x0)
            };
            // Clockwise means decreasing angle.
            list.sort_by(|a, b| angle(b).total_cmp(&angle(a)));
        }
        rot
    }
}

/// Medial map of a plane graph as a template.
///
/// `order[j]` is the graph edge that becomes vertex `j` of the template;
/// vertex `j` is reflected when `reflected[j]` is set.
pub fn medial_template(name: &str, g: &PlaneGraph, order: &[usize], reflected: &[bool]) -> PolyhedronTemplate {
    assert_eq!(order.len(), g.edges.len(), "numbering must cover every edge");
    assert_eq!(reflected.len(), order.len(), "one reflection flag per vertex");
    let rot = g.rotations();
    let mut vertex_of = vec![0; g.edges.len()];
    for (j, &e) in order.iter().enumerate() {
        vertex_of[e] = j;
    }
    // Ports at the midpoint of edge (u, v), clockwise from the one facing
    // the edge before it around u.
    let port = |e: usize, w: usize, clockwise: bool| -> usize {
        let tail = g.edges[e].0 == w;
        match (tail, clockwise) {
            (true, false) => 0,
            (false, true) => 1,
            (false, false) => 2,
            (true, true) => 3,
        }
    };
    let endpoint = |e: usize, p: usize| (4 * vertex_of[e] + p) as EndpointId;
    let mut joins = Vec::new();
    for (w, list) in rot.iter().enumerate() {
        for (i, &e) in list.iter().enumerate() {
            let next = list[(i + 1) % list.len()];
            joins.push([endpoint(e, port(e, w, true)), endpoint(next, port(next, w, false))]);
        }
    }
    joins.iter_mut().for_each(|j| j.sort_unstable());
    joins.sort_unstable();
    let nodes = (0..order.len())
        .map(|j| {
            let b = 4 * j as EndpointId;
            NodeJson { id: j as u32, kind: KindJson::Pos, slots: [b, b + 1, b + 2, b + 3], over: Some(0) }
        })
        .collect::<Vec<_>>();
    let stubs = (0..order.len())
        .map(|j| {
            let s = |p: usize| (4 * j + p) as EndpointId;
            if reflected[j] {
                TemplateVertex { nw: s(0), ne: s(3), se: s(2), sw: s(1) }
            } else {
                TemplateVertex { nw: s(0), ne: s(1), se: s(2), sw: s(3) }
            }
        })
        .collect();
    PolyhedronTemplate { name: name.to_string(), nodes, joins, stubs }
}

/// Plane graphs whose medial maps are the basic polyhedra `6*`, `8*`, `9*`.
pub fn base_graph(name: &str) -> Option<PlaneGraph> {
    let polar = |r: f64, k: usize, n: usize, phase: f64| {
        let a = phase + std::f64::consts::TAU * k as f64 / n as f64;
        (r * a.cos(), r * a.sin())
    };
    match name {
        // Tetrahedron: centre plus a triangle.
        "6*" => Some(PlaneGraph {
            points: vec![(0.0, 0.0), polar(1.0, 0, 3, 0.5), polar(1.0, 1, 3, 0.5), polar(1.0, 2, 3, 0.5)],
            edges: vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)],
        }),
        // Square pyramid: apex in the middle of the base square.
        "8*" => Some(PlaneGraph {
            points: vec![(0.0, 0.0), (1.0, 1.0), (1.0, -1.0), (-1.0, -1.0), (-1.0, 1.0)],
            edges: vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)],
        }),
        // Triangular prism: nested triangles joined by spokes.
        "9*" => {
            let mut points: Vec<(f64, f64)> = (0..3).map(|k| polar(1.0, k, 3, 0.5)).collect();
            points.extend((0..3).map(|k| polar(2.0, k, 3, 0.5)));
            Some(PlaneGraph {
                points,
                edges: vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
            })
        }
        _ => None,
    }
}

/// The one-vertex polyhedron: closing a tangle by its numerator.
pub fn one_star() -> PolyhedronTemplate {
    PolyhedronTemplate {
        name: "1*".into(),
        nodes: vec![NodeJson { id: 0, kind: KindJson::Pos, slots: [0, 1, 2, 3], over: Some(0) }],
        joins: vec![[0, 1], [2, 3]],
        stubs: vec![TemplateVertex { nw: 0, ne: 1, se: 2, sw: 3 }],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse;

    #[test]
    fn builtin_registry_has_the_four_keys() {
        let keys: Vec<&str> = builtin().keys().collect();
        for k in ["1*", "6*", "8*", "9*"] {
            assert!(keys.contains(&k), "{k}");
        }
        assert!(is_registered(6, 1));
        assert!(!is_registered(6, 2));
        assert_eq!(key(10, 2), "10**");
    }

    #[test]
    fn templates_are_alternating_plane_maps() {
        for (name, n) in [("1*", 1), ("6*", 6), ("8*", 8), ("9*", 9)] {
            let t = builtin().get(name).unwrap();
            assert_eq!(t.vertex_count(), n);
            let d = t.diagram().unwrap();
            assert!(d.is_planar());
            assert!(d.is_pseudoalternating());
        }
    }

    #[test]
    fn all_ones_is_the_bare_map() {
        for s in ["6*", "8*", "9*"] {
            let t = builtin().get(s).unwrap();
            let built = PseudoDiagram::from_symbol(s).unwrap();
            assert!(built.is_isomorphic(&t.diagram().unwrap()), "{s}");
            assert_eq!(built.node_count(), t.vertex_count());
        }
    }

    #[test]
    fn one_star_is_numerator_closure() {
        for s in ["3", "2 i", "(i,i,i),3,-3"] {
            let a = PseudoDiagram::from_symbol(&format!("1*({s})")).unwrap();
            let b = PseudoDiagram::from_symbol(s).unwrap();
            assert!(a.is_isomorphic(&b), "{s}");
        }
    }

    #[test]
    fn medial_maps_are_plane() {
        for name in ["6*", "8*", "9*"] {
            let g = base_graph(name).unwrap();
            let n = g.edges.len();
            let order: Vec<usize> = (0..n).collect();
            for flips in [vec![false; n], (0..n).map(|j| j % 2 == 0).collect()] {
                let t = medial_template(name, &g, &order, &flips);
                t.validate().unwrap();
                assert!(t.diagram().unwrap().is_pseudoalternating());
                let ones = vec![Tangle::crossing(crate::diagram::NodeKind::Pos); n];
                assert!(t.substitute(&ones).unwrap().is_isomorphic(&t.diagram().unwrap()));
            }
        }
    }

    #[test]
    fn zero_slot_splits_the_map() {
        // A 0 tangle at a vertex removes it.
        let d = PseudoDiagram::from_symbol("6*0").unwrap();
        assert_eq!(d.node_count(), 5);
    }

    #[test]
    fn registry_round_trip() {
        let text = builtin().to_json();
        let again = Registry::from_json(&text).unwrap();
        assert_eq!(again.to_json(), text);
        assert!(Registry::from_json(&text.replace("\"version\": 1", "\"version\": 9")).is_err());
    }

    #[test]
    fn rejects_broken_template() {
        let mut t = one_star();
        t.stubs[0] = TemplateVertex { nw: 0, ne: 2, se: 1, sw: 3 };
        assert!(matches!(Registry::default().insert(t), Err(DiagramError::BadTemplate(_))));
        let e = builtin().build(&parse("3").unwrap()).unwrap();
        assert_eq!(e.node_count(), 3);
    }
}
