use serde::{Deserialize, Serialize};

use super::{DiagramError, EndpointId, Node, NodeKind, PseudoDiagram};

/// Diagram exchange format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramJson {
    pub nodes: Vec<NodeJson>,
    pub joins: Vec<[EndpointId; 2]>,
    /// Closed strands meeting no node; omitted when zero.
    #[serde(default, skip_serializing_if = "is_zero")]
    pub free_loops: usize,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeJson {
    pub id: u32,
    pub kind: KindJson,
    pub slots: [EndpointId; 4],
    pub over: Option<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindJson {
    Pos,
    Neg,
    Pre,
}

impl From<NodeKind> for KindJson {
    fn from(k: NodeKind) -> Self {
        match k {
            NodeKind::Pos => KindJson::Pos,
            NodeKind::Neg => KindJson::Neg,
            NodeKind::Pre => KindJson::Pre,
        }
    }
}

impl From<KindJson> for NodeKind {
    fn from(k: KindJson) -> Self {
        match k {
            KindJson::Pos => NodeKind::Pos,
            KindJson::Neg => NodeKind::Neg,
            KindJson::Pre => NodeKind::Pre,
        }
    }
}

impl From<&PseudoDiagram> for DiagramJson {
    fn from(d: &PseudoDiagram) -> Self {
        DiagramJson {
            nodes: d
                .nodes()
                .iter()
                .map(|n| NodeJson {
                    id: n.id,
                    kind: n.kind.into(),
                    slots: n.slots,
                    over: n.kind.over().map(|o| o as u8),
                })
                .collect(),
            joins: d.joins().to_vec(),
            free_loops: d.free_loops(),
        }
    }
}

impl DiagramJson {
    pub fn to_diagram(&self) -> Result<PseudoDiagram, DiagramError> {
        let mut nodes = Vec::with_capacity(self.nodes.len());
        for n in &self.nodes {
            let kind = NodeKind::from(n.kind);
            if kind.over().map(|o| o as u8) != n.over {
                return Err(DiagramError::InconsistentOver {
                    id: n.id,
                    kind: format!("{:?}", n.kind).to_lowercase(),
                    over: n.over,
                });
            }
            nodes.push(Node { id: n.id, kind, slots: n.slots });
        }
        PseudoDiagram::new(nodes, self.joins.clone(), self.free_loops)
    }

    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("diagram JSON serializes")
    }

    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        serde_json::from_str(text).map_err(|e| DiagramError::Json(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_exact() {
        for s in ["i,1", "3", "6*2.i", "0", "(i,i,i),3,-3"] {
            let d = PseudoDiagram::from_symbol(s).unwrap();
            let text = serde_json::to_string(&d.to_json()).unwrap();
            let back = PseudoDiagram::from_json(&DiagramJson::parse(&text).unwrap()).unwrap();
            assert_eq!(back, d);
            assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
        }
    }

    #[test]
    fn field_layout() {
        let d = PseudoDiagram::from_symbol("i,1").unwrap();
        let v = serde_json::to_value(d.to_json()).unwrap();
        assert_eq!(v["nodes"].as_array().unwrap().len(), 2);
        let pre = v["nodes"].as_array().unwrap().iter().find(|n| n["kind"] == "pre").unwrap();
        assert!(pre["over"].is_null());
        assert!(v.get("free_loops").is_none());
    }

    #[test]
    fn rejects_inconsistent_over() {
        let text = r#"{"nodes":[{"id":0,"kind":"pos","slots":[0,1,2,3],"over":1}],"joins":[[0,1],[2,3]]}"#;
        let j = DiagramJson::parse(text).unwrap();
        assert!(matches!(j.to_diagram(), Err(DiagramError::InconsistentOver { id: 0, .. })));
    }

    #[test]
    fn rejects_open_ends() {
        let text = r#"{"nodes":[{"id":0,"kind":"pre","slots":[0,1,2,3],"over":null}],"joins":[[0,1]]}"#;
        let j = DiagramJson::parse(text).unwrap();
        assert!(matches!(j.to_diagram(), Err(DiagramError::UnjoinedEndpoint(_))));
        assert!(DiagramJson::parse("{\"nodes\":[]}").is_err());
    }
}
