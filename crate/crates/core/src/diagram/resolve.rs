use std::collections::BTreeMap;
use std::fmt;

use super::{DiagramError, NodeKind, PseudoDiagram};

/// Default bound on precrossings for full enumeration (2^20 resolutions).
pub const DEFAULT_MAX_PRECROSSINGS: usize = 20;

/// Over-diagonal chosen for a precrossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Choice {
    Pos,
    Neg,
}

impl From<Choice> for NodeKind {
    fn from(c: Choice) -> NodeKind {
        match c {
            Choice::Pos => NodeKind::Pos,
            Choice::Neg => NodeKind::Neg,
        }
    }
}

/// Choices for some (pseudoresolution) or all (resolution) precrossings,
/// keyed by node id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Resolution {
    choices: BTreeMap<u32, Choice>,
}

impl Resolution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, node: u32, choice: Choice) -> Self {
        self.choices.insert(node, choice);
        self
    }

    pub fn insert(&mut self, node: u32, choice: Choice) {
        self.choices.insert(node, choice);
    }

    pub fn get(&self, node: u32) -> Option<Choice> {
        self.choices.get(&node).copied()
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, Choice)> + '_ {
        self.choices.iter().map(|(&k, &v)| (k, v))
    }

    /// Union of two assignments; `other` wins on shared nodes.
    pub fn merged(&self, other: &Resolution) -> Resolution {
        let mut choices = self.choices.clone();
        choices.extend(other.choices.iter().map(|(&k, &v)| (k, v)));
        Resolution { choices }
    }
}

impl fmt::Display for Resolution {
    /// One `+` or `-` per assigned node, in node-id order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.choices.values() {
            f.write_str(match c {
                Choice::Pos => "+",
                Choice::Neg => "-",
            })?;
        }
        Ok(())
    }
}

impl PseudoDiagram {
    /// Replace the chosen precrossings by classical crossings.
    pub fn resolve(&self, r: &Resolution) -> Result<PseudoDiagram, DiagramError> {
        let mut by_index = BTreeMap::new();
        for (id, choice) in r.iter() {
            let v = self.node_index(id).ok_or(DiagramError::UnknownNode(id))?;
            if self.kind(v) != NodeKind::Pre {
                return Err(DiagramError::NotAPrecrossing(id));
            }
            by_index.insert(v, NodeKind::from(choice));
        }
        Ok(self.with_kinds(|v, k| by_index.get(&v).copied().unwrap_or(k)))
    }

    /// All `2^k` full resolutions, refusing more than `cap` precrossings.
    pub fn resolutions(&self, cap: usize) -> Result<ResolutionIter, DiagramError> {
        let ids: Vec<u32> = self.precrossings().into_iter().map(|v| self.nodes()[v].id).collect();
        if ids.len() > cap {
            return Err(DiagramError::TooManyPrecrossings { count: ids.len(), cap });
        }
        Ok(ResolutionIter { total: 1u64 << ids.len(), ids, next: 0 })
    }

    /// Every proper partial assignment: each precrossing is left alone or
    /// resolved either way, with at least one left alone.
    pub fn pseudoresolutions(&self, cap: usize) -> Result<Vec<Resolution>, DiagramError> {
        let ids: Vec<u32> = self.precrossings().into_iter().map(|v| self.nodes()[v].id).collect();
        if ids.len() > cap {
            return Err(DiagramError::TooManyPrecrossings { count: ids.len(), cap });
        }
        let total = 3u64.pow(ids.len() as u32);
        let mut out = Vec::new();
        for mut code in 0..total {
            let mut r = Resolution::new();
            for &id in &ids {
                match code % 3 {
                    1 => r.insert(id, Choice::Pos),
                    2 => r.insert(id, Choice::Neg),
                    _ => {}
                }
                code /= 3;
            }
            if r.len() < ids.len() {
                out.push(r);
            }
        }
        Ok(out)
    }

    /// Whether some resolution is alternating.
    ///
    /// Along every strand the passes must alternate over and under. Each
    /// connected piece of the shadow admits exactly two such assignments
    /// (one the switch of the other); the classical crossings have to agree
    /// with one of them on every piece.
    pub fn is_pseudoalternating(&self) -> bool {
        let n = self.node_count();
        // over[v]: which diagonal passes over in the candidate assignment.
        let mut over = vec![usize::MAX; n];
        for members in self.graph_components() {
            let root = members[0];
            over[root] = 0;
            let mut queue = vec![root];
            while let Some(v) = queue.pop() {
                for s in 0..4 {
                    let p = self.partner(4 * v + s);
                    let (w, t) = (p / 4, p % 4);
                    // Leaving v over means entering w under.
                    let want = (over[v] + s + t + 1) % 2;
                    if over[w] == usize::MAX {
                        over[w] = want;
                        queue.push(w);
                    } else if over[w] != want {
                        return false;
                    }
                }
            }
            let agree = |flip: usize| {
                members.iter().all(|&v| match self.kind(v).over() {
                    Some(o) => o == (over[v] + flip) % 2,
                    None => true,
                })
            };
            if !agree(0) && !agree(1) {
                return false;
            }
        }
        true
    }
}

/// Iterator over the full resolutions of a diagram. Bit `j` of the counter
/// picks the choice for the `j`-th precrossing (clear: `Pos`).
#[derive(Clone, Debug)]
pub struct ResolutionIter {
    ids: Vec<u32>,
    next: u64,
    total: u64,
}

impl ResolutionIter {
    pub fn precrossing_ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn nth_resolution(&self, code: u64) -> Resolution {
        let mut r = Resolution::new();
        for (j, &id) in self.ids.iter().enumerate() {
            r.insert(id, if code >> j & 1 == 0 { Choice::Pos } else { Choice::Neg });
        }
        r
    }
}

impl Iterator for ResolutionIter {
    type Item = Resolution;

    fn next(&mut self) -> Option<Resolution> {
        if self.next >= self.total {
            return None;
        }
        let r = self.nth_resolution(self.next);
        self.next += 1;
        Some(r)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.total - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for ResolutionIter {}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagram(s: &str) -> PseudoDiagram {
        PseudoDiagram::from_symbol(s).unwrap()
    }

    #[test]
    fn resolution_counts() {
        assert_eq!(diagram("3").resolutions(20).unwrap().count(), 1);
        assert_eq!(diagram("(i,i,i),3,-3").resolutions(20).unwrap().count(), 8);
        assert_eq!(diagram("8*i.1.1.1.i.1.1.1").resolutions(20).unwrap().count(), 4);
    }

    #[test]
    fn cap_is_enforced() {
        let d = diagram("i^5");
        assert!(matches!(
            d.resolutions(4),
            Err(DiagramError::TooManyPrecrossings { count: 5, cap: 4 })
        ));
    }

    #[test]
    fn each_resolution_once() {
        let d = diagram("(i,i,i),3,-3");
        let all: std::collections::HashSet<String> =
            d.resolutions(20).unwrap().map(|r| r.to_string()).collect();
        assert_eq!(all.len(), 8);
    }

    #[test]
    fn resolving_matches_symbol() {
        let d = diagram("(3)(i)(-3)");
        let id = d.nodes()[d.precrossings()[0]].id;
        let pos = d.resolve(&Resolution::new().with(id, Choice::Pos)).unwrap();
        let neg = d.resolve(&Resolution::new().with(id, Choice::Neg)).unwrap();
        assert_eq!(pos, diagram("(3)(1)(-3)"));
        assert_eq!(neg, diagram("(3)(-1)(-3)"));
        assert_eq!(d.resolve(&Resolution::new()).unwrap(), d);
    }

    #[test]
    fn resolve_errors() {
        let d = diagram("3 i 3");
        assert_eq!(d.resolve(&Resolution::new().with(99, Choice::Pos)), Err(DiagramError::UnknownNode(99)));
        let classical = d.nodes().iter().find(|n| n.kind != NodeKind::Pre).unwrap().id;
        assert_eq!(
            d.resolve(&Resolution::new().with(classical, Choice::Pos)),
            Err(DiagramError::NotAPrecrossing(classical))
        );
    }

    #[test]
    fn disjoint_resolutions_compose() {
        let d = diagram("(i,i,i),3,-3");
        let ids: Vec<u32> = d.precrossings().iter().map(|&v| d.nodes()[v].id).collect();
        let r1 = Resolution::new().with(ids[0], Choice::Neg);
        let r2 = Resolution::new().with(ids[1], Choice::Pos).with(ids[2], Choice::Neg);
        let stepwise = d.resolve(&r1).unwrap().resolve(&r2).unwrap();
        assert_eq!(stepwise, d.resolve(&r1.merged(&r2)).unwrap());
        assert_eq!(stepwise.precrossing_count(), 0);
        assert_eq!(stepwise.node_count(), d.node_count());
    }

    #[test]
    fn pseudoresolution_count() {
        // 3^2 assignments minus the 4 full ones.
        assert_eq!(diagram("8*i.1.1.1.i.1.1.1").pseudoresolutions(20).unwrap().len(), 5);
    }

    #[test]
    fn alternation() {
        assert!(diagram("i^5").is_pseudoalternating());
        assert!(diagram("8*i.i.i.i.i.i.i.i").is_pseudoalternating());
        assert!(diagram("2 2").is_pseudoalternating());
        assert!(diagram("6*").is_pseudoalternating());
        // Switching one crossing of the trefoil breaks alternation.
        let d = diagram("3").with_kinds(|v, k| if v == 0 { k.mirrored() } else { k });
        assert!(!d.is_pseudoalternating());
        assert!(!diagram("3 1 -3").is_pseudoalternating());
    }
}
