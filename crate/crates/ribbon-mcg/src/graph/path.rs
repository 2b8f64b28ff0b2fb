use std::collections::BTreeMap;

use super::{EdgeId, HalfEdge, RibbonGraph};
use crate::error::{Error, Result};

/// One traversal of an edge, with or against its orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub edge: EdgeId,
    pub forward: bool,
}

impl Step {
    pub fn fwd(edge: EdgeId) -> Self {
        Step { edge, forward: true }
    }

    pub fn bwd(edge: EdgeId) -> Self {
        Step { edge, forward: false }
    }

    /// The edge end the step leaves through.
    pub fn departure(self) -> HalfEdge {
        if self.forward {
            HalfEdge::st(self.edge)
        } else {
            HalfEdge::ta(self.edge)
        }
    }

    /// The edge end the step arrives through.
    pub fn arrival(self) -> HalfEdge {
        self.departure().opposite()
    }

    pub fn inverse(self) -> Self {
        Step { edge: self.edge, forward: !self.forward }
    }

    /// The step that leaves through a given edge end.
    pub fn leaving(h: HalfEdge) -> Self {
        Step { edge: h.edge, forward: !h.is_target() }
    }
}

/// A path stored in traversal order: `steps[0]` is traversed first.
///
/// In composition notation the same path is written right to left, so the
/// traversal `[β⁻, α⁺]` is the composite `α ∘ β⁻¹`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphPath {
    pub steps: Vec<Step>,
}

impl GraphPath {
    pub fn new(steps: Vec<Step>) -> Self {
        GraphPath { steps }
    }

    pub fn empty() -> Self {
        GraphPath { steps: Vec::new() }
    }

    pub fn single(step: Step) -> Self {
        GraphPath { steps: vec![step] }
    }

    /// Build from a composition-order list (leftmost is traversed last).
    pub fn from_composition(letters: &[Step]) -> Self {
        GraphPath { steps: letters.iter().rev().copied().collect() }
    }

    /// Steps in composition order.
    pub fn composition(&self) -> Vec<Step> {
        self.steps.iter().rev().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn first(&self) -> Option<Step> {
        self.steps.first().copied()
    }

    pub fn last(&self) -> Option<Step> {
        self.steps.last().copied()
    }

    pub fn inverse(&self) -> Self {
        GraphPath { steps: self.steps.iter().rev().map(|s| s.inverse()).collect() }
    }

    /// `self` followed by `other` in traversal order, i.e. `other ∘ self`.
    pub fn then(&self, other: &GraphPath) -> Self {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        GraphPath { steps }
    }

    /// Free reduction: cancel adjacent inverse pairs.
    pub fn reduced(&self) -> Self {
        let mut out: Vec<Step> = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            if out.last() == Some(&s.inverse()) {
                out.pop();
            } else {
                out.push(*s);
            }
        }
        GraphPath { steps: out }
    }

    pub fn is_reduced(&self) -> bool {
        self.steps.windows(2).all(|w| w[1] != w[0].inverse())
    }

    /// Check that consecutive steps meet at a common vertex.
    pub fn check_composable(&self, g: &RibbonGraph) -> Result<()> {
        for s in &self.steps {
            if !g.has_edge(s.edge) {
                return Err(Error::Unknown(format!("edge e{} in path", s.edge.0)));
            }
        }
        for w in self.steps.windows(2) {
            if g.vertex_of(w[0].arrival()) != g.vertex_of(w[1].departure()) {
                return Err(Error::NotFacePath(format!(
                    "path is not composable at {} -> {}",
                    g.half_name(w[0].arrival()),
                    g.half_name(w[1].departure())
                )));
            }
        }
        Ok(())
    }

    pub fn is_closed(&self, g: &RibbonGraph) -> bool {
        match (self.first(), self.last()) {
            (Some(a), Some(b)) => g.vertex_of(a.departure()) == g.vertex_of(b.arrival()),
            _ => true,
        }
    }

    /// Composition-order rendering, e.g. `a^-1 b a`.
    pub fn display(&self, g: &RibbonGraph) -> String {
        if self.steps.is_empty() {
            return "1".to_string();
        }
        self.composition()
            .iter()
            .map(|s| {
                let n = g.edge_name(s.edge);
                if s.forward {
                    n
                } else {
                    format!("{n}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parse composition-order text such as `b1^-1 a2^-1 b2 a2`.
    pub fn parse(g: &RibbonGraph, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (name, fwd) = match tok.strip_suffix("^-1") {
                Some(n) => (n, false),
                None => (tok, true),
            };
            let e = g
                .edge_by_name(name)
                .ok_or_else(|| Error::Unknown(format!("edge {name}")))?;
            letters.push(Step { edge: e, forward: fwd });
        }
        Ok(GraphPath::from_composition(&letters))
    }
}

/// The groupoid map induced by a graph move: the image of each edge as a
/// path in the new graph. Edges not listed map to themselves.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathMap {
    pub images: BTreeMap<EdgeId, GraphPath>,
}

impl PathMap {
    pub fn identity() -> Self {
        PathMap::default()
    }

    pub fn image_of(&self, s: Step) -> GraphPath {
        let p = self
            .images
            .get(&s.edge)
            .cloned()
            .unwrap_or_else(|| GraphPath::single(Step::fwd(s.edge)));
        if s.forward {
            p
        } else {
            p.inverse()
        }
    }

    /// Image of a path, freely reduced.
    pub fn apply(&self, p: &GraphPath) -> GraphPath {
        let mut steps = Vec::new();
        for s in &p.steps {
            steps.extend(self.image_of(*s).steps);
        }
        GraphPath::new(steps).reduced()
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &PathMap) -> PathMap {
        let mut images = BTreeMap::new();
        let edges: std::collections::BTreeSet<EdgeId> =
            first.images.keys().chain(self.images.keys()).copied().collect();
        for e in edges {
            let img = self.apply(&first.image_of(Step::fwd(e)));
            if img != GraphPath::single(Step::fwd(e)) {
                images.insert(e, img);
            }
        }
        PathMap { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .all(|(e, p)| *p == GraphPath::single(Step::fwd(*e)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_roundtrip() {
        let a = EdgeId(0);
        let b = EdgeId(1);
        let p = GraphPath::from_composition(&[Step::bwd(a), Step::fwd(b)]);
        assert_eq!(p.steps, vec![Step::fwd(b), Step::bwd(a)]);
        assert_eq!(p.composition(), vec![Step::bwd(a), Step::fwd(b)]);
    }

    #[test]
    fn reduction_cancels() {
        let a = EdgeId(0);
        let b = EdgeId(1);
        let p = GraphPath::new(vec![Step::fwd(a), Step::fwd(b), Step::bwd(b), Step::bwd(a)]);
        assert!(p.reduced().is_empty());
        assert!(!p.is_reduced());
    }

    #[test]
    fn inverse_is_involutive() {
        let p = GraphPath::new(vec![Step::fwd(EdgeId(0)), Step::bwd(EdgeId(3))]);
        assert_eq!(p.inverse().inverse(), p);
        assert!(p.then(&p.inverse()).reduced().is_empty());
    }
}
