//! Graph moves that record their algebraic effect as a [`Program`].

use super::{Prim, Program};
use crate::error::{Error, Result};
use crate::graph::{
    is_face_path, EdgeId, GraphPath, HalfEdge, PathMap, RibbonGraph, SlideDescriptor, Step, Variant, VertexId,
};

/// Tracks the current graph while accumulating primitives.
#[derive(Clone, Debug)]
pub struct Builder {
    start: RibbonGraph,
    graph: RibbonGraph,
    prims: Vec<Prim>,
}

/// Primitives realizing one elementary slide.
pub fn slide_prims(s: &SlideDescriptor) -> Vec<Prim> {
    let a = s.along;
    let b = s.moved.edge;
    let core = |inverse| Prim::Slide { along: a, moved: b, inverse };
    let mut v = match s.variant {
        Variant::L => vec![core(false)],
        Variant::MinusL => vec![core(true)],
        // R = T_a ∘ (−L) ∘ T_a and −R = T_a ∘ L ∘ T_a.
        Variant::R => vec![Prim::Reverse(a), core(true), Prim::Reverse(a)],
        Variant::MinusR => vec![Prim::Reverse(a), core(false), Prim::Reverse(a)],
    };
    if !s.moved.is_target() {
        // A starting end slides like the target end of the reversed edge.
        v.insert(0, Prim::Reverse(b));
        v.push(Prim::Reverse(b));
    }
    v
}

impl Builder {
    pub fn new(g: &RibbonGraph) -> Self {
        Builder { start: g.clone(), graph: g.clone(), prims: Vec::new() }
    }

    pub fn graph(&self) -> &RibbonGraph {
        &self.graph
    }

    pub fn finish(self) -> Program {
        Program { domain: self.start, codomain: self.graph, prims: self.prims }
    }

    /// Append a program whose domain is the current graph.
    pub fn append(&mut self, p: &Program) -> Result<()> {
        if p.domain != self.graph {
            return Err(Error::Precondition("program does not start at the current graph".into()));
        }
        self.prims.extend_from_slice(&p.prims);
        self.graph = p.codomain.clone();
        Ok(())
    }

    /// One elementary slide; cilium crossings are rejected.
    pub fn slide(&mut self, s: SlideDescriptor) -> Result<PathMap> {
        let (g, m) = self.graph.slide(&s)?;
        self.prims.extend(slide_prims(&s));
        self.graph = g;
        Ok(m)
    }

    /// Reverse the orientation of an edge (the label transforms by T).
    pub fn reverse(&mut self, e: EdgeId) -> Result<()> {
        self.graph = self.graph.reversed(e)?;
        self.prims.push(Prim::Reverse(e));
        Ok(())
    }

    /// η: add a loop at `v` (target end at `pos`, start right after it).
    pub fn insert_loop(&mut self, v: VertexId, pos: usize, name: Option<&str>) -> Result<EdgeId> {
        let (g, e) = self.graph.with_loop(v, pos, name)?;
        self.graph = g;
        self.prims.push(Prim::Insert(e));
        Ok(e)
    }

    /// η: add an edge from `v` to a new univalent vertex.
    pub fn insert_pendant(&mut self, v: VertexId, pos: usize, name: Option<&str>) -> Result<(EdgeId, VertexId)> {
        let (g, e, w) = self.graph.with_pendant(v, pos, name)?;
        self.graph = g;
        self.prims.push(Prim::Insert(e));
        Ok((e, w))
    }

    /// ε: delete an edge.
    pub fn delete(&mut self, e: EdgeId) -> Result<()> {
        self.graph = self.graph.without_edge(e)?;
        self.prims.push(Prim::Delete(e));
        Ok(())
    }

    fn end_after(&self, h: HalfEdge) -> Result<HalfEdge> {
        let (vi, p) = self.graph.locate(h).ok_or_else(|| Error::Unknown(format!("end of e{}", h.edge.0)))?;
        let order = &self.graph.vertices()[vi].order;
        order.get(p + 1).copied().ok_or_else(|| {
            Error::CiliumCrossing(format!("no end after {} before the cilium", self.graph.half_name(h)))
        })
    }

    fn end_before(&self, h: HalfEdge) -> Result<HalfEdge> {
        let (vi, p) = self.graph.locate(h).ok_or_else(|| Error::Unknown(format!("end of e{}", h.edge.0)))?;
        if p == 0 {
            return Err(Error::CiliumCrossing(format!(
                "no end before {} after the cilium",
                self.graph.half_name(h)
            )));
        }
        Ok(self.graph.vertices()[vi].order[p - 1])
    }

    /// Slide `moved`, which sits directly after the departure of the first
    /// step, along the face path (traversal order).
    pub fn face_slide(&mut self, path: &GraphPath, moved: HalfEdge) -> Result<PathMap> {
        if !is_face_path(&self.graph, path)? {
            return Err(Error::NotFacePath(path.display(&self.graph)));
        }
        if path.steps.iter().any(|s| s.edge == moved.edge) {
            return Err(Error::InvalidSlide(format!(
                "{} lies on the face path",
                self.graph.half_name(moved)
            )));
        }
        let mut map = PathMap::identity();
        for step in &path.steps {
            let variant = if step.forward { Variant::L } else { Variant::MinusR };
            let m = self.slide(SlideDescriptor::new(step.edge, variant, moved))?;
            map = m.after(&map);
        }
        Ok(map)
    }

    /// C_γ: add an edge γ' parallel to the face path γ, from its start to its
    /// end, running just to the right of it. Returns the new edge.
    pub fn add_edge_along(&mut self, path: &GraphPath, name: Option<&str>) -> Result<EdgeId> {
        let first = path.first().ok_or_else(|| Error::NotFacePath("empty path".into()))?;
        if !is_face_path(&self.graph, path)? {
            return Err(Error::NotFacePath(path.display(&self.graph)));
        }
        let dep = first.departure();
        let v = self.graph.vertex_of(dep).expect("path is composable");
        let pos = self.graph.position(dep).expect("path is composable");
        let e = self.insert_loop(v, pos + 1, name)?;
        self.face_slide(path, HalfEdge::ta(e))?;
        Ok(e)
    }

    /// D_β for a loop β: slide every end enclosed by β around it once.
    pub fn twist_loop(&mut self, beta: EdgeId, inverse: bool) -> Result<()> {
        if !self.graph.is_loop(beta) {
            return Err(Error::Precondition(format!("{} is not a loop", self.graph.edge_name(beta))));
        }
        let ps = self.graph.position(HalfEdge::st(beta)).expect("edge exists");
        let pt = self.graph.position(HalfEdge::ta(beta)).expect("edge exists");
        let n = ps.abs_diff(pt) - 1;
        for _ in 0..n {
            let s = match (ps < pt, inverse) {
                (true, false) => SlideDescriptor::new(beta, Variant::L, self.end_after(HalfEdge::st(beta))?),
                (true, true) => SlideDescriptor::new(beta, Variant::MinusL, self.end_before(HalfEdge::ta(beta))?),
                (false, false) => SlideDescriptor::new(beta, Variant::MinusR, self.end_after(HalfEdge::ta(beta))?),
                (false, true) => SlideDescriptor::new(beta, Variant::R, self.end_before(HalfEdge::st(beta))?),
            };
            self.slide(s)?;
        }
        Ok(())
    }

    /// D_φ = ε_{φ'} ∘ D_{φ'} ∘ C_φ for a closed face path φ.
    pub fn twist_face_path(&mut self, phi: &GraphPath, inverse: bool) -> Result<()> {
        if !phi.is_closed(&self.graph) {
            return Err(Error::NotFacePath(format!("{} is not closed", phi.display(&self.graph))));
        }
        let e = self.add_edge_along(phi, None)?;
        self.twist_loop(e, inverse)?;
        self.delete(e)
    }

    /// Twist along a closed path that is a single loop step or a face path.
    pub fn twist_path(&mut self, phi: &GraphPath, inverse: bool) -> Result<()> {
        if phi.len() == 1 && self.graph.is_loop(phi.steps[0].edge) {
            return self.twist_loop(phi.steps[0].edge, inverse);
        }
        self.twist_face_path(phi, inverse)
    }

    /// Position helper for protocols: the end directly before/after `h`.
    pub fn neighbour(&self, h: HalfEdge, after: bool) -> Result<HalfEdge> {
        if after {
            self.end_after(h)
        } else {
            self.end_before(h)
        }
    }
}

/// The single step `e` forward as a path.
pub fn loop_path(e: EdgeId) -> GraphPath {
    GraphPath::single(Step::fwd(e))
}
