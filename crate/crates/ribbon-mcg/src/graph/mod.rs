//! Directed ribbon graphs with ciliated vertices.
//!
//! Every vertex stores its incident half-edges as a *linear* order read
//! counterclockwise starting at the cilium, so the cilium sits between the
//! last and the first entry. In a drawn chord diagram, where the baseline is
//! read left to right, this is the reversed reading order.

mod faces;
mod json;
mod path;
mod reduce;
mod slide;
mod standard;

pub use faces::{ciliated_face, face_count, faces, genus, is_face_path};
pub use json::GraphJson;
pub use path::{GraphPath, PathMap, Step};
pub use reduce::{
    is_standard, matches_standard, random_admissible, standard_form, standard_roles, valid_slides, Move,
    StandardForm,
};
pub use slide::{SlideDescriptor, Variant};
pub use standard::{torus, GeneratorName, StandardGraph};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum End {
    Start,
    Target,
}

/// One end of an edge. Identified by its edge and which end it is, so ids
/// survive every graph move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdge {
    pub edge: EdgeId,
    pub end: End,
}

impl HalfEdge {
    pub fn st(edge: EdgeId) -> Self {
        HalfEdge { edge, end: End::Start }
    }

    pub fn ta(edge: EdgeId) -> Self {
        HalfEdge { edge, end: End::Target }
    }

    pub fn opposite(self) -> Self {
        match self.end {
            End::Start => HalfEdge::ta(self.edge),
            End::Target => HalfEdge::st(self.edge),
        }
    }

    pub fn is_target(self) -> bool {
        self.end == End::Target
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: VertexId,
    /// Counterclockwise from the cilium.
    pub order: Vec<HalfEdge>,
}

/// A directed ribbon graph. Immutable in spirit: every move returns a new
/// graph. Equality compares structure and ids, not display names.
#[derive(Clone, Debug)]
pub struct RibbonGraph {
    vertices: Vec<Vertex>,
    edge_names: BTreeMap<EdgeId, String>,
    vertex_names: BTreeMap<VertexId, String>,
    half_names: BTreeMap<HalfEdge, String>,
    next_edge: u32,
    next_vertex: u32,
}

impl PartialEq for RibbonGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.edge_names.keys().eq(other.edge_names.keys())
    }
}

impl Eq for RibbonGraph {}

impl Default for RibbonGraph {
    fn default() -> Self {
        Self::empty()
    }
}

impl RibbonGraph {
    pub fn empty() -> Self {
        RibbonGraph {
            vertices: Vec::new(),
            edge_names: BTreeMap::new(),
            vertex_names: BTreeMap::new(),
            half_names: BTreeMap::new(),
            next_edge: 0,
            next_vertex: 0,
        }
    }

    /// Build from per-vertex order strings such as `"st(a) st(b) ta(a) ta(b)"`.
    /// Edges are numbered in order of first appearance.
    pub fn from_orders(orders: &[&str]) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut verts = Vec::new();
        for spec in orders {
            let mut order = Vec::new();
            for tok in spec.split_whitespace() {
                let (end, name) = parse_half_token(tok)?;
                let idx = match names.iter().position(|n| n == name) {
                    Some(i) => i,
                    None => {
                        names.push(name.to_string());
                        names.len() - 1
                    }
                };
                order.push(HalfEdge { edge: EdgeId(idx as u32), end });
            }
            verts.push(order);
        }
        let named: Vec<(String, Vec<HalfEdge>)> = verts
            .into_iter()
            .enumerate()
            .map(|(i, o)| (format!("v{i}"), o))
            .collect();
        Self::from_parts(&names, named)
    }

    /// Build from edge names (ids are positions) and named vertex orders.
    pub fn from_parts(edge_names: &[String], vertices: Vec<(String, Vec<HalfEdge>)>) -> Result<Self> {
        let mut g = RibbonGraph::empty();
        for (i, n) in edge_names.iter().enumerate() {
            if g.edge_names.values().any(|m| m == n) {
                return Err(Error::InvalidGraph(format!("duplicate edge id {n}")));
            }
            g.edge_names.insert(EdgeId(i as u32), n.clone());
        }
        g.next_edge = edge_names.len() as u32;
        for (i, (name, order)) in vertices.into_iter().enumerate() {
            if g.vertex_names.values().any(|m| *m == name) {
                return Err(Error::InvalidGraph(format!("duplicate vertex id {name}")));
            }
            let id = VertexId(i as u32);
            g.vertex_names.insert(id, name);
            g.vertices.push(Vertex { id, order });
        }
        g.next_vertex = g.vertices.len() as u32;
        g.validate()?;
        Ok(g)
    }

    /// Check that every edge owns two half-edges, each listed exactly once.
    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for v in &self.vertices {
            for h in &v.order {
                if !self.edge_names.contains_key(&h.edge) {
                    return Err(Error::InvalidGraph(format!(
                        "half-edge {} belongs to no edge",
                        self.half_name(*h)
                    )));
                }
                if !seen.insert(*h) {
                    return Err(Error::InvalidGraph(format!(
                        "half-edge {} listed twice",
                        self.half_name(*h)
                    )));
                }
            }
        }
        for e in self.edge_names.keys() {
            for h in [HalfEdge::st(*e), HalfEdge::ta(*e)] {
                if !seen.contains(&h) {
                    return Err(Error::InvalidGraph(format!(
                        "dangling half-edge {}",
                        self.half_name(h)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, id: VertexId) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edge_names.keys().copied()
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges().collect()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_names.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edge_names.contains_key(&e)
    }

    pub fn edge_name(&self, e: EdgeId) -> String {
        self.edge_names
            .get(&e)
            .cloned()
            .unwrap_or_else(|| format!("e{}", e.0))
    }

    pub fn vertex_name(&self, v: VertexId) -> String {
        self.vertex_names
            .get(&v)
            .cloned()
            .unwrap_or_else(|| format!("v{}", v.0))
    }

    pub fn half_name(&self, h: HalfEdge) -> String {
        if let Some(n) = self.half_names.get(&h) {
            return n.clone();
        }
        let e = self.edge_name(h.edge);
        match h.end {
            End::Start => format!("st({e})"),
            End::Target => format!("ta({e})"),
        }
    }

    pub fn edge_by_name(&self, name: &str) -> Option<EdgeId> {
        self.edge_names
            .iter()
            .find(|(_, n)| n.as_str() == name)
            .map(|(e, _)| *e)
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_names
            .iter()
            .find(|(_, n)| n.as_str() == name)
            .map(|(v, _)| *v)
    }

    /// Parse `st(a)` / `ta(a)` against this graph's edge names.
    pub fn half_by_name(&self, tok: &str) -> Result<HalfEdge> {
        if let Some((h, _)) = self.half_names.iter().find(|(_, n)| n.as_str() == tok) {
            return Ok(*h);
        }
        let (end, name) = parse_half_token(tok)?;
        let edge = self
            .edge_by_name(name)
            .ok_or_else(|| Error::Unknown(format!("edge {name}")))?;
        Ok(HalfEdge { edge, end })
    }

    /// Vertex index and position of a half-edge.
    pub fn locate(&self, h: HalfEdge) -> Option<(usize, usize)> {
        self.vertices.iter().enumerate().find_map(|(vi, v)| {
            v.order.iter().position(|x| *x == h).map(|p| (vi, p))
        })
    }

    pub fn vertex_of(&self, h: HalfEdge) -> Option<VertexId> {
        self.locate(h).map(|(vi, _)| self.vertices[vi].id)
    }

    pub fn start_vertex(&self, e: EdgeId) -> Option<VertexId> {
        self.vertex_of(HalfEdge::st(e))
    }

    pub fn target_vertex(&self, e: EdgeId) -> Option<VertexId> {
        self.vertex_of(HalfEdge::ta(e))
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        self.has_edge(e) && self.start_vertex(e) == self.target_vertex(e)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertex(v).map_or(0, |x| x.order.len())
    }

    /// Position of a half-edge in its vertex's linear order.
    pub fn position(&self, h: HalfEdge) -> Option<usize> {
        self.locate(h).map(|(_, p)| p)
    }

    pub fn set_edge_name(&mut self, e: EdgeId, name: &str) {
        self.edge_names.insert(e, name.to_string());
    }

    /// Reverse the orientation of an edge: its two ends swap roles.
    pub fn reversed(&self, e: EdgeId) -> Result<Self> {
        if !self.has_edge(e) {
            return Err(Error::Unknown(format!("edge {}", self.edge_name(e))));
        }
        let mut g = self.clone();
        for v in &mut g.vertices {
            for h in &mut v.order {
                if h.edge == e {
                    *h = h.opposite();
                }
            }
        }
        let st = g.half_names.remove(&HalfEdge::st(e));
        let ta = g.half_names.remove(&HalfEdge::ta(e));
        if let Some(n) = st {
            g.half_names.insert(HalfEdge::ta(e), n);
        }
        if let Some(n) = ta {
            g.half_names.insert(HalfEdge::st(e), n);
        }
        Ok(g)
    }

    fn fresh_edge(&mut self, name: Option<&str>) -> EdgeId {
        let id = EdgeId(self.next_edge);
        self.next_edge += 1;
        let name = match name {
            Some(n) if self.edge_by_name(n).is_none() => n.to_string(),
            _ => format!("e{}", id.0),
        };
        self.edge_names.insert(id, name);
        id
    }

    /// Add a loop at `v` whose target end lands at `pos` and whose starting
    /// end directly after it.
    pub fn with_loop(&self, v: VertexId, pos: usize, name: Option<&str>) -> Result<(Self, EdgeId)> {
        let mut g = self.clone();
        let vi = g
            .vertices
            .iter()
            .position(|x| x.id == v)
            .ok_or_else(|| Error::Unknown(format!("vertex {}", self.vertex_name(v))))?;
        if pos > g.vertices[vi].order.len() {
            return Err(Error::Precondition(format!(
                "loop position {pos} beyond vertex degree {}",
                g.vertices[vi].order.len()
            )));
        }
        let e = g.fresh_edge(name);
        g.vertices[vi].order.insert(pos, HalfEdge::st(e));
        g.vertices[vi].order.insert(pos, HalfEdge::ta(e));
        Ok((g, e))
    }

    /// Add an edge from `v` (starting end at `pos`) to a new univalent
    /// ciliated vertex.
    pub fn with_pendant(
        &self,
        v: VertexId,
        pos: usize,
        name: Option<&str>,
    ) -> Result<(Self, EdgeId, VertexId)> {
        let mut g = self.clone();
        let vi = g
            .vertices
            .iter()
            .position(|x| x.id == v)
            .ok_or_else(|| Error::Unknown(format!("vertex {}", self.vertex_name(v))))?;
        if pos > g.vertices[vi].order.len() {
            return Err(Error::Precondition(format!(
                "pendant position {pos} beyond vertex degree {}",
                g.vertices[vi].order.len()
            )));
        }
        let e = g.fresh_edge(name);
        g.vertices[vi].order.insert(pos, HalfEdge::st(e));
        let w = VertexId(g.next_vertex);
        g.next_vertex += 1;
        g.vertex_names.insert(w, format!("v{}", w.0));
        g.vertices.push(Vertex { id: w, order: vec![HalfEdge::ta(e)] });
        Ok((g, e, w))
    }

    /// Delete an edge. A univalent endpoint disappears with it (the target
    /// endpoint is preferred when both are univalent).
    pub fn without_edge(&self, e: EdgeId) -> Result<Self> {
        if !self.has_edge(e) {
            return Err(Error::Unknown(format!("edge e{}", e.0)));
        }
        let mut g = self.clone();
        let sv = g.start_vertex(e);
        let tv = g.target_vertex(e);
        let deg = |v: Option<VertexId>| v.map_or(0, |v| g.degree(v));
        let drop_vertex = if sv != tv {
            if deg(tv) == 1 {
                tv
            } else if deg(sv) == 1 {
                sv
            } else {
                None
            }
        } else {
            None
        };
        for v in &mut g.vertices {
            v.order.retain(|h| h.edge != e);
        }
        if let Some(w) = drop_vertex {
            g.vertices.retain(|v| v.id != w);
            g.vertex_names.remove(&w);
        }
        g.edge_names.remove(&e);
        g.half_names.remove(&HalfEdge::st(e));
        g.half_names.remove(&HalfEdge::ta(e));
        Ok(g)
    }

    /// Vertices connected through edges; false for the empty graph only if
    /// it has several components.
    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let idx: BTreeMap<VertexId, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.id, i))
            .collect();
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for e in self.edges() {
            let (Some(a), Some(b)) = (self.start_vertex(e), self.target_vertex(e)) else {
                continue;
            };
            let (ra, rb) = (find(&mut parent, idx[&a]), find(&mut parent, idx[&b]));
            parent[ra] = rb;
        }
        let r0 = find(&mut parent, 0);
        (0..self.vertices.len()).all(|i| find(&mut parent, i) == r0)
    }

    /// Human-readable order listing, one vertex per line.
    pub fn describe(&self) -> String {
        let mut s = String::new();
        for v in &self.vertices {
            let ends: Vec<String> = v.order.iter().map(|h| self.half_name(*h)).collect();
            s.push_str(&format!("{}: {}\n", self.vertex_name(v.id), ends.join(" ")));
        }
        s
    }

    pub(crate) fn vertices_mut(&mut self) -> &mut Vec<Vertex> {
        &mut self.vertices
    }
}

impl fmt::Display for RibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

fn parse_half_token(tok: &str) -> Result<(End, &str)> {
    let bad = || Error::Parse(format!("expected st(<edge>) or ta(<edge>), got {tok:?}"));
    let inner = tok
        .strip_suffix(')')
        .ok_or_else(bad)?;
    if let Some(name) = inner.strip_prefix("st(") {
        Ok((End::Start, name))
    } else if let Some(name) = inner.strip_prefix("ta(") {
        Ok((End::Target, name))
    } else {
        Err(bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus() -> RibbonGraph {
        RibbonGraph::from_orders(&["st(a) st(b) ta(a) ta(b)"]).unwrap()
    }

    #[test]
    fn builds_torus() {
        let g = torus();
        assert_eq!(g.num_edges(), 2);
        assert!(g.is_loop(EdgeId(0)));
        assert_eq!(g.position(HalfEdge::ta(EdgeId(1))), Some(3));
    }

    #[test]
    fn rejects_duplicate_half_edge() {
        let err = RibbonGraph::from_orders(&["st(a) st(a) ta(a)"]).unwrap_err();
        assert!(matches!(err, Error::InvalidGraph(_)));
    }

    #[test]
    fn rejects_dangling() {
        assert!(RibbonGraph::from_orders(&["st(a)"]).is_err());
    }

    #[test]
    fn empty_spec_is_empty_graph() {
        let g = RibbonGraph::from_orders(&[]).unwrap();
        assert_eq!(g.num_vertices(), 0);
        assert_eq!(g.num_edges(), 0);
    }

    #[test]
    fn loop_roundtrip() {
        let g = torus();
        let v = g.vertices()[0].id;
        let (h, e) = g.with_loop(v, 1, None).unwrap();
        assert_eq!(h.position(HalfEdge::ta(e)), Some(1));
        assert_eq!(h.position(HalfEdge::st(e)), Some(2));
        assert_eq!(h.without_edge(e).unwrap(), g);
    }

    #[test]
    fn pendant_roundtrip() {
        let g = torus();
        let v = g.vertices()[0].id;
        let (h, e, w) = g.with_pendant(v, 4, None).unwrap();
        assert_eq!(h.num_vertices(), 2);
        assert_eq!(h.degree(w), 1);
        assert_eq!(h.target_vertex(e), Some(w));
        assert_eq!(h.without_edge(e).unwrap(), g);
    }

    #[test]
    fn remove_missing_edge_fails() {
        assert!(torus().without_edge(EdgeId(7)).is_err());
    }

    #[test]
    fn reversal_is_involutive() {
        let g = torus();
        let r = g.reversed(EdgeId(0)).unwrap();
        assert_ne!(r, g);
        assert_eq!(r.reversed(EdgeId(0)).unwrap(), g);
    }
}
