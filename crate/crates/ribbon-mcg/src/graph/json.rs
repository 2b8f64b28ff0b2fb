//! The JSON graph description:
//! `{"edges":[{"id","start","target"}], "vertices":[{"id","order":[...]}]}`.
//! Vertex orders list half-edge ids counterclockwise from the cilium.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{EdgeId, End, HalfEdge, RibbonGraph, Vertex, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub id: String,
    pub start: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: String,
    pub order: Vec<String>,
}

/// Field order is alphabetical so serialization has sorted keys.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub edges: Vec<EdgeJson>,
    pub vertices: Vec<VertexJson>,
}

impl GraphJson {
    pub fn from_str(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

impl RibbonGraph {
    pub fn from_json(spec: &GraphJson) -> Result<Self> {
        let mut halves: BTreeMap<&str, HalfEdge> = BTreeMap::new();
        let mut edge_names = Vec::new();
        for (i, e) in spec.edges.iter().enumerate() {
            if edge_names.contains(&e.id) {
                return Err(Error::InvalidGraph(format!("duplicate edge id {}", e.id)));
            }
            edge_names.push(e.id.clone());
            let id = EdgeId(i as u32);
            for (name, end) in [(&e.start, End::Start), (&e.target, End::Target)] {
                if halves.insert(name.as_str(), HalfEdge { edge: id, end }).is_some() {
                    return Err(Error::InvalidGraph(format!("duplicate half-edge id {name}")));
                }
            }
        }
        let mut verts = Vec::new();
        for v in &spec.vertices {
            let order = v
                .order
                .iter()
                .map(|h| {
                    halves.get(h.as_str()).copied().ok_or_else(|| {
                        Error::InvalidGraph(format!("dangling half-edge {h} at vertex {}", v.id))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            verts.push((v.id.clone(), order));
        }
        let mut g = RibbonGraph::from_parts(&edge_names, verts)?;
        for (name, h) in halves {
            if name != g.half_name(h) {
                g.half_names.insert(h, name.to_string());
            }
        }
        Ok(g)
    }

    pub fn to_json(&self) -> GraphJson {
        let edges = self
            .edges()
            .map(|e| EdgeJson {
                id: self.edge_name(e),
                start: self.half_name(HalfEdge::st(e)),
                target: self.half_name(HalfEdge::ta(e)),
            })
            .collect();
        let vertices = self
            .vertices()
            .iter()
            .map(|v: &Vertex| VertexJson {
                id: self.vertex_name(v.id),
                order: v.order.iter().map(|h| self.half_name(*h)).collect(),
            })
            .collect();
        GraphJson { edges, vertices }
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        Self::from_json(&GraphJson::from_str(text)?)
    }

    pub fn vertex_ids(&self) -> Vec<VertexId> {
        self.vertices().iter().map(|v| v.id).collect()
    }
}
