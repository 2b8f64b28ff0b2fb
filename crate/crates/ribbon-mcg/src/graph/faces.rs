use std::collections::BTreeSet;

use super::{GraphPath, HalfEdge, RibbonGraph, Step, VertexId};
use crate::error::{Error, Result};

impl RibbonGraph {
    /// The end cyclically preceding `h` at its vertex.
    pub fn cyclic_pred(&self, h: HalfEdge) -> Option<HalfEdge> {
        let (vi, p) = self.locate(h)?;
        let order = &self.vertices()[vi].order;
        Some(order[(p + order.len() - 1) % order.len()])
    }

    /// The next step of the face through `s`: arriving through an end, leave
    /// through the end cyclically before it (maximal left turn).
    pub fn next_face_step(&self, s: Step) -> Option<Step> {
        self.cyclic_pred(s.arrival()).map(Step::leaving)
    }

    /// Trace the face cycle starting with step `s`.
    pub fn face_through(&self, s: Step) -> GraphPath {
        let mut steps = vec![s];
        let mut cur = s;
        loop {
            let Some(nx) = self.next_face_step(cur) else { break };
            if nx == s {
                break;
            }
            steps.push(nx);
            cur = nx;
        }
        GraphPath::new(steps)
    }
}

/// All faces, each starting at its lexicographically minimal departure end,
/// listed in increasing order of that end. Isolated vertices contribute no
/// path (see [`face_count`]).
pub fn faces(g: &RibbonGraph) -> Vec<GraphPath> {
    let mut seen: BTreeSet<Step> = BTreeSet::new();
    let mut out = Vec::new();
    let mut starts: Vec<HalfEdge> = g
        .vertices()
        .iter()
        .flat_map(|v| v.order.iter().copied())
        .collect();
    starts.sort();
    for h in starts {
        let s = Step::leaving(h);
        if seen.contains(&s) {
            continue;
        }
        let f = g.face_through(s);
        seen.extend(f.steps.iter().copied());
        out.push(f);
    }
    out
}

/// Number of faces of the capped surface, counting one disc for each vertex
/// without incident edges.
pub fn face_count(g: &RibbonGraph) -> usize {
    faces(g).len() + g.vertices().iter().filter(|v| v.order.is_empty()).count()
}

/// The face that starts at the cilium of `v`: it leaves through the maximal
/// end and closes by arriving at the minimal end.
pub fn ciliated_face(g: &RibbonGraph, v: VertexId) -> Result<GraphPath> {
    let vert = g
        .vertex(v)
        .ok_or_else(|| Error::Unknown(format!("vertex {}", g.vertex_name(v))))?;
    match vert.order.last() {
        None => Ok(GraphPath::empty()),
        Some(h) => Ok(g.face_through(Step::leaving(*h))),
    }
}

/// Whether `p` turns maximally left at each interior vertex and traverses
/// every edge at most once in each direction.
pub fn is_face_path(g: &RibbonGraph, p: &GraphPath) -> Result<bool> {
    p.check_composable(g)?;
    let mut used = BTreeSet::new();
    for s in &p.steps {
        if !used.insert(*s) {
            return Ok(false);
        }
    }
    for w in p.steps.windows(2) {
        if g.next_face_step(w[0]) != Some(w[1]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Genus of the closed surface obtained by capping every face with a disc.
pub fn genus(g: &RibbonGraph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.num_vertices() == 0 {
        return Ok(0);
    }
    let chi = g.num_vertices() as i64 - g.num_edges() as i64 + face_count(g) as i64;
    let twice = 2 - chi;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::InvalidGraph(format!("Euler characteristic {chi} is not that of an orientable surface")));
    }
    Ok((twice / 2) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeId;

    fn torus() -> RibbonGraph {
        RibbonGraph::from_orders(&["st(a) st(b) ta(a) ta(b)"]).unwrap()
    }

    #[test]
    fn torus_has_one_commutator_face() {
        let g = torus();
        let fs = faces(&g);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].len(), 4);
        let f = ciliated_face(&g, g.vertices()[0].id).unwrap();
        assert_eq!(f.display(&g), "a^-1 b a b^-1");
        assert_eq!(genus(&g).unwrap(), 1);
    }

    #[test]
    fn single_loop_has_two_faces() {
        let g = RibbonGraph::from_orders(&["st(a) ta(a)"]).unwrap();
        assert_eq!(faces(&g).len(), 2);
        assert_eq!(genus(&g).unwrap(), 0);
    }

    #[test]
    fn lone_vertex_is_a_sphere() {
        let g = RibbonGraph::from_orders(&[""]).unwrap();
        assert_eq!(face_count(&g), 1);
        assert_eq!(genus(&g).unwrap(), 0);
    }

    #[test]
    fn disconnected_graph_has_no_genus() {
        let g = RibbonGraph::from_orders(&["st(a) ta(a)", "st(b) ta(b)"]).unwrap();
        assert!(matches!(genus(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn face_sides_partition_edges() {
        let g = torus();
        let total: usize = faces(&g).iter().map(|f| f.len()).sum();
        assert_eq!(total, 2 * g.num_edges());
    }

    /// Ten-end diagram with interlaced chords α₁..α₅; linear order
    /// st α₁, st α₂, ta α₂, st α₃, ta α₃, st α₄, ta α₁, st α₅, ta α₄, ta α₅.
    fn five_chords() -> RibbonGraph {
        RibbonGraph::from_orders(&[
            "st(a1) st(a2) ta(a2) st(a3) ta(a3) st(a4) ta(a1) st(a5) ta(a4) ta(a5)",
        ])
        .unwrap()
    }

    #[test]
    fn figure_face_path_examples() {
        let g = five_chords();
        let good = GraphPath::parse(&g, "a3^-1 a4^-1 a5 a4").unwrap();
        assert!(is_face_path(&g, &good).unwrap());
        let bad = GraphPath::parse(&g, "a2^-1 a4^-1 a5 a4").unwrap();
        assert!(!is_face_path(&g, &bad).unwrap());
    }

    #[test]
    fn empty_path_is_face_path() {
        assert!(is_face_path(&torus(), &GraphPath::empty()).unwrap());
    }

    #[test]
    fn repeated_traversal_is_rejected() {
        let g = RibbonGraph::from_orders(&["st(a) ta(a)"]).unwrap();
        let a = EdgeId(0);
        let p = GraphPath::new(vec![Step::fwd(a), Step::fwd(a)]);
        assert!(!is_face_path(&g, &p).unwrap());
    }
}
