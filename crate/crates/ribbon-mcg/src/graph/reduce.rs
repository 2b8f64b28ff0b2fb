//! Reduction of a ribbon graph to the standard chord diagram by slides that
//! never cross a cilium, plus edge reversals.
//!
//! The reduction runs in three phases on a chosen base vertex x:
//! 1. collapse every other multivalent vertex into x along a connecting edge,
//!    leaving univalent vertices whose edges point into x;
//! 2. repeatedly take an interlaced pair of chords and clear the ends between
//!    them, producing consecutive handle blocks `st α, st β, ta α, ta β`;
//! 3. shrink the innermost chord around each univalent edge end until it is
//!    the group `st μ, ta ν, ta μ`, then move all groups below the handles.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{
    ciliated_face, face_count, EdgeId, HalfEdge, RibbonGraph, SlideDescriptor, StandardGraph,
    Variant, VertexId,
};
use crate::error::{Error, Result};

/// One step of a reduction sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    Slide(SlideDescriptor),
    Reverse(EdgeId),
}

impl Move {
    pub fn display(&self, g: &RibbonGraph) -> String {
        match self {
            Move::Slide(s) => s.display(g),
            Move::Reverse(e) => format!("reverse {}", g.edge_name(*e)),
        }
    }
}

/// Result of [`standard_form`].
#[derive(Clone, Debug)]
pub struct StandardForm {
    pub moves: Vec<Move>,
    pub graph: RibbonGraph,
    pub genus: usize,
    pub boundaries: usize,
    /// For each edge of the result, its role in the standard diagram:
    /// `a{j}`, `b{j}`, `m{i}` or `n{i}`.
    pub roles: BTreeMap<EdgeId, String>,
}

impl fmt::Display for StandardForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "genus {}, {} boundary edges, {} moves", self.genus, self.boundaries, self.moves.len())?;
        write!(f, "{}", self.graph)
    }
}

struct Reducer {
    g: RibbonGraph,
    x: VertexId,
    moves: Vec<Move>,
}

impl Reducer {
    fn order(&self, v: VertexId) -> &[HalfEdge] {
        &self.g.vertex(v).expect("live vertex").order
    }

    fn pos(&self, h: HalfEdge) -> usize {
        self.g.position(h).expect("live half-edge")
    }

    fn at(&self, p: usize) -> HalfEdge {
        self.order(self.x)[p]
    }

    fn slide(&mut self, along: EdgeId, variant: Variant, moved: HalfEdge) -> Result<()> {
        let s = SlideDescriptor::new(along, variant, moved);
        let (h, _) = self.g.slide(&s)?;
        self.g = h;
        self.moves.push(Move::Slide(s));
        Ok(())
    }

    fn reverse(&mut self, e: EdgeId) -> Result<()> {
        self.g = self.g.reversed(e)?;
        self.moves.push(Move::Reverse(e));
        Ok(())
    }

    /// Phase 1: collapse all multivalent vertices into x.
    fn collapse(&mut self) -> Result<()> {
        loop {
            let x = self.x;
            let target = self.g.edges().find_map(|e| {
                let (s, t) = (self.g.start_vertex(e)?, self.g.target_vertex(e)?);
                let w = if s == x && t != x {
                    t
                } else if t == x && s != x {
                    s
                } else {
                    return None;
                };
                (self.g.degree(w) > 1).then_some((e, w))
            });
            let Some((nu, w)) = target else { break };
            if self.g.start_vertex(nu) != Some(w) {
                self.reverse(nu)?;
            }
            // Ends after st ν go over with L, ends before it with R.
            loop {
                let p = self.pos(HalfEdge::st(nu));
                let ord = self.order(w);
                if p + 1 >= ord.len() {
                    break;
                }
                let e = ord[p + 1];
                self.slide(nu, Variant::L, e)?;
            }
            loop {
                let p = self.pos(HalfEdge::st(nu));
                if p == 0 {
                    break;
                }
                let e = self.order(w)[p - 1];
                self.slide(nu, Variant::R, e)?;
            }
        }
        // Edges at univalent vertices point into x; loops at x run upward.
        for e in self.g.edge_ids() {
            let (s, t) = (self.g.start_vertex(e), self.g.target_vertex(e));
            if s == Some(self.x) && t == Some(self.x) {
                if self.pos(HalfEdge::ta(e)) < self.pos(HalfEdge::st(e)) {
                    self.reverse(e)?;
                }
            } else if s == Some(self.x) {
                self.reverse(e)?;
            }
        }
        Ok(())
    }

    fn orient_loops(&mut self, skip: &BTreeSet<EdgeId>) -> Result<()> {
        for e in self.loops_at_x() {
            if !skip.contains(&e) && self.pos(HalfEdge::ta(e)) < self.pos(HalfEdge::st(e)) {
                self.reverse(e)?;
            }
        }
        Ok(())
    }

    fn loops_at_x(&self) -> Vec<EdgeId> {
        self.g
            .edges()
            .filter(|e| {
                self.g.start_vertex(*e) == Some(self.x) && self.g.target_vertex(*e) == Some(self.x)
            })
            .collect()
    }

    /// Phase 2: form handle blocks from interlaced pairs.
    fn pair_handles(&mut self) -> Result<Vec<(EdgeId, EdgeId)>> {
        let mut blocks: Vec<(EdgeId, EdgeId)> = Vec::new();
        loop {
            let used: BTreeSet<EdgeId> = blocks.iter().flat_map(|(a, b)| [*a, *b]).collect();
            // Clearing can carry the two ends of a chord out in swapped order.
            self.orient_loops(&used)?;
            let mut chords: Vec<EdgeId> =
                self.loops_at_x().into_iter().filter(|e| !used.contains(e)).collect();
            chords.sort_by_key(|e| self.pos(HalfEdge::st(*e)));
            let span = |e: EdgeId| (self.pos(HalfEdge::st(e)), self.pos(HalfEdge::ta(e)));
            let mut pair = None;
            'outer: for &a in &chords {
                for &b in &chords {
                    let (sa, ta) = span(a);
                    let (sb, tb) = span(b);
                    if sa < sb && sb < ta && ta < tb {
                        pair = Some((a, b));
                        break 'outer;
                    }
                }
            }
            let Some((a, b)) = pair else { break };
            let (sa, sb) = (HalfEdge::st(a), HalfEdge::st(b));
            let (ta, tb) = (HalfEdge::ta(a), HalfEdge::ta(b));
            while self.pos(tb) != self.pos(ta) + 1 {
                let e = self.at(self.pos(ta) + 1);
                self.slide(a, Variant::MinusR, e)?;
            }
            while self.pos(ta) != self.pos(sb) + 1 {
                let e = self.at(self.pos(sb) + 1);
                self.slide(b, Variant::L, e)?;
                self.slide(a, Variant::MinusR, e)?;
            }
            while self.pos(sb) != self.pos(sa) + 1 {
                let e = self.at(self.pos(sa) + 1);
                self.slide(a, Variant::L, e)?;
                self.slide(b, Variant::L, e)?;
                self.slide(a, Variant::MinusR, e)?;
            }
            blocks.push((a, b));
        }
        Ok(blocks)
    }

    fn hop_up_over_block(&mut self, e: HalfEdge, a: EdgeId, b: EdgeId) -> Result<()> {
        self.slide(a, Variant::R, e)?;
        self.slide(b, Variant::MinusL, e)?;
        self.slide(a, Variant::MinusL, e)?;
        self.slide(b, Variant::R, e)
    }

    fn hop_down_over_block(&mut self, e: HalfEdge, a: EdgeId, b: EdgeId) -> Result<()> {
        self.slide(b, Variant::MinusR, e)?;
        self.slide(a, Variant::L, e)?;
        self.slide(b, Variant::L, e)?;
        self.slide(a, Variant::MinusR, e)
    }

    /// Phase 3: shrink innermost chords onto univalent ends, then sort.
    fn group_boundaries(&mut self, blocks: &[(EdgeId, EdgeId)]) -> Result<Vec<(EdgeId, EdgeId)>> {
        let block_of_first: BTreeMap<EdgeId, EdgeId> = blocks.iter().copied().collect();
        let block_of_second: BTreeMap<EdgeId, EdgeId> = blocks.iter().map(|(a, b)| (*b, *a)).collect();
        let in_block: BTreeSet<EdgeId> = blocks.iter().flat_map(|(a, b)| [*a, *b]).collect();
        let nus: Vec<EdgeId> = self
            .g
            .edges()
            .filter(|e| self.g.target_vertex(*e) == Some(self.x) && self.g.start_vertex(*e) != Some(self.x))
            .collect();
        let bad = |what: &str| Error::Precondition(format!("graph does not have one cilium per face ({what})"));
        let mut groups = Vec::new();
        for nu in nus {
            let t = self.pos(HalfEdge::ta(nu));
            let mu = self
                .loops_at_x()
                .into_iter()
                .filter(|e| !in_block.contains(e))
                .filter(|e| self.pos(HalfEdge::st(*e)) < t && t < self.pos(HalfEdge::ta(*e)))
                .min_by_key(|e| self.pos(HalfEdge::ta(*e)) - self.pos(HalfEdge::st(*e)))
                .ok_or_else(|| bad("boundary end in the outer region"))?;
            let (smu, tmu, tnu) = (HalfEdge::st(mu), HalfEdge::ta(mu), HalfEdge::ta(nu));
            while self.pos(smu) + 1 != self.pos(tnu) {
                let next = self.at(self.pos(smu) + 1);
                if next.is_target() {
                    return Err(bad("unexpected end inside a boundary chord"));
                }
                if let Some(&b) = block_of_first.get(&next.edge) {
                    self.hop_up_over_block(smu, next.edge, b)?;
                } else {
                    self.slide(next.edge, Variant::R, smu)?;
                }
            }
            while self.pos(tmu) != self.pos(tnu) + 1 {
                let prev = self.at(self.pos(tmu) - 1);
                if !prev.is_target() {
                    return Err(bad("unexpected end inside a boundary chord"));
                }
                if let Some(&a) = block_of_second.get(&prev.edge) {
                    self.hop_down_over_block(tmu, a, prev.edge)?;
                } else {
                    self.slide(prev.edge, Variant::MinusR, tmu)?;
                }
            }
            groups.push((mu, nu));
        }
        // Move every group below every handle block.
        loop {
            let ord = self.order(self.x).to_vec();
            let mut moved = false;
            for p in 0..ord.len() {
                let h = ord[p];
                if !(h.is_target() && block_of_second.contains_key(&h.edge)) {
                    continue;
                }
                let Some(&nx) = ord.get(p + 1) else { continue };
                if let Some(&(mu, nu)) = groups.iter().find(|(m, _)| HalfEdge::st(*m) == nx) {
                    let a = block_of_second[&h.edge];
                    let b = h.edge;
                    for e in [HalfEdge::st(mu), HalfEdge::ta(nu), HalfEdge::ta(mu)] {
                        self.hop_down_over_block(e, a, b)?;
                    }
                    moved = true;
                    break;
                }
            }
            if !moved {
                break;
            }
        }
        Ok(groups)
    }
}

fn check_cilia(g: &RibbonGraph) -> Result<()> {
    let faces: BTreeSet<_> = g
        .vertex_ids()
        .into_iter()
        .map(|v| {
            let mut f = ciliated_face(g, v).expect("live vertex").steps;
            f.sort();
            f
        })
        .collect();
    if faces.len() != g.num_vertices() || face_count(g) != g.num_vertices() {
        return Err(Error::Precondition(
            "standard form needs exactly one cilium per vertex and per face".into(),
        ));
    }
    Ok(())
}

/// Reduce `g` to the standard chord diagram. Returns the moves (slides never
/// cross a cilium) and the resulting graph with role names.
pub fn standard_form(g: &RibbonGraph) -> Result<StandardForm> {
    if !g.is_connected() || g.num_vertices() == 0 {
        return Err(Error::Precondition("standard form needs a connected nonempty graph".into()));
    }
    check_cilia(g)?;
    let n = g.num_vertices() - 1;
    if g.num_edges() % 2 != 0 || g.num_edges() / 2 <= n {
        return Err(Error::Precondition(format!(
            "|E|/2 - n must be a positive integer (|E| = {}, n = {n})",
            g.num_edges()
        )));
    }
    let genus = g.num_edges() / 2 - n;
    if let Some(roles) = standard_roles(g) {
        return Ok(StandardForm { moves: Vec::new(), graph: g.clone(), genus, boundaries: n, roles });
    }
    let x = g
        .vertices()
        .iter()
        .max_by_key(|v| (v.order.len(), std::cmp::Reverse(v.id)))
        .map(|v| v.id)
        .expect("nonempty");
    let mut r = Reducer { g: g.clone(), x, moves: Vec::new() };
    r.collapse()?;
    let blocks = r.pair_handles()?;
    r.group_boundaries(&blocks)?;
    let roles = standard_roles(&r.g).ok_or_else(|| {
        Error::Precondition("reduction did not reach the standard diagram".into())
    })?;
    Ok(StandardForm { moves: r.moves, graph: r.g, genus, boundaries: n, roles })
}

/// If `g` has the standard shape, name each edge by its role.
pub fn standard_roles(g: &RibbonGraph) -> Option<BTreeMap<EdgeId, String>> {
    let multi: Vec<_> = g.vertices().iter().filter(|v| v.order.len() > 1).collect();
    if multi.len() != 1 {
        return None;
    }
    let x = multi[0];
    for v in g.vertices() {
        if v.id != x.id && (v.order.len() != 1 || v.order[0].is_target()) {
            return None;
        }
    }
    let ord = &x.order;
    let n = g.num_vertices() - 1;
    if ord.len() < 3 * n || (ord.len() - 3 * n) % 4 != 0 || ord.len() == 3 * n {
        return None;
    }
    let mut roles = BTreeMap::new();
    for i in 0..n {
        let (s, t, u) = (ord[3 * i], ord[3 * i + 1], ord[3 * i + 2]);
        let ok = !s.is_target()
            && u == HalfEdge::ta(s.edge)
            && t.is_target()
            && g.start_vertex(t.edge) != Some(x.id);
        if !ok {
            return None;
        }
        roles.insert(s.edge, format!("m{}", i + 1));
        roles.insert(t.edge, format!("n{}", i + 1));
    }
    let rest = &ord[3 * n..];
    for (j, blk) in rest.chunks(4).enumerate() {
        let (a, b) = (blk[0].edge, blk[1].edge);
        let expect = [HalfEdge::st(a), HalfEdge::st(b), HalfEdge::ta(a), HalfEdge::ta(b)];
        if blk != expect || a == b {
            return None;
        }
        roles.insert(a, format!("a{}", j + 1));
        roles.insert(b, format!("b{}", j + 1));
    }
    Some(roles)
}

/// Whether `g` is the standard chord diagram up to relabeling.
pub fn is_standard(g: &RibbonGraph) -> bool {
    standard_roles(g).is_some()
}

/// Compare against [`StandardGraph::new`] after renaming by role.
pub fn matches_standard(form: &StandardForm) -> Result<bool> {
    let std = StandardGraph::new(form.genus, form.boundaries)?;
    fn shape(g: &RibbonGraph, name: &dyn Fn(EdgeId) -> String) -> Vec<Vec<String>> {
        let mut v: Vec<Vec<String>> = g
            .vertices()
            .iter()
            .map(|v| {
                v.order
                    .iter()
                    .map(|h| format!("{}({})", if h.is_target() { "ta" } else { "st" }, name(h.edge)))
                    .collect()
            })
            .collect();
        v.sort();
        v
    }
    let ours = shape(&form.graph, &|e| form.roles.get(&e).cloned().unwrap_or_default());
    let theirs = shape(&std.graph, &|e| std.graph.edge_name(e));
    Ok(ours == theirs)
}

/// All slides that are valid on `g`.
pub fn valid_slides(g: &RibbonGraph) -> Vec<SlideDescriptor> {
    let mut out = Vec::new();
    for along in g.edges() {
        for variant in Variant::ALL {
            for v in g.vertices() {
                for &moved in &v.order {
                    let s = SlideDescriptor::new(along, variant, moved);
                    if g.check_slide(&s).is_ok() {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

/// A random graph with one cilium per vertex and face, reached from the
/// standard graph (g, n) by `steps` random slides and reversals.
pub fn random_admissible<R: rand::Rng>(genus: usize, boundaries: usize, steps: usize, rng: &mut R) -> Result<RibbonGraph> {
    let mut g = StandardGraph::new(genus, boundaries)?.graph;
    for _ in 0..steps {
        if rng.gen_bool(0.2) {
            let es = g.edge_ids();
            let e = es[rng.gen_range(0..es.len())];
            g = g.reversed(e)?;
        } else {
            let ss = valid_slides(&g);
            if ss.is_empty() {
                continue;
            }
            let s = ss[rng.gen_range(0..ss.len())];
            g = g.slide(&s)?.0;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{genus, torus};

    #[test]
    fn standard_graph_needs_no_moves() {
        for (g, n) in [(1, 0), (2, 0), (1, 2), (2, 2)] {
            let s = StandardGraph::new(g, n).unwrap();
            let f = standard_form(&s.graph).unwrap();
            assert!(f.moves.is_empty());
            assert_eq!((f.genus, f.boundaries), (g, n));
            assert!(matches_standard(&f).unwrap());
        }
    }

    #[test]
    fn reduces_reversed_torus() {
        // Reading order of the torus diagram taken as the stored order.
        let g = RibbonGraph::from_orders(&["ta(b) ta(a) st(b) st(a)"]).unwrap();
        let f = standard_form(&g).unwrap();
        assert!(is_standard(&f.graph));
        assert_eq!(f.genus, 1);
        assert!(matches_standard(&f).unwrap());
    }

    #[test]
    fn reduces_random_walks() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for (g, n) in [(1, 1), (2, 0), (2, 1), (1, 3)] {
            for _ in 0..5 {
                let start = random_admissible(g, n, 40, &mut rng).unwrap();
                let f = standard_form(&start).unwrap();
                assert!(is_standard(&f.graph));
                assert!(matches_standard(&f).unwrap());
                assert_eq!(genus(&f.graph).unwrap(), genus(&start).unwrap());
                // Replaying the moves reproduces the result.
                let mut h = start.clone();
                for m in &f.moves {
                    h = match m {
                        Move::Slide(s) => h.slide(s).unwrap().0,
                        Move::Reverse(e) => h.reversed(*e).unwrap(),
                    };
                }
                assert_eq!(h, f.graph);
            }
        }
    }

    #[test]
    fn rejects_bad_cilia() {
        let g = RibbonGraph::from_orders(&["st(a) ta(a)"]).unwrap();
        assert!(standard_form(&g).is_err());
    }

    #[test]
    fn torus_is_standard() {
        assert!(is_standard(&torus()));
    }
}
