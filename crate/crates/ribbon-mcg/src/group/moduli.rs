//! Flat labelings and their conjugation orbits: coinvariants and
//! biinvariants for a finite group.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{FiniteGroup, Labeling, PivotWord, Relabeling};
use crate::error::{Error, Result};
use crate::graph::{ciliated_face, EdgeId, GraphPath, RibbonGraph, VertexId};

/// Default limit on |G|^|E| for exhaustive enumeration.
pub const DEFAULT_MAX_STATES: u128 = 10_000_000;

/// Holonomy of a path: the product of its labels in composition order,
/// with a backward step contributing `p·x⁻¹`.
pub fn path_holonomy(group: &FiniteGroup, pivot: usize, path: &GraphPath, s: &Labeling) -> usize {
    let mut acc = group.identity();
    for step in path.steps.iter().rev() {
        let x = s[&step.edge];
        let f = if step.forward { x } else { group.mul(pivot, group.inv(x)) };
        acc = group.mul(acc, f);
    }
    acc
}

/// Symbolic holonomy of a path in the edge generators.
pub fn path_word(path: &GraphPath) -> PivotWord {
    let mut acc = PivotWord::identity();
    for step in path.steps.iter().rev() {
        let f = if step.forward {
            PivotWord::generator(step.edge)
        } else {
            PivotWord::pivot_power(1).mul(&PivotWord::generator_inv(step.edge))
        };
        acc.mul_assign(&f);
    }
    acc
}

/// Holonomy around the face ciliated at `v`.
pub fn face_holonomy(g: &RibbonGraph, v: VertexId, group: &FiniteGroup, pivot: usize, s: &Labeling) -> Result<usize> {
    let f = ciliated_face(g, v)?;
    Ok(path_holonomy(group, pivot, &f, s))
}

/// Act with `h` at vertex `v`: incoming ends multiply from the left,
/// outgoing ends by `h⁻¹` from the right.
pub fn vertex_act(g: &RibbonGraph, v: VertexId, group: &FiniteGroup, h: usize, s: &Labeling) -> Labeling {
    let mut out = s.clone();
    let Some(vert) = g.vertex(v) else { return out };
    for he in &vert.order {
        let x = out[&he.edge];
        let y = if he.is_target() { group.mul(h, x) } else { group.mul(x, group.inv(h)) };
        out.insert(he.edge, y);
    }
    out
}

/// The relabeling ⊳_v∘(T⊗1)∘δ_f: act at `v` by `p·h⁻¹`, where `h` is the
/// holonomy of the face ciliated at `v`.
pub fn ribbon_relabeling(g: &RibbonGraph, v: VertexId) -> Result<Relabeling> {
    let k = PivotWord::pivot_power(1).mul(&path_word(&ciliated_face(g, v)?).inverse());
    let vert = g.vertex(v).ok_or_else(|| Error::Unknown(format!("vertex {}", g.vertex_name(v))))?;
    let mut r = Relabeling::identity(g.edges());
    for he in &vert.order {
        let x = &r.images[&he.edge];
        let y = if he.is_target() { k.mul(x) } else { x.mul(&k.inverse()) };
        r.images.insert(he.edge, y.reduce());
    }
    Ok(r)
}

fn check_budget(group: &FiniteGroup, edges: usize, max_states: u128) -> Result<u128> {
    let total = (group.order() as u128).checked_pow(edges as u32).unwrap_or(u128::MAX);
    if total > max_states {
        return Err(Error::Budget(format!(
            "{}^{} = {} labelings exceed the budget of {}",
            group.order(),
            edges,
            total,
            max_states
        )));
    }
    Ok(total)
}

fn decode(mut k: u128, order: usize, edges: &[EdgeId]) -> Vec<usize> {
    let mut t = vec![0; edges.len()];
    for slot in t.iter_mut().rev() {
        *slot = (k % order as u128) as usize;
        k /= order as u128;
    }
    t
}

fn to_labeling(edges: &[EdgeId], t: &[usize]) -> Labeling {
    edges.iter().copied().zip(t.iter().copied()).collect()
}

/// Every labeling of the graph, in lexicographic order.
pub fn all_labelings(g: &RibbonGraph, group: &FiniteGroup, max_states: u128) -> Result<Vec<Labeling>> {
    let edges = g.edge_ids();
    let total = check_budget(group, edges.len(), max_states)?;
    Ok((0..total)
        .into_par_iter()
        .map(|k| to_labeling(&edges, &decode(k, group.order(), &edges)))
        .collect())
}

/// Labelings whose holonomy around the face ciliated at `v` is trivial, in
/// lexicographic order.
pub fn coinvariants(
    g: &RibbonGraph,
    v: VertexId,
    group: &FiniteGroup,
    pivot: usize,
    max_states: u128,
) -> Result<Vec<Labeling>> {
    let face = ciliated_face(g, v)?;
    let edges = g.edge_ids();
    let total = check_budget(group, edges.len(), max_states)?;
    Ok((0..total)
        .into_par_iter()
        .filter_map(|k| {
            let s = to_labeling(&edges, &decode(k, group.order(), &edges));
            (path_holonomy(group, pivot, &face, &s) == group.identity()).then_some(s)
        })
        .collect())
}

/// The orbit space of the coinvariants under the vertex action at the
/// cilium.
#[derive(Clone, Debug)]
pub struct Biinvariants {
    pub vertex: VertexId,
    pub edges: Vec<EdgeId>,
    /// Flat labelings in lexicographic order.
    pub coinvariants: Vec<Labeling>,
    /// Orbit index of each coinvariant.
    pub orbit_of: Vec<usize>,
    /// Members of each orbit; the first member is the minimal one.
    pub orbits: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl Biinvariants {
    pub fn compute(
        g: &RibbonGraph,
        v: VertexId,
        group: &FiniteGroup,
        pivot: usize,
        max_states: u128,
    ) -> Result<Self> {
        let edges = g.edge_ids();
        let coinv = coinvariants(g, v, group, pivot, max_states)?;
        let key = |s: &Labeling| edges.iter().map(|e| s[e]).collect::<Vec<_>>();
        let index: HashMap<Vec<usize>, usize> = coinv.iter().enumerate().map(|(i, s)| (key(s), i)).collect();
        let mut parent: Vec<usize> = (0..coinv.len()).collect();
        for (i, s) in coinv.iter().enumerate() {
            for h in 0..group.order() {
                let t = vertex_act(g, v, group, h, s);
                let j = *index.get(&key(&t)).ok_or_else(|| {
                    Error::NotEquivariant("vertex action leaves the coinvariants".into())
                })?;
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    // Keep the smaller index as root: roots are minimal.
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut root_to_orbit: HashMap<usize, usize> = HashMap::new();
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut orbit_of = vec![0; coinv.len()];
        for i in 0..coinv.len() {
            let r = find(&mut parent, i);
            let o = *root_to_orbit.entry(r).or_insert_with(|| {
                orbits.push(Vec::new());
                orbits.len() - 1
            });
            orbits[o].push(i);
            orbit_of[i] = o;
        }
        Ok(Biinvariants { vertex: v, edges, coinvariants: coinv, orbit_of, orbits, index })
    }

    pub fn num_orbits(&self) -> usize {
        self.orbits.len()
    }

    pub fn representative(&self, orbit: usize) -> &Labeling {
        &self.coinvariants[self.orbits[orbit][0]]
    }

    /// Orbit of a labeling, or `None` if it is not flat.
    pub fn orbit_of_labeling(&self, s: &Labeling) -> Option<usize> {
        let key: Vec<usize> = self.edges.iter().map(|e| s.get(e).copied()).collect::<Option<_>>()?;
        self.index.get(&key).map(|&i| self.orbit_of[i])
    }

    /// The map of orbit spaces induced by a labeling map, checked to be
    /// well defined on every orbit member.
    pub fn induced_map<F>(&self, target: &Biinvariants, f: F) -> Result<Vec<usize>>
    where
        F: Fn(&Labeling) -> Result<Labeling> + Sync,
    {
        self.orbits
            .par_iter()
            .enumerate()
            .map(|(o, members)| {
                let mut image = None;
                for &i in members {
                    let t = f(&self.coinvariants[i])?;
                    let j = target.orbit_of_labeling(&t).ok_or_else(|| {
                        Error::NotEquivariant(format!("orbit {o}: image of a flat labeling is not flat"))
                    })?;
                    match image {
                        None => image = Some(j),
                        Some(k) if k != j => {
                            return Err(Error::NotEquivariant(format!(
                                "orbit {o} is not mapped to a single orbit"
                            )))
                        }
                        _ => {}
                    }
                }
                Ok(image.expect("orbits are nonempty"))
            })
            .collect()
    }
}

/// Human-readable labeling, e.g. `a=r, b=s`.
pub fn show_labeling(g: &RibbonGraph, group: &FiniteGroup, s: &Labeling) -> String {
    s.iter()
        .map(|(e, x)| format!("{}={}", g.edge_name(*e), group.element_name(*x)))
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{torus, StandardGraph};
    use itertools::Itertools;

    /// Independent oracle: count tuples with [a1⁻¹,b1][a2⁻¹,b2] = 1.
    fn commutator_count(group: &FiniteGroup) -> usize {
        let n = group.order();
        let comm = |a: usize, b: usize| {
            let ai = group.inv(a);
            group.mul(group.mul(ai, b), group.mul(a, group.inv(b)))
        };
        (0..4)
            .map(|_| 0..n)
            .multi_cartesian_product()
            .filter(|t| group.mul(comm(t[0], t[1]), comm(t[2], t[3])) == 0)
            .count()
    }

    #[test]
    fn genus_two_s3_count() {
        let grp = FiniteGroup::by_name("S3").unwrap();
        let oracle = commutator_count(&grp);
        assert_eq!(oracle, 486);
        let s = StandardGraph::new(2, 0).unwrap();
        let c = coinvariants(&s.graph, s.base, &grp, 0, DEFAULT_MAX_STATES).unwrap();
        assert_eq!(c.len(), oracle);
    }

    #[test]
    fn torus_counts() {
        let t = torus();
        let v = t.vertices()[0].id;
        let z2 = FiniteGroup::by_name("Z2").unwrap();
        let b = Biinvariants::compute(&t, v, &z2, 0, DEFAULT_MAX_STATES).unwrap();
        assert_eq!(b.coinvariants.len(), 4);
        assert_eq!(b.num_orbits(), 4);
        let s3 = FiniteGroup::by_name("S3").unwrap();
        let c = coinvariants(&t, v, &s3, 0, DEFAULT_MAX_STATES).unwrap();
        let commuting = (0..6).cartesian_product(0..6).filter(|&(a, b)| s3.mul(a, b) == s3.mul(b, a)).count();
        assert_eq!(c.len(), commuting);
        // Commuting pairs up to conjugation: 8 classes for S3.
        let b = Biinvariants::compute(&t, v, &s3, 0, DEFAULT_MAX_STATES).unwrap();
        assert_eq!(b.num_orbits(), 8);
    }

    #[test]
    fn genus_two_orbits_match_burnside() {
        // Burnside oracle: orbits = (1/|G|) Σ_h |Fix(h)| over flat tuples.
        let grp = FiniteGroup::by_name("S3").unwrap();
        let s = StandardGraph::new(2, 0).unwrap();
        let b = Biinvariants::compute(&s.graph, s.base, &grp, 0, DEFAULT_MAX_STATES).unwrap();
        let fixed: usize = (0..6)
            .map(|h| {
                b.coinvariants
                    .iter()
                    .filter(|x| vertex_act(&s.graph, s.base, &grp, h, x) == **x)
                    .count()
            })
            .sum();
        assert_eq!(b.num_orbits(), fixed / 6);
        // Representatives are the minimal members.
        for (o, m) in b.orbits.iter().enumerate() {
            assert_eq!(m[0], *m.iter().min().unwrap());
            assert_eq!(b.orbit_of[m[0]], o);
        }
    }

    #[test]
    fn empty_graph_single_orbit() {
        let g = RibbonGraph::from_orders(&[""]).unwrap();
        let v = g.vertices()[0].id;
        let grp = FiniteGroup::by_name("S3").unwrap();
        let b = Biinvariants::compute(&g, v, &grp, 0, DEFAULT_MAX_STATES).unwrap();
        assert_eq!(b.num_orbits(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let s = StandardGraph::new(2, 0).unwrap();
        let grp = FiniteGroup::by_name("S3").unwrap();
        assert!(matches!(coinvariants(&s.graph, s.base, &grp, 0, 100), Err(Error::Budget(_))));
    }

    #[test]
    fn torus_face_word() {
        let t = torus();
        let f = ciliated_face(&t, t.vertices()[0].id).unwrap();
        let w = path_word(&f);
        assert_eq!(w.display_with(|e| t.edge_name(e)), "p^2 a^-1 b a b^-1");
    }
}
