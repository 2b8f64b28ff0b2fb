//! Straight-line programs of primitive label operations, and their
//! interpretation in each backend.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, RibbonGraph};
use crate::group::{FiniteGroup, Labeling, PivotWord, Relabeling};
use crate::hopf::{FinHopf, LinOperator, Scalar, Tensor};

/// Primitive operations on edge labels. Every elementary slide compiles
/// to these.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Prim {
    /// T on one edge (orientation reversal).
    Reverse(EdgeId),
    /// The canonical slide of the target end of `moved` along `along`:
    /// a⊗b ↦ a₂ ⊗ a₁b, or a₂ ⊗ S⁻¹(a₁)b when `inverse`.
    Slide { along: EdgeId, moved: EdgeId, inverse: bool },
    /// New edge labelled by the unit.
    Insert(EdgeId),
    /// Remove an edge by applying the counit.
    Delete(EdgeId),
}

impl Prim {
    /// Inverse, where one exists (insertion and deletion are only one-sided
    /// inverses).
    pub fn inverse(self) -> Option<Prim> {
        match self {
            Prim::Reverse(_) => Some(self),
            Prim::Slide { along, moved, inverse } => Some(Prim::Slide { along, moved, inverse: !inverse }),
            Prim::Insert(_) | Prim::Delete(_) => None,
        }
    }
}

/// An operator between the state spaces of two ribbon graphs, given as a
/// sequence of primitives applied first to last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Program {
    pub domain: RibbonGraph,
    pub codomain: RibbonGraph,
    pub prims: Vec<Prim>,
}

impl Program {
    pub fn identity(g: &RibbonGraph) -> Self {
        Program { domain: g.clone(), codomain: g.clone(), prims: Vec::new() }
    }

    /// Run `self`, then `next`.
    pub fn then(&self, next: &Program) -> Result<Program> {
        if self.codomain != next.domain {
            return Err(Error::Precondition("programs are not composable: graphs differ".into()));
        }
        let mut prims = self.prims.clone();
        prims.extend_from_slice(&next.prims);
        Ok(Program { domain: self.domain.clone(), codomain: next.codomain.clone(), prims })
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Program) -> Result<Program> {
        first.then(self)
    }

    pub fn pow(&self, k: usize) -> Result<Program> {
        let mut out = Program::identity(&self.domain);
        for _ in 0..k {
            out = out.then(self)?;
        }
        Ok(out)
    }

    /// Inverse for programs without insertions or deletions.
    pub fn inverse(&self) -> Result<Program> {
        let prims = self
            .prims
            .iter()
            .rev()
            .map(|p| p.inverse().ok_or_else(|| Error::Precondition("program inserts or deletes edges".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Program { domain: self.codomain.clone(), codomain: self.domain.clone(), prims })
    }

    /// Group-case interpretation: new labels as words in the old ones.
    pub fn relabeling(&self) -> Relabeling {
        let mut cur: BTreeMap<EdgeId, PivotWord> =
            self.domain.edges().map(|e| (e, PivotWord::generator(e))).collect();
        let p = PivotWord::pivot_power(1);
        for prim in &self.prims {
            match *prim {
                Prim::Reverse(e) => {
                    let w = p.mul(&cur[&e].inverse());
                    cur.insert(e, w);
                }
                Prim::Slide { along, moved, inverse } => {
                    let a = if inverse { cur[&along].inverse() } else { cur[&along].clone() };
                    let w = a.mul(&cur[&moved]);
                    cur.insert(moved, w);
                }
                Prim::Insert(e) => {
                    cur.insert(e, PivotWord::identity());
                }
                Prim::Delete(e) => {
                    cur.remove(&e);
                }
            }
        }
        Relabeling { domain: self.domain.edges().collect(), images: cur }
    }

    /// Apply directly to a labeling in a finite group.
    pub fn apply_labeling(&self, group: &FiniteGroup, pivot: usize, s: &Labeling) -> Labeling {
        let mut cur = s.clone();
        for prim in &self.prims {
            match *prim {
                Prim::Reverse(e) => {
                    let x = cur[&e];
                    cur.insert(e, group.mul(pivot, group.inv(x)));
                }
                Prim::Slide { along, moved, inverse } => {
                    let a = cur[&along];
                    let a = if inverse { group.inv(a) } else { a };
                    let y = group.mul(a, cur[&moved]);
                    cur.insert(moved, y);
                }
                Prim::Insert(e) => {
                    cur.insert(e, group.identity());
                }
                Prim::Delete(e) => {
                    cur.remove(&e);
                }
            }
        }
        cur
    }

    /// Apply to a vector of H^{⊗E}; legs beyond the graph's edges (such as
    /// the coacting leg) are left alone.
    pub fn apply_tensor<F: Scalar>(&self, h: &FinHopf<F>, x: &Tensor<F>) -> Result<Tensor<F>> {
        let mut cur = x.clone();
        for prim in &self.prims {
            cur = match *prim {
                Prim::Reverse(e) => cur.map_leg(e, |i| h.t_basis(i))?,
                Prim::Slide { along, moved, inverse } => {
                    cur.map_pair(along, moved, |a, b| h.slide_pair(a, b, inverse))?
                }
                Prim::Insert(e) => cur.insert_leg(e, h.unit())?,
                Prim::Delete(e) => cur.remove_leg(e, h.counit())?,
            };
        }
        Ok(cur)
    }

    /// Materialize as an exact matrix.
    pub fn linear<F: Scalar>(&self, h: &FinHopf<F>, max_dim: usize) -> Result<LinOperator<F>> {
        let op = LinOperator::from_fn(self.domain.edge_ids(), h.dim(), max_dim, |x| self.apply_tensor(h, x))?;
        if op.codomain != self.codomain.edge_ids() {
            return Err(Error::Precondition("program output legs differ from its codomain edges".into()));
        }
        Ok(op)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::mcg_word;
    use crate::graph::{StandardGraph, VertexId};
    use crate::hopf::{Fp, DEFAULT_MAX_DIM, Q};

    fn check_full_twist<F: Scalar>(h: &FinHopf<F>) {
        let s = StandardGraph::new(1, 0).unwrap();
        let p = mcg_word(&s.graph, Some(&s), "(D_b1 D_a1 D_b1)^4").unwrap();
        let lhs = p.linear(h, DEFAULT_MAX_DIM).unwrap();
        let rhs = h.ribbon_operator(&s.graph, VertexId(0), DEFAULT_MAX_DIM).unwrap();
        assert_eq!(lhs.first_difference(&rhs), None, "{}", h.name);
    }

    #[test]
    fn torus_full_twist_is_ribbon_element() {
        let s3 = FiniteGroup::by_name("S3").unwrap();
        check_full_twist(&FinHopf::<Q>::group_algebra(&s3).with_pivot_named("e").unwrap());
        for piv in FinHopf::<Q>::sweedler4().unwrap().find_pivots() {
            check_full_twist(&FinHopf::<Q>::sweedler4().unwrap().with_pivot(piv).unwrap());
        }
        let f7 = FinHopf::<Fp<7>>::sweedler4().unwrap();
        let piv = f7.find_pivots().remove(0);
        check_full_twist(&f7.with_pivot(piv).unwrap());
    }

    #[test]
    fn labeling_matches_relabeling() {
        let s = StandardGraph::new(2, 0).unwrap();
        let grp = FiniteGroup::by_name("D4").unwrap();
        let z = grp.center()[1];
        let p = mcg_word(&s.graph, Some(&s), "D_{gamma_1_2} D_{delta_2}^-1 D_{alpha_1}").unwrap();
        let r = p.relabeling();
        let lab: Labeling = s.graph.edges().zip([1, 4, 6, 3]).collect();
        assert_eq!(p.apply_labeling(&grp, z, &lab), r.evaluate(&grp, z, &lab).unwrap());
    }

    #[test]
    fn inverse_program_undoes() {
        let s = StandardGraph::new(1, 0).unwrap();
        let p = mcg_word(&s.graph, Some(&s), "D_a1 D_b1").unwrap();
        let h = FinHopf::<Q>::sweedler4().unwrap().with_pivot_named("g").unwrap();
        let m = p.linear(&h, DEFAULT_MAX_DIM).unwrap();
        let mi = p.inverse().unwrap().linear(&h, DEFAULT_MAX_DIM).unwrap();
        let id = LinOperator::identity(s.graph.edge_ids(), h.dim(), DEFAULT_MAX_DIM).unwrap();
        assert_eq!(mi.compose(&m).unwrap().first_difference(&id), None);
        let s2 = StandardGraph::new(2, 0).unwrap();
        let with_insert = mcg_word(&s2.graph, Some(&s2), "D_{delta_1}").unwrap();
        assert!(with_insert.inverse().is_err());
    }
}
