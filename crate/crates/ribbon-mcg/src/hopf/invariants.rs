//! Coinvariants, invariants and biinvariants of the state space at a
//! cilium, by exact row reduction.

use super::{check_dim, FinHopf, LinOperator, Matrix, Scalar, Tensor, HLEG};
use crate::error::{Error, Result};
use crate::graph::{ciliated_face, EdgeId, RibbonGraph, VertexId};

/// Biinvariant data at the cilium of `vertex`.
///
/// * `kernel` (N×k): basis of the coinvariants, ι.
/// * `ann` (r×N): functionals vanishing on `h⊳x − ε(h)x`; the projection π
///   onto the invariants in these coordinates.
/// * `image` (r×m) and `projection` (m×k): the factorization
///   `ann · kernel = image · projection`, i.e. I∘P = π∘ι.
#[derive(Clone, Debug)]
pub struct LinearBiinv<F> {
    pub graph: RibbonGraph,
    pub vertex: VertexId,
    pub edges: Vec<EdgeId>,
    pub dim: usize,
    pub kernel: Matrix<F>,
    pub ann: Matrix<F>,
    pub image: Matrix<F>,
    pub projection: Matrix<F>,
}

/// Coinvariant condition matrix: columns δ(x_j) − η⊗x_j.
fn coaction_defect<F: Scalar>(h: &FinHopf<F>, g: &RibbonGraph, v: VertexId, n: usize) -> Result<Matrix<F>> {
    let face = ciliated_face(g, v)?;
    let edges = g.edge_ids();
    let d = h.dim();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let x = Tensor::basis_index(edges.clone(), d, j);
        let y = h.path_coact(&face, &x)?;
        let triv = x.insert_leg(HLEG, h.unit())?;
        cols.push(y.sub(&triv).to_dense(d));
    }
    Ok(Matrix::from_columns(&cols, n * d))
}

/// Rows `h⊳x − ε(h)x` for basis h and x.
fn action_defect<F: Scalar>(h: &FinHopf<F>, g: &RibbonGraph, v: VertexId, n: usize) -> Result<Matrix<F>> {
    let edges = g.edge_ids();
    let d = h.dim();
    let mut rows = Vec::with_capacity(n * d);
    for j in 0..n {
        let x = Tensor::basis_index(edges.clone(), d, j);
        for b in 0..d {
            let y = h.vertex_act(g, v, b, &x)?.sub(&x.scale(&h.counit()[b]));
            if !y.is_zero() {
                rows.push(y.to_dense(d));
            }
        }
    }
    Ok(Matrix::from_rows(rows, n))
}

impl<F: Scalar> LinearBiinv<F> {
    pub fn compute(h: &FinHopf<F>, g: &RibbonGraph, v: VertexId, max_dim: usize) -> Result<Self> {
        let edges = g.edge_ids();
        let d = h.dim();
        let n = check_dim(d, edges.len(), max_dim)?;
        let k = coaction_defect(h, g, v, n)?.kernel();
        let kernel = Matrix::from_columns(&k, n);
        let w = action_defect(h, g, v, n)?;
        let ann_rows = w.kernel();
        let ann = Matrix::from_rows(ann_rows, n);
        let b = ann.mul(&kernel);
        let (_, pivots) = b.rref();
        let image = b.select_columns(&pivots);
        let projection = image.solve(&b).expect("columns span the image");
        Ok(LinearBiinv { graph: g.clone(), vertex: v, edges, dim: d, kernel, ann, image, projection })
    }

    pub fn coinvariant_dim(&self) -> usize {
        self.kernel.cols
    }

    pub fn invariant_dim(&self) -> usize {
        self.ann.rows
    }

    pub fn biinvariant_dim(&self) -> usize {
        self.image.cols
    }

    /// The map induced on biinvariants: the unique φ with
    /// `I'∘φ∘P = π'∘L∘ι`. The operator must intertwine the action and
    /// coaction at the cilium (checked exactly).
    pub fn induced(&self, h: &FinHopf<F>, target: &LinearBiinv<F>, op: &LinOperator<F>) -> Result<Matrix<F>> {
        check_yd_equivariance(h, &self.graph, &target.graph, self.vertex, op)?;
        let l = op.to_matrix();
        if l.cols != self.kernel.rows || l.rows != target.ann.cols {
            return Err(Error::Precondition("operator does not match the state spaces".into()));
        }
        let y = target.ann.mul(&l).mul(&self.kernel);
        let (_, pivots) = self.ann.mul(&self.kernel).rref();
        let phi = target
            .image
            .solve(&y.select_columns(&pivots))
            .ok_or_else(|| Error::NotEquivariant("image leaves the biinvariants".into()))?;
        if target.image.mul(&phi).mul(&self.projection) != y {
            return Err(Error::NotEquivariant("operator does not descend to the biinvariants".into()));
        }
        Ok(phi)
    }
}

/// Exact check that `op` intertwines the vertex action and the face
/// coaction at the cilium of `v`.
pub fn check_yd_equivariance<F: Scalar>(
    h: &FinHopf<F>,
    domain: &RibbonGraph,
    codomain: &RibbonGraph,
    v: VertexId,
    op: &LinOperator<F>,
) -> Result<()> {
    let f_dom = ciliated_face(domain, v)?;
    let f_cod = ciliated_face(codomain, v)?;
    for (j, col) in op.columns.iter().enumerate() {
        let x = Tensor::basis_index(op.domain.clone(), h.dim(), j);
        for b in 0..h.dim() {
            let lhs = op.apply(&h.vertex_act(domain, v, b, &x)?)?;
            let rhs = h.vertex_act(codomain, v, b, col)?;
            if lhs != rhs {
                return Err(Error::NotEquivariant(format!(
                    "action of {} on basis vector {j}",
                    h.basis[b]
                )));
            }
        }
        let lhs = h.path_coact(&f_cod, col)?;
        let rhs = op.apply(&h.path_coact(&f_dom, &x)?)?;
        if lhs != rhs {
            return Err(Error::NotEquivariant(format!("coaction on basis vector {j}")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{torus, StandardGraph};
    use crate::group::{self, FiniteGroup};
    use crate::hopf::{DEFAULT_MAX_DIM, Q};

    #[test]
    fn group_algebra_matches_group_backend() {
        let grp = FiniteGroup::by_name("S3").unwrap();
        let h: FinHopf<Q> = FinHopf::group_algebra(&grp).with_pivot_named("e").unwrap();
        let t = torus();
        let v = t.vertices()[0].id;
        let lin = LinearBiinv::compute(&h, &t, v, DEFAULT_MAX_DIM).unwrap();
        let flat = group::coinvariants(&t, v, &grp, 0, 1000).unwrap();
        assert_eq!(lin.coinvariant_dim(), flat.len());
        let orbits = group::Biinvariants::compute(&t, v, &grp, 0, 1000).unwrap();
        assert_eq!(lin.biinvariant_dim(), orbits.num_orbits());
        // I∘P = π∘ι
        assert_eq!(lin.image.mul(&lin.projection), lin.ann.mul(&lin.kernel));
    }

    #[test]
    fn trivial_coaction_gives_full_space() {
        // No edges at the cilium: everything is coinvariant.
        let g = RibbonGraph::from_orders(&["", "st(a) ta(a)"]).unwrap();
        let h: FinHopf<Q> = FinHopf::by_name("Z2").unwrap().with_pivot_named("e").unwrap();
        let v = g.vertices()[0].id;
        let lin = LinearBiinv::compute(&h, &g, v, DEFAULT_MAX_DIM).unwrap();
        assert_eq!(lin.coinvariant_dim(), 2);
    }

    #[test]
    fn sweedler_torus_dimensions() {
        let h: FinHopf<Q> = FinHopf::sweedler4().unwrap().with_pivot_named("g").unwrap();
        let t = torus();
        let v = t.vertices()[0].id;
        let lin = LinearBiinv::compute(&h, &t, v, DEFAULT_MAX_DIM).unwrap();
        assert_eq!(lin.image.mul(&lin.projection), lin.ann.mul(&lin.kernel));
        assert!(lin.biinvariant_dim() <= lin.coinvariant_dim());
        let id = LinOperator::identity(t.edge_ids(), 4, DEFAULT_MAX_DIM).unwrap();
        let phi = lin.induced(&h, &lin, &id).unwrap();
        assert_eq!(phi, Matrix::identity(lin.biinvariant_dim()));
    }

    #[test]
    fn non_equivariant_matrix_is_rejected() {
        let s = StandardGraph::new(1, 0).unwrap();
        let h: FinHopf<Q> = FinHopf::sweedler4().unwrap().with_pivot_named("g").unwrap();
        // Project everything onto a single basis vector.
        let edges = s.graph.edge_ids();
        let op = LinOperator::from_fn(edges.clone(), 4, DEFAULT_MAX_DIM, |x: &Tensor<Q>| {
            let total = x.terms.values().fold(Q::from_i64(0), |a: Q, c: &Q| a + c.clone());
            Ok(Tensor::basis(edges.clone(), vec![2, 0]).scale(&total))
        })
        .unwrap();
        assert!(check_yd_equivariance(&h, &s.graph, &s.graph, s.base, &op).is_err());
        let lin = LinearBiinv::compute(&h, &s.graph, s.base, DEFAULT_MAX_DIM).unwrap();
        assert!(lin.biinvariant_dim() > 0);
        assert!(lin.induced(&h, &lin, &op).is_err());
    }
}
