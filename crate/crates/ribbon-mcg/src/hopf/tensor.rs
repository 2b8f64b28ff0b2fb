//! Vectors and operators on the edge state space H^{⊗E}.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{FinHopf, Matrix, Scalar, Sparse};
use crate::error::{Error, Result};
use crate::graph::{ciliated_face, EdgeId, GraphPath, RibbonGraph, VertexId};

/// Pseudo-edge carrying the coacting (or acting) copy of H. Its id is
/// larger than every real edge, so it is always the last leg.
pub const HLEG: EdgeId = EdgeId(u32::MAX);

/// Default bound on d^|E| for materialized operators.
pub const DEFAULT_MAX_DIM: usize = 4096;

/// A vector in H^{⊗E}: legs ordered by edge id, terms keyed by the basis
/// index on each leg.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<F> {
    pub edges: Vec<EdgeId>,
    pub terms: BTreeMap<Vec<u16>, F>,
}

impl<F: Scalar> Tensor<F> {
    pub fn zero(mut edges: Vec<EdgeId>) -> Self {
        edges.sort();
        Tensor { edges, terms: BTreeMap::new() }
    }

    pub fn basis(edges: Vec<EdgeId>, key: Vec<u16>) -> Self {
        let mut t = Self::zero(edges);
        assert_eq!(t.edges.len(), key.len(), "basis key length");
        t.terms.insert(key, F::one());
        t
    }

    /// Basis vector number `idx` in lexicographic order.
    pub fn basis_index(edges: Vec<EdgeId>, dim: usize, idx: usize) -> Self {
        let n = edges.len();
        Self::basis(edges, decode_index(idx, dim, n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: Vec<u16>, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &Tensor<F>) -> Tensor<F> {
        assert_eq!(self.edges, other.edges, "tensor legs");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Tensor<F> {
        let mut out = Tensor::zero(self.edges.clone());
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor<F>) -> Tensor<F> {
        self.add(&other.scale(&-F::one()))
    }

    pub fn leg(&self, e: EdgeId) -> Result<usize> {
        self.edges
            .binary_search(&e)
            .map_err(|_| Error::Unknown(format!("edge e{} is not a leg of the state", e.0)))
    }

    /// Apply a linear map to one leg, given on basis elements.
    pub fn map_leg<'a, M>(&self, e: EdgeId, map: M) -> Result<Tensor<F>>
    where
        M: Fn(usize) -> Result<&'a Sparse<F>>,
        F: 'a,
    {
        let l = self.leg(e)?;
        let mut out = Tensor::zero(self.edges.clone());
        for (k, c) in &self.terms {
            for (j, v) in map(k[l] as usize)? {
                let mut k2 = k.clone();
                k2[l] = *j as u16;
                out.add_term(k2, c.clone() * v.clone());
            }
        }
        Ok(out)
    }

    /// Apply a map H⊗H → H⊗H to the legs of `a` and `b`.
    pub fn map_pair<M>(&self, a: EdgeId, b: EdgeId, map: M) -> Result<Tensor<F>>
    where
        M: Fn(usize, usize) -> Result<Vec<(usize, usize, F)>>,
    {
        let (la, lb) = (self.leg(a)?, self.leg(b)?);
        let mut out = Tensor::zero(self.edges.clone());
        for (k, c) in &self.terms {
            for (i, j, v) in map(k[la] as usize, k[lb] as usize)? {
                let mut k2 = k.clone();
                k2[la] = i as u16;
                k2[lb] = j as u16;
                out.add_term(k2, c.clone() * v);
            }
        }
        Ok(out)
    }

    /// Tensor in a new leg `e` carrying the vector `v`.
    pub fn insert_leg(&self, e: EdgeId, v: &[F]) -> Result<Tensor<F>> {
        if self.edges.contains(&e) {
            return Err(Error::Precondition(format!("edge e{} is already a leg", e.0)));
        }
        let mut edges = self.edges.clone();
        let pos = edges.partition_point(|x| *x < e);
        edges.insert(pos, e);
        let mut out = Tensor::zero(edges);
        for (k, c) in &self.terms {
            for (i, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let mut k2 = k.clone();
                k2.insert(pos, i as u16);
                out.add_term(k2, c.clone() * x.clone());
            }
        }
        Ok(out)
    }

    /// Contract leg `e` with a covector.
    pub fn remove_leg(&self, e: EdgeId, covector: &[F]) -> Result<Tensor<F>> {
        let l = self.leg(e)?;
        let mut edges = self.edges.clone();
        edges.remove(l);
        let mut out = Tensor::zero(edges);
        for (k, c) in &self.terms {
            let w = &covector[k[l] as usize];
            if w.is_zero() {
                continue;
            }
            let mut k2 = k.clone();
            k2.remove(l);
            out.add_term(k2, c.clone() * w.clone());
        }
        Ok(out)
    }

    /// Dense coordinates (requires `d^|E|` small).
    pub fn to_dense(&self, dim: usize) -> Vec<F> {
        let n = dim.pow(self.edges.len() as u32);
        let mut v = vec![F::zero(); n];
        for (k, c) in &self.terms {
            v[encode_index(k, dim)] = c.clone();
        }
        v
    }

    pub fn from_dense(edges: Vec<EdgeId>, dim: usize, v: &[F]) -> Self {
        let n = edges.len();
        let mut t = Tensor::zero(edges);
        for (i, c) in v.iter().enumerate() {
            t.add_term(decode_index(i, dim, n), c.clone());
        }
        t
    }

    pub fn show(&self, g: &RibbonGraph, h: &FinHopf<F>) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(k, c)| {
                let legs: Vec<String> = self
                    .edges
                    .iter()
                    .zip(k)
                    .map(|(e, i)| {
                        let name = if *e == HLEG { "H".to_string() } else { g.edge_name(*e) };
                        format!("{name}:{}", h.basis[*i as usize])
                    })
                    .collect();
                format!("{c} [{}]", legs.join(" "))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub fn encode_index(key: &[u16], dim: usize) -> usize {
    key.iter().fold(0, |acc, &i| acc * dim + i as usize)
}

pub fn decode_index(mut idx: usize, dim: usize, legs: usize) -> Vec<u16> {
    let mut k = vec![0u16; legs];
    for slot in k.iter_mut().rev() {
        *slot = (idx % dim) as u16;
        idx /= dim;
    }
    k
}

fn sparse_mul<F: Scalar>(h: &FinHopf<F>, x: &Sparse<F>, y: &Sparse<F>) -> Sparse<F> {
    let mut acc = vec![F::zero(); h.dim()];
    for (i, a) in x {
        for (j, b) in y {
            for (k, c) in h.mul_basis(*i, *j) {
                acc[*k] = acc[*k].clone() + a.clone() * b.clone() * c.clone();
            }
        }
    }
    acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

/// The edge-end structures of one leg.
impl<F: Scalar> FinHopf<F> {
    /// ⊳_{α+}(h ⊗ a) = h·a.
    pub fn act_target(&self, x: &Tensor<F>, e: EdgeId, h: &Sparse<F>) -> Result<Tensor<F>> {
        let table: Vec<Sparse<F>> = (0..self.dim()).map(|a| sparse_mul(self, h, &vec![(a, F::one())])).collect();
        x.map_leg(e, |a| Ok(&table[a]))
    }

    /// ⊳_{α−}(h ⊗ a) = a·S(h).
    pub fn act_start(&self, x: &Tensor<F>, e: EdgeId, h: &Sparse<F>) -> Result<Tensor<F>> {
        let mut sh = vec![F::zero(); self.dim()];
        for (i, c) in h {
            for (j, v) in self.antipode_basis(*i) {
                sh[*j] = sh[*j].clone() + c.clone() * v.clone();
            }
        }
        let sh: Sparse<F> = sh.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let table: Vec<Sparse<F>> = (0..self.dim()).map(|a| sparse_mul(self, &vec![(a, F::one())], &sh)).collect();
        x.map_leg(e, |a| Ok(&table[a]))
    }

    /// δ_{α+}(a) = a₁ ⊗ a₂, the emitted leg becoming [`HLEG`].
    pub fn coact_target(&self, x: &Tensor<F>, e: EdgeId) -> Result<Tensor<F>> {
        self.coact_leg(x, e, true)
    }

    /// δ_{α−}(a) = T(a₂) ⊗ a₁.
    pub fn coact_start(&self, x: &Tensor<F>, e: EdgeId) -> Result<Tensor<F>> {
        self.coact_leg(x, e, false)
    }

    fn coact_leg(&self, x: &Tensor<F>, e: EdgeId, target: bool) -> Result<Tensor<F>> {
        let unit = self.unit().to_vec();
        let with_h = x.insert_leg(HLEG, &unit)?;
        self.coact_accumulate(&with_h, e, target)
    }

    /// Emit the coaction of leg `e` and multiply it onto the right of the
    /// accumulated [`HLEG`].
    fn coact_accumulate(&self, x: &Tensor<F>, e: EdgeId, forward: bool) -> Result<Tensor<F>> {
        let l = x.leg(e)?;
        let hl = x.leg(HLEG)?;
        let mut out = Tensor::zero(x.edges.clone());
        for (k, c) in &x.terms {
            let acc = k[hl] as usize;
            for (j, m, v) in self.comult_basis(k[l] as usize) {
                let (emit, keep): (Sparse<F>, usize) = if forward {
                    (vec![(*j, F::one())], *m)
                } else {
                    (self.t_basis(*m)?.clone(), *j)
                };
                for (r, w) in sparse_mul(self, &vec![(acc, F::one())], &emit) {
                    let mut k2 = k.clone();
                    k2[l] = keep as u16;
                    k2[hl] = r as u16;
                    out.add_term(k2, c.clone() * v.clone() * w);
                }
            }
        }
        Ok(out)
    }

    /// Δ^{n−1}(e_h) as legs h₁ ⊗ … ⊗ h_n with coefficients.
    pub fn iterated_comult(&self, h: usize, n: usize) -> Vec<(Vec<usize>, F)> {
        if n == 0 {
            return vec![(Vec::new(), self.counit()[h].clone())];
        }
        let mut cur = vec![(vec![h], F::one())];
        for _ in 1..n {
            let mut next: BTreeMap<Vec<usize>, F> = BTreeMap::new();
            for (legs, c) in cur {
                let last = *legs.last().expect("nonempty");
                for (j, k, v) in self.comult_basis(last) {
                    let mut l2 = legs[..legs.len() - 1].to_vec();
                    l2.push(*j);
                    l2.push(*k);
                    let e = next.entry(l2).or_insert_with(F::zero);
                    *e = e.clone() + c.clone() * v.clone();
                }
            }
            cur = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        cur
    }

    /// Vertex action of basis element `h` at `v`: h₁ feeds the first end
    /// after the cilium.
    pub fn vertex_act(&self, g: &RibbonGraph, v: VertexId, h: usize, x: &Tensor<F>) -> Result<Tensor<F>> {
        let vert = g.vertex(v).ok_or_else(|| Error::Unknown(format!("vertex {}", g.vertex_name(v))))?;
        let mut out = Tensor::zero(x.edges.clone());
        for (legs, c) in self.iterated_comult(h, vert.order.len()) {
            let mut y = x.scale(&c);
            for (end, hi) in vert.order.iter().zip(legs) {
                let hv = vec![(hi, F::one())];
                y = if end.is_target() {
                    self.act_target(&y, end.edge, &hv)?
                } else {
                    self.act_start(&y, end.edge, &hv)?
                };
            }
            out = out.add(&y);
        }
        Ok(out)
    }

    /// ⊳_v∘(T⊗1)∘δ_f for the face f ciliated at `v`: act at the cilium by
    /// T of the face holonomy.
    pub fn ribbon_operator(&self, g: &RibbonGraph, v: VertexId, max_dim: usize) -> Result<LinOperator<F>> {
        let face = ciliated_face(g, v)?;
        LinOperator::from_fn(g.edge_ids(), self.dim(), max_dim, |x| {
            let y = self.t_on_hleg(&self.path_coact(&face, x)?)?;
            self.vertex_act_from_leg(g, v, &y)
        })
    }

    /// Act with the [`HLEG`] leg of `x` at vertex `v`, consuming it.
    pub fn vertex_act_from_leg(&self, g: &RibbonGraph, v: VertexId, x: &Tensor<F>) -> Result<Tensor<F>> {
        let hl = x.leg(HLEG)?;
        let mut rest = x.edges.clone();
        rest.remove(hl);
        let mut by_h: BTreeMap<usize, Tensor<F>> = BTreeMap::new();
        for (k, c) in &x.terms {
            let mut k2 = k.clone();
            let h = k2.remove(hl) as usize;
            by_h.entry(h).or_insert_with(|| Tensor::zero(rest.clone())).add_term(k2, c.clone());
        }
        let mut out = Tensor::zero(rest);
        for (h, t) in by_h {
            out = out.add(&self.vertex_act(g, v, h, &t)?);
        }
        Ok(out)
    }

    /// Coaction of a closed path (traversal order), emitted on [`HLEG`]: the
    /// edge coactions are applied in composition order and their outputs
    /// multiplied left to right.
    pub fn path_coact(&self, path: &GraphPath, x: &Tensor<F>) -> Result<Tensor<F>> {
        let unit = self.unit().to_vec();
        let mut y = x.insert_leg(HLEG, &unit)?;
        for step in path.steps.iter().rev() {
            y = self.coact_accumulate(&y, step.edge, step.forward)?;
        }
        Ok(y)
    }

    /// Apply T to the [`HLEG`] leg.
    pub fn t_on_hleg(&self, x: &Tensor<F>) -> Result<Tensor<F>> {
        x.map_leg(HLEG, |i| self.t_basis(i))
    }

    /// The canonical slide on legs (a, b): a⊗b ↦ a₂ ⊗ a₁b, or
    /// a₂ ⊗ S⁻¹(a₁)b for the inverse.
    pub fn slide_pair(&self, a: usize, b: usize, inverse: bool) -> Result<Vec<(usize, usize, F)>> {
        let mut out = Vec::new();
        for (j, k, c) in self.comult_basis(a) {
            let left: Sparse<F> = if inverse { self.antipode_inv_basis(*j)?.clone() } else { vec![(*j, F::one())] };
            for (r, w) in sparse_mul(self, &left, &vec![(b, F::one())]) {
                out.push((*k, r, c.clone() * w));
            }
        }
        Ok(out)
    }
}

/// A materialized linear map between state spaces, stored by columns.
#[derive(Clone, Debug, PartialEq)]
pub struct LinOperator<F> {
    pub domain: Vec<EdgeId>,
    pub codomain: Vec<EdgeId>,
    pub dim: usize,
    pub columns: Vec<Tensor<F>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OperatorJson {
    pub codomain: Vec<String>,
    pub domain: Vec<String>,
    /// `[row, column, coefficient]`.
    pub entries: Vec<(usize, usize, String)>,
}

pub fn check_dim(dim: usize, legs: usize, max_dim: usize) -> Result<usize> {
    let n = dim.checked_pow(legs as u32).unwrap_or(usize::MAX);
    if n > max_dim {
        return Err(Error::Budget(format!("state space of dimension {dim}^{legs} exceeds {max_dim}")));
    }
    Ok(n)
}

impl<F: Scalar> LinOperator<F> {
    /// Materialize `f` on every basis vector, in parallel.
    pub fn from_fn<M>(domain: Vec<EdgeId>, dim: usize, max_dim: usize, f: M) -> Result<Self>
    where
        M: Fn(&Tensor<F>) -> Result<Tensor<F>> + Sync,
    {
        let mut domain = domain;
        domain.sort();
        let n = check_dim(dim, domain.len(), max_dim)?;
        let columns = (0..n)
            .into_par_iter()
            .map(|i| f(&Tensor::basis_index(domain.clone(), dim, i)))
            .collect::<Result<Vec<_>>>()?;
        let codomain = columns.first().map(|c| c.edges.clone()).unwrap_or_default();
        if columns.iter().any(|c| c.edges != codomain) {
            return Err(Error::Precondition("operator columns have different legs".into()));
        }
        Ok(LinOperator { domain, codomain, dim, columns })
    }

    pub fn identity(domain: Vec<EdgeId>, dim: usize, max_dim: usize) -> Result<Self> {
        Self::from_fn(domain, dim, max_dim, |x| Ok(x.clone()))
    }

    /// Apply to a tensor whose leading legs are the domain; trailing legs
    /// (such as [`HLEG`]) are carried along.
    pub fn apply(&self, x: &Tensor<F>) -> Result<Tensor<F>> {
        let n = self.domain.len();
        if x.edges.len() < n || x.edges[..n] != self.domain[..] {
            return Err(Error::Precondition("state does not match the operator's domain".into()));
        }
        let mut edges = self.codomain.clone();
        edges.extend_from_slice(&x.edges[n..]);
        let mut out = Tensor { edges, terms: BTreeMap::new() };
        for (k, c) in &x.terms {
            let col = &self.columns[encode_index(&k[..n], self.dim)];
            for (k2, v) in &col.terms {
                let mut key = k2.clone();
                key.extend_from_slice(&k[n..]);
                out.add_term(key, c.clone() * v.clone());
            }
        }
        Ok(out)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &LinOperator<F>) -> Result<LinOperator<F>> {
        if first.codomain != self.domain {
            return Err(Error::Precondition("operators are not composable".into()));
        }
        let columns = first.columns.iter().map(|c| self.apply(c)).collect::<Result<Vec<_>>>()?;
        Ok(LinOperator { domain: first.domain.clone(), codomain: self.codomain.clone(), dim: self.dim, columns })
    }

    pub fn to_matrix(&self) -> Matrix<F> {
        let rows = self.dim.pow(self.codomain.len() as u32);
        let cols: Vec<Vec<F>> = self.columns.iter().map(|c| c.to_dense(self.dim)).collect();
        Matrix::from_columns(&cols, rows)
    }

    pub fn from_matrix(domain: Vec<EdgeId>, codomain: Vec<EdgeId>, dim: usize, m: &Matrix<F>) -> Self {
        let columns = (0..m.cols).map(|j| Tensor::from_dense(codomain.clone(), dim, &m.column(j))).collect();
        LinOperator { domain, codomain, dim, columns }
    }

    /// First basis column on which two operators differ.
    pub fn first_difference(&self, other: &LinOperator<F>) -> Option<usize> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Some(0);
        }
        self.columns.iter().zip(&other.columns).position(|(a, b)| a != b)
    }

    pub fn to_json(&self, g: &RibbonGraph) -> OperatorJson {
        let names = |es: &[EdgeId]| es.iter().map(|e| g.edge_name(*e)).collect();
        let mut entries = Vec::new();
        for (j, c) in self.columns.iter().enumerate() {
            for (k, v) in &c.terms {
                entries.push((encode_index(k, self.dim), j, v.to_string()));
            }
        }
        entries.sort_by_key(|(r, c, _)| (*c, *r));
        OperatorJson { codomain: names(&self.codomain), domain: names(&self.domain), entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{ciliated_face, torus};
    use crate::hopf::Q;

    fn sweedler() -> FinHopf<Q> {
        FinHopf::sweedler4().unwrap().with_pivot_named("g").unwrap()
    }

    #[test]
    fn unit_acts_trivially() {
        let h = sweedler();
        let t = torus();
        let v = t.vertices()[0].id;
        let edges = t.edge_ids();
        for i in 0..16 {
            let x = Tensor::basis_index(edges.clone(), 4, i);
            assert_eq!(h.vertex_act(&t, v, 0, &x).unwrap(), x);
            let unit = vec![(0, Q::from_i64(1))];
            assert_eq!(h.act_target(&x, edges[0], &unit).unwrap(), x);
        }
    }

    #[test]
    fn counit_on_coacting_leg_is_identity() {
        let h = sweedler();
        let t = torus();
        let f = ciliated_face(&t, t.vertices()[0].id).unwrap();
        for i in 0..16 {
            let x = Tensor::basis_index(t.edge_ids(), 4, i);
            let y = h.path_coact(&f, &x).unwrap();
            assert_eq!(y.remove_leg(HLEG, h.counit()).unwrap(), x);
        }
    }

    #[test]
    fn module_structures_commute() {
        // ⊳_{α+} and ⊳_{α−} on the same leg commute, for all basis pairs.
        let h = sweedler();
        let e = EdgeId(0);
        for (a, b, x) in itertools::iproduct!(0..4, 0..4, 0..4) {
            let s = Tensor::basis(vec![e], vec![x]);
            let (ha, hb) = (vec![(a, Q::from_i64(1))], vec![(b, Q::from_i64(1))]);
            let l = h.act_start(&h.act_target(&s, e, &ha).unwrap(), e, &hb).unwrap();
            let r = h.act_target(&h.act_start(&s, e, &hb).unwrap(), e, &ha).unwrap();
            assert_eq!(l, r);
        }
    }

    #[test]
    fn hopf_module_identity() {
        // δ_{α+}(h ⊳_{α+} a) = h₁a₁ ⊗ h₂a₂.
        let h = sweedler();
        let e = EdgeId(0);
        for (hb, x) in itertools::iproduct!(0..4usize, 0..4u16) {
            let s = Tensor::basis(vec![e], vec![x]);
            let lhs = h.coact_target(&h.act_target(&s, e, &vec![(hb, Q::from_i64(1))]).unwrap(), e).unwrap();
            let mut rhs = Tensor::zero(vec![e, HLEG]);
            for (h1, h2, c) in h.comult_basis(hb) {
                for (a1, a2, d) in h.comult_basis(x as usize) {
                    for (l, u) in h.mul_basis(*h1, *a1) {
                        for (r, w) in h.mul_basis(*h2, *a2) {
                            rhs.add_term(vec![*r as u16, *l as u16], c.clone() * d.clone() * u.clone() * w.clone());
                        }
                    }
                }
            }
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn operator_roundtrip() {
        let h = sweedler();
        let edges = vec![EdgeId(0), EdgeId(1)];
        let op = LinOperator::from_fn(edges.clone(), 4, DEFAULT_MAX_DIM, |x| {
            x.map_pair(EdgeId(0), EdgeId(1), |a, b| h.slide_pair(a, b, false))
        })
        .unwrap();
        let inv = LinOperator::from_fn(edges.clone(), 4, DEFAULT_MAX_DIM, |x| {
            x.map_pair(EdgeId(0), EdgeId(1), |a, b| h.slide_pair(a, b, true))
        })
        .unwrap();
        let id = LinOperator::identity(edges.clone(), 4, DEFAULT_MAX_DIM).unwrap();
        assert_eq!(op.compose(&inv).unwrap(), id);
        let m = op.to_matrix();
        assert_eq!(LinOperator::from_matrix(edges.clone(), edges, 4, &m), op);
        assert!(LinOperator::<Q>::identity(vec![EdgeId(0); 7], 4, DEFAULT_MAX_DIM).is_err());
    }
}
