//! Programs compiled into a backend: symbolic relabelings (valid for every
//! finite group and central pivot) or exact matrices over a Hopf algebra.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{gamma_twist, generator_twist, mcg_word, Builder, Program, Route};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, GeneratorName, GraphPath, HalfEdge, RibbonGraph, SlideDescriptor, StandardGraph, VertexId};
use crate::group::Relabeling;
use crate::hopf::{FinHopf, LinOperator, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BackendKind {
    Symbolic,
    Linear,
}

impl fmt::Display for BackendKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BackendKind::Symbolic => "symbolic",
            BackendKind::Linear => "linear",
        })
    }
}

impl FromStr for BackendKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symbolic" => Ok(BackendKind::Symbolic),
            "linear" => Ok(BackendKind::Linear),
            _ => Err(Error::Parse(format!("backend {s:?} (expected symbolic or linear)"))),
        }
    }
}

/// Where operators are evaluated.
#[derive(Clone, Copy, Debug)]
pub enum Backend<'a, F: Scalar> {
    Symbolic,
    Linear { hopf: &'a FinHopf<F>, max_dim: usize },
}

impl<F: Scalar> Backend<'_, F> {
    pub fn kind(&self) -> BackendKind {
        match self {
            Backend::Symbolic => BackendKind::Symbolic,
            Backend::Linear { .. } => BackendKind::Linear,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Payload<F: Scalar> {
    Symbolic(Relabeling),
    Linear(LinOperator<F>),
}

/// A compiled operator together with the program it came from and, when
/// known, a program for its inverse.
#[derive(Clone, Debug)]
pub struct Operator<F: Scalar> {
    pub domain: RibbonGraph,
    pub codomain: RibbonGraph,
    pub payload: Payload<F>,
    pub program: Program,
    pub inverse: Option<Program>,
}

impl<F: Scalar> Operator<F> {
    pub fn compile(program: Program, backend: &Backend<F>) -> Result<Self> {
        let payload = match backend {
            Backend::Symbolic => Payload::Symbolic(program.relabeling()),
            Backend::Linear { hopf, max_dim } => Payload::Linear(program.linear(hopf, *max_dim)?),
        };
        let inverse = program.inverse().ok();
        Ok(Operator { domain: program.domain.clone(), codomain: program.codomain.clone(), payload, program, inverse })
    }

    /// Compile with an explicitly recorded inverse program.
    pub fn with_inverse(program: Program, inverse: Program, backend: &Backend<F>) -> Result<Self> {
        if inverse.domain != program.codomain || inverse.codomain != program.domain {
            return Err(Error::Precondition("inverse program has the wrong graphs".into()));
        }
        let mut op = Self::compile(program, backend)?;
        op.inverse = Some(inverse);
        Ok(op)
    }

    pub fn kind(&self) -> BackendKind {
        match self.payload {
            Payload::Symbolic(_) => BackendKind::Symbolic,
            Payload::Linear(_) => BackendKind::Linear,
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Operator<F>) -> Result<Operator<F>> {
        let program = self.program.then(&next.program)?;
        let payload = match (&self.payload, &next.payload) {
            (Payload::Symbolic(a), Payload::Symbolic(b)) => Payload::Symbolic(b.compose(a)?),
            (Payload::Linear(a), Payload::Linear(b)) => Payload::Linear(b.compose(a)?),
            _ => return Err(Error::Precondition("operators come from different backends".into())),
        };
        let inverse = match (&self.inverse, &next.inverse) {
            (Some(a), Some(b)) => Some(b.then(a)?),
            _ => None,
        };
        Ok(Operator { domain: self.domain.clone(), codomain: next.codomain.clone(), payload, program, inverse })
    }

    /// Compile the recorded inverse.
    pub fn inverted(&self, backend: &Backend<F>) -> Result<Operator<F>> {
        let inv = self
            .inverse
            .clone()
            .ok_or_else(|| Error::Precondition("operator has no recorded inverse".into()))?;
        Operator::with_inverse(inv, self.program.clone(), backend)
    }

    /// Exact equality of payloads (graphs must agree).
    pub fn equals(&self, other: &Operator<F>) -> Result<bool> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Ok(false);
        }
        match (&self.payload, &other.payload) {
            (Payload::Symbolic(a), Payload::Symbolic(b)) => a.equals(b),
            (Payload::Linear(a), Payload::Linear(b)) => Ok(a.first_difference(b).is_none()),
            _ => Err(Error::Precondition("operators come from different backends".into())),
        }
    }

    pub fn relabeling(&self) -> Option<&Relabeling> {
        match &self.payload {
            Payload::Symbolic(r) => Some(r),
            Payload::Linear(_) => None,
        }
    }

    pub fn linear(&self) -> Option<&LinOperator<F>> {
        match &self.payload {
            Payload::Linear(m) => Some(m),
            Payload::Symbolic(_) => None,
        }
    }
}

fn build<F: Scalar>(
    g: &RibbonGraph,
    backend: &Backend<F>,
    f: impl FnOnce(&mut Builder) -> Result<()>,
) -> Result<Operator<F>> {
    let mut b = Builder::new(g);
    f(&mut b)?;
    Operator::compile(b.finish(), backend)
}

pub fn slide_op<F: Scalar>(g: &RibbonGraph, s: SlideDescriptor, backend: &Backend<F>) -> Result<Operator<F>> {
    build(g, backend, |b| b.slide(s).map(|_| ()))
}

/// Slide `moved` (directly after the departure of the first step) along a
/// face path.
pub fn face_slide_op<F: Scalar>(
    g: &RibbonGraph,
    path: &GraphPath,
    moved: HalfEdge,
    backend: &Backend<F>,
) -> Result<Operator<F>> {
    build(g, backend, |b| b.face_slide(path, moved).map(|_| ()))
}

/// C_γ: add an edge along the face path γ.
pub fn add_edge_op<F: Scalar>(
    g: &RibbonGraph,
    path: &GraphPath,
    name: Option<&str>,
    backend: &Backend<F>,
) -> Result<(Operator<F>, EdgeId)> {
    let mut b = Builder::new(g);
    let e = b.add_edge_along(path, name)?;
    Ok((Operator::compile(b.finish(), backend)?, e))
}

/// ε_α: remove an edge.
pub fn remove_edge_op<F: Scalar>(g: &RibbonGraph, e: EdgeId, backend: &Backend<F>) -> Result<Operator<F>> {
    build(g, backend, |b| b.delete(e))
}

/// η: insert a loop at `v`, target end at `pos`.
pub fn insert_loop_op<F: Scalar>(
    g: &RibbonGraph,
    v: VertexId,
    pos: usize,
    name: Option<&str>,
    backend: &Backend<F>,
) -> Result<(Operator<F>, EdgeId)> {
    let mut b = Builder::new(g);
    let e = b.insert_loop(v, pos, name)?;
    Ok((Operator::compile(b.finish(), backend)?, e))
}

fn twist_pair(g: &RibbonGraph, f: impl Fn(&mut Builder, bool) -> Result<()>) -> Result<(Program, Program)> {
    let mut fwd = Builder::new(g);
    f(&mut fwd, false)?;
    let mut bwd = Builder::new(g);
    f(&mut bwd, true)?;
    Ok((fwd.finish(), bwd.finish()))
}

pub fn twist_loop_op<F: Scalar>(g: &RibbonGraph, beta: EdgeId, backend: &Backend<F>) -> Result<Operator<F>> {
    let (p, q) = twist_pair(g, |b, inv| b.twist_loop(beta, inv))?;
    Operator::with_inverse(p, q, backend)
}

pub fn twist_facepath_op<F: Scalar>(g: &RibbonGraph, phi: &GraphPath, backend: &Backend<F>) -> Result<Operator<F>> {
    let (p, q) = twist_pair(g, |b, inv| b.twist_path(phi, inv))?;
    Operator::with_inverse(p, q, backend)
}

pub fn twist_gamma_op<F: Scalar>(s: &StandardGraph, i: usize, j: usize, backend: &Backend<F>) -> Result<Operator<F>> {
    if i >= j {
        return Err(Error::OutOfRange(format!("gamma_{i}_{j} protocol needs i < j")));
    }
    let p = gamma_twist(s, i, j, false, Route::AlongAlpha)?;
    let q = gamma_twist(s, i, j, true, Route::AlongAlpha)?;
    Operator::with_inverse(p, q, backend)
}

pub fn generator_op<F: Scalar>(s: &StandardGraph, name: GeneratorName, backend: &Backend<F>) -> Result<Operator<F>> {
    Operator::with_inverse(generator_twist(s, name, false)?, generator_twist(s, name, true)?, backend)
}

/// One operator per generating twist, in the standard name order.
pub fn generating_twists_op<F: Scalar>(
    s: &StandardGraph,
    backend: &Backend<F>,
) -> Result<Vec<(GeneratorName, Operator<F>)>> {
    s.generator_names().into_iter().map(|n| Ok((n, generator_op(s, n, backend)?))).collect()
}

pub fn mcg_word_op<F: Scalar>(
    g: &RibbonGraph,
    s: Option<&StandardGraph>,
    word: &str,
    backend: &Backend<F>,
) -> Result<Operator<F>> {
    Operator::compile(mcg_word(g, s, word)?, backend)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Step, Variant};
    use crate::group::PivotWord;
    use crate::hopf::{DEFAULT_MAX_DIM, Q};

    #[test]
    fn slide_and_inverse_cancel_in_both_backends() {
        let s = StandardGraph::new(1, 0).unwrap();
        let g = &s.graph;
        let (a, b) = (EdgeId(0), EdgeId(1));
        let h = FinHopf::<Q>::sweedler4().unwrap().with_pivot_named("g").unwrap();
        for backend in [Backend::Symbolic, Backend::Linear { hopf: &h, max_dim: DEFAULT_MAX_DIM }] {
            let sd = SlideDescriptor::new(a, Variant::L, HalfEdge::st(b));
            let x = slide_op(g, sd, &backend).unwrap();
            let y = slide_op(&x.codomain, sd.inverse(), &backend).unwrap();
            let id = Operator::compile(Program::identity(g), &backend).unwrap();
            assert!(x.then(&y).unwrap().equals(&id).unwrap());
            assert!(x.inverted(&backend).unwrap().equals(&y).unwrap());
        }
    }

    #[test]
    fn remove_after_add_is_identity() {
        let s = StandardGraph::new(2, 0).unwrap();
        let path = s.generator_path(GeneratorName::Delta(2)).unwrap();
        let (c, e) = add_edge_op::<Q>(&s.graph, &path, None, &Backend::Symbolic).unwrap();
        let r = remove_edge_op(&c.codomain, e, &Backend::Symbolic).unwrap();
        assert!(c.then(&r).unwrap().relabeling().unwrap().is_identity());
        // Replacing α by a parallel copy: ε_α ∘ C_α = 1 and ε_α ∘ C_{α⁻¹} = T_α.
        let a = s.alpha[0];
        for (step, want) in [
            (Step::fwd(a), PivotWord::generator(a)),
            (Step::bwd(a), PivotWord::pivot_power(1).mul(&PivotWord::generator_inv(a))),
        ] {
            let (c, e) = add_edge_op::<Q>(&s.graph, &GraphPath::single(step), None, &Backend::Symbolic).unwrap();
            let r = remove_edge_op(&c.codomain, a, &Backend::Symbolic).unwrap();
            let got = c.then(&r).unwrap();
            let images = &got.relabeling().unwrap().images;
            assert_eq!(images[&e], want);
            assert!(images.iter().filter(|(k, _)| **k != e).all(|(k, w)| *w == PivotWord::generator(*k)));
        }
    }

    #[test]
    fn twist_operators_record_inverses() {
        let s = StandardGraph::new(2, 0).unwrap();
        let d = twist_gamma_op::<Q>(&s, 1, 2, &Backend::Symbolic).unwrap();
        let di = d.inverted(&Backend::Symbolic).unwrap();
        assert!(d.then(&di).unwrap().relabeling().unwrap().is_identity());
        assert!(twist_gamma_op::<Q>(&s, 2, 1, &Backend::Symbolic).is_err());
        assert_eq!(generating_twists_op::<Q>(&s, &Backend::Symbolic).unwrap().len(), s.generator_names().len());
    }
}
