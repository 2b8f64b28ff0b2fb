//! Exact comparison of programs in each backend, with witnesses.

use rayon::prelude::*;

use super::Outcome;
use crate::action::Program;
use crate::error::Result;
use crate::group::{all_labelings, show_labeling, FiniteGroup};
use crate::hopf::{FinHopf, Tensor, Q};

/// How relations are evaluated.
#[derive(Clone, Copy, Debug)]
pub enum Evaluator<'a> {
    /// Word substitutions: valid for every group and central pivot.
    Symbolic,
    /// Exact matrices over a pivotal Hopf algebra.
    Linear { hopf: &'a FinHopf<Q>, max_dim: usize },
    /// Exhaustive evaluation on all labelings by a finite group.
    Group { group: &'a FiniteGroup, pivot: usize, max_states: u128 },
}

impl Evaluator<'_> {
    pub fn name(&self) -> String {
        match self {
            Evaluator::Symbolic => "symbolic".into(),
            Evaluator::Linear { hopf, .. } => format!("linear {}", hopf.name),
            Evaluator::Group { group, pivot, .. } => {
                format!("group {} p={}", group.name(), group.element_name(*pivot))
            }
        }
    }

    pub fn programs_eq(&self, lhs: &Program, rhs: &Program) -> Result<Outcome> {
        if lhs.domain != rhs.domain {
            return Ok(Outcome::fail("domain graphs differ"));
        }
        if lhs.codomain != rhs.codomain {
            return Ok(Outcome::fail(format!(
                "codomain graphs differ:\n{}vs\n{}",
                lhs.codomain, rhs.codomain
            )));
        }
        match *self {
            Evaluator::Symbolic => Ok(symbolic_eq(lhs, rhs)),
            Evaluator::Linear { hopf, max_dim } => linear_eq(hopf, lhs, rhs, max_dim),
            Evaluator::Group { group, pivot, max_states } => group_eq(group, pivot, lhs, rhs, max_states),
        }
    }
}

pub fn symbolic_eq(lhs: &Program, rhs: &Program) -> Outcome {
    let (a, b) = (lhs.relabeling(), rhs.relabeling());
    match a.differences(&b).first() {
        None if a.codomain() == b.codomain() => Outcome::pass(),
        None => Outcome::fail("edge sets differ"),
        Some(&e) => {
            let g = &lhs.domain;
            let name = |k| g.edge_name(k);
            let show = |r: &crate::group::Relabeling| {
                r.images.get(&e).map(|w| w.display_with(name)).unwrap_or_else(|| "-".into())
            };
            Outcome::fail(format!("{}: {} vs {}", lhs.codomain.edge_name(e), show(&a), show(&b)))
        }
    }
}

pub fn linear_eq(h: &FinHopf<Q>, lhs: &Program, rhs: &Program, max_dim: usize) -> Result<Outcome> {
    let a = lhs.linear(h, max_dim)?;
    let b = rhs.linear(h, max_dim)?;
    Ok(match a.first_difference(&b) {
        None => Outcome::pass(),
        Some(j) => {
            let x = Tensor::basis_index(a.domain.clone(), h.dim(), j);
            Outcome::fail(format!("basis vector {}", x.show(&lhs.domain, h)))
        }
    })
}

pub fn group_eq(group: &FiniteGroup, pivot: usize, lhs: &Program, rhs: &Program, max_states: u128) -> Result<Outcome> {
    let labelings = all_labelings(&lhs.domain, group, max_states)?;
    let bad = labelings
        .par_iter()
        .find_first(|s| lhs.apply_labeling(group, pivot, s) != rhs.apply_labeling(group, pivot, s));
    Ok(match bad {
        None => Outcome::pass(),
        Some(s) => Outcome::fail(format!("labeling {}", show_labeling(&lhs.domain, group, s))),
    })
}

/// Check one relation in every evaluator; the first failure wins.
pub fn programs_eq_all(evals: &[Evaluator<'_>], lhs: &Program, rhs: &Program) -> Result<Outcome> {
    for e in evals {
        let out = e.programs_eq(lhs, rhs)?;
        if !out.is_pass() {
            let w = out.witness.unwrap_or_default();
            return Ok(Outcome { verdict: out.verdict, witness: Some(format!("[{}] {w}", e.name())) });
        }
    }
    Ok(Outcome::pass())
}
