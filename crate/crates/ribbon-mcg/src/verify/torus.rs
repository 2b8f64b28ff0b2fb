//! The one-vertex torus: braid and SL(2,Z) relations, the full twist as
//! the ribbon operator, and its triviality on biinvariants.

use super::check::{programs_eq_all, Evaluator};
use super::{run_cases, Case, Outcome, SuiteReport};
use crate::action::{mcg_word, Program};
use crate::error::Result;
use crate::graph::{RibbonGraph, StandardGraph, VertexId};
use crate::group::{all_labelings, ribbon_relabeling, show_labeling, vertex_act, Biinvariants};
use crate::hopf::{LinearBiinv, Matrix, Tensor};

const V: VertexId = VertexId(0);

fn word(s: &StandardGraph, w: &str) -> Result<Program> {
    mcg_word(&s.graph, Some(s), w)
}

/// The full twist (D_b D_a D_b)⁴ against ⊳_v∘(T⊗1)∘δ_f.
fn full_twist_is_ribbon(ev: &Evaluator<'_>, g: &RibbonGraph, p: &Program) -> Result<Outcome> {
    Ok(match *ev {
        Evaluator::Symbolic => {
            let r = p.relabeling();
            let want = ribbon_relabeling(g, V)?;
            match r.differences(&want).first() {
                None => Outcome::pass(),
                Some(&e) => Outcome::fail(format!(
                    "{} ↦ {} but the ribbon operator gives {}",
                    g.edge_name(e),
                    r.images[&e].display_with(|k| g.edge_name(k)),
                    want.images[&e].display_with(|k| g.edge_name(k))
                )),
            }
        }
        Evaluator::Linear { hopf, max_dim } => {
            let want = hopf.ribbon_operator(g, V, max_dim)?;
            match p.linear(hopf, max_dim)?.first_difference(&want) {
                None => Outcome::pass(),
                Some(j) => {
                    let x = Tensor::basis_index(g.edge_ids(), hopf.dim(), j);
                    Outcome::fail(format!("basis vector {}", x.show(g, hopf)))
                }
            }
        }
        Evaluator::Group { group, pivot, max_states } => {
            let face = crate::graph::ciliated_face(g, V)?;
            let bad = all_labelings(g, group, max_states)?.into_iter().find(|s| {
                let h = crate::group::path_holonomy(group, pivot, &face, s);
                let k = group.mul(pivot, group.inv(h));
                p.apply_labeling(group, pivot, s) != vertex_act(g, V, group, k, s)
            });
            match bad {
                None => Outcome::pass(),
                Some(s) => Outcome::fail(format!("labeling {}", show_labeling(g, group, &s))),
            }
        }
    })
}

/// The map induced on biinvariants is the identity.
fn trivial_on_biinvariants(ev: &Evaluator<'_>, g: &RibbonGraph, p: &Program) -> Result<Outcome> {
    Ok(match *ev {
        // The symbolic statement is the ribbon-operator identity above.
        Evaluator::Symbolic => Outcome::pass(),
        Evaluator::Linear { hopf, max_dim } => {
            let b = LinearBiinv::compute(hopf, g, V, max_dim)?;
            let phi = b.induced(hopf, &b, &p.linear(hopf, max_dim)?)?;
            if phi == Matrix::identity(b.biinvariant_dim()) {
                Outcome::pass()
            } else {
                Outcome::fail(format!("induced map on the {}-dimensional biinvariants is not 1", b.biinvariant_dim()))
            }
        }
        Evaluator::Group { group, pivot, max_states } => {
            let b = Biinvariants::compute(g, V, group, pivot, max_states)?;
            let perm = b.induced_map(&b, |s| Ok(p.apply_labeling(group, pivot, s)))?;
            match perm.iter().enumerate().find(|(i, j)| i != *j) {
                None => Outcome::pass(),
                Some((i, j)) => Outcome::fail(format!(
                    "orbit of {} goes to orbit of {}",
                    show_labeling(g, group, b.representative(i)),
                    show_labeling(g, group, b.representative(*j))
                )),
            }
        }
    })
}

fn per_evaluator<'a>(
    name: &str,
    evals: &'a [Evaluator<'a>],
    s: &StandardGraph,
    w: &str,
    check: fn(&Evaluator<'_>, &RibbonGraph, &Program) -> Result<Outcome>,
) -> Result<Vec<Case<'a>>> {
    let p = word(s, w)?;
    Ok(evals
        .iter()
        .map(|ev| {
            let (g, p) = (s.graph.clone(), p.clone());
            Case::new(format!("{name} [{}]", ev.name()), move || check(ev, &g, &p))
        })
        .collect())
}

pub fn torus_suite(evals: &[Evaluator<'_>]) -> Result<SuiteReport> {
    let s = StandardGraph::new(1, 0)?;
    let relation = |name: &str, l: &str, r: &str| -> Result<Case<'_>> {
        let (l, r) = (word(&s, l)?, word(&s, r)?);
        Ok(Case::new(name.to_string(), move || programs_eq_all(evals, &l, &r)))
    };
    let mut cases = vec![
        relation("braid D_a D_b D_a = D_b D_a D_b", "D_a1 D_b1 D_a1", "D_b1 D_a1 D_b1")?,
        relation("(D_a D_b)^6 = (D_b D_a D_b)^4", "(D_a1 D_b1)^6", "(D_b1 D_a1 D_b1)^4")?,
        relation("(D_a D_b D_a)^2 = (D_a D_b)^3", "(D_a1 D_b1 D_a1)^2", "(D_a1 D_b1)^3")?,
    ];
    let full = "(D_b1 D_a1 D_b1)^4";
    cases.extend(per_evaluator("full twist is the ribbon operator", evals, &s, full, full_twist_is_ribbon)?);
    cases.extend(per_evaluator("full twist is trivial on biinvariants", evals, &s, full, trivial_on_biinvariants)?);
    let (l, r) = (word(&s, "D_a1 D_b1")?, word(&s, "D_b1 D_a1")?);
    cases.push(Case::control("control: D_a D_b = D_b D_a", move || programs_eq_all(evals, &l, &r)));
    Ok(run_cases("torus", cases))
}
