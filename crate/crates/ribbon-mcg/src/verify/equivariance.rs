//! Every generating twist intertwines the vertex action and the face
//! coaction at every cilium.

use super::check::Evaluator;
use super::{run_cases, Case, Outcome, SuiteReport};
use crate::action::{generator_twist, Prim, Program};
use crate::error::Result;
use crate::graph::{ciliated_face, EdgeId, RibbonGraph, StandardGraph, VertexId};
use crate::group::{all_labelings, face_holonomy, path_word, show_labeling, vertex_act, PivotWord, Relabeling};
use crate::hopf::check_yd_equivariance;

/// Symbolic action of a formal element `h` at `v` on the generators.
fn formal_action<'a>(g: &'a RibbonGraph, v: VertexId, h: &PivotWord) -> impl Fn(EdgeId) -> PivotWord + 'a {
    let h = h.clone();
    move |e| {
        let mut w = PivotWord::generator(e);
        if g.target_vertex(e) == Some(v) {
            w = h.mul(&w);
        }
        if g.start_vertex(e) == Some(v) {
            w = w.mul(&h.inverse());
        }
        w
    }
}

/// Word identities valid for every group and central pivot: the face word
/// at `v` is preserved and substitution commutes with the action of a
/// formal element.
fn symbolic_equivariance(p: &Program, v: VertexId) -> Result<Outcome> {
    let (dom, cod) = (&p.domain, &p.codomain);
    let r: Relabeling = p.relabeling();
    let before = path_word(&ciliated_face(dom, v)?).reduce();
    let after = path_word(&ciliated_face(cod, v)?).substitute(|e| r.images[&e].clone()).reduce();
    if before != after {
        let name = |e| dom.edge_name(e);
        return Ok(Outcome::fail(format!(
            "face word {} becomes {}",
            before.display_with(name),
            after.display_with(name)
        )));
    }
    let fresh = dom.edges().chain(cod.edges()).map(|e| e.0).max().map_or(0, |m| m + 1);
    let h = PivotWord::generator(EdgeId(fresh));
    let (act_dom, act_cod) = (formal_action(dom, v, &h), formal_action(cod, v, &h));
    for (&e, w) in &r.images {
        let lhs = w.substitute(&act_dom).reduce();
        let rhs = act_cod(e).substitute(|k| if k.0 == fresh { h.clone() } else { r.images[&k].clone() }).reduce();
        if lhs != rhs {
            return Ok(Outcome::fail(format!("action does not commute on edge {}", cod.edge_name(e))));
        }
    }
    Ok(Outcome::pass())
}

fn equivariance(ev: &Evaluator<'_>, p: &Program, v: VertexId) -> Result<Outcome> {
    match *ev {
        Evaluator::Symbolic => symbolic_equivariance(p, v),
        Evaluator::Linear { hopf, max_dim } => {
            let op = p.linear(hopf, max_dim)?;
            Ok(match check_yd_equivariance(hopf, &p.domain, &p.codomain, v, &op) {
                Ok(()) => Outcome::pass(),
                Err(e) => Outcome::fail(e.to_string()),
            })
        }
        Evaluator::Group { group, pivot, max_states } => {
            let (dom, cod) = (&p.domain, &p.codomain);
            for s in all_labelings(dom, group, max_states)? {
                let t = p.apply_labeling(group, pivot, &s);
                if face_holonomy(cod, v, group, pivot, &t)? != face_holonomy(dom, v, group, pivot, &s)? {
                    return Ok(Outcome::fail(format!("face holonomy changes at {}", show_labeling(dom, group, &s))));
                }
                for h in 0..group.order() {
                    let lhs = p.apply_labeling(group, pivot, &vertex_act(dom, v, group, h, &s));
                    if lhs != vertex_act(cod, v, group, h, &t) {
                        return Ok(Outcome::fail(format!(
                            "action of {} does not commute at {}",
                            group.element_name(h),
                            show_labeling(dom, group, &s)
                        )));
                    }
                }
            }
            Ok(Outcome::pass())
        }
    }
}

/// Every generator of the standard graph (g, n) against every cilium, in
/// each evaluator, plus a control: a twist followed by reversing one edge
/// label, which breaks the coaction.
pub fn equivariance_suite(genus: usize, boundaries: usize, evals: &[Evaluator<'_>]) -> Result<SuiteReport> {
    let s = StandardGraph::new(genus, boundaries)?;
    let vertices: Vec<VertexId> = s.graph.vertices().iter().map(|v| v.id).collect();
    let mut cases = Vec::new();
    let mut first = None;
    for name in s.generator_names() {
        let p = generator_twist(&s, name, false)?;
        first.get_or_insert_with(|| p.clone());
        for &v in &vertices {
            for ev in evals {
                let p = p.clone();
                let label = format!("({genus},{boundaries}) D_{{{name}}} at {} [{}]", s.graph.vertex_name(v), ev.name());
                cases.push(Case::new(label, move || equivariance(ev, &p, v)));
            }
        }
    }
    if let Some(mut p) = first {
        let e = s.alpha[0];
        p.prims.push(Prim::Reverse(e));
        let base = s.base;
        let label = format!("({genus},{boundaries}) control: twist then reverse {}", s.graph.edge_name(e));
        cases.push(Case::control(label, move || {
            for ev in evals {
                let out = equivariance(ev, &p, base)?;
                if !out.is_pass() {
                    return Ok(out);
                }
            }
            Ok(Outcome::pass())
        }));
    }
    Ok(run_cases("equivariance", cases))
}
