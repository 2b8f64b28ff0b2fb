//! Lemmas about face slides, edge addition and removal, and twists along
//! face paths, checked on every small configuration of a few graphs.

use super::bene::{chord_diagram, flip_tag, run_moves, subsets, Move};
use super::check::{programs_eq_all, Evaluator};
use super::{run_cases, Case, Outcome, SuiteReport};
use crate::action::{Builder, Program};
use crate::error::Result;
use crate::graph::{ciliated_face, is_face_path, EdgeId, GraphPath, HalfEdge, RibbonGraph, SlideDescriptor, StandardGraph, Step, Variant};
use crate::group::{path_word, PivotWord};
use crate::hopf::{FinHopf, LinOperator, Tensor, HLEG, Q};

/// Every face path of length at most `max_len`: contiguous pieces of faces
/// that use no step twice.
pub fn face_paths(g: &RibbonGraph, max_len: usize) -> Vec<GraphPath> {
    let mut out: Vec<GraphPath> = Vec::new();
    for e in g.edges() {
        for first in [Step::fwd(e), Step::bwd(e)] {
            let mut steps = vec![first];
            while steps.len() <= max_len {
                let p = GraphPath::new(steps.clone());
                if is_face_path(g, &p).unwrap_or(false) {
                    if !out.contains(&p) {
                        out.push(p);
                    }
                } else {
                    break;
                }
                match g.next_face_step(*steps.last().unwrap()) {
                    Some(s) => steps.push(s),
                    None => break,
                }
            }
        }
    }
    out
}

/// The end directly after the departure of the first step (the end a face
/// slide along `path` moves), if there is one before the cilium.
pub fn end_after_start(g: &RibbonGraph, path: &GraphPath) -> Option<HalfEdge> {
    let dep = path.first()?.departure();
    let (vi, p) = g.locate(dep)?;
    g.vertices()[vi].order.get(p + 1).copied()
}

/// S_γ on the current graph of a builder, moving the end after its start.
fn slide_along(b: &mut Builder, path: &GraphPath) -> Result<crate::graph::PathMap> {
    let moved = end_after_start(b.graph(), path)
        .ok_or_else(|| crate::Error::CiliumCrossing("no end after the start of the path".into()))?;
    b.face_slide(path, moved)
}

/// A case whose right-hand side could not be built although the left one was.
fn failed_build<'a>(name: String, err: crate::Error) -> Case<'a> {
    let msg = err.to_string();
    Case::new(name, move || Err(crate::Error::Precondition(msg.clone())))
}

fn relation_case<'a>(name: String, lhs: Program, rhs: Program, evals: &'a [Evaluator<'a>]) -> Case<'a> {
    Case::new(name, move || programs_eq_all(evals, &lhs, &rhs))
}

/// ε_{γ'} ∘ C_γ = id.
fn complement_cases<'a>(label: &str, g: &RibbonGraph, evals: &'a [Evaluator<'a>]) -> Vec<Case<'a>> {
    let mut out = Vec::new();
    for p in face_paths(g, 3) {
        let mut b = Builder::new(g);
        let Ok(e) = b.add_edge_along(&p, None) else { continue };
        if b.delete(e).is_err() {
            continue;
        }
        let name = format!("delete after add {label}: {}", p.display(g));
        out.push(relation_case(name, b.finish(), Program::identity(g), evals));
    }
    out
}

/// Rename leg `from` to `to`, keeping legs sorted.
fn rename_leg(x: &Tensor<Q>, from: EdgeId, to: EdgeId) -> Tensor<Q> {
    let edges: Vec<EdgeId> = x.edges.iter().map(|&e| if e == from { to } else { e }).collect();
    let mut perm: Vec<usize> = (0..edges.len()).collect();
    perm.sort_by_key(|&i| edges[i]);
    let mut out = Tensor::zero(perm.iter().map(|&i| edges[i]).collect());
    for (k, c) in &x.terms {
        out.add_term(perm.iter().map(|&i| k[i]).collect(), c.clone());
    }
    out
}

/// Add an edge parallel to the single step `step` of α, then delete α: the
/// new edge carries the holonomy of the step, i.e. `α` forward and `T(α)`
/// backward. `claim_identity` asserts the identity even backward (used as
/// a negative control).
fn replace_edge(g: &RibbonGraph, step: Step, claim_identity: bool, evals: &[Evaluator<'_>]) -> Result<Outcome> {
    let alpha = step.edge;
    let path = GraphPath::single(step);
    let mut b = Builder::new(g);
    let e = b.add_edge_along(&path, None)?;
    b.delete(alpha)?;
    let p = b.finish();
    // The graph is g with α replaced by the new edge.
    // Backward, the new edge runs against α.
    let rename = |h: HalfEdge| match (h.edge == e, step.forward) {
        (false, _) => h,
        (true, true) => HalfEdge { edge: alpha, ..h },
        (true, false) => if h.is_target() { HalfEdge::st(alpha) } else { HalfEdge::ta(alpha) },
    };
    let same_shape = p.codomain.vertices().len() == g.vertices().len()
        && p.codomain
            .vertices()
            .iter()
            .zip(g.vertices())
            .all(|(u, v)| u.order.iter().map(|&h| rename(h)).eq(v.order.iter().copied()));
    if !same_shape {
        return Ok(Outcome::fail(format!("graph after replacement:\n{}", p.codomain)));
    }
    let want = if claim_identity { PivotWord::generator(alpha) } else { path_word(&path) };
    for ev in evals {
        match ev {
            Evaluator::Symbolic => {
                let r = p.relabeling();
                for (&k, w) in &r.images {
                    let expect = if k == e { want.clone() } else { PivotWord::generator(k) };
                    if *w != expect {
                        return Ok(Outcome::fail(format!(
                            "[symbolic] {} ↦ {}",
                            p.codomain.edge_name(k),
                            w.display_with(|x| g.edge_name(x))
                        )));
                    }
                }
            }
            Evaluator::Linear { hopf, max_dim } => {
                let op = p.linear(hopf, *max_dim)?;
                let backward = !step.forward && !claim_identity;
                let expect = LinOperator::from_fn(g.edge_ids(), hopf.dim(), *max_dim, |x: &Tensor<Q>| {
                    let y = if backward { x.map_leg(alpha, |i| hopf.t_basis(i))? } else { x.clone() };
                    Ok(rename_leg(&y, alpha, e))
                })?;
                if let Some(j) = op.first_difference(&expect) {
                    let x = Tensor::basis_index(g.edge_ids(), hopf.dim(), j);
                    return Ok(Outcome::fail(format!("[{}] basis vector {}", ev.name(), x.show(g, hopf))));
                }
            }
            Evaluator::Group { .. } => {}
        }
    }
    Ok(Outcome::pass())
}

fn replacement_cases<'a>(label: &str, g: &RibbonGraph, evals: &'a [Evaluator<'a>]) -> Vec<Case<'a>> {
    let mut out = Vec::new();
    for e in g.edges() {
        for step in [Step::fwd(e), Step::bwd(e)] {
            let g = g.clone();
            let dir = if step.forward { "α" } else { "α⁻¹" };
            let name = format!("replace edge along {dir} {label}: {}", g.edge_name(e));
            out.push(Case::new(name, move || replace_edge(&g, step, false, evals)));
        }
    }
    out
}

/// The face γ'⁻¹∘γ created by C_γ is flat on the image: its right
/// coaction δ' = τ∘(T⊗1)∘δ is trivial. The face is read from its cilium
/// when it has one.
fn new_face_flat(g: &RibbonGraph, path: &GraphPath, evals: &[Evaluator<'_>]) -> Result<Outcome> {
    let mut b = Builder::new(g);
    let e = b.add_edge_along(path, None)?;
    let p = b.finish();
    let h = &p.codomain;
    let mut face = path.then(&GraphPath::single(Step::bwd(e)));
    if !is_face_path(h, &face)? {
        return Ok(Outcome::fail(format!("{} is not a face path", face.display(h))));
    }
    for v in h.vertex_ids() {
        let cf = ciliated_face(h, v)?;
        let n = cf.len();
        if n == face.len() && (0..n).any(|r| (0..n).all(|i| cf.steps[i] == face.steps[(i + r) % n])) {
            face = cf;
        }
    }
    for ev in evals {
        match ev {
            Evaluator::Symbolic => {
                let r = p.relabeling();
                let hol = path_word(&face).substitute(|k| r.images[&k].clone());
                let w = PivotWord::pivot_power(1).mul(&hol.inverse()).reduce();
                if !w.is_identity() {
                    return Ok(Outcome::fail(format!("[symbolic] T(holonomy) {}", w.display_with(|x| g.edge_name(x)))));
                }
            }
            Evaluator::Linear { hopf, max_dim } => {
                let op = p.linear(hopf, *max_dim)?;
                if let Some(j) = coaction_defect(hopf, &face, &op)? {
                    let x = Tensor::basis_index(g.edge_ids(), hopf.dim(), j);
                    return Ok(Outcome::fail(format!("[{}] basis vector {}", ev.name(), x.show(g, hopf))));
                }
            }
            Evaluator::Group { .. } => {}
        }
    }
    Ok(Outcome::pass())
}

/// First column of `op` on which the right coaction of `face` is not trivial.
fn coaction_defect(h: &FinHopf<Q>, face: &GraphPath, op: &LinOperator<Q>) -> Result<Option<usize>> {
    for (j, y) in op.columns.iter().enumerate() {
        if h.t_on_hleg(&h.path_coact(face, y)?)? != y.insert_leg(HLEG, h.unit())? {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

fn new_face_cases<'a>(label: &str, g: &RibbonGraph, evals: &'a [Evaluator<'a>]) -> Vec<Case<'a>> {
    face_paths(g, 3)
        .into_iter()
        .filter(|p| Builder::new(g).add_edge_along(p, None).is_ok())
        .map(|p| {
            let g = g.clone();
            Case::new(format!("new face is flat {label}: {}", p.display(&g)), move || new_face_flat(&g, &p, evals))
        })
        .collect()
}

/// S_γ = ε_{γ'} ∘ S_{γ'} ∘ C_γ: a face slide equals a single slide along
/// a parallel edge.
fn parallel_edge_cases<'a>(label: &str, g: &RibbonGraph, evals: &'a [Evaluator<'a>]) -> Vec<Case<'a>> {
    let mut out = Vec::new();
    for p in face_paths(g, 3) {
        let Some(moved) = end_after_start(g, &p) else { continue };
        let mut l = Builder::new(g);
        if l.face_slide(&p, moved).is_err() {
            continue;
        }
        let mut r = Builder::new(g);
        let built = (|| -> Result<()> {
            let e = r.add_edge_along(&p, None)?;
            r.slide(SlideDescriptor::new(e, Variant::L, moved))?;
            r.delete(e)
        })();
        let name = format!("slide along parallel edge {label}: {}", p.display(g));
        match built {
            Ok(()) => out.push(relation_case(name, l.finish(), r.finish(), evals)),
            Err(err) => out.push(failed_build(name, err)),
        }
    }
    out
}

/// S_{S_ρ(γ)} ∘ S_ρ = S_{S_γ(ρ)} ∘ S_γ whenever both sides are defined and
/// end at the same graph.
fn slide_commutativity_cases<'a>(label: &str, g: &RibbonGraph, evals: &'a [Evaluator<'a>]) -> Vec<Case<'a>> {
    let paths = face_paths(g, 2);
    let both = |first: &GraphPath, second: &GraphPath| -> Option<Program> {
        let mut b = Builder::new(g);
        let m = slide_along(&mut b, first).ok()?;
        slide_along(&mut b, &m.apply(second)).ok()?;
        Some(b.finish())
    };
    let mut out = Vec::new();
    for (i, gamma) in paths.iter().enumerate() {
        for rho in &paths[i + 1..] {
            if end_after_start(g, gamma) == end_after_start(g, rho) {
                continue;
            }
            let (Some(x), Some(y)) = (both(gamma, rho), both(rho, gamma)) else { continue };
            if x.codomain != y.codomain {
                continue;
            }
            let name = format!("face slides commute {label}: {} / {}", gamma.display(g), rho.display(g));
            out.push(relation_case(name, x, y, evals));
        }
    }
    out
}

/// For γ = γ1∘γ2∘γ3 whose only step along the last edge of γ3 is that
/// step, and with γ3 arriving
/// through the end that S_{γ2} moves:
/// S_{γ2} ∘ S_γ = S_{γ1∘γ3} ∘ S_{γ2}, and S_{γ2} maps γ to γ1∘γ3.
fn pentagon_cases<'a>(label: &str, g: &RibbonGraph, evals: &'a [Evaluator<'a>]) -> Vec<Case<'a>> {
    let mut out = Vec::new();
    for gamma in face_paths(g, 4).into_iter().filter(|p| p.len() >= 2) {
        let t = &gamma.steps;
        for i in 1..t.len() {
            for j in i + 1..=t.len() {
                let (g3, g2, g1) = (&t[..i], &t[i..j], &t[j..]);
                if t.iter().filter(|s| s.edge == t[i - 1].edge).count() > 1 {
                    continue;
                }
                let g2p = GraphPath::new(g2.to_vec());
                // S_{γ2} must move the end through which γ3 arrives.
                if end_after_start(g, &g2p) != Some(t[i - 1].arrival()) {
                    continue;
                }
                let g13 = GraphPath::new(g3.iter().chain(g1).copied().collect());
                let mut l = Builder::new(g);
                if slide_along(&mut l, &gamma).is_err() || slide_along(&mut l, &g2p).is_err() {
                    continue;
                }
                let mut r = Builder::new(g);
                let Ok(m) = slide_along(&mut r, &g2p) else { continue };
                let image = m.apply(&gamma);
                let name = format!(
                    "generalized pentagon {label}: {} = {} ∘ {} ∘ {}",
                    gamma.display(g),
                    GraphPath::new(g1.to_vec()).display(g),
                    g2p.display(g),
                    GraphPath::new(g3.to_vec()).display(g)
                );
                if image != g13 {
                    let w = format!("S_γ2(γ) = {}", image.display(r.graph()));
                    out.push(Case::new(name, move || Ok(Outcome::fail(w.clone()))));
                    continue;
                }
                let built = slide_along(&mut r, &image);
                let (l, r) = (l.finish(), r.finish());
                out.push(match built {
                    Ok(_) => relation_case(name, l, r, evals),
                    Err(err) => failed_build(name, err),
                });
            }
        }
    }
    out
}

/// S_γ ∘ D_ρ = D_{S_γ(ρ)} ∘ S_γ for closed face paths ρ.
fn slide_twist_cases<'a>(label: &str, g: &RibbonGraph, evals: &'a [Evaluator<'a>]) -> Vec<Case<'a>> {
    let closed: Vec<GraphPath> = face_paths(g, 4).into_iter().filter(|p| p.is_closed(g)).collect();
    let mut out = Vec::new();
    for gamma in face_paths(g, 2) {
        for rho in &closed {
            let mut l = Builder::new(g);
            if l.twist_path(rho, false).is_err() || slide_along(&mut l, &gamma).is_err() {
                continue;
            }
            let mut r = Builder::new(g);
            let Ok(m) = slide_along(&mut r, &gamma) else { continue };
            let image = m.apply(rho);
            if r.twist_path(&image, false).is_err() {
                continue;
            }
            let name = format!("slide past twist {label}: {} / {}", gamma.display(g), rho.display(g));
            out.push(relation_case(name, l.finish(), r.finish(), evals));
        }
    }
    out
}

/// D_β does not depend on the orientation of the loop β.
fn orientation_cases<'a>(label: &str, g: &RibbonGraph, evals: &'a [Evaluator<'a>]) -> Vec<Case<'a>> {
    let mut out = Vec::new();
    for beta in g.edges().filter(|&e| g.is_loop(e)) {
        let mut l = Builder::new(g);
        let mut r = Builder::new(g);
        let built = l.twist_loop(beta, false).and_then(|_| {
            r.reverse(beta)?;
            r.twist_loop(beta, false)?;
            r.reverse(beta)
        });
        if built.is_err() {
            continue;
        }
        let name = format!("twist orientation {label}: {}", g.edge_name(beta));
        out.push(relation_case(name, l.finish(), r.finish(), evals));
    }
    out
}

/// Slides that carry a loop α, or an end into or out of it, commute
/// with D_α: both ends of α and the ends between them along β; both ends
/// of α along the two sides of β; an end of γ along δ into or out of α.
const TWIST_EXCHANGES: [(&str, &str, &[Move], &[char]); 4] = [
    ("loop slid along an edge", "b1 a1 c1 a2 b2 c2", &[("a1", 'b', true), ("c1", 'b', true), ("a2", 'b', true)], &['a', 'b', 'c']),
    ("loop ends slid along both sides", "z1 a1 b1 a2 z2 b2", &[("a2", 'b', true), ("a1", 'b', false)], &['a', 'b', 'z']),
    ("end slid into a loop", "a1 d1 a2 g1 d2 g2", &[("g1", 'd', false)], &['a', 'd', 'g']),
    ("end slid out of a loop", "a1 d1 g1 a2 d2 g2", &[("g1", 'd', true)], &['a', 'd', 'g']),
];

fn twist_exchange_cases<'a>(evals: &'a [Evaluator<'a>]) -> Vec<Case<'a>> {
    let mut out = Vec::new();
    for (family, tokens, moves, chords) in TWIST_EXCHANGES {
        for f in subsets(chords) {
            out.push(Case::new(format!("twist exchange: {family} ({})", flip_tag(&f)), move || {
                let g = chord_diagram(tokens, &f)?;
                let a = g.edge_by_name("a").expect("chord a");
                let p = run_moves(&g, &f, moves)?;
                let mut l = Builder::new(&g);
                l.twist_loop(a, false)?;
                l.append(&p)?;
                let mut r = Builder::new(&g);
                r.append(&p)?;
                r.twist_loop(a, false)?;
                programs_eq_all(evals, &l.finish(), &r.finish())
            }));
        }
    }
    out
}

/// The full suite: exhaustive over short face paths of the torus, (1,1) and
/// (2,0). Every evaluator runs on the first two graphs; the genus-two
/// graph uses the first evaluator only.
pub fn lemma_suite(evals: &[Evaluator<'_>]) -> Result<SuiteReport> {
    let first = &evals[..1.min(evals.len())];
    let graphs = [
        ("torus", StandardGraph::new(1, 0)?.graph, evals),
        ("(1,1)", StandardGraph::new(1, 1)?.graph, evals),
        ("(2,0)", StandardGraph::new(2, 0)?.graph, first),
    ];
    let mut cases = Vec::new();
    for (label, g, ev) in &graphs {
        cases.extend(complement_cases(label, g, ev));
        cases.extend(replacement_cases(label, g, ev));
        cases.extend(new_face_cases(label, g, ev));
        cases.extend(parallel_edge_cases(label, g, ev));
        cases.extend(slide_commutativity_cases(label, g, ev));
        cases.extend(pentagon_cases(label, g, ev));
        cases.extend(slide_twist_cases(label, g, ev));
        cases.extend(orientation_cases(label, g, ev));
    }
    cases.extend(twist_exchange_cases(evals));
    let torus = graphs[0].1.clone();
    cases.push(Case::control("control: backward replacement is the identity", move || {
        replace_edge(&torus, Step::bwd(EdgeId(0)), true, evals)
    }));
    Ok(run_cases("lemmas", cases))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_paths_of_torus() {
        let g = StandardGraph::new(1, 0).unwrap().graph;
        let ps = face_paths(&g, 4);
        // One face of length four: every rotation and every prefix.
        assert_eq!(ps.len(), 16);
        assert!(ps.iter().all(|p| is_face_path(&g, p).unwrap()));
    }

    #[test]
    fn lemma_suite_passes() {
        let h = FinHopf::sweedler4().unwrap().with_pivot_named("g").unwrap();
        let evals = [Evaluator::Symbolic, Evaluator::Linear { hopf: &h, max_dim: 4096 }];
        let r = lemma_suite(&evals).unwrap();
        // Every family is exercised.
        for family in ["delete after add", "replace edge", "new face", "parallel edge", "commute", "pentagon", "past twist", "orientation", "twist exchange"] {
            assert!(r.cases.iter().any(|c| c.case.contains(family)), "{family}");
        }
        for c in r.failures().iter().take(20) {
            eprintln!("{}: {:?} {:?}", c.case, c.verdict, c.witness);
        }
        eprintln!("{}", r.summary());
        assert!(r.self_test_ok());
    }
}
