//! Elementary slide relations: involutivity, commutativity, triangle, the
//! two pentagons, opposite-end and adjacent commutativity.

use super::check::{programs_eq_all, Evaluator};
use super::{run_cases, Case, Outcome, SuiteReport};
use crate::action::{Builder, Prim, Program};
use crate::error::{Error, Result};
use crate::graph::{valid_slides, EdgeId, HalfEdge, RibbonGraph, SlideDescriptor, StandardGraph, Variant};
use crate::group::PivotWord;
use crate::hopf::{LinOperator, Tensor, Q};

/// One-vertex chord diagram from end tokens such as `a1 g1 b1 …`. End 1
/// of a chord is its start unless the chord is listed in `flipped`.
pub fn chord_diagram(tokens: &str, flipped: &[char]) -> Result<RibbonGraph> {
    let ends: Vec<String> = tokens
        .split_whitespace()
        .map(|t| {
            let (c, k) = split_token(t)?;
            let start = (k == '1') != flipped.contains(&c);
            Ok(format!("{}({c})", if start { "st" } else { "ta" }))
        })
        .collect::<Result<_>>()?;
    RibbonGraph::from_orders(&[&ends.join(" ")])
}

fn split_token(t: &str) -> Result<(char, char)> {
    let mut it = t.chars();
    match (it.next(), it.next(), it.next()) {
        (Some(c), Some(k @ ('1' | '2')), None) => Ok((c, k)),
        _ => Err(Error::Parse(format!("chord end token {t:?}"))),
    }
}

fn end_of(g: &RibbonGraph, token: &str, flipped: &[char]) -> Result<HalfEdge> {
    let (c, k) = split_token(token)?;
    let e = g.edge_by_name(&c.to_string()).ok_or_else(|| Error::Unknown(format!("chord {c}")))?;
    let start = (k == '1') != flipped.contains(&c);
    Ok(if start { HalfEdge::st(e) } else { HalfEdge::ta(e) })
}

/// The slide moving `moved` along `along`, where `moved` sits directly
/// after (or before) one end of `along`.
pub fn slide_from_adjacency(g: &RibbonGraph, moved: HalfEdge, along: EdgeId, after: bool) -> Result<SlideDescriptor> {
    let (vi, p) = g.locate(moved).ok_or_else(|| Error::Unknown("moved end".into()))?;
    let order = &g.vertices()[vi].order;
    let anchor = if after { p.checked_sub(1).map(|q| order[q]) } else { order.get(p + 1).copied() };
    let anchor = anchor
        .filter(|a| a.edge == along)
        .ok_or_else(|| Error::InvalidSlide(format!("{} is not next to {}", g.half_name(moved), g.edge_name(along))))?;
    let variant = match (after, anchor.is_target()) {
        (true, false) => Variant::L,
        (true, true) => Variant::MinusR,
        (false, true) => Variant::MinusL,
        (false, false) => Variant::R,
    };
    Ok(SlideDescriptor::new(along, variant, moved))
}

/// A move in a figure: the end token, the chord it slides along, and
/// whether it sits after (true) or before the chord's end.
pub(super) type Move = (&'static str, char, bool);

pub(super) fn run_moves(g: &RibbonGraph, flipped: &[char], moves: &[Move]) -> Result<Program> {
    let mut b = Builder::new(g);
    for &(tok, along, after) in moves {
        let h = end_of(g, tok, flipped)?;
        let a = g.edge_by_name(&along.to_string()).ok_or_else(|| Error::Unknown(format!("chord {along}")))?;
        let s = slide_from_adjacency(b.graph(), h, a, after)?;
        b.slide(s)?;
    }
    Ok(b.finish())
}

pub(super) fn subsets(chords: &[char]) -> Vec<Vec<char>> {
    (0..1usize << chords.len())
        .map(|m| chords.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &c)| c).collect())
        .collect()
}

pub(super) fn flip_tag(f: &[char]) -> String {
    if f.is_empty() {
        "as drawn".into()
    } else {
        format!("reversed {}", f.iter().collect::<String>())
    }
}

/// Two move sequences from the same diagram must agree.
fn figure_cases<'a>(
    family: &'static str,
    tokens: &'static str,
    chords: &'static [char],
    lhs: &'static [Move],
    rhs: &'static [Move],
    evals: &'a [Evaluator<'a>],
) -> Vec<Case<'a>> {
    subsets(chords)
        .into_iter()
        .map(|f| {
            Case::new(format!("{family} ({})", flip_tag(&f)), move || {
                let g = chord_diagram(tokens, &f)?;
                let l = run_moves(&g, &f, lhs)?;
                let r = run_moves(&g, &f, rhs)?;
                programs_eq_all(evals, &l, &r)
            })
        })
        .collect()
}

/// The triangle: three slides exchange the two chords, up to reversing
/// edges so that the diagram matches the exchanged original.
fn triangle_case<'a>(f: Vec<char>, evals: &'a [Evaluator<'a>]) -> Case<'a> {
    Case::new(format!("triangle ({})", flip_tag(&f)), move || {
        let tokens = "a1 z1 a2 b1 z2 b2";
        let g = chord_diagram(tokens, &f)?;
        let moves: &[Move] = &[("b1", 'a', true), ("a1", 'b', true), ("b2", 'a', true)];
        let p = run_moves(&g, &f, moves)?;
        let (a, b) = (g.edge_by_name("a").unwrap(), g.edge_by_name("b").unwrap());
        // The exchanged diagram: chord a now occupies b's ends, with b's
        // orientation, and vice versa.
        let fs: Vec<char> = f.iter().map(|&c| if c == 'a' { 'b' } else { 'a' }).collect();
        let mut expected = g.clone();
        expected.vertices_mut()[0].order = tokens
            .split_whitespace()
            .map(|t| end_of(&g, &t.replace('a', "B").replace('b', "a").replace('B', "b"), &fs))
            .collect::<Result<_>>()?;
        let mut b_ = Builder::new(&g);
        b_.append(&p)?;
        for e in [a, b] {
            if b_.graph().locate(HalfEdge::st(e)) != expected.locate(HalfEdge::st(e)) {
                b_.reverse(e)?;
            }
        }
        let p = b_.finish();
        if p.codomain != expected {
            return Ok(Outcome::fail(format!("slides end at\n{}", p.codomain)));
        }
        is_swap(evals, &p, a, b)
    })
}

/// Whether a program acts as the exchange of the labels of `a` and `b`.
fn is_swap(evals: &[Evaluator<'_>], p: &Program, a: EdgeId, b: EdgeId) -> Result<Outcome> {
    for ev in evals {
        match ev {
            Evaluator::Symbolic => {
                let r = p.relabeling();
                for (e, w) in &r.images {
                    let want = match *e {
                        x if x == a => PivotWord::generator(b),
                        x if x == b => PivotWord::generator(a),
                        x => PivotWord::generator(x),
                    };
                    if *w != want {
                        let name = |k| p.domain.edge_name(k);
                        return Ok(Outcome::fail(format!(
                            "[symbolic] {} ↦ {}",
                            p.domain.edge_name(*e),
                            w.display_with(name)
                        )));
                    }
                }
            }
            Evaluator::Linear { hopf, max_dim } => {
                let op = p.linear(hopf, *max_dim)?;
                let edges = p.domain.edge_ids();
                let (ia, ib) = (edges.binary_search(&a).unwrap(), edges.binary_search(&b).unwrap());
                let swap = LinOperator::from_fn(edges.clone(), hopf.dim(), *max_dim, |x: &Tensor<Q>| {
                    let mut out = Tensor::zero(x.edges.clone());
                    for (k, c) in &x.terms {
                        let mut k = k.clone();
                        k.swap(ia, ib);
                        out.add_term(k, c.clone());
                    }
                    Ok(out)
                })?;
                if let Some(j) = op.first_difference(&swap) {
                    let x = Tensor::basis_index(edges, hopf.dim(), j);
                    return Ok(Outcome::fail(format!("[{}] basis vector {}", ev.name(), x.show(&p.domain, hopf))));
                }
            }
            Evaluator::Group { .. } => {}
        }
    }
    Ok(Outcome::pass())
}

/// The same program with every slide replaced by its inverse formula.
pub fn perturbed(p: &Program) -> Program {
    let prims = p
        .prims
        .iter()
        .map(|&x| match x {
            Prim::Slide { along, moved, inverse } => Prim::Slide { along, moved, inverse: !inverse },
            other => other,
        })
        .collect();
    Program { prims, ..p.clone() }
}

/// Involutivity for every valid slide of a graph.
fn involutivity_cases<'a>(label: &'static str, g: RibbonGraph, evals: &'a [Evaluator<'a>]) -> Vec<Case<'a>> {
    valid_slides(&g)
        .into_iter()
        .map(|s| {
            let g = g.clone();
            Case::new(format!("involutivity {label}: {}", s.display(&g)), move || {
                let mut b = Builder::new(&g);
                b.slide(s)?;
                b.slide(s.inverse())?;
                programs_eq_all(evals, &b.finish(), &Program::identity(&g))
            })
        })
        .collect()
}

/// Every pair of slides of distinct ends whose order does not matter
/// geometrically (both orders are defined and end at the same graph) must
/// commute as operators; the pairs are grouped by Bene's three kinds.
fn commuting_pairs(g: &RibbonGraph) -> Vec<(SlideDescriptor, SlideDescriptor, &'static str)> {
    let slides = valid_slides(g);
    let mut out = Vec::new();
    for (i, s) in slides.iter().enumerate() {
        for t in &slides[i + 1..] {
            if s.moved == t.moved || s.moved.edge == t.along || t.moved.edge == s.along {
                continue;
            }
            let ab = g.slide(s).and_then(|(h, _)| h.slide(t));
            let ba = g.slide(t).and_then(|(h, _)| h.slide(s));
            match (ab, ba) {
                (Ok((x, _)), Ok((y, _))) if x == y => {}
                _ => continue,
            }
            let kind = if s.moved.edge == t.moved.edge {
                "opposite-end commutativity"
            } else if s.along == t.along {
                "adjacent commutativity"
            } else {
                "commutativity"
            };
            out.push((*s, *t, kind));
        }
    }
    out
}

fn commuting_cases<'a>(label: &'static str, g: RibbonGraph, evals: &'a [Evaluator<'a>]) -> Vec<Case<'a>> {
    commuting_pairs(&g)
        .into_iter()
        .map(|(s, t, kind)| {
            let g = g.clone();
            Case::new(format!("{kind} {label}: {} / {}", s.display(&g), t.display(&g)), move || {
                let mut x = Builder::new(&g);
                x.slide(s)?;
                x.slide(t)?;
                let mut y = Builder::new(&g);
                y.slide(t)?;
                y.slide(s)?;
                programs_eq_all(evals, &x.finish(), &y.finish())
            })
        })
        .collect()
}

const LEFT_PENTAGON: (&str, &[Move], &[Move]) = (
    "b1 g1 a1 z1 a2 g2 b2 z2",
    &[("a1", 'g', true), ("g1", 'b', true)],
    &[("g1", 'b', true), ("a1", 'b', true), ("a1", 'g', true)],
);

const RIGHT_PENTAGON: (&str, &[Move], &[Move]) = (
    "z1 a1 a2 g1 g2 b1 z2 b2",
    &[("g1", 'a', true), ("b1", 'g', true)],
    &[("b1", 'g', true), ("b1", 'a', true), ("g1", 'a', true)],
);

const OPPOSITE_END: (&str, &[Move], &[Move]) =
    ("b1 g1 a1 a2 g2 b2", &[("g2", 'a', true), ("g1", 'b', true)], &[("g1", 'b', true), ("g2", 'a', true)]);

const ADJACENT: (&str, &[Move], &[Move]) =
    ("b1 g1 a1 a2 g2 b2", &[("a1", 'g', true), ("b1", 'g', false)], &[("b1", 'g', false), ("a1", 'g', true)]);

const DISJOINT: (&str, &[Move], &[Move]) = (
    "a1 b1 a2 b2 c1 d1 c2 d2",
    &[("b1", 'a', true), ("d1", 'c', true)],
    &[("d1", 'c', true), ("b1", 'a', true)],
);

/// The full suite. Figure configurations run in every evaluator, including
/// all orientations of the chords; the exhaustive pair enumeration runs in
/// the first evaluator only.
pub fn bene_suite(evals: &[Evaluator<'_>]) -> Result<SuiteReport> {
    let torus = StandardGraph::new(1, 0)?.graph;
    let one_one = StandardGraph::new(1, 1)?.graph;
    let genus2 = StandardGraph::new(2, 0)?.graph;
    let first = &evals[..1.min(evals.len())];
    let mut cases = Vec::new();
    cases.extend(involutivity_cases("torus", torus.clone(), evals));
    cases.extend(involutivity_cases("(1,1)", one_one.clone(), evals));
    let figures: [(&'static str, (&'static str, &'static [Move], &'static [Move]), &'static [char]); 5] = [
        ("commutativity figure", DISJOINT, &['a', 'b', 'c', 'd']),
        ("left pentagon", LEFT_PENTAGON, &['a', 'b', 'g']),
        ("right pentagon", RIGHT_PENTAGON, &['a', 'b', 'g']),
        ("opposite-end figure", OPPOSITE_END, &['a', 'b', 'g']),
        ("adjacent figure", ADJACENT, &['a', 'b', 'g']),
    ];
    for (family, (tokens, lhs, rhs), chords) in figures {
        cases.extend(figure_cases(family, tokens, chords, lhs, rhs, evals));
    }
    for f in subsets(&['a', 'b']) {
        cases.push(triangle_case(f, evals));
    }
    cases.extend(commuting_cases("(2,0)", genus2, first));
    cases.extend(commuting_cases("(1,1)", one_one, first));

    cases.push(Case::control("control: perturbed slide", move || {
        let s = slide_from_adjacency(&torus, HalfEdge::st(EdgeId(1)), EdgeId(0), true)?;
        let mut b = Builder::new(&torus);
        b.slide(s)?;
        let p = b.finish();
        programs_eq_all(evals, &p, &perturbed(&p))
    }));
    Ok(run_cases("bene", cases))
}
