//! Dehn twists along the generating curves of the standard graph, and a
//! small word language for composing them.

use super::{Builder, Program};
use crate::error::{Error, Result};
use crate::graph::{GeneratorName, GraphPath, HalfEdge, RibbonGraph, SlideDescriptor, StandardGraph, Step, Variant};

/// How the ends enclosed between the added edges are moved out of the way
/// in the twist along γ_{i,j}, i < j. Both routes give the same operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Slide the ends one at a time along α_g.
    AlongAlpha,
    /// Slide the ends along the face path α_g ∘ δ'_j⁻¹ and then along δ'_i.
    AlongFacePaths,
}

/// Twist along a named generator.
pub fn generator_twist(s: &StandardGraph, name: GeneratorName, inverse: bool) -> Result<Program> {
    match name {
        GeneratorName::Gamma(i, j) if 1 <= i && i < j => gamma_twist(s, i, j, inverse, Route::AlongAlpha),
        _ => {
            let path = s.generator_path(name)?;
            let mut b = Builder::new(&s.graph);
            b.twist_path(&path, inverse)?;
            Ok(b.finish())
        }
    }
}

/// Twist along γ_{i,j} for 1 ≤ i < j, which is not a face path: add
/// complements of δ_i and δ_j, clear the region between them, twist along
/// the face path δ'_i α_g δ'_j⁻¹ α_g⁻¹, and undo the preparation.
pub fn gamma_twist(s: &StandardGraph, i: usize, j: usize, inverse: bool, route: Route) -> Result<Program> {
    if !(1 <= i && i < j && j <= s.max_index()) {
        return Err(Error::OutOfRange(format!("gamma_{i}_{j} needs 1 <= i < j <= {}", s.max_index())));
    }
    let ag = s.alpha[s.genus - 1];
    let bg = s.beta[s.genus - 1];
    let mut b = Builder::new(&s.graph);
    let di = b.add_edge_along(&s.generator_path(GeneratorName::Delta(i))?, Some("d_i"))?;
    let dj = b.add_edge_along(&s.generator_path(GeneratorName::Delta(j))?, Some("d_j"))?;

    let mut undo: Vec<SlideDescriptor> = Vec::new();
    match route {
        Route::AlongAlpha => {
            while b.neighbour(HalfEdge::st(ag), false)? != HalfEdge::ta(dj) {
                let h = b.neighbour(HalfEdge::st(ag), false)?;
                let sd = SlideDescriptor::new(ag, Variant::R, h);
                b.slide(sd)?;
                undo.push(sd);
            }
        }
        Route::AlongFacePaths => {
            // α_g ∘ δ'_j⁻¹ in traversal order: δ'_j backwards, then α_g.
            let path = GraphPath::new(vec![Step::bwd(dj), Step::fwd(ag)]);
            let mut moved = vec![HalfEdge::st(bg)];
            while b.neighbour(HalfEdge::ta(dj), true)? != HalfEdge::st(ag) {
                let h = b.neighbour(HalfEdge::ta(dj), true)?;
                b.face_slide(&path, h)?;
                undo.push(SlideDescriptor::new(dj, Variant::MinusR, h));
                undo.push(SlideDescriptor::new(ag, Variant::L, h));
                moved.push(h);
            }
            // The ends now follow st β_g; carry them all along δ'_i.
            while let Ok(h) = b.neighbour(HalfEdge::st(di), true) {
                if !moved.contains(&h) {
                    break;
                }
                let sd = SlideDescriptor::new(di, Variant::L, h);
                b.slide(sd)?;
                undo.push(sd);
            }
        }
    }
    if route == Route::AlongAlpha {
        let sd = SlideDescriptor::new(di, Variant::L, HalfEdge::st(bg));
        b.slide(sd)?;
        undo.push(sd);
    }

    let star = GraphPath::new(vec![Step::bwd(ag), Step::bwd(dj), Step::fwd(ag), Step::fwd(di)]);
    b.twist_face_path(&star, inverse)?;

    for sd in undo.iter().rev() {
        b.slide(sd.inverse())?;
    }
    b.delete(dj)?;
    b.delete(di)?;
    let p = b.finish();
    if p.codomain != s.graph {
        return Err(Error::Precondition(format!("gamma_{i}_{j} twist did not restore the graph")));
    }
    Ok(p)
}

/// One twist program per generator of the mapping class group of the
/// surface with genus g and n+1 boundary components.
pub fn generating_twists(s: &StandardGraph) -> Result<Vec<(GeneratorName, Program)>> {
    s.generator_names().into_iter().map(|n| Ok((n, generator_twist(s, n, false)?))).collect()
}

/// Resolve a twist name: a generator name for the standard graph, or the
/// name of a loop edge.
pub fn named_twist(g: &RibbonGraph, s: Option<&StandardGraph>, name: &str, inverse: bool) -> Result<Program> {
    if let (Some(s), Ok(gen)) = (s, name.parse::<GeneratorName>()) {
        if s.graph == *g {
            return generator_twist(s, gen, inverse);
        }
    }
    if let Some(e) = g.edge_by_name(name) {
        let mut b = Builder::new(g);
        b.twist_loop(e, inverse)?;
        return Ok(b.finish());
    }
    Err(Error::Unknown(format!("twist {name}")))
}

#[derive(Clone, Debug, PartialEq)]
enum WordTok {
    Twist(String),
    Pow(i64),
    Open,
    Close,
}

fn superscript(c: char) -> Option<i64> {
    "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|d| d == c).map(|d| d as i64)
}

fn tokenize_word(text: &str) -> Result<Vec<WordTok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let bad = |m: &str| Error::Parse(format!("{m} in twist word {text:?}"));
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() || c == '∘' || c == '*' {
            i += 1;
        } else if c == '(' {
            out.push(WordTok::Open);
            i += 1;
        } else if c == ')' {
            out.push(WordTok::Close);
            i += 1;
        } else if c == '^' {
            i += 1;
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_ascii_digit() || (s.is_empty() && chars[i] == '-')) {
                s.push(chars[i]);
                i += 1;
            }
            out.push(WordTok::Pow(s.parse().map_err(|_| bad("bad exponent"))?));
        } else if c == '⁻' || superscript(c).is_some() {
            let neg = c == '⁻';
            if neg {
                i += 1;
            }
            let mut k = 0;
            let mut any = false;
            while i < chars.len() {
                let Some(d) = superscript(chars[i]) else { break };
                k = 10 * k + d;
                any = true;
                i += 1;
            }
            if !any {
                return Err(bad("bad superscript"));
            }
            out.push(WordTok::Pow(if neg { -k } else { k }));
        } else if c == 'D' {
            i += 1;
            if i < chars.len() && chars[i] == '_' {
                i += 1;
            }
            let mut name = String::new();
            if i < chars.len() && chars[i] == '{' {
                i += 1;
                let mut depth = 1;
                while i < chars.len() {
                    match chars[i] {
                        '{' => depth += 1,
                        '}' => {
                            depth -= 1;
                            if depth == 0 {
                                break;
                            }
                        }
                        _ => {}
                    }
                    name.push(chars[i]);
                    i += 1;
                }
                if i == chars.len() {
                    return Err(bad("unclosed brace"));
                }
                i += 1;
            } else {
                while i < chars.len()
                    && !chars[i].is_whitespace()
                    && !matches!(chars[i], '(' | ')' | '^' | '⁻' | '∘' | '*')
                    && superscript(chars[i]).is_none()
                {
                    name.push(chars[i]);
                    i += 1;
                }
            }
            if name.is_empty() {
                return Err(bad("missing twist name"));
            }
            out.push(WordTok::Twist(name));
        } else {
            return Err(bad(&format!("unexpected {c:?}")));
        }
    }
    Ok(out)
}

/// A product of twists, such as `D_b D_a D_b`, `(D_b D_a D_b)^4`,
/// `D_{δ₀}^-1` or `D_{gamma_1_2}`. Factors compose right to left: the
/// rightmost twist acts first.
pub fn mcg_word(g: &RibbonGraph, s: Option<&StandardGraph>, word: &str) -> Result<Program> {
    let toks = tokenize_word(word)?;
    let mut pos = 0;
    let p = parse_product(g, s, &toks, &mut pos)?;
    if pos != toks.len() {
        return Err(Error::Parse(format!("unbalanced parentheses in {word:?}")));
    }
    Ok(p)
}

fn parse_product(g: &RibbonGraph, s: Option<&StandardGraph>, toks: &[WordTok], pos: &mut usize) -> Result<Program> {
    let mut factors: Vec<Program> = Vec::new();
    while *pos < toks.len() {
        let (base, inv_base) = match &toks[*pos] {
            WordTok::Close => break,
            WordTok::Twist(name) => {
                *pos += 1;
                let name = name.clone();
                (named_twist(g, s, &name, false)?, Some(name))
            }
            WordTok::Open => {
                *pos += 1;
                let inner = parse_product(g, s, toks, pos)?;
                if toks.get(*pos) != Some(&WordTok::Close) {
                    return Err(Error::Parse("missing closing parenthesis".into()));
                }
                *pos += 1;
                (inner, None)
            }
            WordTok::Pow(_) => return Err(Error::Parse("exponent without a base".into())),
        };
        let mut exp = 1;
        if let Some(WordTok::Pow(k)) = toks.get(*pos) {
            exp = *k;
            *pos += 1;
        }
        let f = if exp >= 0 {
            base.pow(exp as usize)?
        } else {
            let inv = match inv_base {
                Some(name) => named_twist(g, s, &name, true)?,
                None => {
                    // Invert a group of twists factor by factor: not needed
                    // for twists that restore the graph, which compose freely.
                    return Err(Error::Parse("negative powers apply to single twists only".into()));
                }
            };
            inv.pow(exp.unsigned_abs() as usize)?
        };
        factors.push(f);
    }
    let mut out = Program::identity(g);
    for f in factors.iter().rev() {
        out = out.then(f)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::group::PivotWord;

    fn expect(s: &StandardGraph, p: &Program, changed: &[(&str, &str)], env: &[(&str, &str)]) {
        let g = &s.graph;
        let mut env_map = BTreeMap::new();
        for (k, v) in env {
            let w = PivotWord::parse(v, |x| g.edge_by_name(x), &env_map).unwrap();
            env_map.insert(k.to_string(), w);
        }
        let r = p.relabeling();
        for e in g.edges() {
            let name = g.edge_name(e);
            let want = match changed.iter().find(|(x, _)| *x == name) {
                Some((_, w)) => PivotWord::parse(w, |x| g.edge_by_name(x), &env_map).unwrap(),
                None => PivotWord::generator(e),
            };
            assert_eq!(
                r.images[&e],
                want,
                "edge {name}: got {}, want {}",
                r.images[&e].display_with(|k| g.edge_name(k)),
                want.display_with(|k| g.edge_name(k))
            );
        }
    }

    fn twist(s: &StandardGraph, name: &str) -> Program {
        generator_twist(s, name.parse().unwrap(), false).unwrap()
    }

    #[test]
    fn torus_twists() {
        let s = StandardGraph::new(1, 0).unwrap();
        let g = &s.graph;
        let db = mcg_word(g, Some(&s), "D_b1").unwrap();
        expect(&s, &db, &[("a1", "b1 a1")], &[]);
        let da = mcg_word(g, Some(&s), "D_a1").unwrap();
        expect(&s, &da, &[("b1", "b1 a1^-1")], &[]);
        let bab = mcg_word(g, Some(&s), "D_b1 D_a1 D_b1").unwrap();
        expect(&s, &bab, &[("a1", "b1"), ("b1", "b1 a1^-1 b1^-1")], &[]);
        let full = mcg_word(g, Some(&s), "(D_b1 D_a1 D_b1)^4").unwrap();
        expect(
            &s,
            &full,
            &[("a1", "[b1,a1^-1] a1 [a1^-1,b1]"), ("b1", "[b1,a1^-1] b1 [a1^-1,b1]")],
            &[],
        );
        let id = mcg_word(g, Some(&s), "D_b1 D_b1^-1").unwrap();
        assert!(id.relabeling().is_identity());
    }

    #[test]
    fn genus_two_table() {
        let s = StandardGraph::new(2, 0).unwrap();
        let w = ("w", "a2 b1^-1 a2^-1 [b2,a2^-1] [b1,a1^-1]");
        let u = ("u", "a2^-1 b2^-1 a2 [b1,a1^-1]");
        let table: Vec<(&str, Vec<(&str, &str)>)> = vec![
            ("alpha_1", vec![("b1", "b1 a1^-1")]),
            ("alpha_2", vec![("b2", "b2 a2^-1")]),
            ("delta_0", vec![("a2", "b2 a2")]),
            (
                "delta_1",
                vec![
                    ("a1", "a2^-1 b2^-1 a2 [b1,a1^-1] a1 [a1^-1,b1] a2^-1 b2 a2"),
                    ("b1", "a2^-1 b2^-1 a2 [b1,a1^-1] b1 [a1^-1,b1] a2^-1 b2 a2"),
                    ("a2", "p^2 a2 [a1^-1,b1] a2^-1 b2 a2"),
                ],
            ),
            (
                "delta_2",
                vec![
                    ("a1", "p^-1 a2^-1 b2^-1 a2 b1 a1"),
                    ("b1", "a2^-1 b2^-1 a2 b1 a2^-1 b2 a2"),
                    ("a2", "p a2 b1^-1 a2^-1 b2 a2"),
                ],
            ),
            ("gamma_0_1", vec![("a1", "[b1,a1^-1] a1 [a1^-1,b1]"), ("b1", "[b1,a1^-1] b1 [a1^-1,b1]")]),
            ("gamma_0_2", vec![("a1", "b1 a1")]),
            (
                "gamma_1_0",
                ["a1", "b1", "a2", "b2"]
                    .map(|x| (x, ""))
                    .to_vec(),
            ),
            (
                "gamma_2_0",
                vec![
                    ("a1", "p^-2 [b2,a2^-1] b1 a1"),
                    ("b1", "[b2,a2^-1] b1 b1 b1^-1 [a2^-1,b2]"),
                    ("a2", "[b2,a2^-1] b1 a2 b1^-1 [a2^-1,b2]"),
                    ("b2", "[b2,a2^-1] b1 b2 b1^-1 [a2^-1,b2]"),
                ],
            ),
            ("gamma_2_1", vec![("a1", "b1 a1")]),
            (
                "gamma_1_2",
                vec![
                    ("a1", "p^2 [w,a2^-1] a1 w^-1"),
                    ("b1", "[w,a2^-1] b1 [a2^-1,w]"),
                    ("a2", "w a2 w^-1"),
                    ("b2", "b2 [u,w]"),
                ],
            ),
        ];
        for (name, changed) in table {
            let p = twist(&s, name);
            if name == "gamma_1_0" {
                let outer = "[b2,a2^-1] [b1,a1^-1] X [a1^-1,b1] [a2^-1,b2]";
                let c: Vec<(String, String)> =
                    changed.iter().map(|(x, _)| (x.to_string(), outer.replace('X', x))).collect();
                let c: Vec<(&str, &str)> = c.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
                expect(&s, &p, &c, &[]);
            } else {
                expect(&s, &p, &changed, &[w, u]);
            }
        }
    }

    #[test]
    fn routes_agree() {
        for (g, n) in [(2, 0), (2, 1), (3, 0)] {
            let s = StandardGraph::new(g, n).unwrap();
            for name in s.generator_names() {
                if let GeneratorName::Gamma(i, j) = name {
                    if 1 <= i && i < j {
                        let a = gamma_twist(&s, i, j, false, Route::AlongAlpha).unwrap();
                        let b = gamma_twist(&s, i, j, false, Route::AlongFacePaths).unwrap();
                        assert_eq!(a.relabeling(), b.relabeling(), "{name} ({g},{n})");
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_twists() {
        let s = StandardGraph::new(2, 1).unwrap();
        for name in s.generator_names() {
            let f = generator_twist(&s, name, false).unwrap();
            let b = generator_twist(&s, name, true).unwrap();
            assert!(f.then(&b).unwrap().relabeling().is_identity(), "{name}");
            assert!(b.then(&f).unwrap().relabeling().is_identity(), "{name}");
        }
    }

    #[test]
    fn word_syntax() {
        let s = StandardGraph::new(2, 0).unwrap();
        let g = &s.graph;
        let a = mcg_word(g, Some(&s), "D_{δ₀} D_{α₂}").unwrap();
        let b = twist(&s, "alpha_2").then(&twist(&s, "delta_0")).unwrap();
        assert_eq!(a.relabeling(), b.relabeling());
        let c = mcg_word(g, Some(&s), "D_{delta_0}⁻¹ D_{delta_0}").unwrap();
        assert!(c.relabeling().is_identity());
        assert!(mcg_word(g, Some(&s), "D_{nope}").is_err());
        assert!(mcg_word(g, Some(&s), "(D_a1").is_err());
        assert!(mcg_word(g, Some(&s), "(D_a1 D_b1)^-1").is_err());
    }
}
