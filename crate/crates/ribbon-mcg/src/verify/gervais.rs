//! Gervais' relations among the twist generators of the standard graph,
//! with cases selected by the intersection numbers of the curves.

use serde::Serialize;

use super::check::{programs_eq_all, Evaluator};
use super::{run_cases, Case, SuiteReport};
use crate::action::mcg_word;
use crate::error::{Error, Result};
use crate::graph::{GeneratorName, StandardGraph};

/// One relation between two twist words on a standard graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCase {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub genus: usize,
    pub boundaries: usize,
    /// Why the case is in the list: relation family, intersection number,
    /// index ordering, provenance.
    pub tags: Vec<String>,
    /// Deliberately false relation that must fail.
    pub negative_control: bool,
}

impl RelationCase {
    fn new(s: &StandardGraph, name: String, lhs: String, rhs: String, tags: Vec<String>) -> Self {
        RelationCase { name, lhs, rhs, genus: s.genus, boundaries: s.boundaries, tags, negative_control: false }
    }
}

fn twist(name: GeneratorName) -> String {
    format!("D_{{{name}}}")
}

/// Whether some rotation of `xs` is increasing (strictly or weakly).
fn cyclically_ordered(xs: &[usize], strict: bool) -> bool {
    let n = xs.len();
    (0..n).any(|r| {
        (0..n - 1).all(|i| {
            let (a, b) = (xs[(i + r) % n], xs[(i + r + 1) % n]);
            if strict {
                a < b
            } else {
                a <= b
            }
        })
    })
}

/// Essential intersection number of two distinct generating curves of the
/// standard graph (g, n), with δ/γ indices 0..=n+2g−2.
pub fn intersection(g: usize, n: usize, x: GeneratorName, y: GeneratorName) -> usize {
    use GeneratorName::*;
    match (x, y) {
        (Alpha(_), Alpha(_)) | (Delta(_), Delta(_)) => 0,
        (Alpha(i), Delta(j)) | (Delta(j), Alpha(i)) => usize::from(i == g || j == n + 2 * i),
        (Alpha(i), Gamma(j, k)) | (Gamma(j, k), Alpha(i)) => usize::from(j == n + 2 * i || k == n + 2 * i),
        (Delta(i), Gamma(j, k)) | (Gamma(j, k), Delta(i)) => {
            if cyclically_ordered(&[k, i, j], true) {
                2
            } else {
                0
            }
        }
        (Gamma(i, j), Gamma(k, l)) => {
            if cyclically_ordered(&[j, k, l, i], true) {
                4
            } else if cyclically_ordered(&[j, l, k, i], false)
                || cyclically_ordered(&[l, j, i, k], false)
                || cyclically_ordered(&[j, i, l, k], false)
            {
                0
            } else {
                2
            }
        }
    }
}

fn gamma(i: usize, j: usize) -> Option<GeneratorName> {
    (i != j).then_some(GeneratorName::Gamma(i, j))
}

fn product(names: &[Option<GeneratorName>]) -> String {
    names.iter().flatten().map(|&n| twist(n)).collect::<Vec<_>>().join(" ")
}

/// Relation (iv) for the triple (i, j, k); `permuted` reorders the
/// mutually commuting δ- and γ-twists.
fn lantern_like(s: &StandardGraph, i: usize, j: usize, k: usize, permuted: bool) -> RelationCase {
    use GeneratorName::*;
    let ag = Alpha(s.genus);
    let (ds, gs) = if permuted {
        ([Delta(i), Delta(j), Delta(k)], [gamma(j, k), gamma(k, i), gamma(i, j)])
    } else {
        ([Delta(k), Delta(i), Delta(j)], [gamma(i, j), gamma(j, k), gamma(k, i)])
    };
    let lhs = format!("({} {} {} {})^3", twist(ds[0]), twist(ds[1]), twist(ds[2]), twist(ag));
    let rhs = product(&gs);
    let order = if j <= i && i <= k {
        "j<=i<=k"
    } else if k <= j && j <= i {
        "k<=j<=i"
    } else {
        "i<=k<=j"
    };
    let mut tags = vec!["iv".to_string(), order.to_string()];
    if permuted {
        tags.push("permuted".into());
    }
    let name = format!("(iv){} i={i} j={j} k={k}", if permuted { " permuted" } else { "" });
    RelationCase::new(s, name, lhs, rhs, tags)
}

/// The complete case list for the standard graph (g, n): (i) from the
/// handle legs (the last one from the footnote to the theorem), (ii) and
/// (iii) for every pair of generators by intersection number, (iv) for
/// every admissible triple plus one permuted variant.
pub fn gervais_cases(genus: usize, boundaries: usize) -> Result<Vec<RelationCase>> {
    if genus == 0 {
        return Err(Error::OutOfRange("Gervais relations need genus at least 1".into()));
    }
    let s = StandardGraph::new(genus, boundaries)?;
    let (g, n, m) = (genus, boundaries, s.max_index());
    let mut out = Vec::new();
    for j in 1..=g.saturating_sub(2) {
        let (l, r) = (GeneratorName::Gamma(n + 2 * j + 1, n + 2 * j), GeneratorName::Gamma(n + 2 * j, n + 2 * j - 1));
        out.push(RelationCase::new(&s, format!("(i) j={j}"), twist(l), twist(r), vec!["i".into()]));
    }
    if g >= 2 {
        let (l, r) = (GeneratorName::Gamma(0, m), GeneratorName::Gamma(m, m - 1));
        out.push(RelationCase::new(&s, "(i) last handle".into(), twist(l), twist(r), vec!["i".into(), "footnote".into()]));
    }
    let names = s.generator_names();
    for (a, &x) in names.iter().enumerate() {
        for &y in &names[a + 1..] {
            let k = intersection(g, n, x, y);
            let tags = vec![format!("|{x}∩{y}|={k}")];
            let (tx, ty) = (twist(x), twist(y));
            match k {
                0 => out.push(RelationCase::new(
                    &s,
                    format!("(ii) {x}, {y}"),
                    format!("{tx} {ty}"),
                    format!("{ty} {tx}"),
                    [vec!["ii".into()], tags].concat(),
                )),
                1 => out.push(RelationCase::new(
                    &s,
                    format!("(iii) {x}, {y}"),
                    format!("{tx} {ty} {tx}"),
                    format!("{ty} {tx} {ty}"),
                    [vec!["iii".into()], tags].concat(),
                )),
                _ => {}
            }
        }
    }
    let mut permuted = false;
    for i in 0..=m {
        for j in 0..=m {
            for k in 0..=m {
                let all_equal = i == j && j == k;
                let admissible = (j <= i && i <= k) || (k <= j && j <= i) || (i <= k && k <= j);
                if all_equal || !admissible {
                    continue;
                }
                out.push(lantern_like(&s, i, j, k, false));
                if !permuted && i != j && j != k && i != k {
                    out.push(lantern_like(&s, i, j, k, true));
                    permuted = true;
                }
            }
        }
    }
    Ok(out)
}

/// A false relation for the harness self-test: two curves meeting once
/// claimed to commute.
pub fn gervais_control(genus: usize, boundaries: usize) -> Result<RelationCase> {
    let s = StandardGraph::new(genus, boundaries)?;
    let (x, y) = (GeneratorName::Alpha(genus), GeneratorName::Delta(0));
    let mut c = RelationCase::new(
        &s,
        format!("control: {x}, {y} commute"),
        format!("{} {}", twist(x), twist(y)),
        format!("{} {}", twist(y), twist(x)),
        vec!["control".into(), format!("|{x}∩{y}|={}", intersection(genus, boundaries, x, y))],
    );
    c.negative_control = true;
    Ok(c)
}

/// Compile and check relation cases on their standard graphs.
pub fn run_relations(suite: &str, cases: Vec<RelationCase>, evals: &[Evaluator<'_>]) -> SuiteReport {
    let cases = cases
        .into_iter()
        .map(|c| {
            let run = move || {
                let s = StandardGraph::new(c.genus, c.boundaries)?;
                let l = mcg_word(&s.graph, Some(&s), &c.lhs)?;
                let r = mcg_word(&s.graph, Some(&s), &c.rhs)?;
                programs_eq_all(evals, &l, &r)
            };
            let name = format!("({},{}) {}", c.genus, c.boundaries, c.name);
            if c.negative_control {
                Case::control(name, run)
            } else {
                Case::new(name, run)
            }
        })
        .collect();
    run_cases(suite, cases)
}

/// Gervais' relations for each surface, plus one control.
pub fn gervais_suite(surfaces: &[(usize, usize)], evals: &[Evaluator<'_>]) -> Result<SuiteReport> {
    let mut cases = Vec::new();
    for &(g, n) in surfaces {
        cases.extend(gervais_cases(g, n)?);
    }
    if let Some(&(g, n)) = surfaces.first() {
        cases.push(gervais_control(g, n)?);
    }
    Ok(run_relations("gervais", cases, evals))
}
