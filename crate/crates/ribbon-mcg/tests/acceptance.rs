//! Acceptance criteria 1–9: one PASS/FAIL line each, with wall time
//! against the allowed budget.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use ribbon_mcg::action::{generator_twist, mcg_word};
use ribbon_mcg::graph::{matches_standard, random_admissible, standard_form, Move, RibbonGraph, StandardGraph};
use ribbon_mcg::group::{Biinvariants, FiniteGroup, PivotWord, DEFAULT_MAX_STATES};
use ribbon_mcg::hopf::{FinHopf, DEFAULT_MAX_DIM, Q};
use ribbon_mcg::verify::{
    bene_suite, closed_surface_suite, commutator_oracle, default_instances, equivariance_suite, gervais_suite,
    hopf_suite, lemma_suite, linear_eq, symbolic_eq, torus_suite, Evaluator, SuiteReport, Verdict,
};
use ribbon_mcg::Result;

type Check = fn() -> Result<Vec<String>>;

fn sweedler() -> Result<FinHopf<Q>> {
    FinHopf::<Q>::sweedler4()?.with_pivot_named("g")
}

fn suite_problems(r: &SuiteReport) -> Vec<String> {
    let mut out: Vec<String> = r
        .failures()
        .iter()
        .map(|c| format!("{}: {:?} {}", c.case, c.verdict, c.witness.as_deref().unwrap_or("")))
        .collect();
    out.extend(r.silent_controls().iter().map(|c| format!("control passed: {}", c.case)));
    if !r.cases.iter().any(|c| c.negative_control) {
        out.push("suite has no negative control".into());
    }
    out
}

/// 1. Hopf and pivotal axioms, T∘T = 1, for Z2, Z3, S3 and Sweedler; each
/// instance under a second.
fn hopf_axioms() -> Result<Vec<String>> {
    let mut problems = Vec::new();
    for h in default_instances()? {
        let t = Instant::now();
        let r = hopf_suite(std::slice::from_ref(&h));
        problems.extend(suite_problems(&r));
        if t.elapsed() > Duration::from_secs(1) {
            problems.push(format!("{} took {:?}", h.name, t.elapsed()));
        }
    }
    Ok(problems)
}

/// 2. Torus braid relation symbolically and as 16×16 Sweedler matrices.
fn torus_braid() -> Result<Vec<String>> {
    let s = StandardGraph::new(1, 0)?;
    let l = mcg_word(&s.graph, Some(&s), "D_a1 D_b1 D_a1")?;
    let r = mcg_word(&s.graph, Some(&s), "D_b1 D_a1 D_b1")?;
    let mut problems = Vec::new();
    if symbolic_eq(&l, &r).verdict != Verdict::Pass {
        problems.push("symbolic braid relation fails".into());
    }
    let h = sweedler()?;
    let m = l.linear(&h, DEFAULT_MAX_DIM)?;
    if m.to_matrix().rows != 16 || m.to_matrix().cols != 16 {
        problems.push("Sweedler torus operator is not 16×16".into());
    }
    if linear_eq(&h, &l, &r, DEFAULT_MAX_DIM)?.verdict != Verdict::Pass {
        problems.push("Sweedler braid relation fails".into());
    }
    Ok(problems)
}

/// 3. The full twist is the ribbon operator and trivial on biinvariants.
fn torus_full_twist() -> Result<Vec<String>> {
    let h = sweedler()?;
    let evals = [Evaluator::Symbolic, Evaluator::Linear { hopf: &h, max_dim: DEFAULT_MAX_DIM }];
    let r = torus_suite(&evals)?;
    let mut problems = suite_problems(&r);
    for needle in ["full twist is the ribbon operator", "full twist is trivial on biinvariants"] {
        if r.cases.iter().filter(|c| c.case.starts_with(needle)).count() != evals.len() {
            problems.push(format!("missing cases: {needle}"));
        }
    }
    Ok(problems)
}

/// 4. The genus-2 generator table, rule by rule.
fn genus_two_table() -> Result<Vec<String>> {
    let s = StandardGraph::new(2, 0)?;
    let g = &s.graph;
    let mut env = BTreeMap::new();
    let parse = |text: &str, env: &BTreeMap<String, PivotWord>| PivotWord::parse(text, |x| g.edge_by_name(x), env);
    let w = parse("a2 b1^-1 a2^-1 [b2,a2^-1] [b1,a1^-1]", &env)?;
    let u = parse("a2^-1 b2^-1 a2 [b1,a1^-1]", &env)?;
    env.insert("w".to_string(), w);
    env.insert("u".to_string(), u);
    let conj = |x: &str| format!("[b2,a2^-1] [b1,a1^-1] {x} [a1^-1,b1] [a2^-1,b2]");
    let table: Vec<(&str, Vec<(&str, String)>)> = vec![
        ("alpha_1", vec![("b1", "b1 a1^-1".into())]),
        ("alpha_2", vec![("b2", "b2 a2^-1".into())]),
        ("delta_0", vec![("a2", "b2 a2".into())]),
        (
            "delta_1",
            vec![
                ("a1", "a2^-1 b2^-1 a2 [b1,a1^-1] a1 [a1^-1,b1] a2^-1 b2 a2".into()),
                ("b1", "a2^-1 b2^-1 a2 [b1,a1^-1] b1 [a1^-1,b1] a2^-1 b2 a2".into()),
                ("a2", "p^2 a2 [a1^-1,b1] a2^-1 b2 a2".into()),
            ],
        ),
        (
            "delta_2",
            vec![
                ("a1", "p^-1 a2^-1 b2^-1 a2 b1 a1".into()),
                ("b1", "a2^-1 b2^-1 a2 b1 a2^-1 b2 a2".into()),
                ("a2", "p a2 b1^-1 a2^-1 b2 a2".into()),
            ],
        ),
        ("gamma_0_1", vec![("a1", "[b1,a1^-1] a1 [a1^-1,b1]".into()), ("b1", "[b1,a1^-1] b1 [a1^-1,b1]".into())]),
        ("gamma_0_2", vec![("a1", "b1 a1".into())]),
        ("gamma_1_0", ["a1", "b1", "a2", "b2"].into_iter().map(|x| (x, conj(x))).collect()),
        (
            "gamma_2_0",
            vec![
                ("a1", "p^-2 [b2,a2^-1] b1 a1".into()),
                ("b1", "[b2,a2^-1] b1 b1 b1^-1 [a2^-1,b2]".into()),
                ("a2", "[b2,a2^-1] b1 a2 b1^-1 [a2^-1,b2]".into()),
                ("b2", "[b2,a2^-1] b1 b2 b1^-1 [a2^-1,b2]".into()),
            ],
        ),
        ("gamma_2_1", vec![("a1", "b1 a1".into())]),
        (
            "gamma_1_2",
            vec![
                ("a1", "p^2 [w,a2^-1] a1 w^-1".into()),
                ("b1", "[w,a2^-1] b1 [a2^-1,w]".into()),
                ("a2", "w a2 w^-1".into()),
                ("b2", "b2 [u,w]".into()),
            ],
        ),
    ];
    let mut problems = Vec::new();
    for (name, changed) in table {
        let r = generator_twist(&s, name.parse()?, false)?.relabeling();
        for e in g.edges() {
            let edge = g.edge_name(e);
            let want = match changed.iter().find(|(x, _)| *x == edge) {
                Some((_, text)) => parse(text, &env)?.reduce(),
                None => PivotWord::generator(e),
            };
            if r.images[&e] != want {
                problems.push(format!(
                    "D_{name}: {edge} ↦ {} but the table has {}",
                    r.images[&e].display_with(|k| g.edge_name(k)),
                    want.display_with(|k| g.edge_name(k))
                ));
            }
        }
    }
    Ok(problems)
}

/// 5. Gervais relations (i)–(iv) symbolically on four surfaces.
fn gervais() -> Result<Vec<String>> {
    let r = gervais_suite(&[(2, 0), (1, 1), (1, 2), (3, 0)], &[Evaluator::Symbolic])?;
    let mut problems = suite_problems(&r);
    for family in ["(i)", "(ii)", "(iii)", "(iv)"] {
        if !r.cases.iter().any(|c| c.case.contains(family)) {
            problems.push(format!("no {family} cases"));
        }
    }
    Ok(problems)
}

/// 6. Bene's relations and the slide/twist lemmas in both backends.
fn bene_and_lemmas() -> Result<Vec<String>> {
    let h = sweedler()?;
    let evals = [Evaluator::Symbolic, Evaluator::Linear { hopf: &h, max_dim: DEFAULT_MAX_DIM }];
    let mut problems = suite_problems(&bene_suite(&evals)?);
    problems.extend(suite_problems(&lemma_suite(&evals)?));
    Ok(problems)
}

/// 7. Closed genus 2 with S3, p = e: 486 flat labelings (against an
/// independent count), the five relations on the orbit space, and the
/// failing control on the full state space.
fn closed_surface() -> Result<Vec<String>> {
    let s3 = FiniteGroup::by_name("S3")?;
    let mut problems = Vec::new();
    let s = StandardGraph::new(2, 0)?;
    let b = Biinvariants::compute(&s.graph, s.base, &s3, 0, DEFAULT_MAX_STATES)?;
    let oracle = commutator_oracle(&s3, 2);
    if b.coinvariants.len() != 486 || oracle != 486 {
        problems.push(format!("{} flat labelings, enumeration {oracle}, expected 486", b.coinvariants.len()));
    }
    let evals = [Evaluator::Group { group: &s3, pivot: 0, max_states: DEFAULT_MAX_STATES }];
    let r = closed_surface_suite(2, 0, &evals, DEFAULT_MAX_STATES)?;
    problems.extend(suite_problems(&r));
    let relations = ["D_{gamma_1_0} = 1", "D_{delta_0} = D_{delta_1}", "D_{gamma_0_1} = (", "D_{gamma_0_2} = D_{gamma_1_2}", "D_{gamma_2_0} = D_{gamma_2_1}"];
    for rel in relations {
        let found = r.cases.iter().any(|c| !c.negative_control && c.case.starts_with(rel) && c.verdict == Verdict::Pass);
        if !found {
            problems.push(format!("relation {rel}… did not pass"));
        }
    }
    let control = r
        .cases
        .iter()
        .find(|c| c.negative_control && c.case.starts_with("control: D_{delta_0} = D_{delta_1} on the full state space"));
    match control {
        Some(c) if c.verdict == Verdict::Fail && c.witness.is_some() => {}
        _ => problems.push("control D_δ0 = D_δ1 on the full state space did not fail with a witness".into()),
    }
    Ok(problems)
}

/// 8. Equivariance of every generator at every cilium: S3 exhaustively
/// and F[Z2] as matrices.
fn equivariance() -> Result<Vec<String>> {
    let s3 = FiniteGroup::by_name("S3")?;
    let z2 = FiniteGroup::by_name("Z2")?;
    let fz2 = FinHopf::<Q>::group_algebra(&z2).with_pivot_named("e")?;
    let evals = [
        Evaluator::Group { group: &s3, pivot: 0, max_states: DEFAULT_MAX_STATES },
        Evaluator::Linear { hopf: &fz2, max_dim: DEFAULT_MAX_DIM },
    ];
    let mut problems = Vec::new();
    for (g, n) in [(2, 0), (1, 1)] {
        problems.extend(suite_problems(&equivariance_suite(g, n, &evals)?));
    }
    Ok(problems)
}

fn replay(g: &RibbonGraph, moves: &[Move]) -> Result<RibbonGraph> {
    let mut cur = g.clone();
    for m in moves {
        cur = match m {
            Move::Slide(s) => cur.slide(s)?.0,
            Move::Reverse(e) => cur.reversed(*e)?,
        };
    }
    Ok(cur)
}

/// 9. 100 random admissible graphs reduce to the standard diagram by the
/// returned moves.
fn standardize() -> Result<Vec<String>> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    let surfaces = [(1, 0), (1, 1), (2, 0), (1, 2), (2, 1), (3, 0)];
    let mut problems = Vec::new();
    for k in 0..100 {
        let (g, n) = surfaces[k % surfaces.len()];
        let graph = random_admissible(g, n, 10 + k % 20, &mut rng)?;
        let form = standard_form(&graph)?;
        let ok = (form.genus, form.boundaries) == (g, n)
            && matches_standard(&form)?
            && replay(&graph, &form.moves)? == form.graph;
        if !ok {
            problems.push(format!("graph #{k} ({g},{n}) did not reduce"));
        }
    }
    Ok(problems)
}

fn main() {
    let criteria: [(u32, &str, Duration, Check); 9] = [
        (1, "Hopf and pivotal axioms", Duration::from_secs(4), hopf_axioms),
        (2, "torus braid relation", Duration::from_secs(1), torus_braid),
        (3, "torus full twist", Duration::from_secs(5), torus_full_twist),
        (4, "genus-2 generator table", Duration::from_secs(5), genus_two_table),
        (5, "Gervais relations", Duration::from_secs(120), gervais),
        (6, "Bene relations and lemmas", Duration::from_secs(60), bene_and_lemmas),
        (7, "closed genus-2 surface over S3", Duration::from_secs(30), closed_surface),
        (8, "YD equivariance", Duration::from_secs(60), equivariance),
        (9, "standard form of random graphs", Duration::from_secs(30), standardize),
    ];
    let mut failed = 0;
    for (k, name, limit, check) in criteria {
        let t = Instant::now();
        let result = check();
        let took = t.elapsed();
        let mut problems = match result {
            Ok(p) => p,
            Err(e) => vec![format!("error: {e}")],
        };
        if took > limit {
            problems.push(format!("took {took:.2?}, limit {limit:?}"));
        }
        let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {k}: {name} ({took:.2?}, limit {limit:?})");
        for p in problems.iter().take(10) {
            println!("    {p}");
        }
        if !problems.is_empty() {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
