//! Closed surfaces: the extra relations obtained by capping the ciliated
//! face hold on the biinvariants when the pivot squares to one.

use std::sync::Arc;

use super::check::{group_eq, linear_eq, Evaluator};
use super::{run_cases, Case, Outcome, SuiteReport};
use crate::action::{mcg_word, Builder, Program};
use crate::error::{Error, Result};
use crate::graph::{ciliated_face, GeneratorName, GraphPath, StandardGraph};
use crate::group::{show_labeling, Biinvariants, FiniteGroup};
use crate::hopf::{FinHopf, LinearBiinv, Matrix, Q};

/// A relation `lhs = rhs` between twist words; `None` is the identity.
#[derive(Clone, Debug)]
pub struct ClosedRelation {
    pub name: String,
    pub lhs: String,
    pub rhs: Option<String>,
}

fn relation(name: impl Into<String>, lhs: impl Into<String>, rhs: Option<String>) -> ClosedRelation {
    ClosedRelation { name: name.into(), lhs: lhs.into(), rhs }
}

fn d(name: GeneratorName) -> String {
    format!("D_{{{name}}}")
}

/// The relations added when the ciliated face of the standard graph
/// (g, n) is capped by a disc. On the torus these are the SL(2,Z)
/// relations; otherwise the five families in the indices 0..=n+2g−2.
pub fn closed_relations(s: &StandardGraph) -> Vec<ClosedRelation> {
    use GeneratorName::*;
    let m = s.max_index();
    if m == 0 {
        return vec![
            relation("(D_a D_b D_a)^4 = 1", "(D_a1 D_b1 D_a1)^4", None),
            relation("(D_a D_b)^6 = 1", "(D_a1 D_b1)^6", None),
            relation("(D_a D_b D_a)^2 = (D_a D_b)^3", "(D_a1 D_b1 D_a1)^2", Some("(D_a1 D_b1)^3".into())),
        ];
    }
    let ag = Alpha(s.genus);
    let mut out = vec![
        relation(format!("{} = 1", d(Gamma(1, 0))), d(Gamma(1, 0)), None),
        relation(format!("{} = {}", d(Delta(0)), d(Delta(1))), d(Delta(0)), Some(d(Delta(1)))),
        relation(
            format!("{} = ({}^3 {})^3", d(Gamma(0, 1)), d(Delta(0)), d(ag)),
            d(Gamma(0, 1)),
            Some(format!("({}^3 {})^3", d(Delta(0)), d(ag))),
        ),
    ];
    for k in 2..=m {
        out.push(relation(
            format!("{} = {}", d(Gamma(0, k)), d(Gamma(1, k))),
            d(Gamma(0, k)),
            Some(d(Gamma(1, k))),
        ));
        out.push(relation(
            format!("{} = {}", d(Gamma(k, 0)), d(Gamma(k, 1))),
            d(Gamma(k, 0)),
            Some(d(Gamma(k, 1))),
        ));
    }
    out
}

fn compile(s: &StandardGraph, w: Option<&str>) -> Result<Program> {
    match w {
        Some(w) => mcg_word(&s.graph, Some(s), w),
        None => Ok(Program::identity(&s.graph)),
    }
}

/// Twists along the two halves of every split of the ciliated face into
/// closed paths, where both twists can be built.
fn face_splits(s: &StandardGraph) -> Result<Vec<(String, Program, Program)>> {
    let g = &s.graph;
    let face = ciliated_face(g, s.base)?;
    let mut out = Vec::new();
    let twist = |p: &GraphPath| -> Option<Program> {
        if p.is_empty() {
            return Some(Program::identity(g));
        }
        let mut b = Builder::new(g);
        b.twist_face_path(p, false).ok()?;
        Some(b.finish())
    };
    for i in 0..face.len() {
        let first = GraphPath::new(face.steps[..i].to_vec());
        let second = GraphPath::new(face.steps[i..].to_vec());
        if !(first.is_empty() || first.is_closed(g)) || !second.is_closed(g) {
            continue;
        }
        if let (Some(a), Some(b)) = (twist(&second), twist(&first)) {
            let name = if first.is_empty() {
                format!("face twist D_{{{}}} = 1", face.display(g))
            } else {
                format!("face halves D_{{{}}} = D_{{{}}}", second.display(g), first.display(g))
            };
            out.push((name, a, b));
        }
    }
    Ok(out)
}

/// Biinvariants of one evaluator, computed once and shared by its cases.
enum Space<'a> {
    Group { group: &'a FiniteGroup, pivot: usize, biinv: Biinvariants },
    Linear { hopf: &'a FinHopf<Q>, max_dim: usize, biinv: LinearBiinv<Q> },
}

impl Space<'_> {
    fn eq(&self, s: &StandardGraph, lhs: &Program, rhs: &Program) -> Result<Outcome> {
        match self {
            Space::Group { group, pivot, biinv } => {
                let f = |p: &Program| biinv.induced_map(biinv, |x| Ok(p.apply_labeling(group, *pivot, x)));
                let (a, b) = (f(lhs)?, f(rhs)?);
                Ok(match (0..a.len()).find(|&o| a[o] != b[o]) {
                    None => Outcome::pass(),
                    Some(o) => Outcome::fail(format!(
                        "orbit of {} goes to orbits of {} vs {}",
                        show_labeling(&s.graph, group, biinv.representative(o)),
                        show_labeling(&s.graph, group, biinv.representative(a[o])),
                        show_labeling(&s.graph, group, biinv.representative(b[o]))
                    )),
                })
            }
            Space::Linear { hopf, max_dim, biinv } => {
                let f = |p: &Program| -> Result<Matrix<Q>> { biinv.induced(hopf, biinv, &p.linear(hopf, *max_dim)?) };
                Ok(if f(lhs)? == f(rhs)? {
                    Outcome::pass()
                } else {
                    Outcome::fail(format!("induced maps differ on the {}-dimensional biinvariants", biinv.biinvariant_dim()))
                })
            }
        }
    }

    fn commutative(&self) -> bool {
        match self {
            Space::Group { group, .. } => group.is_abelian(),
            Space::Linear { hopf, .. } => {
                let n = hopf.dim();
                (0..n).all(|i| (0..n).all(|j| hopf.mul_basis(i, j) == hopf.mul_basis(j, i)))
            }
        }
    }

    /// Same relation on the full state space.
    fn eq_full(&self, lhs: &Program, rhs: &Program, max_states: u128) -> Result<Outcome> {
        match self {
            Space::Group { group, pivot, .. } => group_eq(group, *pivot, lhs, rhs, max_states),
            Space::Linear { hopf, max_dim, .. } => linear_eq(hopf, lhs, rhs, *max_dim),
        }
    }
}

/// Whether the pivot squares to the unit.
const UNGATED: &str = "pivot does not square to the unit";

fn pivot_squares_to_one(ev: &Evaluator<'_>) -> Result<bool> {
    match *ev {
        Evaluator::Group { group, pivot, .. } => Ok(group.mul(pivot, pivot) == group.identity()),
        Evaluator::Linear { hopf, .. } => {
            let p = hopf.pivot().ok_or_else(|| Error::Precondition(format!("{} has no pivot", hopf.name)))?;
            Ok(hopf.mul(p, p) == hopf.unit())
        }
        Evaluator::Symbolic => Ok(true),
    }
}

/// Number of 2g-tuples with ∏[a_i⁻¹, b_i] = 1, by direct enumeration.
pub fn commutator_oracle(group: &FiniteGroup, genus: usize) -> usize {
    let n = group.order();
    let comm = |a: usize, b: usize| group.mul(group.mul(group.inv(a), b), group.mul(a, group.inv(b)));
    // Distribution of the partial product over handles.
    let mut dist = vec![0usize; n];
    dist[group.identity()] = 1;
    for _ in 0..genus {
        let mut next = vec![0usize; n];
        for (x, &c) in dist.iter().enumerate().filter(|(_, &c)| c > 0) {
            for a in 0..n {
                for b in 0..n {
                    next[group.mul(x, comm(a, b))] += c;
                }
            }
        }
        dist = next;
    }
    dist[group.identity()]
}

/// The closed-surface suite on the standard graph (g, n) for each concrete
/// evaluator (the symbolic one has no biinvariants and is skipped).
///
/// Cases: every extra relation and every face split on the biinvariants,
/// the coinvariant count against [`commutator_oracle`] for closed group
/// cases, and controls on the full state space (or, on the torus, a false
/// commutation on the biinvariants). A pivot with p² ≠ 1 turns every
/// relation into a precondition verdict.
pub fn closed_surface_suite(genus: usize, boundaries: usize, evals: &[Evaluator<'_>], max_states: u128) -> Result<SuiteReport> {
    let s = Arc::new(StandardGraph::new(genus, boundaries)?);
    let rels = closed_relations(&s);
    let splits = face_splits(&s)?;
    let mut cases: Vec<Case<'_>> = Vec::new();
    for ev in evals {
        let tag = ev.name();
        let space = match *ev {
            Evaluator::Symbolic => continue,
            Evaluator::Group { group, pivot, max_states } => {
                Space::Group { group, pivot, biinv: Biinvariants::compute(&s.graph, s.base, group, pivot, max_states)? }
            }
            Evaluator::Linear { hopf, max_dim } => {
                Space::Linear { hopf, max_dim, biinv: LinearBiinv::compute(hopf, &s.graph, s.base, max_dim)? }
            }
        };
        let space = Arc::new(space);
        let gate = pivot_squares_to_one(ev)?;
        let mut add = |name: String, lhs: Program, rhs: Program| {
            let (s, space) = (s.clone(), space.clone());
            cases.push(Case::new(format!("{name} [{tag}]"), move || {
                if !gate {
                    return Ok(Outcome::precondition(UNGATED));
                }
                space.eq(&s, &lhs, &rhs)
            }));
        };
        for r in &rels {
            add(r.name.clone(), compile(&s, Some(&r.lhs))?, compile(&s, r.rhs.as_deref())?);
        }
        for (name, a, b) in &splits {
            add(name.clone(), a.clone(), b.clone());
        }
        if let (Space::Group { group, biinv, .. }, 0) = (&*space, boundaries) {
            let (found, want) = (biinv.coinvariants.len(), commutator_oracle(group, genus));
            cases.push(Case::new(format!("coinvariant count {found} matches enumeration [{tag}]"), move || {
                Ok(if !gate {
                    Outcome::precondition(UNGATED)
                } else if found == want {
                    Outcome::pass()
                } else {
                    Outcome::fail(format!("{found} flat labelings, enumeration gives {want}"))
                })
            }));
        }
        if s.max_index() == 0 {
            let (l, r) = (compile(&s, Some("D_a1 D_b1"))?, compile(&s, Some("D_b1 D_a1"))?);
            let (s, space) = (s.clone(), space.clone());
            cases.push(Case::control(format!("control: D_a D_b = D_b D_a on biinvariants [{tag}]"), move || {
                if !gate {
                    return Ok(Outcome::precondition(UNGATED));
                }
                space.eq(&s, &l, &r)
            }));
        } else {
            use GeneratorName::*;
            let ag = d(Alpha(genus));
            let l = compile(&s, Some(&ag))?;
            let (s2, space2, id) = (s.clone(), space.clone(), Program::identity(&s.graph));
            cases.push(Case::control(format!("control: {ag} = 1 on biinvariants [{tag}]"), move || {
                if !gate {
                    return Ok(Outcome::precondition(UNGATED));
                }
                space2.eq(&s2, &l, &id)
            }));
            // On a commutative instance the extra relations already hold on
            // the full state space.
            if !space.commutative() {
                let controls = [
                    (format!("{} = {}", d(Delta(0)), d(Delta(1))), Some(d(Delta(0))), Some(d(Delta(1)))),
                    (format!("{} = 1", d(Gamma(1, 0))), Some(d(Gamma(1, 0))), None),
                ];
                for (name, l, r) in controls {
                    let (l, r) = (compile(&s, l.as_deref())?, compile(&s, r.as_deref())?);
                    let space = space.clone();
                    cases.push(Case::control(format!("control: {name} on the full state space [{tag}]"), move || {
                        if !gate {
                            return Ok(Outcome::precondition(UNGATED));
                        }
                        space.eq_full(&l, &r, max_states)
                    }));
                }
            }
        }
    }
    if cases.is_empty() {
        return Err(Error::Precondition("the closed-surface suite needs a group or linear evaluator".into()));
    }
    Ok(run_cases("closed", cases))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_MAX_STATES;
    use crate::graph::VertexId;
    use crate::hopf::DEFAULT_MAX_DIM;

    /// |Hom(π₁Σ_g, G)| = |G| Σ_χ (|G|/χ(1))^{2g−2}.
    fn mednykh(order: usize, degrees: &[usize], genus: u32) -> usize {
        order * degrees.iter().map(|&d| (order / d).pow(2 * genus - 2)).sum::<usize>()
    }

    #[test]
    fn commutator_oracle_matches_character_count() {
        let s3 = FiniteGroup::by_name("S3").unwrap();
        assert_eq!(commutator_oracle(&s3, 2), 486);
        assert_eq!(mednykh(6, &[1, 1, 2], 2), 486);
        assert_eq!(commutator_oracle(&s3, 1), mednykh(6, &[1, 1, 2], 1));
        let z2 = FiniteGroup::by_name("Z2").unwrap();
        assert_eq!(commutator_oracle(&z2, 1), 4);
    }

    #[test]
    fn relation_lists() {
        assert_eq!(closed_relations(&StandardGraph::new(1, 0).unwrap()).len(), 3);
        assert_eq!(closed_relations(&StandardGraph::new(2, 0).unwrap()).len(), 5);
        assert_eq!(closed_relations(&StandardGraph::new(3, 0).unwrap()).len(), 9);
    }

    #[test]
    fn s3_genus_two() {
        let s3 = FiniteGroup::by_name("S3").unwrap();
        let evals = [Evaluator::Group { group: &s3, pivot: 0, max_states: DEFAULT_MAX_STATES }];
        let r = closed_surface_suite(2, 0, &evals, DEFAULT_MAX_STATES).unwrap();
        assert!(r.self_test_ok(), "{}", r.to_json());
        assert!(r.cases.iter().any(|c| c.case.starts_with("coinvariant count 486")));
        assert!(r.cases.iter().any(|c| c.case.starts_with("face halves")));
        // Burnside: fixed points of h are Hom(π₁, C(h)); (486 + 2·3⁴ + 3·2⁴)/6.
        let b = Biinvariants::compute(&StandardGraph::new(2, 0).unwrap().graph, VertexId(0), &s3, 0, DEFAULT_MAX_STATES).unwrap();
        assert_eq!(b.num_orbits(), 116);
    }

    #[test]
    fn torus_and_linear_instances() {
        let z2 = FiniteGroup::by_name("Z2").unwrap();
        let fz2 = FinHopf::<Q>::group_algebra(&z2).with_pivot_named("e").unwrap();
        let sw = FinHopf::<Q>::sweedler4().unwrap().with_pivot_named("g").unwrap();
        let evals = [
            Evaluator::Group { group: &z2, pivot: 0, max_states: 1000 },
            Evaluator::Linear { hopf: &fz2, max_dim: DEFAULT_MAX_DIM },
            Evaluator::Linear { hopf: &sw, max_dim: DEFAULT_MAX_DIM },
        ];
        let r = closed_surface_suite(1, 0, &evals, 1000).unwrap();
        assert!(r.self_test_ok(), "{}", r.to_json());
        let r = closed_surface_suite(2, 0, &evals[..2], 1000).unwrap();
        assert!(r.self_test_ok(), "{}", r.to_json());
    }

    #[test]
    fn pivot_without_square_root_is_a_precondition() {
        let z3 = FiniteGroup::by_name("Z3").unwrap();
        let evals = [Evaluator::Group { group: &z3, pivot: 1, max_states: 1000 }];
        let r = closed_surface_suite(1, 0, &evals, 1000).unwrap();
        assert!(r.cases.iter().all(|c| c.verdict == super::super::Verdict::Precondition));
    }
}
