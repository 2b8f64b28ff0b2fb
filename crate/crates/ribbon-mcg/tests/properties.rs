//! Property tests for the structural invariants of graphs, words,
//! programs and verdicts.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use ribbon_mcg::action::{mcg_word, Builder, Program};
use ribbon_mcg::graph::{face_count, faces, genus, standard_form, matches_standard, valid_slides, EdgeId, RibbonGraph, StandardGraph};
use ribbon_mcg::group::{all_labelings, coinvariants, face_holonomy, FiniteGroup, PivotWord};
use ribbon_mcg::hopf::{FinHopf, LinearBiinv, DEFAULT_MAX_DIM, Q};
use ribbon_mcg::verify::{group_eq, symbolic_eq, Verdict};

const SURFACES: [(usize, usize); 4] = [(1, 0), (1, 1), (2, 0), (1, 2)];

/// A random program of slides and reversals starting at `g`.
fn random_program(g: &RibbonGraph, steps: usize, rng: &mut StdRng) -> Program {
    let mut b = Builder::new(g);
    for _ in 0..steps {
        if rng.gen_bool(0.25) {
            let es = b.graph().edge_ids();
            b.reverse(es[rng.gen_range(0..es.len())]).unwrap();
        } else {
            let ss = valid_slides(b.graph());
            if !ss.is_empty() {
                b.slide(ss[rng.gen_range(0..ss.len())]).unwrap();
            }
        }
    }
    b.finish()
}

fn word_strategy(edges: usize) -> impl Strategy<Value = PivotWord> {
    let letter = (0..edges as i32, any::<bool>()).prop_map(|(e, inv)| if inv { -(e + 1) } else { e + 1 });
    (prop::collection::vec(letter, 0..12), -3i64..=3).prop_map(|(letters, p)| PivotWord::from_parts(&letters, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn faces_partition_the_ends(seed: u64, k in 0..SURFACES.len()) {
        let (gn, n) = SURFACES[k];
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_program(&StandardGraph::new(gn, n).unwrap().graph, 12, &mut rng);
        let g = &p.codomain;
        let total: usize = faces(g).iter().map(|f| f.len()).sum();
        prop_assert_eq!(total, 2 * g.num_edges());
    }

    #[test]
    fn slides_preserve_counts_and_invert_exactly(seed: u64, k in 0..SURFACES.len()) {
        let (gn, n) = SURFACES[k];
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_program(&StandardGraph::new(gn, n).unwrap().graph, 8, &mut rng).codomain;
        for s in valid_slides(&g) {
            let (h, _) = g.slide(&s).unwrap();
            prop_assert_eq!(h.num_vertices(), g.num_vertices());
            prop_assert_eq!(h.num_edges(), g.num_edges());
            prop_assert_eq!(face_count(&h), face_count(&g));
            prop_assert_eq!(genus(&h).unwrap(), gn);
            let (back, _) = h.slide(&s.inverse()).unwrap();
            prop_assert_eq!(&back, &g);
        }
    }

    #[test]
    fn path_map_of_a_composite_is_the_composite(seed: u64, k in 0..SURFACES.len()) {
        let (gn, n) = SURFACES[k];
        let mut rng = StdRng::seed_from_u64(seed);
        let mut g = StandardGraph::new(gn, n).unwrap().graph;
        let start = g.clone();
        let mut slides = Vec::new();
        let mut composed = None;
        for _ in 0..6 {
            let ss = valid_slides(&g);
            let s = ss[rng.gen_range(0..ss.len())];
            let (h, m) = g.slide(&s).unwrap();
            composed = Some(match composed { None => m, Some(prev) => m.after(&prev) });
            slides.push(s);
            g = h;
        }
        let (end, total) = start.slide_all(&slides).unwrap();
        prop_assert_eq!(&end, &g);
        for f in faces(&start) {
            prop_assert_eq!(total.apply(&f), composed.as_ref().unwrap().apply(&f));
        }
    }

    #[test]
    fn standard_form_recovers_the_surface(seed: u64, k in 0..SURFACES.len()) {
        let (gn, n) = SURFACES[k];
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_program(&StandardGraph::new(gn, n).unwrap().graph, 20, &mut rng).codomain;
        let form = standard_form(&g).unwrap();
        prop_assert_eq!((form.genus, form.boundaries), (gn, n));
        prop_assert!(matches_standard(&form).unwrap());
    }

    #[test]
    fn reduce_is_idempotent_and_compatible(x in word_strategy(4), y in word_strategy(4)) {
        let (rx, ry) = (x.reduce(), y.reduce());
        prop_assert_eq!(rx.reduce(), rx.clone());
        prop_assert_eq!(x.mul(&y).reduce(), rx.mul(&ry).reduce());
        prop_assert_eq!(x.inverse().reduce(), rx.inverse().reduce());
        prop_assert!(x.mul(&x.inverse()).reduce().is_identity());
    }

    #[test]
    fn evaluation_respects_composition(seed: u64, k in 0..2usize, gi in 0..3usize) {
        let (gn, n) = [(1, 0), (1, 1)][k];
        let group = FiniteGroup::by_name(["Z2", "S3", "D4"][gi]).unwrap();
        let mut rng = StdRng::seed_from_u64(seed);
        let g = StandardGraph::new(gn, n).unwrap().graph;
        let p = random_program(&g, 5, &mut rng);
        let q = random_program(&p.codomain, 5, &mut rng);
        let pq = p.then(&q).unwrap();
        let rel = pq.relabeling();
        for pivot in group.center() {
            for s in all_labelings(&g, &group, 1 << 20).unwrap() {
                let stepwise = q.apply_labeling(&group, pivot, &p.apply_labeling(&group, pivot, &s));
                prop_assert_eq!(&pq.apply_labeling(&group, pivot, &s), &stepwise);
                prop_assert_eq!(&rel.evaluate(&group, pivot, &s).unwrap(), &stepwise);
            }
        }
    }

    #[test]
    fn moves_preserve_face_holonomy_on_coinvariants(seed: u64, k in 0..SURFACES.len()) {
        let (gn, n) = SURFACES[k];
        let s3 = FiniteGroup::by_name("S3").unwrap();
        let s = StandardGraph::new(gn, n).unwrap();
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_program(&s.graph, 6, &mut rng);
        if s.graph.num_edges() <= 5 {
            for x in coinvariants(&s.graph, s.base, &s3, 0, 1 << 20).unwrap() {
                let y = p.apply_labeling(&s3, 0, &x);
                prop_assert_eq!(face_holonomy(&p.codomain, s.base, &s3, 0, &y).unwrap(), s3.identity());
            }
        }
    }

    #[test]
    fn symbolic_pass_implies_group_pass(word in prop::collection::vec(0..4usize, 0..6), equal: bool) {
        let s = StandardGraph::new(1, 0).unwrap();
        let letters = ["D_a1", "D_b1", "D_a1^-1", "D_b1^-1"];
        let w: Vec<&str> = word.iter().map(|&i| letters[i]).collect();
        let lhs_text = format!("{} D_a1 D_b1 D_a1", w.join(" "));
        let rhs_text = if equal { format!("{} D_b1 D_a1 D_b1", w.join(" ")) } else { format!("{} D_b1 D_a1", w.join(" ")) };
        let lhs = mcg_word(&s.graph, Some(&s), &lhs_text).unwrap();
        let rhs = mcg_word(&s.graph, Some(&s), &rhs_text).unwrap();
        let sym = symbolic_eq(&lhs, &rhs).verdict;
        prop_assert_eq!(sym == Verdict::Pass, equal);
        for name in ["Z3", "S3", "D4"] {
            let group = FiniteGroup::by_name(name).unwrap();
            for pivot in group.center() {
                let grp = group_eq(&group, pivot, &lhs, &rhs, 1 << 20).unwrap().verdict;
                if sym == Verdict::Pass {
                    prop_assert_eq!(grp, Verdict::Pass);
                }
            }
        }
    }
}

#[test]
fn biinvariant_factorization_is_exact() {
    let z2 = FiniteGroup::by_name("Z2").unwrap();
    let instances = [
        FinHopf::<Q>::sweedler4().unwrap().with_pivot_named("g").unwrap(),
        FinHopf::<Q>::group_algebra(&z2).with_pivot_named("e").unwrap(),
    ];
    for h in &instances {
        for (gn, n) in [(1, 0), (1, 1)] {
            let s = StandardGraph::new(gn, n).unwrap();
            for v in s.graph.vertices().iter().map(|v| v.id) {
                let b = LinearBiinv::compute(h, &s.graph, v, DEFAULT_MAX_DIM).unwrap();
                let dim = h.dim().pow(s.graph.num_edges() as u32);
                assert_eq!((b.dim, b.kernel.rows, b.ann.cols), (h.dim(), dim, dim));
                assert_eq!(b.ann.mul(&b.kernel), b.image.mul(&b.projection));
            }
        }
    }
}

#[test]
fn relabeling_edges_are_stable_ids() {
    let s = StandardGraph::new(2, 0).unwrap();
    let p = mcg_word(&s.graph, Some(&s), "D_{delta_1} D_{gamma_1_2}").unwrap();
    let ids: Vec<EdgeId> = p.relabeling().images.keys().copied().collect();
    assert_eq!(ids, s.graph.edge_ids());
}
