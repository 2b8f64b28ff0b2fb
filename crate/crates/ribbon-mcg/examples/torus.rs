//! SL(2,Z) on the torus: braid and order relations as operators on
//! Sweedler's algebra, and the induced permutation of Z2 biinvariants.
//!
//! cargo run --example torus

use ribbon_mcg::action::mcg_word;
use ribbon_mcg::graph::StandardGraph;
use ribbon_mcg::group::{Biinvariants, FiniteGroup, DEFAULT_MAX_STATES};
use ribbon_mcg::hopf::{FinHopf, DEFAULT_MAX_DIM, Q};
use ribbon_mcg::verify::{torus_suite, Evaluator};

fn main() -> ribbon_mcg::Result<()> {
    let sweedler = FinHopf::<Q>::sweedler4()?.with_pivot_named("g")?;
    let evals = [Evaluator::Symbolic, Evaluator::Linear { hopf: &sweedler, max_dim: DEFAULT_MAX_DIM }];
    let report = torus_suite(&evals)?;
    for c in &report.cases {
        println!("{:?} {}", c.verdict, c.case);
    }

    let s = StandardGraph::new(1, 0)?;
    let z2 = FiniteGroup::by_name("Z2")?;
    let b = Biinvariants::compute(&s.graph, s.base, &z2, 0, DEFAULT_MAX_STATES)?;
    let da = mcg_word(&s.graph, Some(&s), "D_a1")?;
    let perm = b.induced_map(&b, |x| Ok(da.apply_labeling(&z2, 0, x)))?;
    println!("D_a on the {} Z2 biinvariants:", b.num_orbits());
    for (o, img) in perm.iter().enumerate() {
        let show = |k: usize| ribbon_mcg::group::show_labeling(&s.graph, &z2, b.representative(k));
        println!("  {} ↦ {}", show(o), show(*img));
    }
    Ok(())
}
