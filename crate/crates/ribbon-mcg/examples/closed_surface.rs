//! The closed genus-2 surface over S3: flat connections, their
//! conjugation orbits, and the extra relations that hold on them.
//!
//! cargo run --example closed_surface

use ribbon_mcg::graph::StandardGraph;
use ribbon_mcg::group::{Biinvariants, FiniteGroup, DEFAULT_MAX_STATES};
use ribbon_mcg::verify::{closed_relations, closed_surface_suite, commutator_oracle, Evaluator};

fn main() -> ribbon_mcg::Result<()> {
    let s3 = FiniteGroup::by_name("S3")?;
    let s = StandardGraph::new(2, 0)?;
    let b = Biinvariants::compute(&s.graph, s.base, &s3, 0, DEFAULT_MAX_STATES)?;
    println!(
        "{} flat labelings (independent count {}), {} orbits",
        b.coinvariants.len(),
        commutator_oracle(&s3, 2),
        b.num_orbits()
    );
    for r in closed_relations(&s) {
        println!("relation: {}", r.name);
    }
    let evals = [Evaluator::Group { group: &s3, pivot: 0, max_states: DEFAULT_MAX_STATES }];
    let report = closed_surface_suite(2, 0, &evals, DEFAULT_MAX_STATES)?;
    for c in &report.cases {
        let kind = if c.negative_control { "control" } else { "case" };
        println!("{kind:7} {:?} {} {}", c.verdict, c.case, c.witness.as_deref().unwrap_or(""));
    }
    Ok(())
}
