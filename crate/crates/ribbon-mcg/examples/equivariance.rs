//! Every generating twist commutes with the vertex action and the face
//! coaction at every cilium.
//!
//! cargo run --example equivariance

use ribbon_mcg::group::{FiniteGroup, DEFAULT_MAX_STATES};
use ribbon_mcg::hopf::{FinHopf, DEFAULT_MAX_DIM, Q};
use ribbon_mcg::verify::{equivariance_suite, Evaluator};

fn main() -> ribbon_mcg::Result<()> {
    let s3 = FiniteGroup::by_name("S3")?;
    let sweedler = FinHopf::<Q>::sweedler4()?.with_pivot_named("g")?;
    let evals = [
        Evaluator::Symbolic,
        Evaluator::Group { group: &s3, pivot: 0, max_states: DEFAULT_MAX_STATES },
        Evaluator::Linear { hopf: &sweedler, max_dim: DEFAULT_MAX_DIM },
    ];
    let report = equivariance_suite(1, 1, &evals)?;
    for c in &report.cases {
        println!("{:?} {}", c.verdict, c.case);
    }
    println!("{}", report.summary());
    Ok(())
}
