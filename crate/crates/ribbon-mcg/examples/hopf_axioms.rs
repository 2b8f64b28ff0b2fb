//! Check the Hopf and pivotal axioms of the built-in instances and list
//! their pivots.
//!
//! cargo run --example hopf_axioms

use ribbon_mcg::verify::{default_instances, hopf_suite};

fn main() -> ribbon_mcg::Result<()> {
    let instances = default_instances()?;
    for h in &instances {
        println!("{}: dimension {}, {} pivots", h.name, h.dim(), h.find_pivots().len());
    }
    let report = hopf_suite(&instances);
    for c in &report.cases {
        println!("  {:?} {}", c.verdict, c.case);
    }
    println!("{}", report.summary());
    Ok(())
}
