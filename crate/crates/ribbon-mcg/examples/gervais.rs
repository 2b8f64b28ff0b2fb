//! Gervais' presentation of the mapping class group, checked
//! symbolically on a surface given on the command line.
//!
//! cargo run --example gervais [genus] [boundaries]

use ribbon_mcg::verify::{gervais_suite, Evaluator};

fn main() -> ribbon_mcg::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (g, n) = (args.first().copied().unwrap_or(2), args.get(1).copied().unwrap_or(1));
    let report = gervais_suite(&[(g, n)], &[Evaluator::Symbolic])?;
    for c in report.cases.iter().take(12) {
        println!("{:?} {}", c.verdict, c.case);
    }
    println!("…\n{}", report.summary());
    Ok(())
}
