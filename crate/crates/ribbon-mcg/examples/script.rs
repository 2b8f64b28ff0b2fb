//! Compile a slide/twist script and apply it to an S3 labeling.
//!
//! cargo run --example script

use std::collections::BTreeMap;

use ribbon_mcg::action::run_script;
use ribbon_mcg::graph::StandardGraph;
use ribbon_mcg::group::{show_labeling, FiniteGroup};

const SCRIPT: &str = "
# a chord slide and its inverse cancel
slide L b1 ta(a1)
slide -L b1 ta(a1)
# then two twists; the rightmost acts first
D_a1 D_b1
";

fn main() -> ribbon_mcg::Result<()> {
    let s = StandardGraph::new(1, 0)?;
    let p = run_script(&s.graph, SCRIPT)?;
    for (edge, image) in p.relabeling().named(&s.graph, &p.codomain) {
        println!("{edge} ↦ {image}");
    }
    let s3 = FiniteGroup::by_name("S3")?;
    let x: BTreeMap<_, _> = [("a1", "r"), ("b1", "s")]
        .into_iter()
        .map(|(e, v)| Ok((s.graph.edge_by_name(e).unwrap(), s3.element(v)?)))
        .collect::<ribbon_mcg::Result<_>>()?;
    let y = p.apply_labeling(&s3, 0, &x);
    println!("{}  ↦  {}", show_labeling(&s.graph, &s3, &x), show_labeling(&p.codomain, &s3, &y));
    Ok(())
}
