//! The action of every generating Dehn twist of a standard graph on its
//! edge labels, as free-group substitutions with a central pivot `p`.
//!
//! cargo run --example twist_table [genus] [boundaries]

use ribbon_mcg::action::generator_twist;
use ribbon_mcg::graph::StandardGraph;

fn main() -> ribbon_mcg::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (g, n) = (args.first().copied().unwrap_or(2), args.get(1).copied().unwrap_or(0));
    let s = StandardGraph::new(g, n)?;
    for name in s.generator_names() {
        let p = generator_twist(&s, name, false)?;
        println!("D_{{{name}}}");
        for (edge, image) in p.relabeling().named(&s.graph, &p.codomain) {
            if image != edge {
                println!("  {edge} ↦ {image}");
            }
        }
    }
    Ok(())
}
