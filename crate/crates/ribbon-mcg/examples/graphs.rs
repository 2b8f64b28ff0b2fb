//! Build ribbon graphs, list their faces and compute the genus.
//!
//! cargo run --example graphs

use ribbon_mcg::graph::{faces, genus, GraphJson, RibbonGraph, StandardGraph};

fn main() -> ribbon_mcg::Result<()> {
    // The torus from an explicit counterclockwise vertex order.
    let torus = RibbonGraph::from_orders(&["st(a) st(b) ta(a) ta(b)"])?;
    println!("torus: {}", torus.describe().trim_end());
    for f in faces(&torus) {
        println!("  face {}", f.display(&torus));
    }

    // Standard graphs for a few surfaces.
    for (g, n) in [(1, 1), (2, 0), (2, 2)] {
        let s = StandardGraph::new(g, n)?;
        let fs = faces(&s.graph);
        println!(
            "standard ({g},{n}): {} vertices, {} edges, {} faces, genus {}",
            s.graph.num_vertices(),
            s.graph.num_edges(),
            fs.len(),
            genus(&s.graph)?
        );
    }

    // JSON round trip.
    let s = StandardGraph::new(1, 1)?;
    let text = s.graph.to_json().to_string_pretty();
    let back = RibbonGraph::from_json(&GraphJson::from_str(&text)?)?;
    assert_eq!(back, s.graph);
    println!("{text}");
    Ok(())
}
