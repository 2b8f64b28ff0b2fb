//! Scramble a standard graph with random slides, then reduce it back.
//!
//! cargo run --example standardize

use rand::SeedableRng;
use ribbon_mcg::graph::{matches_standard, random_admissible, standard_form, Move};

fn main() -> ribbon_mcg::Result<()> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(1);
    let g = random_admissible(2, 1, 25, &mut rng)?;
    println!("scrambled: {}", g.describe());

    let form = standard_form(&g)?;
    println!("genus {}, {} boundary components, {} moves", form.genus, form.boundaries, form.moves.len());
    let mut cur = g.clone();
    for m in &form.moves {
        println!("  {}", m.display(&cur));
        cur = match m {
            Move::Slide(s) => cur.slide(s)?.0,
            Move::Reverse(e) => cur.reversed(*e)?,
        };
    }
    assert_eq!(cur, form.graph);
    assert!(matches_standard(&form)?);
    println!("roles:");
    for (e, role) in &form.roles {
        println!("  {} is {role}", form.graph.edge_name(*e));
    }
    Ok(())
}
