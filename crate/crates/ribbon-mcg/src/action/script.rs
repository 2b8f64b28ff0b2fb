//! A line-oriented language for slide and twist sequences.
//!
//! One command per line (or separated by `;`), applied top to bottom;
//! `#` starts a comment. Paths are written in composition order, the
//! rightmost letter traversed first:
//!
//! ```text
//! slide L b ta(a)          # elementary slide: variant, along, moved end
//! reverse a                # reverse an edge
//! face-slide ta(a) b a^-1  # slide an end along a face path
//! add-edge c b a           # add an edge along a face path
//! delete c
//! twist D_{delta_2}        # any twist word, also without the keyword
//! twist-path a b^-1        # twist along a closed face path
//! ```

use super::{mcg_word, Builder, Program};
use crate::error::{Error, Result};
use crate::graph::{genus, GraphPath, RibbonGraph, SlideDescriptor, StandardGraph};

/// The standard graph equal to `g`, if `g` is one.
pub fn recognize_standard(g: &RibbonGraph) -> Option<StandardGraph> {
    let n = g.num_vertices().checked_sub(1)?;
    let s = StandardGraph::new(genus(g).ok()?, n).ok()?;
    (s.graph == *g).then_some(s)
}

fn command(b: &mut Builder, line: &str) -> Result<()> {
    let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
    let rest = rest.trim();
    let g = b.graph().clone();
    let edge = |name: &str| g.edge_by_name(name).ok_or_else(|| Error::Unknown(format!("edge {name}")));
    let arg_error = |usage: &str| Error::Parse(format!("{line:?}: expected `{usage}`"));
    match head {
        "slide" => {
            let args: Vec<&str> = rest.split_whitespace().collect();
            let [variant, along, moved] = args[..] else {
                return Err(arg_error("slide <L|-L|R|-R> <edge> <st(x)|ta(x)>"));
            };
            b.slide(SlideDescriptor::new(edge(along)?, variant.parse()?, g.half_by_name(moved)?))?;
        }
        "reverse" => b.reverse(edge(rest)?)?,
        "delete" => b.delete(edge(rest)?)?,
        "face-slide" => {
            let (moved, path) = rest.split_once(char::is_whitespace).ok_or_else(|| arg_error("face-slide <end> <path>"))?;
            b.face_slide(&GraphPath::parse(&g, path)?, g.half_by_name(moved)?)?;
        }
        "add-edge" => {
            let (name, path) = rest.split_once(char::is_whitespace).ok_or_else(|| arg_error("add-edge <name> <path>"))?;
            b.add_edge_along(&GraphPath::parse(&g, path)?, Some(name))?;
        }
        "twist-path" => b.twist_path(&GraphPath::parse(&g, rest)?, false)?,
        "twist" => b.append(&mcg_word(&g, recognize_standard(&g).as_ref(), rest)?)?,
        _ => b.append(&mcg_word(&g, recognize_standard(&g).as_ref(), line)?)?,
    }
    Ok(())
}

/// Compile a script against `g`. The empty script is the identity.
pub fn run_script(g: &RibbonGraph, text: &str) -> Result<Program> {
    let mut b = Builder::new(g);
    let code = text.lines().map(|l| l.split('#').next().unwrap_or(""));
    for raw in code.flat_map(|l| l.split(';')) {
        let line = raw.trim();
        if !line.is_empty() {
            command(&mut b, line)?;
        }
    }
    Ok(b.finish())
}
