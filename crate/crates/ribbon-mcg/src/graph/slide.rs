use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{EdgeId, GraphPath, HalfEdge, PathMap, RibbonGraph, Step};
use crate::error::{Error, Result};

/// The four elementary slides along an edge α.
///
/// | variant | moved end sits            | and lands                |
/// |---------|---------------------------|--------------------------|
/// | `L`     | directly after `st(α)`    | directly before `ta(α)`  |
/// | `-L`    | directly before `ta(α)`   | directly after `st(α)`   |
/// | `R`     | directly before `st(α)`   | directly after `ta(α)`   |
/// | `-R`    | directly after `ta(α)`    | directly before `st(α)`  |
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    L,
    MinusL,
    R,
    MinusR,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::L, Variant::MinusL, Variant::R, Variant::MinusR];

    pub fn inverse(self) -> Self {
        match self {
            Variant::L => Variant::MinusL,
            Variant::MinusL => Variant::L,
            Variant::R => Variant::MinusR,
            Variant::MinusR => Variant::R,
        }
    }

    /// L and R carry the end from the start of α to its target.
    pub fn is_forward(self) -> bool {
        matches!(self, Variant::L | Variant::R)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::L => "L",
            Variant::MinusL => "-L",
            Variant::R => "R",
            Variant::MinusR => "-R",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" => Ok(Variant::L),
            "-L" => Ok(Variant::MinusL),
            "R" => Ok(Variant::R),
            "-R" => Ok(Variant::MinusR),
            _ => Err(Error::Parse(format!("slide variant {s:?} (expected L, -L, R or -R)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SlideDescriptor {
    pub along: EdgeId,
    pub variant: Variant,
    pub moved: HalfEdge,
}

impl SlideDescriptor {
    pub fn new(along: EdgeId, variant: Variant, moved: HalfEdge) -> Self {
        SlideDescriptor { along, variant, moved }
    }

    pub fn inverse(self) -> Self {
        SlideDescriptor { variant: self.variant.inverse(), ..self }
    }

    pub fn display(&self, g: &RibbonGraph) -> String {
        format!("slide {} {} {}", self.variant, g.edge_name(self.along), g.half_name(self.moved))
    }
}

impl RibbonGraph {
    /// Where the moved end must sit (the end of α it is adjacent to, and
    /// whether it sits after it) and where it lands (same data).
    fn slide_geometry(s: &SlideDescriptor) -> ((HalfEdge, bool), (HalfEdge, bool)) {
        let st = HalfEdge::st(s.along);
        let ta = HalfEdge::ta(s.along);
        match s.variant {
            Variant::L => ((st, true), (ta, false)),
            Variant::MinusL => ((ta, false), (st, true)),
            Variant::R => ((st, false), (ta, true)),
            Variant::MinusR => ((ta, true), (st, false)),
        }
    }

    /// Validate a slide without performing it.
    pub fn check_slide(&self, s: &SlideDescriptor) -> Result<()> {
        if !self.has_edge(s.along) {
            return Err(Error::InvalidSlide(format!("unknown edge e{}", s.along.0)));
        }
        if !self.has_edge(s.moved.edge) {
            return Err(Error::InvalidSlide(format!("unknown edge e{}", s.moved.edge.0)));
        }
        if s.moved.edge == s.along {
            return Err(Error::InvalidSlide(format!(
                "cannot slide an end of {} along itself",
                self.edge_name(s.along)
            )));
        }
        let ((anchor, after), _) = Self::slide_geometry(s);
        let (va, pa) = self.locate(anchor).expect("validated edge");
        let (vm, pm) = self.locate(s.moved).expect("validated edge");
        if va != vm {
            return Err(Error::InvalidSlide(format!(
                "{} does not share a vertex with {}",
                self.half_name(s.moved),
                self.half_name(anchor)
            )));
        }
        let n = self.vertices()[va].order.len();
        let want = if after { pa as isize + 1 } else { pa as isize - 1 };
        if want == pm as isize {
            return Ok(());
        }
        let wrapped = want.rem_euclid(n as isize) as usize;
        if wrapped == pm {
            return Err(Error::CiliumCrossing(format!(
                "{} is adjacent to {} only across the cilium",
                self.half_name(s.moved),
                self.half_name(anchor)
            )));
        }
        Err(Error::InvalidSlide(format!(
            "{} is not directly {} {}",
            self.half_name(s.moved),
            if after { "after" } else { "before" },
            self.half_name(anchor)
        )))
    }

    /// Perform an elementary slide, returning the new graph and the induced
    /// isomorphism of path groupoids.
    pub fn slide(&self, s: &SlideDescriptor) -> Result<(RibbonGraph, PathMap)> {
        self.check_slide(s)?;
        let (_, (dest, after)) = Self::slide_geometry(s);
        let mut g = self.clone();
        let (vm, pm) = g.locate(s.moved).expect("checked");
        g.vertices_mut()[vm].order.remove(pm);
        let (vd, pd) = g.locate(dest).expect("checked");
        let at = if after { pd + 1 } else { pd };
        g.vertices_mut()[vd].order.insert(at, s.moved);

        let alpha = s.along;
        let beta = s.moved.edge;
        let fwd = s.variant.is_forward();
        // Old β as a path in the new graph (traversal order).
        let image = if s.moved.is_target() {
            // β ↦ α^{∓1} ∘ β
            let a = if fwd { Step::bwd(alpha) } else { Step::fwd(alpha) };
            GraphPath::new(vec![Step::fwd(beta), a])
        } else {
            // β ↦ β ∘ α^{±1}
            let a = if fwd { Step::fwd(alpha) } else { Step::bwd(alpha) };
            GraphPath::new(vec![a, Step::fwd(beta)])
        };
        let mut map = PathMap::identity();
        map.images.insert(beta, image);
        Ok((g, map))
    }

    /// Apply a sequence of slides, composing their path maps.
    pub fn slide_all(&self, slides: &[SlideDescriptor]) -> Result<(RibbonGraph, PathMap)> {
        let mut g = self.clone();
        let mut map = PathMap::identity();
        for s in slides {
            let (h, m) = g.slide(s)?;
            map = m.after(&map);
            g = h;
        }
        Ok((g, map))
    }
}
