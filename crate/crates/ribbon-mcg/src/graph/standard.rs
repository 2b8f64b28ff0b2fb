//! The standard chord diagram for a surface of genus g with n+1 boundary
//! components, and the closed paths naming the twist generators.

use std::fmt;
use std::str::FromStr;

use super::{is_face_path, EdgeId, GraphPath, HalfEdge, RibbonGraph, Step, VertexId};
use crate::error::{Error, Result};

/// Standard graph together with the roles of its edges.
///
/// The base vertex carries, counterclockwise from its cilium, the groups
/// `st μ_i, ta ν_i, ta μ_i` for i = 1..n followed by the handles
/// `st α_j, st β_j, ta α_j, ta β_j` for j = 1..g. Each ν_i starts at its own
/// univalent vertex. Edge ids are assigned α₁, β₁, …, α_g, β_g, μ₁, ν₁, ….
#[derive(Clone, Debug)]
pub struct StandardGraph {
    pub genus: usize,
    pub boundaries: usize,
    pub graph: RibbonGraph,
    pub alpha: Vec<EdgeId>,
    pub beta: Vec<EdgeId>,
    pub mu: Vec<EdgeId>,
    pub nu: Vec<EdgeId>,
    pub base: VertexId,
}

/// Names of the twist curves: α_i (1 ≤ i ≤ g), δ_j and γ_{k,l}
/// (0 ≤ j, k, l ≤ n+2g−2, k ≠ l).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorName {
    Alpha(usize),
    Delta(usize),
    Gamma(usize, usize),
}

impl fmt::Display for GeneratorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorName::Alpha(i) => write!(f, "alpha_{i}"),
            GeneratorName::Delta(j) => write!(f, "delta_{j}"),
            GeneratorName::Gamma(k, l) => write!(f, "gamma_{k}_{l}"),
        }
    }
}

fn normalize_greek(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        match c {
            'α' => out.push_str("alpha"),
            'δ' => out.push_str("delta"),
            'γ' => out.push_str("gamma"),
            '₀'..='₉' => out.push(char::from(b'0' + (c as u32 - '₀' as u32) as u8)),
            '{' | '}' | ' ' => {}
            ',' => out.push('_'),
            _ => out.push(c),
        }
    }
    out
}

impl FromStr for GeneratorName {
    type Err = Error;

    /// Accepts `alpha_1`, `delta_0`, `gamma_2_1`, `gamma_{2,1}`, `δ₀`, `γ₂,₁`.
    fn from_str(s: &str) -> Result<Self> {
        let t = normalize_greek(s);
        let bad = || Error::Parse(format!("generator name {s:?}"));
        let (head, rest) = if let Some(r) = t.strip_prefix("alpha") {
            ("alpha", r)
        } else if let Some(r) = t.strip_prefix("delta") {
            ("delta", r)
        } else if let Some(r) = t.strip_prefix("gamma") {
            ("gamma", r)
        } else {
            return Err(bad());
        };
        let rest = rest.strip_prefix('_').unwrap_or(rest);
        let nums: Vec<usize> = rest
            .split('_')
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (head, nums.as_slice()) {
            ("alpha", [i]) => Ok(GeneratorName::Alpha(*i)),
            ("delta", [j]) => Ok(GeneratorName::Delta(*j)),
            ("gamma", [k, l]) => Ok(GeneratorName::Gamma(*k, *l)),
            // Two-digit-free shorthand like gamma21 for small indices.
            ("gamma", [kl]) if rest.len() == 2 => Ok(GeneratorName::Gamma(kl / 10, kl % 10)),
            _ => Err(bad()),
        }
    }
}

impl StandardGraph {
    pub fn new(genus: usize, boundaries: usize) -> Result<Self> {
        if genus == 0 {
            return Err(Error::Precondition("standard graph needs genus g >= 1".into()));
        }
        let (g, n) = (genus, boundaries);
        let mut names = Vec::new();
        for j in 1..=g {
            names.push(format!("a{j}"));
            names.push(format!("b{j}"));
        }
        for i in 1..=n {
            names.push(format!("m{i}"));
            names.push(format!("n{i}"));
        }
        let alpha: Vec<EdgeId> = (0..g).map(|j| EdgeId(2 * j as u32)).collect();
        let beta: Vec<EdgeId> = (0..g).map(|j| EdgeId(2 * j as u32 + 1)).collect();
        let mu: Vec<EdgeId> = (0..n).map(|i| EdgeId((2 * g + 2 * i) as u32)).collect();
        let nu: Vec<EdgeId> = (0..n).map(|i| EdgeId((2 * g + 2 * i + 1) as u32)).collect();
        let mut base = Vec::new();
        for i in 0..n {
            base.push(HalfEdge::st(mu[i]));
            base.push(HalfEdge::ta(nu[i]));
            base.push(HalfEdge::ta(mu[i]));
        }
        for j in 0..g {
            base.push(HalfEdge::st(alpha[j]));
            base.push(HalfEdge::st(beta[j]));
            base.push(HalfEdge::ta(alpha[j]));
            base.push(HalfEdge::ta(beta[j]));
        }
        let mut verts = vec![("x".to_string(), base)];
        for i in 0..n {
            verts.push((format!("u{}", i + 1), vec![HalfEdge::st(nu[i])]));
        }
        let graph = RibbonGraph::from_parts(&names, verts)?;
        let base = graph.vertices()[0].id;
        Ok(StandardGraph { genus, boundaries, graph, alpha, beta, mu, nu, base })
    }

    /// Largest δ/γ index, n+2g−2.
    pub fn max_index(&self) -> usize {
        self.boundaries + 2 * self.genus - 2
    }

    fn handle_commutator(&self, j: usize) -> Vec<Step> {
        // α_j⁻¹ β_j α_j β_j⁻¹ (composition order, 1-based j)
        let (a, b) = (self.alpha[j - 1], self.beta[j - 1]);
        vec![Step::bwd(a), Step::fwd(b), Step::fwd(a), Step::bwd(b)]
    }

    fn tail(&self) -> Vec<Step> {
        let g = self.genus;
        let (a, b) = (self.alpha[g - 1], self.beta[g - 1]);
        vec![Step::bwd(a), Step::fwd(b), Step::fwd(a)]
    }

    /// δ_j as a composition-order letter list.
    fn delta_letters(&self, j: usize) -> Vec<Step> {
        let (g, n) = (self.genus, self.boundaries);
        let mut w = Vec::new();
        if j == 0 {
            return vec![Step::bwd(self.beta[g - 1])];
        }
        if j <= n {
            for i in j..=n {
                w.push(Step::bwd(self.mu[i - 1]));
            }
            for h in 1..g {
                w.extend(self.handle_commutator(h));
            }
        } else {
            let k = j - n;
            let h0 = k.div_ceil(2);
            if k % 2 == 1 {
                for h in h0..g {
                    w.extend(self.handle_commutator(h));
                }
            } else {
                w.push(Step::bwd(self.beta[h0 - 1]));
                for h in h0 + 1..g {
                    w.extend(self.handle_commutator(h));
                }
            }
        }
        w.extend(self.tail());
        w
    }

    fn check_index(&self, name: GeneratorName) -> Result<()> {
        let m = self.max_index();
        let ok = match name {
            GeneratorName::Alpha(i) => (1..=self.genus).contains(&i),
            GeneratorName::Delta(j) => j <= m,
            GeneratorName::Gamma(k, l) => k <= m && l <= m && k != l,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("{name} for (g, n) = ({}, {})", self.genus, self.boundaries)))
        }
    }

    /// The closed path at the base vertex for a generator, freely reduced.
    pub fn generator_path(&self, name: GeneratorName) -> Result<GraphPath> {
        self.check_index(name)?;
        let g = self.genus;
        let ag = self.alpha[g - 1];
        let bg = self.beta[g - 1];
        let letters: Vec<Step> = match name {
            GeneratorName::Alpha(i) => vec![Step::fwd(self.alpha[i - 1])],
            GeneratorName::Delta(j) => self.delta_letters(j),
            GeneratorName::Gamma(i, 0) => {
                let mut w = self.delta_letters(i);
                w.push(Step::bwd(bg));
                w
            }
            GeneratorName::Gamma(0, j) => {
                let mut w = self.delta_letters(j);
                w.extend([Step::bwd(ag), Step::bwd(bg), Step::fwd(ag)]);
                w
            }
            GeneratorName::Gamma(i, j) if j < i => {
                let mut w = self.delta_letters(j);
                w.extend(GraphPath::from_composition(&self.delta_letters(i)).inverse().composition());
                w
            }
            GeneratorName::Gamma(i, j) => {
                let mut w = self.delta_letters(i);
                w.push(Step::fwd(ag));
                w.extend(GraphPath::from_composition(&self.delta_letters(j)).inverse().composition());
                w.push(Step::bwd(ag));
                w
            }
        };
        Ok(GraphPath::from_composition(&letters).reduced())
    }

    /// Whether the generator's path is a face path; false exactly for
    /// γ_{i,j} with 1 ≤ i < j.
    pub fn is_face_generator(&self, name: GeneratorName) -> Result<bool> {
        let p = self.generator_path(name)?;
        is_face_path(&self.graph, &p)
    }

    /// Every generator name for this (g, n), in a fixed order.
    pub fn generator_names(&self) -> Vec<GeneratorName> {
        let m = self.max_index();
        let mut out: Vec<GeneratorName> = (1..=self.genus).map(GeneratorName::Alpha).collect();
        out.extend((0..=m).map(GeneratorName::Delta));
        for k in 0..=m {
            for l in 0..=m {
                if k != l {
                    out.push(GeneratorName::Gamma(k, l));
                }
            }
        }
        out
    }

    /// Named generator paths with their face-path flags.
    pub fn generator_paths(&self) -> Result<Vec<(GeneratorName, GraphPath, bool)>> {
        self.generator_names()
            .into_iter()
            .map(|n| {
                let p = self.generator_path(n)?;
                let face = is_face_path(&self.graph, &p)?;
                Ok((n, p, face))
            })
            .collect()
    }
}

/// The one-vertex torus with loops `a`, `b` and end order
/// `st a, st b, ta a, ta b` counterclockwise from the cilium.
pub fn torus() -> RibbonGraph {
    RibbonGraph::from_orders(&["st(a) st(b) ta(a) ta(b)"]).expect("static graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{faces, genus};

    fn show(s: &StandardGraph, n: GeneratorName) -> String {
        s.generator_path(n).unwrap().display(&s.graph)
    }

    #[test]
    fn torus_is_standard_1_0() {
        let s = StandardGraph::new(1, 0).unwrap();
        let mut t = torus();
        t.set_edge_name(EdgeId(0), "a1");
        t.set_edge_name(EdgeId(1), "b1");
        assert_eq!(s.graph, t);
        assert_eq!(s.graph.num_edges(), 2);
    }

    #[test]
    fn shapes() {
        let s = StandardGraph::new(2, 0).unwrap();
        assert_eq!(s.graph.num_edges(), 4);
        assert_eq!(genus(&s.graph).unwrap(), 2);
        let s = StandardGraph::new(1, 1).unwrap();
        assert_eq!(s.graph.num_edges(), 4);
        assert_eq!(s.graph.num_vertices(), 2);
        assert_eq!(s.graph.degree(s.graph.start_vertex(s.nu[0]).unwrap()), 1);
        for (g, n) in [(1, 0), (1, 2), (2, 1), (3, 0), (2, 3)] {
            let s = StandardGraph::new(g, n).unwrap();
            assert_eq!(faces(&s.graph).len(), n + 1);
            assert_eq!(genus(&s.graph).unwrap(), g);
        }
        assert!(StandardGraph::new(0, 1).is_err());
    }

    #[test]
    fn genus_one_two_boundaries() {
        let s = StandardGraph::new(1, 2).unwrap();
        assert_eq!(s.graph.num_vertices(), 3);
        assert_eq!(s.graph.num_edges(), 6);
        assert_eq!(faces(&s.graph).len(), 3);
        assert_eq!(genus(&s.graph).unwrap(), 1);
    }

    #[test]
    fn genus_two_paths() {
        use GeneratorName::*;
        let s = StandardGraph::new(2, 0).unwrap();
        assert_eq!(show(&s, Delta(0)), "b2^-1");
        assert_eq!(show(&s, Delta(1)), "a1^-1 b1 a1 b1^-1 a2^-1 b2 a2");
        assert_eq!(show(&s, Delta(2)), "b1^-1 a2^-1 b2 a2");
        assert_eq!(show(&s, Gamma(0, 1)), "a1^-1 b1 a1 b1^-1");
        assert_eq!(show(&s, Gamma(0, 2)), "b1^-1");
        assert_eq!(show(&s, Gamma(1, 0)), "a1^-1 b1 a1 b1^-1 a2^-1 b2 a2 b2^-1");
        assert_eq!(show(&s, Gamma(2, 0)), "b1^-1 a2^-1 b2 a2 b2^-1");
        assert_eq!(show(&s, Gamma(2, 1)), "a1^-1 b1 a1");
        assert_eq!(show(&s, Gamma(1, 2)), "a1^-1 b1 a1 b1^-1 a2^-1 b2 a2 b2^-1 a2 b1 a2^-1");
        let s1 = StandardGraph::new(1, 0).unwrap();
        assert_eq!(show(&s1, Delta(0)), "b1^-1");
    }

    #[test]
    fn face_flags() {
        for (g, n) in [(1, 1), (2, 0), (1, 2), (2, 1), (3, 0)] {
            let s = StandardGraph::new(g, n).unwrap();
            for (name, _, face) in s.generator_paths().unwrap() {
                let expect = !matches!(name, GeneratorName::Gamma(i, j) if 1 <= i && i < j);
                assert_eq!(face, expect, "{name} for ({g},{n})");
            }
        }
    }

    #[test]
    fn out_of_range() {
        let s = StandardGraph::new(2, 0).unwrap();
        assert!(s.generator_path(GeneratorName::Delta(3)).is_err());
        assert!(s.generator_path(GeneratorName::Gamma(1, 1)).is_err());
        assert!(s.generator_path(GeneratorName::Alpha(0)).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!("δ₀".parse::<GeneratorName>().unwrap(), GeneratorName::Delta(0));
        assert_eq!("gamma_{1,2}".parse::<GeneratorName>().unwrap(), GeneratorName::Gamma(1, 2));
        assert_eq!("γ₂,₁".parse::<GeneratorName>().unwrap(), GeneratorName::Gamma(2, 1));
        assert_eq!("alpha_2".parse::<GeneratorName>().unwrap(), GeneratorName::Alpha(2));
        assert!("beta_1".parse::<GeneratorName>().is_err());
    }
}
