//! Substitution maps between edge labelings in the group case.

use std::collections::{BTreeMap, BTreeSet};

use super::{FiniteGroup, Labeling, PivotWord};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, RibbonGraph};

/// New labels as words in old labels: `images[e]` is the label of edge `e`
/// of the codomain graph, written in the generators of the domain edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    pub domain: BTreeSet<EdgeId>,
    pub images: BTreeMap<EdgeId, PivotWord>,
}

impl Relabeling {
    pub fn identity(edges: impl IntoIterator<Item = EdgeId>) -> Self {
        let domain: BTreeSet<EdgeId> = edges.into_iter().collect();
        let images = domain.iter().map(|&e| (e, PivotWord::generator(e))).collect();
        Relabeling { domain, images }
    }

    pub fn codomain(&self) -> BTreeSet<EdgeId> {
        self.images.keys().copied().collect()
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain() && self.images.iter().all(|(e, w)| *w == PivotWord::generator(*e))
    }

    /// `self ∘ first`: relabel by `first`, then by `self`.
    pub fn compose(&self, first: &Relabeling) -> Result<Relabeling> {
        if self.domain != first.codomain() {
            return Err(Error::Precondition("relabelings have mismatched edge sets".into()));
        }
        let images = self
            .images
            .iter()
            .map(|(&e, w)| (e, w.substitute(|k| first.images[&k].clone())))
            .collect();
        Ok(Relabeling { domain: first.domain.clone(), images })
    }

    /// Exact operator equality for every group and central pivot.
    pub fn equals(&self, other: &Relabeling) -> Result<bool> {
        if self.domain != other.domain || self.codomain() != other.codomain() {
            return Err(Error::Precondition("relabelings have mismatched edge sets".into()));
        }
        Ok(self.images == other.images)
    }

    /// Edges whose images differ from the other relabeling.
    pub fn differences(&self, other: &Relabeling) -> Vec<EdgeId> {
        self.images
            .iter()
            .filter(|(e, w)| other.images.get(e) != Some(*w))
            .map(|(e, _)| *e)
            .collect()
    }

    /// Interpret in a finite group with the given central pivot.
    pub fn evaluate(&self, group: &FiniteGroup, pivot: usize, s: &Labeling) -> Result<Labeling> {
        if !group.is_central(pivot) {
            return Err(Error::Precondition(format!(
                "pivot {} is not central in {}",
                group.element_name(pivot),
                group.name()
            )));
        }
        for e in &self.domain {
            if !s.contains_key(e) {
                return Err(Error::Precondition(format!("labeling misses edge e{}", e.0)));
            }
        }
        Ok(self.images.iter().map(|(&e, w)| (e, eval_word(group, pivot, w, s))).collect())
    }

    /// `{edge name: word}` using the codomain names for keys and the domain
    /// names inside words.
    pub fn named(&self, domain: &RibbonGraph, codomain: &RibbonGraph) -> BTreeMap<String, String> {
        self.images
            .iter()
            .map(|(&e, w)| (codomain.edge_name(e), w.display_with(|k| domain.edge_name(k))))
            .collect()
    }

    /// Parse the JSON edge→word map produced by [`Relabeling::named`].
    pub fn from_named(
        map: &BTreeMap<String, String>,
        domain: &RibbonGraph,
        codomain: &RibbonGraph,
    ) -> Result<Relabeling> {
        let mut images = BTreeMap::new();
        for (name, word) in map {
            let e = codomain
                .edge_by_name(name)
                .ok_or_else(|| Error::Unknown(format!("edge {name}")))?;
            let w = PivotWord::parse(word, |s| domain.edge_by_name(s), &BTreeMap::new())?;
            images.insert(e, w);
        }
        Ok(Relabeling { domain: domain.edges().collect(), images })
    }
}

/// Evaluate a word with the pivot symbol mapped to `pivot`.
pub fn eval_word(group: &FiniteGroup, pivot: usize, w: &PivotWord, s: &Labeling) -> usize {
    let mut acc = group.pow(pivot, w.pivot_exp());
    for (e, inv) in w.symbols() {
        let x = s[&e];
        acc = group.mul(acc, if inv { group.inv(x) } else { x });
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::torus;

    fn g(e: u32) -> PivotWord {
        PivotWord::generator(EdgeId(e))
    }

    /// D_b on the torus: (a, b) ↦ (b a, b).
    fn d_b() -> Relabeling {
        let mut r = Relabeling::identity([EdgeId(0), EdgeId(1)]);
        r.images.insert(EdgeId(0), g(1).mul(&g(0)));
        r
    }

    fn d_b_inv() -> Relabeling {
        let mut r = Relabeling::identity([EdgeId(0), EdgeId(1)]);
        r.images.insert(EdgeId(0), g(1).inverse().mul(&g(0)));
        r
    }

    #[test]
    fn compose_inverse_is_identity() {
        assert!(d_b().compose(&d_b_inv()).unwrap().is_identity());
        assert!(d_b_inv().compose(&d_b()).unwrap().is_identity());
        let other = Relabeling::identity([EdgeId(0)]);
        assert!(d_b().compose(&other).is_err());
    }

    #[test]
    fn evaluate_in_s3() {
        let grp = FiniteGroup::by_name("S3").unwrap();
        let r = grp.element("r").unwrap();
        let s = grp.element("s").unwrap();
        let lab: Labeling = [(EdgeId(0), r), (EdgeId(1), s)].into_iter().collect();
        let out = d_b().evaluate(&grp, 0, &lab).unwrap();
        assert_eq!(out[&EdgeId(0)], grp.element("sr").unwrap());
        assert_eq!(out[&EdgeId(1)], s);
        assert!(d_b().evaluate(&grp, r, &lab).is_err());
    }

    #[test]
    fn named_roundtrip() {
        let t = torus();
        let named = d_b().named(&t, &t);
        assert_eq!(named["a"], "b a");
        assert_eq!(Relabeling::from_named(&named, &t, &t).unwrap(), d_b());
    }
}
