//! Finite groups given by multiplication tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite group with elements `0..order`, element 0 being the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
}

/// JSON form: element names and the multiplication table by index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub elements: Vec<String>,
    pub name: String,
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Build from a table; checks the group axioms and moves the identity
    /// to index 0 if needed.
    pub fn from_table(name: &str, names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidStructure(format!("group {name}: malformed {n}x{n} table")));
        }
        let bad = |what: &str| Error::InvalidStructure(format!("group {name}: {what}"));
        let id = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| bad("no identity"))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        let mut inverses = vec![0; n];
        for (a, inv) in inverses.iter_mut().enumerate() {
            *inv = (0..n).find(|&b| table[a][b] == id).ok_or_else(|| bad("missing inverse"))?;
        }
        let mut g = FiniteGroup { name: name.to_string(), names, table, inverses };
        if id != 0 {
            g = g.relabeled_identity_first(id);
        }
        Ok(g)
    }

    fn relabeled_identity_first(self, id: usize) -> Self {
        let n = self.names.len();
        // Permutation swapping id and 0.
        let sw = |x: usize| if x == id { 0 } else if x == 0 { id } else { x };
        let mut names = self.names.clone();
        names.swap(0, id);
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                table[sw(a)][sw(b)] = sw(self.table[a][b]);
            }
        }
        let mut inverses = vec![0; n];
        for a in 0..n {
            inverses[sw(a)] = sw(self.inverses[a]);
        }
        FiniteGroup { name: self.name, names, table, inverses }
    }

    /// Build from a set of permutations closed under composition.
    /// `(σ·τ)(i) = σ(τ(i))`.
    fn from_permutations(name: &str, perms: Vec<(String, Vec<usize>)>) -> Self {
        let idx = |p: &Vec<usize>| perms.iter().position(|(_, q)| q == p).expect("closed set");
        let n = perms.len();
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let c: Vec<usize> = perms[b].1.iter().map(|&i| perms[a].1[i]).collect();
                table[a][b] = idx(&c);
            }
        }
        let names = perms.into_iter().map(|(s, _)| s).collect();
        FiniteGroup::from_table(name, names, table).expect("permutation groups are groups")
    }

    /// Cyclic group Z_n with elements `e, g, g2, …`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("cyclic group of order 0".into()));
        }
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(&format!("Z{n}"), names, table)
    }

    /// Dihedral group of order 2n: `r^k` named `e, r, r2, …` and reflections
    /// `s, rs, r2s, …` with `s r = r⁻¹ s`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange("dihedral group needs n >= 2".into()));
        }
        let rot = |k: usize| match k {
            0 => String::new(),
            1 => "r".to_string(),
            _ => format!("r{k}"),
        };
        let mut perms = Vec::new();
        for refl in [false, true] {
            for k in 0..n {
                // Acting on Z_n: r^k s^refl (i) = k ± i.
                let p: Vec<usize> =
                    (0..n).map(|i| if refl { (k + n - i) % n } else { (k + i) % n }).collect();
                let mut name = rot(k);
                if refl {
                    name.push('s');
                }
                if name.is_empty() {
                    name = "e".into();
                }
                perms.push((name, p));
            }
        }
        let name = if n == 3 { "S3".to_string() } else { format!("D{n}") };
        Ok(FiniteGroup::from_permutations(&name, perms))
    }

    /// Symmetric group S_n for n ≤ 4, elements named in cycle notation
    /// (`e`, `(12)`, `(123)`, `(12)(34)`, …). S3 is the dihedral
    /// presentation with `r = (123)` and `s` a transposition.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 3 {
            return Self::dihedral(3);
        }
        if !(1..=4).contains(&n) {
            return Err(Error::OutOfRange(format!("symmetric group S{n} (supported up to S4)")));
        }
        let mut perms = Vec::new();
        let mut p: Vec<usize> = (0..n).collect();
        loop {
            perms.push((cycle_name(&p), p.clone()));
            if !next_permutation(&mut p) {
                break;
            }
        }
        Ok(FiniteGroup::from_permutations(&format!("S{n}"), perms))
    }

    /// Named built-ins: `Z<n>`, `D<n>`, `S<n>` (n ≤ 4).
    pub fn by_name(name: &str) -> Result<Self> {
        let bad = || Error::Unknown(format!("group {name} (try Z2, Z3, S3, D4, S4)"));
        let (head, num) = name.split_at(1.min(name.len()));
        let n: usize = num.parse().map_err(|_| bad())?;
        match head {
            "Z" | "C" => Self::cyclic(n),
            "D" => Self::dihedral(n),
            "S" => Self::symmetric(n),
            _ => Err(bad()),
        }
    }

    pub fn from_json(spec: &GroupJson) -> Result<Self> {
        Self::from_table(&spec.name, spec.elements.clone(), spec.table.clone())
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson { elements: self.names.clone(), name: self.name.clone(), table: self.table.clone() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut out = 0;
        for _ in 0..k.unsigned_abs() % self.order() as u64 {
            out = self.mul(out, base);
        }
        out
    }

    pub fn element_name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order()).all(|x| self.mul(a, x) == self.mul(x, a))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order()).filter(|&a| self.is_central(a)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.order()
    }

    /// Parse an element: an exact name, or a product of names written
    /// without separators (`sr` = s·r) or with spaces.
    pub fn element(&self, text: &str) -> Result<usize> {
        let text = text.trim();
        if let Some(i) = self.names.iter().position(|n| n == text) {
            return Ok(i);
        }
        if text == "1" {
            return Ok(0);
        }
        let err = || Error::Unknown(format!("element {text:?} of {}", self.name));
        if text.contains(char::is_whitespace) {
            let mut acc = 0;
            for t in text.split_whitespace() {
                acc = self.mul(acc, self.element(t)?);
            }
            return Ok(acc);
        }
        // Greedy longest-prefix factorization.
        let mut acc = 0;
        let mut rest = text;
        while !rest.is_empty() {
            let (i, len) = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .map(|(i, n)| (i, n.len()))
                .max_by_key(|&(_, l)| l)
                .ok_or_else(err)?;
            acc = self.mul(acc, i);
            rest = &rest[len..];
        }
        Ok(acc)
    }

    /// Element to use as pivot; must be central.
    pub fn central_element(&self, text: &str) -> Result<usize> {
        let p = self.element(text)?;
        if !self.is_central(p) {
            return Err(Error::Precondition(format!(
                "pivot {text} is not central in {} (center: {})",
                self.name,
                self.center().iter().map(|&c| self.names[c].as_str()).collect::<Vec<_>>().join(", ")
            )));
        }
        Ok(p)
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        out.push('(');
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_centers() {
        for (name, order, center) in
            [("Z2", 2, 2), ("Z3", 3, 3), ("S3", 6, 1), ("D4", 8, 2), ("S4", 24, 1), ("S2", 2, 2)]
        {
            let g = FiniteGroup::by_name(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
            assert_eq!(g.center().len(), center, "{name}");
        }
        assert!(FiniteGroup::by_name("S5").is_err());
        assert!(FiniteGroup::by_name("Q8").is_err());
    }

    #[test]
    fn s3_presentation() {
        let g = FiniteGroup::by_name("S3").unwrap();
        let r = g.element("r").unwrap();
        let s = g.element("s").unwrap();
        assert_eq!(g.pow(r, 3), 0);
        assert_eq!(g.mul(s, s), 0);
        // s r s⁻¹ = r⁻¹
        assert_eq!(g.mul(g.mul(s, r), s), g.inv(r));
        assert_ne!(g.element("sr").unwrap(), g.element("rs").unwrap());
        assert_eq!(g.element("sr").unwrap(), g.mul(s, r));
        assert!(g.central_element("r").is_err());
        assert_eq!(g.central_element("e").unwrap(), 0);
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let g = FiniteGroup::by_name("D4").unwrap();
        let j = g.to_json();
        assert_eq!(FiniteGroup::from_json(&j).unwrap(), g);
        let mut broken = j.clone();
        broken.table[1][1] = 1;
        assert!(FiniteGroup::from_json(&broken).is_err());
    }

    #[test]
    fn identity_is_moved_first() {
        // Z2 with the identity listed second.
        let g = FiniteGroup::from_table("Z2", vec!["g".into(), "e".into()], vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.element_name(0), "e");
        assert_eq!(g.mul(1, 1), 0);
    }
}
