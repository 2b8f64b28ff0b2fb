use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::EdgeId;

/// An element of the free group on edge symbols times a central cyclic
/// group generated by the pivot `p`. Always kept in normal form: freely
/// reduced letters and a collected pivot exponent.
///
/// A letter `k > 0` stands for the generator of edge `k - 1`, `-k` for its
/// inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PivotWord {
    letters: Vec<i32>,
    pivot: i64,
}

fn letter(e: EdgeId, inverse: bool) -> i32 {
    let k = e.0 as i32 + 1;
    if inverse {
        -k
    } else {
        k
    }
}

impl PivotWord {
    pub fn identity() -> Self {
        PivotWord::default()
    }

    pub fn generator(e: EdgeId) -> Self {
        PivotWord { letters: vec![letter(e, false)], pivot: 0 }
    }

    pub fn generator_inv(e: EdgeId) -> Self {
        PivotWord { letters: vec![letter(e, true)], pivot: 0 }
    }

    pub fn pivot_power(k: i64) -> Self {
        PivotWord { letters: Vec::new(), pivot: k }
    }

    /// Normalize arbitrary letters and pivot exponent.
    pub fn from_parts(letters: &[i32], pivot: i64) -> Self {
        let mut w = PivotWord { letters: Vec::with_capacity(letters.len()), pivot };
        for &l in letters {
            assert!(l != 0, "letter 0 is not a generator");
            w.push_letter(l);
        }
        w
    }

    fn push_letter(&mut self, l: i32) {
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn pivot_exp(&self) -> i64 {
        self.pivot
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty() && self.pivot == 0
    }

    /// Edge and inversion flag of each letter.
    pub fn symbols(&self) -> impl Iterator<Item = (EdgeId, bool)> + '_ {
        self.letters.iter().map(|&l| (EdgeId(l.unsigned_abs() - 1), l < 0))
    }

    /// Idempotent normalization (words are always normal; kept for clarity).
    pub fn reduce(&self) -> Self {
        Self::from_parts(&self.letters, self.pivot)
    }

    pub fn mul(&self, other: &PivotWord) -> PivotWord {
        let mut w = self.clone();
        w.mul_assign(other);
        w
    }

    pub fn mul_assign(&mut self, other: &PivotWord) {
        // Cancel across the junction, then append the rest.
        let mut k = 0;
        while k < other.letters.len() && self.letters.last() == Some(&-other.letters[k]) {
            self.letters.pop();
            k += 1;
        }
        self.letters.extend_from_slice(&other.letters[k..]);
        self.pivot += other.pivot;
    }

    pub fn inverse(&self) -> PivotWord {
        PivotWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
            pivot: -self.pivot,
        }
    }

    pub fn pow(&self, k: i64) -> PivotWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = PivotWord::identity();
        for _ in 0..k.unsigned_abs() {
            out.mul_assign(&base);
        }
        out
    }

    /// `x y x⁻¹ y⁻¹`.
    pub fn commutator(x: &PivotWord, y: &PivotWord) -> PivotWord {
        x.mul(y).mul(&x.inverse()).mul(&y.inverse())
    }

    /// Replace each generator by a word; the pivot stays central.
    pub fn substitute<F>(&self, image: F) -> PivotWord
    where
        F: Fn(EdgeId) -> PivotWord,
    {
        let mut out = PivotWord::pivot_power(self.pivot);
        let mut cache: BTreeMap<i32, PivotWord> = BTreeMap::new();
        for &l in &self.letters {
            let w = cache.entry(l).or_insert_with(|| {
                let e = EdgeId(l.unsigned_abs() - 1);
                let w = image(e);
                if l < 0 {
                    w.inverse()
                } else {
                    w
                }
            });
            out.mul_assign(w);
        }
        out
    }

    /// Generators occurring in the word.
    pub fn support(&self) -> std::collections::BTreeSet<EdgeId> {
        self.symbols().map(|(e, _)| e).collect()
    }

    /// Render with edge names, e.g. `p^-1 a2^-1 b2^-1 a2 b1 a1`.
    pub fn display_with<F: Fn(EdgeId) -> String>(&self, name: F) -> String {
        let mut parts = Vec::new();
        match self.pivot {
            0 => {}
            1 => parts.push("p".to_string()),
            k => parts.push(format!("p^{k}")),
        }
        for (e, inv) in self.symbols() {
            if inv {
                parts.push(format!("{}^-1", name(e)));
            } else {
                parts.push(name(e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }

    /// Parse a word such as `p^2 [w, a2^-1] a1 w^-1`.
    ///
    /// Symbols resolve first through `env` (named sub-words), then through
    /// `edge`. Supports `^k` and unicode superscript exponents, `[x, y]`
    /// commutators, parentheses, and `1` for the identity.
    pub fn parse<F>(text: &str, edge: F, env: &BTreeMap<String, PivotWord>) -> Result<PivotWord>
    where
        F: Fn(&str) -> Option<EdgeId>,
    {
        let toks = tokenize(text)?;
        let mut p = Parser { toks, pos: 0, edge: &edge, env };
        let w = p.word(&[])?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!("trailing input in word {text:?}")));
        }
        Ok(w)
    }
}

impl fmt::Display for PivotWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(|e| format!("x{}", e.0)))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Pow(i64),
    LBrack,
    RBrack,
    LParen,
    RParen,
    Comma,
}

fn superscript_digit(c: char) -> Option<u32> {
    match c {
        '⁰' => Some(0),
        '¹' => Some(1),
        '²' => Some(2),
        '³' => Some(3),
        '⁴' => Some(4),
        '⁵' => Some(5),
        '⁶' => Some(6),
        '⁷' => Some(7),
        '⁸' => Some(8),
        '⁹' => Some(9),
        _ => None,
    }
}

fn subscript_digit(c: char) -> Option<char> {
    ('₀'..='₉').contains(&c).then(|| char::from(b'0' + (c as u32 - '₀' as u32) as u8))
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() || c == '·' || c == '*' {
            i += 1;
        } else if c == '[' {
            out.push(Tok::LBrack);
            i += 1;
        } else if c == ']' {
            out.push(Tok::RBrack);
            i += 1;
        } else if c == '(' {
            out.push(Tok::LParen);
            i += 1;
        } else if c == ')' {
            out.push(Tok::RParen);
            i += 1;
        } else if c == ',' {
            out.push(Tok::Comma);
            i += 1;
        } else if c == '^' {
            i += 1;
            let mut s = String::new();
            if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                s.push(chars[i]);
                i += 1;
            }
            while i < chars.len() && chars[i].is_ascii_digit() {
                s.push(chars[i]);
                i += 1;
            }
            let k = s.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in {text:?}")))?;
            out.push(Tok::Pow(k));
        } else if c == '⁻' || superscript_digit(c).is_some() {
            let mut neg = false;
            if c == '⁻' {
                neg = true;
                i += 1;
            }
            let mut k: i64 = 0;
            let mut any = false;
            while i < chars.len() {
                match superscript_digit(chars[i]) {
                    Some(d) => {
                        k = 10 * k + d as i64;
                        any = true;
                        i += 1;
                    }
                    None => break,
                }
            }
            if !any {
                return Err(Error::Parse(format!("bad superscript in {text:?}")));
            }
            out.push(Tok::Pow(if neg { -k } else { k }));
        } else if c.is_alphanumeric() || c == '_' {
            let mut s = String::new();
            while i < chars.len()
                && (chars[i].is_alphanumeric() || chars[i] == '_' || subscript_digit(chars[i]).is_some())
                && superscript_digit(chars[i]).is_none()
            {
                s.push(subscript_digit(chars[i]).unwrap_or(chars[i]));
                i += 1;
            }
            out.push(Tok::Ident(s));
        } else {
            return Err(Error::Parse(format!("unexpected {c:?} in word {text:?}")));
        }
    }
    Ok(out)
}

fn split_juxtaposed(name: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for c in name.chars() {
        if c.is_alphabetic() || out.is_empty() {
            out.push(c.to_string());
        } else {
            out.last_mut().expect("nonempty").push(c);
        }
    }
    out
}

struct Parser<'a, F> {
    toks: Vec<Tok>,
    pos: usize,
    edge: &'a F,
    env: &'a BTreeMap<String, PivotWord>,
}

impl<F: Fn(&str) -> Option<EdgeId>> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn word(&mut self, stop: &[Tok]) -> Result<PivotWord> {
        let mut w = PivotWord::identity();
        while let Some(t) = self.peek() {
            if stop.contains(t) {
                break;
            }
            let f = self.factor()?;
            w.mul_assign(&f);
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<PivotWord> {
        let t = self.toks[self.pos].clone();
        self.pos += 1;
        let base = match t {
            Tok::Ident(name) => match self.symbol(&name) {
                Ok(w) => w,
                Err(err) => {
                    // Juxtaposed symbols such as `b2a2`: split before each
                    // letter that follows a digit or a letter.
                    let chunks = split_juxtaposed(&name);
                    if chunks.len() < 2 {
                        return Err(err);
                    }
                    self.pos -= 1;
                    self.toks.splice(self.pos..self.pos + 1, chunks.into_iter().map(Tok::Ident));
                    return self.factor();
                }
            },
            Tok::LParen => {
                let w = self.word(&[Tok::RParen])?;
                self.expect(Tok::RParen)?;
                w
            }
            Tok::LBrack => {
                let x = self.word(&[Tok::Comma])?;
                self.expect(Tok::Comma)?;
                let y = self.word(&[Tok::RBrack])?;
                self.expect(Tok::RBrack)?;
                PivotWord::commutator(&x, &y)
            }
            other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
        };
        if let Some(Tok::Pow(k)) = self.peek().cloned() {
            self.pos += 1;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {t:?}")))
        }
    }

    fn symbol(&self, name: &str) -> Result<PivotWord> {
        if name == "1" || name == "e" && (self.edge)("e").is_none() && !self.env.contains_key("e") {
            return Ok(PivotWord::identity());
        }
        if let Some(w) = self.env.get(name) {
            return Ok(w.clone());
        }
        if let Some(e) = (self.edge)(name) {
            return Ok(PivotWord::generator(e));
        }
        if name == "p" {
            return Ok(PivotWord::pivot_power(1));
        }
        Err(Error::Unknown(format!("symbol {name}")))
    }
}
