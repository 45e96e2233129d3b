//! Group words and their Magnus logarithms.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;

use super::hall::{FreeLie, LieElement};
use super::tensor::{Letter, TElem};

/// Reduced word in the free group, as `(letter, ±1)` syllables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupWord {
    pub rank: usize,
    pub syllables: Vec<(usize, i32)>,
}

impl GroupWord {
    pub fn is_trivial(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord { rank: self.rank, syllables: self.syllables.iter().rev().map(|&(l, e)| (l, -e)).collect() }
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut s = self.syllables.clone();
        s.extend_from_slice(&other.syllables);
        GroupWord { rank: self.rank.max(other.rank), syllables: reduce(s) }
    }
}

impl std::fmt::Display for GroupWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for &(l, e) in &self.syllables {
            let c = (b'a' + l as u8) as char;
            if e > 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{}", c.to_ascii_uppercase())?;
            }
        }
        Ok(())
    }
}

fn reduce(s: Vec<(usize, i32)>) -> Vec<(usize, i32)> {
    let mut out: Vec<(usize, i32)> = Vec::new();
    for x in s {
        if let Some(&last) = out.last() {
            if last.0 == x.0 && last.1 == -x.1 {
                out.pop();
                continue;
            }
        }
        out.push(x);
    }
    out
}

/// Parses words such as `aba⁻¹b⁻¹`, `ABab`, `[a,b][c,d]`, `a^2` or
/// `(ab)^-1` over the letters `a, b, …` (upper case = inverse).
pub fn parse_group_word(s: &str, rank: usize) -> Result<GroupWord> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = WordParser { c: chars, pos: 0, rank };
    let w = p.word()?;
    if p.pos != p.c.len() {
        return Err(Error::Input(format!("group word: unexpected '{}'", p.c[p.pos])));
    }
    Ok(GroupWord { rank, syllables: reduce(w) })
}

struct WordParser {
    c: Vec<char>,
    pos: usize,
    rank: usize,
}

impl WordParser {
    fn word(&mut self) -> Result<Vec<(usize, i32)>> {
        let mut out = Vec::new();
        while let Some(&ch) = self.c.get(self.pos) {
            if ch == ',' || ch == ']' || ch == ')' {
                break;
            }
            let f = self.factor()?;
            out.extend(f);
        }
        Ok(out)
    }

    fn factor(&mut self) -> Result<Vec<(usize, i32)>> {
        let base = self.atom()?;
        let inv = |w: &Vec<(usize, i32)>| -> Vec<(usize, i32)> { w.iter().rev().map(|&(l, e)| (l, -e)).collect() };
        if self.c[self.pos..].starts_with(&['⁻', '¹']) {
            self.pos += 2;
            return Ok(inv(&base));
        }
        if self.c.get(self.pos) == Some(&'^') {
            self.pos += 1;
            let start = self.pos;
            if self.c.get(self.pos) == Some(&'-') {
                self.pos += 1;
            }
            while self.c.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let txt: String = self.c[start..self.pos].iter().collect();
            let k: i64 = txt.parse().map_err(|_| Error::Input(format!("group word: bad exponent '{txt}'")))?;
            let unit = if k < 0 { inv(&base) } else { base };
            let mut out = Vec::new();
            for _ in 0..k.unsigned_abs() {
                out.extend_from_slice(&unit);
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Vec<(usize, i32)>> {
        let ch = *self.c.get(self.pos).ok_or_else(|| Error::Input("group word: unexpected end".into()))?;
        self.pos += 1;
        match ch {
            '1' => Ok(Vec::new()),
            '[' => {
                let u = self.word()?;
                if self.c.get(self.pos) != Some(&',') {
                    return Err(Error::Input("group word: expected ','".into()));
                }
                self.pos += 1;
                let v = self.word()?;
                if self.c.get(self.pos) != Some(&']') {
                    return Err(Error::Input("group word: expected ']'".into()));
                }
                self.pos += 1;
                let inv =
                    |w: &Vec<(usize, i32)>| -> Vec<(usize, i32)> { w.iter().rev().map(|&(l, e)| (l, -e)).collect() };
                let mut out = u.clone();
                out.extend_from_slice(&v);
                out.extend(inv(&u));
                out.extend(inv(&v));
                Ok(out)
            }
            '(' => {
                let u = self.word()?;
                if self.c.get(self.pos) != Some(&')') {
                    return Err(Error::Input("group word: expected ')'".into()));
                }
                self.pos += 1;
                Ok(u)
            }
            c if c.is_ascii_alphabetic() => {
                let l = (c.to_ascii_lowercase() as u8 - b'a') as usize;
                if l >= self.rank {
                    return Err(Error::UnknownLetter(c.to_string()));
                }
                Ok(vec![(l, if c.is_ascii_uppercase() { -1 } else { 1 })])
            }
            c => Err(Error::UnknownLetter(c.to_string())),
        }
    }
}

/// `α = log` of the word's image under `a ↦ exp(x_a)`.
#[derive(Debug, Clone)]
pub struct MagnusLog {
    pub max_len: u32,
    /// `α` in the tensor algebra.
    pub tensor: TElem,
    /// `α` in the Lyndon basis.
    pub lie: LieElement,
    /// Least length with a nonzero component, if any.
    pub leading_length: Option<u32>,
}

impl MagnusLog {
    pub fn is_trivial(&self) -> bool {
        self.leading_length.is_none()
    }

    /// Component of the given length.
    pub fn component(&self, len: u32) -> TElem {
        self.tensor.length_part(len as usize)
    }
}

/// Degree-zero letters `x1, …, xr`.
pub fn circle_letters(r: usize) -> Vec<Letter> {
    (1..=r).map(|i| Letter::new(format!("x{i}"), 0)).collect()
}

/// Image of a word in the tensor algebra truncated at `max_len`.
pub fn magnus_image(w: &GroupWord, max_len: u32) -> TElem {
    let l = max_len as usize;
    let mut out = TElem::one();
    for &(a, e) in &w.syllables {
        let x = TElem::letter(a).scale(&Q::from_integer(e.into()));
        out = out.mul_trunc(&x.exp_trunc(l), l);
    }
    out
}

/// Coordinates of a Lie element of degree-zero letters in the Lyndon basis,
/// by peeling off leading Lyndon words in increasing order. Returns the
/// coordinates and whatever is left (zero exactly when the input is Lie).
pub fn lyndon_coordinates(lie: &FreeLie, t: &TElem) -> (LieElement, TElem) {
    let mut residual = t.clone();
    let mut coords = BTreeMap::new();
    for (i, b) in lie.basis.iter().enumerate() {
        let c = residual.coeff(&b.word);
        if !c.is_zero() {
            residual.add_scaled(&-c.clone(), &b.expansion);
            coords.insert(i, c);
        }
    }
    (LieElement { coords }, residual)
}

pub fn magnus_log(w: &GroupWord, max_len: u32) -> Result<MagnusLog> {
    let img = magnus_image(w, max_len);
    let alpha = img.log_trunc(max_len as usize);
    let lie = FreeLie::new(circle_letters(w.rank), max_len);
    let (coords, residual) = lyndon_coordinates(&lie, &alpha);
    if !residual.is_zero() {
        return Err(Error::Falsified("logarithm of a group word is not primitive".into()));
    }
    let leading_length = alpha.terms.keys().map(|w| w.len() as u32).min();
    Ok(MagnusLog { max_len, tensor: alpha, lie: coords, leading_length })
}

/// `log(exp(a) exp(b))` truncated at `max_len`.
pub fn bch(a: &TElem, b: &TElem, max_len: u32) -> TElem {
    let l = max_len as usize;
    a.exp_trunc(l).mul_trunc(&b.exp_trunc(l), l).log_trunc(l)
}
