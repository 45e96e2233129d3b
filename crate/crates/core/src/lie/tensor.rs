//! The free associative algebra on graded letters, used as the ambient
//! space for free Lie algebras.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::Q;

pub type Word = Vec<u16>;

/// A letter of the free Lie algebra; `degree` is its Lie degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Letter {
    pub name: String,
    pub degree: u32,
    #[serde(default = "one_u32")]
    pub weight: u32,
}

fn one_u32() -> u32 {
    1
}

impl Letter {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Letter { name: name.into(), degree, weight: 1 }
    }

    pub fn weighted(name: impl Into<String>, degree: u32, weight: u32) -> Self {
        Letter { name: name.into(), degree, weight }
    }
}

/// Totals of a word: `(length, degree, weight)`.
pub fn word_stats(letters: &[Letter], w: &[u16]) -> (u32, u32, u32) {
    let mut d = 0;
    let mut wt = 0;
    for &c in w {
        d += letters[c as usize].degree;
        wt += letters[c as usize].weight;
    }
    (w.len() as u32, d, wt)
}

pub fn word_degree(letters: &[Letter], w: &[u16]) -> u32 {
    w.iter().map(|&c| letters[c as usize].degree).sum()
}

/// Letter counts of a word.
pub fn multidegree(r: usize, w: &[u16]) -> Vec<u16> {
    let mut m = vec![0; r];
    for &c in w {
        m[c as usize] += 1;
    }
    m
}

/// Element of the tensor algebra.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TElem {
    pub terms: BTreeMap<Word, Q>,
}

impl TElem {
    pub fn zero() -> Self {
        TElem::default()
    }

    pub fn one() -> Self {
        let mut t = TElem::zero();
        t.terms.insert(Vec::new(), Q::one());
        t
    }

    pub fn letter(i: usize) -> Self {
        let mut t = TElem::zero();
        t.terms.insert(vec![i as u16], Q::one());
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Q, other: &TElem) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), c * x);
        }
    }

    pub fn add(&self, other: &TElem) -> TElem {
        let mut out = self.clone();
        out.add_scaled(&Q::one(), other);
        out
    }

    pub fn sub(&self, other: &TElem) -> TElem {
        let mut out = self.clone();
        out.add_scaled(&-Q::one(), other);
        out
    }

    pub fn scale(&self, c: &Q) -> TElem {
        let mut out = TElem::zero();
        if c.is_zero() {
            return out;
        }
        for (w, x) in &self.terms {
            out.terms.insert(w.clone(), x * c);
        }
        out
    }

    /// Concatenation product, dropping words longer than `max_len`.
    pub fn mul_trunc(&self, other: &TElem, max_len: usize) -> TElem {
        let mut acc: BTreeMap<Word, Q> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a.len() + b.len() > max_len {
                    continue;
                }
                let mut w = a.clone();
                w.extend_from_slice(b);
                *acc.entry(w).or_insert_with(Q::zero) += x * y;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        TElem { terms: acc }
    }

    pub fn mul(&self, other: &TElem) -> TElem {
        self.mul_trunc(other, usize::MAX)
    }

    /// Graded commutator `ab - (-1)^{|a||b|} ba`, extended bilinearly over
    /// words.
    pub fn bracket(&self, other: &TElem, letters: &[Letter]) -> TElem {
        let mut acc: BTreeMap<Word, Q> = BTreeMap::new();
        for (a, x) in &self.terms {
            let da = word_degree(letters, a);
            for (b, y) in &other.terms {
                let db = word_degree(letters, b);
                let c = x * y;
                let mut ab = a.clone();
                ab.extend_from_slice(b);
                *acc.entry(ab).or_insert_with(Q::zero) += &c;
                let mut ba = b.clone();
                ba.extend_from_slice(a);
                let e = acc.entry(ba).or_insert_with(Q::zero);
                if (da * db) % 2 == 1 {
                    *e += c;
                } else {
                    *e -= c;
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        TElem { terms: acc }
    }

    /// Part of the given word length.
    pub fn length_part(&self, len: usize) -> TElem {
        TElem {
            terms: self.terms.iter().filter(|(w, _)| w.len() == len).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    pub fn coeff(&self, w: &[u16]) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    /// Largest word length present.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Truncated exponential of an element without constant term.
    pub fn exp_trunc(&self, max_len: usize) -> TElem {
        let mut out = TElem::one();
        let mut power = TElem::one();
        for k in 1..=max_len {
            power = power.mul_trunc(self, max_len);
            if power.is_zero() {
                break;
            }
            out.add_scaled(&Q::new(1.into(), factorial(k)), &power);
        }
        out
    }

    /// Truncated logarithm of an element with constant term 1.
    pub fn log_trunc(&self, max_len: usize) -> TElem {
        let mut t = self.clone();
        t.add_term(Vec::new(), -Q::one());
        let mut out = TElem::zero();
        let mut power = TElem::one();
        for k in 1..=max_len {
            power = power.mul_trunc(&t, max_len);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { Q::one() } else { -Q::one() };
            out.add_scaled(&(sign / Q::from_integer(k.into())), &power);
        }
        out
    }

    /// Applies the derivation with the given letter images; `odd` when the
    /// derivation has odd degree.
    pub fn derive(&self, images: &[TElem], odd: bool, letters: &[Letter]) -> TElem {
        let mut out = TElem::zero();
        for (w, c) in &self.terms {
            let mut prefix_deg = 0;
            for (i, &l) in w.iter().enumerate() {
                let img = &images[l as usize];
                if !img.is_zero() {
                    let sign = if odd && prefix_deg % 2 == 1 { -c.clone() } else { c.clone() };
                    for (v, x) in &img.terms {
                        let mut word = w[..i].to_vec();
                        word.extend_from_slice(v);
                        word.extend_from_slice(&w[i + 1..]);
                        out.add_term(word, &sign * x);
                    }
                }
                prefix_deg += letters[l as usize].degree;
            }
        }
        out
    }

    pub fn fmt_with(&self, letters: &[Letter]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (w, c) in &self.terms {
            let word: String = if w.is_empty() {
                "1".into()
            } else {
                w.iter().map(|&i| letters[i as usize].name.as_str()).collect::<Vec<_>>().join("")
            };
            parts.push(format!("{} {}", c, word));
        }
        parts.join(" + ")
    }
}

fn factorial(k: usize) -> num_bigint::BigInt {
    (1..=k).fold(num_bigint::BigInt::one(), |acc, i| acc * i)
}
