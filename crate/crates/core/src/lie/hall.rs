//! Hall basis of the free graded Lie algebra: Lyndon words with their
//! standard bracketing, plus `[u,u]` for odd Lyndon words `u`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Reduced, SparseVec};
use crate::rational::{q_to_string, Q};

use super::expr::{parse_lie, LieTarget};
use super::tensor::{multidegree, word_stats, Letter, TElem, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tree {
    Leaf(u16),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn fmt_with(&self, letters: &[Letter]) -> String {
        match self {
            Tree::Leaf(i) => letters[*i as usize].name.clone(),
            Tree::Node(a, b) => format!("[{},{}]", a.fmt_with(letters), b.fmt_with(letters)),
        }
    }

    pub fn expand(&self, letters: &[Letter]) -> TElem {
        match self {
            Tree::Leaf(i) => TElem::letter(*i as usize),
            Tree::Node(a, b) => a.expand(letters).bracket(&b.expand(letters), letters),
        }
    }
}

#[derive(Debug, Clone)]
pub struct HallElem {
    pub word: Word,
    pub tree: Tree,
    pub len: u32,
    pub degree: u32,
    pub weight: u32,
    pub expansion: TElem,
}

/// Coordinates in a Hall basis.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LieElement {
    pub coords: BTreeMap<usize, Q>,
}

impl LieElement {
    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

type Block = (HashMap<Word, usize>, Echelon, Vec<usize>);

pub struct FreeLie {
    pub letters: Vec<Letter>,
    pub max_len: u32,
    pub basis: Vec<HallElem>,
    by_multi: HashMap<Vec<u16>, Vec<usize>>,
    solvers: RefCell<HashMap<Vec<u16>, Block>>,
}

/// All Lyndon words of length at most `max_len`, in lexicographic order.
pub fn lyndon_words(r: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if r == 0 || max_len == 0 {
        return out;
    }
    let mut w: Word = vec![0];
    loop {
        out.push(w.clone());
        let n = w.len();
        while w.len() < max_len {
            let c = w[w.len() - n];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last as usize == r - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            None => break,
            Some(l) => *l += 1,
        }
    }
    out
}

pub fn is_lyndon(w: &[u16]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Standard factorization `w = uv` with `v` the longest proper Lyndon suffix.
fn standard_split(w: &[u16]) -> (Word, Word) {
    for i in 1..w.len() {
        if is_lyndon(&w[i..]) {
            return (w[..i].to_vec(), w[i..].to_vec());
        }
    }
    unreachable!("words of length at least two have a Lyndon suffix")
}

impl FreeLie {
    pub fn new(letters: Vec<Letter>, max_len: u32) -> Self {
        let r = letters.len();
        let mut trees: HashMap<Word, Tree> = HashMap::new();
        let mut expansions: HashMap<Word, TElem> = HashMap::new();
        let mut words = lyndon_words(r, max_len as usize);
        words.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        let mut basis = Vec::new();
        for w in &words {
            let (tree, exp) = if w.len() == 1 {
                (Tree::Leaf(w[0]), TElem::letter(w[0] as usize))
            } else {
                let (u, v) = standard_split(w);
                let e = expansions[&u].bracket(&expansions[&v], &letters);
                (Tree::Node(Box::new(trees[&u].clone()), Box::new(trees[&v].clone())), e)
            };
            trees.insert(w.clone(), tree.clone());
            expansions.insert(w.clone(), exp.clone());
            let (len, degree, weight) = word_stats(&letters, w);
            basis.push(HallElem { word: w.clone(), tree, len, degree, weight, expansion: exp });
        }
        for w in &words {
            let (len, degree, weight) = word_stats(&letters, w);
            if degree % 2 == 1 && 2 * len <= max_len {
                let e = expansions[w].bracket(&expansions[w], &letters);
                let t = Tree::Node(Box::new(trees[w].clone()), Box::new(trees[w].clone()));
                let mut ww = w.clone();
                ww.extend_from_slice(w);
                basis.push(HallElem {
                    word: ww,
                    tree: t,
                    len: 2 * len,
                    degree: 2 * degree,
                    weight: 2 * weight,
                    expansion: e,
                });
            }
        }
        basis.sort_by(|a, b| a.len.cmp(&b.len).then(a.word.cmp(&b.word)));
        let mut by_multi: HashMap<Vec<u16>, Vec<usize>> = HashMap::new();
        for (i, b) in basis.iter().enumerate() {
            by_multi.entry(multidegree(r, &b.word)).or_default().push(i);
        }
        FreeLie { letters, max_len, basis, by_multi, solvers: RefCell::new(HashMap::new()) }
    }

    pub fn letter_index(&self, name: &str) -> Option<usize> {
        self.letters.iter().position(|l| l.name == name)
    }

    /// Basis counts per `(degree, length)`.
    pub fn dims(&self) -> BTreeMap<(u32, u32), usize> {
        let mut out = BTreeMap::new();
        for b in &self.basis {
            *out.entry((b.degree, b.len)).or_insert(0) += 1;
        }
        out
    }

    /// Basis counts per `(length, degree, weight)`.
    pub fn dims_full(&self) -> BTreeMap<(u32, u32, u32), usize> {
        let mut out = BTreeMap::new();
        for b in &self.basis {
            *out.entry((b.len, b.degree, b.weight)).or_insert(0) += 1;
        }
        out
    }

    pub fn expand(&self, e: &LieElement) -> TElem {
        let mut out = TElem::zero();
        for (i, c) in &e.coords {
            out.add_scaled(c, &self.basis[*i].expansion);
        }
        out
    }

    /// Coordinates of a Lie element given in the tensor algebra.
    pub fn normal_form(&self, t: &TElem) -> Result<LieElement> {
        let r = self.letters.len();
        let mut groups: BTreeMap<Vec<u16>, Vec<(&Word, &Q)>> = BTreeMap::new();
        for (w, c) in &t.terms {
            if w.is_empty() {
                return Err(Error::Input("constant term is not a Lie element".into()));
            }
            if w.len() as u32 > self.max_len {
                return Err(Error::CapExhausted(format!("length {} exceeds the cap {}", w.len(), self.max_len)));
            }
            groups.entry(multidegree(r, w)).or_default().push((w, c));
        }
        let mut out = LieElement::default();
        let mut solvers = self.solvers.borrow_mut();
        for (mu, terms) in groups {
            let (index, ech, members) = solvers.entry(mu.clone()).or_insert_with(|| {
                let members = self.by_multi.get(&mu).cloned().unwrap_or_default();
                let mut index: HashMap<Word, usize> = HashMap::new();
                let mut ech = Echelon::new();
                for &i in &members {
                    let v = to_vec(&self.basis[i].expansion, &mut index, true).expect("own words");
                    let _ = ech.insert(&v);
                }
                (index, ech, members)
            });
            let mut v: SparseVec = Vec::new();
            for (w, c) in terms {
                match index.get(w) {
                    Some(&k) => v.push((k, c.clone())),
                    None => return Err(Error::Input("element is not in the free Lie algebra".into())),
                }
            }
            v.sort_by_key(|e| e.0);
            match ech.reduce(&v) {
                Reduced::InSpan(x) => {
                    for (j, c) in x {
                        out.coords.insert(members[j], c);
                    }
                }
                Reduced::Independent(_) => return Err(Error::Input("element is not in the free Lie algebra".into())),
            }
        }
        Ok(out)
    }

    /// Parses and normalizes a bracket expression.
    pub fn hall_normal_form(&self, expr: &str) -> Result<LieElement> {
        let e = parse_lie(expr)?;
        let t = e.eval(self)?;
        self.normal_form(&t)
    }

    pub fn fmt(&self, e: &LieElement) -> String {
        if e.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (i, c)) in e.coords.iter().enumerate() {
            let t = self.basis[*i].tree.fmt_with(&self.letters);
            if k > 0 {
                s.push_str(" + ");
            }
            if c.is_one() {
                s.push_str(&t);
            } else {
                let _ = write!(s, "{} {}", q_to_string(c), t);
            }
        }
        s
    }
}

fn to_vec(t: &TElem, index: &mut HashMap<Word, usize>, grow: bool) -> Option<SparseVec> {
    let mut v = Vec::new();
    for (w, c) in &t.terms {
        let k = match index.get(w) {
            Some(&k) => k,
            None if grow => {
                let k = index.len();
                index.insert(w.clone(), k);
                k
            }
            None => return None,
        };
        v.push((k, c.clone()));
    }
    v.sort_by_key(|e| e.0);
    Some(v)
}

impl LieTarget for FreeLie {
    type Elem = TElem;

    fn letter(&self, name: &str) -> Result<TElem> {
        self.letter_index(name).map(TElem::letter).ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    fn bracket(&self, a: &TElem, b: &TElem) -> Result<TElem> {
        Ok(a.bracket(b, &self.letters))
    }

    fn add(&self, a: &TElem, b: &TElem) -> Result<TElem> {
        Ok(a.add(b))
    }

    fn scale(&self, c: &Q, a: &TElem) -> TElem {
        a.scale(c)
    }

    fn zero(&self) -> TElem {
        TElem::zero()
    }
}

/// Dimensions of the free Lie algebra per `(length, degree, weight)` from
/// the span of all bracketings of lower-length elements.
pub fn brute_force_dims(letters: &[Letter], max_len: u32) -> BTreeMap<(u32, u32, u32), usize> {
    let mut layers: Vec<Vec<TElem>> = vec![Vec::new()];
    layers.push((0..letters.len()).map(TElem::letter).collect());
    let mut out = BTreeMap::new();
    for l in letters {
        *out.entry((1, l.degree, l.weight)).or_insert(0) += 1;
    }
    for len in 2..=max_len as usize {
        let mut index: HashMap<Word, usize> = HashMap::new();
        let mut ech = Echelon::new();
        let mut layer = Vec::new();
        for i in 1..len {
            for a in &layers[i] {
                for b in &layers[len - i] {
                    let t = a.bracket(b, letters);
                    if t.is_zero() {
                        continue;
                    }
                    let v = to_vec(&t, &mut index, true).expect("grows");
                    if ech.insert(&v).is_ok() {
                        let w = t.terms.keys().next().expect("nonzero");
                        let (l, d, wt) = word_stats(letters, w);
                        *out.entry((l, d, wt)).or_insert(0) += 1;
                        layer.push(t);
                    }
                }
            }
        }
        layers.push(layer);
    }
    out
}
