//! The dg Lie algebra `(𝕃(x_1, …, x_r, y), d)` with `dy = α`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lie::{circle_letters, magnus_log, FreeLie, Letter, MagnusLog, TElem, Word};
use crate::linalg::{Echelon, SparseVec};

use super::OneRelatorScenario;

pub struct DgLie {
    /// Hall basis on `x_1, …, x_r` (Lie degree 0, weight 1) and `y`
    /// (Lie degree 1, weight `n`).
    pub lie: FreeLie,
    pub alpha: MagnusLog,
    /// Leading length `n` of `α`; one for the trivial word.
    pub y_weight: u32,
    pub max_length: u32,
    /// Set when the word is trivial: `dy = 0` and nothing is claimed.
    pub trivial: bool,
    full: Vec<TElem>,
    leading: Vec<TElem>,
}

impl DgLie {
    pub fn r(&self) -> usize {
        self.lie.letters.len() - 1
    }

    pub fn y(&self) -> usize {
        self.r()
    }

    /// `dy` through the length cap.
    pub fn dy(&self) -> &TElem {
        &self.full[self.y()]
    }

    /// `∂y = α_n`.
    pub fn leading_dy(&self) -> &TElem {
        &self.leading[self.y()]
    }

    pub fn d(&self, t: &TElem) -> TElem {
        t.derive(&self.full, true, &self.lie.letters)
    }

    /// The leading-term differential `∂`.
    pub fn partial(&self, t: &TElem) -> TElem {
        t.derive(&self.leading, true, &self.lie.letters)
    }

    /// Number of `y` in a word.
    pub fn y_count(&self, w: &Word) -> u32 {
        let y = self.y() as u16;
        w.iter().filter(|&&c| c == y).count() as u32
    }
}

pub fn build_dg_lie(s: &OneRelatorScenario) -> Result<DgLie> {
    let l = s.max_length();
    let alpha = magnus_log(&s.group_word, l)?;
    let n = alpha.leading_length.unwrap_or(1);
    let mut letters: Vec<Letter> = circle_letters(s.r);
    letters.push(Letter::weighted("y", 1, n));
    let lie = FreeLie::new(letters, l);
    let mut full = vec![TElem::zero(); s.r];
    let mut leading = full.clone();
    full.push(alpha.tensor.clone());
    leading.push(alpha.component(n));
    Ok(DgLie { lie, trivial: alpha.is_trivial(), alpha, y_weight: n, max_length: l, full, leading })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyRow {
    /// Number of `y`, which is the Lie degree.
    pub q: u32,
    pub weight: u32,
    pub chains: usize,
    /// Rank of `∂` leaving this block.
    pub boundary_rank: usize,
    pub homology: usize,
}

/// Homology of the leading-term complex `(𝕃(x, y), ∂)` per `(q, weight)`.
/// Since `d - ∂` raises the weight, this is the associated graded of
/// `H(𝕃̂, d)` whenever it vanishes for `q ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DgLieHomology {
    pub max_length: u32,
    pub rows: Vec<HomologyRow>,
}

impl DgLieHomology {
    pub fn get(&self, q: u32, weight: u32) -> usize {
        self.rows.iter().find(|r| r.q == q && r.weight == weight).map(|r| r.homology).unwrap_or(0)
    }

    /// `H_0` per length `1..=max_length`.
    pub fn h0_dims(&self) -> Vec<usize> {
        (1..=self.max_length).map(|m| self.get(0, m)).collect()
    }

    /// Least `q ≥ 1` with nonzero homology.
    pub fn first_higher(&self) -> Option<u32> {
        self.rows.iter().filter(|r| r.q >= 1 && r.homology > 0).map(|r| r.q).min()
    }

    pub fn higher_vanish(&self) -> bool {
        self.first_higher().is_none()
    }
}

fn to_vec(t: &TElem, index: &mut HashMap<Word, usize>) -> SparseVec {
    let mut v: SparseVec = t
        .terms
        .iter()
        .map(|(w, c)| {
            let k = index.len();
            (*index.entry(w.clone()).or_insert(k), c.clone())
        })
        .collect();
    v.sort_by_key(|e| e.0);
    v
}

pub fn dg_lie_homology(d: &DgLie) -> DgLieHomology {
    let mut chains: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
    for (i, b) in d.lie.basis.iter().enumerate() {
        if b.weight <= d.max_length {
            chains.entry((d.y_count(&b.word), b.weight)).or_default().push(i);
        }
    }
    let mut ranks: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for (&(q, m), members) in &chains {
        if q == 0 {
            continue;
        }
        let mut index = HashMap::new();
        let mut ech = Echelon::new();
        for &i in members {
            let img = d.partial(&d.lie.basis[i].expansion);
            if !img.is_zero() {
                let _ = ech.insert(&to_vec(&img, &mut index));
            }
        }
        ranks.insert((q, m), ech.rank());
    }
    let rows = chains
        .iter()
        .map(|(&(q, m), members)| {
            let out = ranks.get(&(q, m)).copied().unwrap_or(0);
            let inc = ranks.get(&(q + 1, m)).copied().unwrap_or(0);
            HomologyRow { q, weight: m, chains: members.len(), boundary_rank: out, homology: members.len() - out - inc }
        })
        .collect();
    DgLieHomology { max_length: d.max_length, rows }
}
