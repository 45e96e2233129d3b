//! The homotopy Lie algebra of a minimal Sullivan algebra seen through the
//! quadratic part of its differential: brackets of functionals on
//! generators and the filtration dual to the lower central series.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gca::{Derivation, Poly};
use crate::linalg::{self, SparseVec};
use crate::rational::Q;
use crate::sullivan::SullivanAlgebra;

use super::expr::{LieExpr, LieTarget};

/// Linear functional on the generators of one degree; an element `x` of the
/// homotopy Lie algebra with `|sx| = degree`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Functional {
    pub degree: u32,
    pub values: BTreeMap<usize, Q>,
}

impl Functional {
    pub fn dual(m: &SullivanAlgebra, g: usize) -> Self {
        let mut values = BTreeMap::new();
        values.insert(g, Q::one());
        Functional { degree: m.gen(g).degree, values }
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, g: usize) -> Q {
        self.values.get(&g).cloned().unwrap_or_else(Q::zero)
    }

    /// Lie degree `|x| = |sx| - 1`.
    pub fn lie_degree(&self) -> u32 {
        self.degree - 1
    }

    pub fn scale(&self, c: &Q) -> Functional {
        if c.is_zero() {
            return Functional { degree: self.degree, values: BTreeMap::new() };
        }
        Functional { degree: self.degree, values: self.values.iter().map(|(g, x)| (*g, x * c)).collect() }
    }

    pub fn add(&self, other: &Functional) -> Result<Functional> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch("sum of functionals of different degrees".into()));
        }
        let mut values = self.values.clone();
        for (g, x) in &other.values {
            let e = values.entry(*g).or_insert_with(Q::zero);
            *e += x;
        }
        values.retain(|_, c| !c.is_zero());
        Ok(Functional { degree: self.degree, values })
    }

    pub fn fmt_with(&self, m: &SullivanAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.values
            .iter()
            .map(|(g, c)| format!("{}·{}*", crate::rational::q_to_string(c), m.gen(*g).name))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn sign(odd: bool) -> Q {
    if odd {
        -Q::one()
    } else {
        Q::one()
    }
}

/// `<v, s[x,y]> = (-1)^{1+|y|} <d₁v; sx, sy>` on every generator `v` of
/// degree `|sx| + |sy| - 1`.
pub fn homotopy_bracket(m: &SullivanAlgebra, x: &Functional, y: &Functional) -> Result<Functional> {
    if x.is_zero() || y.is_zero() {
        return Ok(Functional::default());
    }
    let deg = x.degree + y.degree - 1;
    let a = x.degree;
    let outer = sign((1 + y.lie_degree()) % 2 == 1);
    let mut values = BTreeMap::new();
    for v in 0..m.len() {
        if m.gen(v).degree != deg {
            continue;
        }
        let dv = &m.d.values[v];
        if dv.terms.keys().any(|mo| mo.length() == 1) {
            return Err(Error::Unsupported(format!("d{} has a linear part", m.gen(v).name)));
        }
        let mut total = Q::zero();
        for (mono, c) in &dv.terms {
            if mono.length() != 2 {
                continue;
            }
            let (u, w) = match mono.0.as_slice() {
                [(g, 2)] => (*g as usize, *g as usize),
                [(g, 1), (h, 1)] => (*g as usize, *h as usize),
                _ => unreachable!("length two"),
            };
            let du = m.gen(u).degree;
            let dw = m.gen(w).degree;
            let t1 = sign((dw * a) % 2 == 1) * x.get(u) * y.get(w);
            let t2 = sign((du * dw + du * a) % 2 == 1) * x.get(w) * y.get(u);
            total += c * (t1 + t2);
        }
        if !total.is_zero() {
            values.insert(v, &outer * total);
        }
    }
    Ok(Functional { degree: deg, values })
}

/// Evaluates bracket expressions with letters bound to functionals.
pub struct BracketEval<'a> {
    pub m: &'a SullivanAlgebra,
    pub letters: BTreeMap<String, Functional>,
}

impl<'a> BracketEval<'a> {
    /// Binds each named generator's dual to the same name, and `x{i}` to the
    /// dual of the `i`-th (1-based) cocycle generator.
    pub fn new(m: &'a SullivanAlgebra) -> Self {
        let mut letters = BTreeMap::new();
        let mut k = 0;
        for g in 0..m.len() {
            letters.insert(m.gen(g).name.clone(), Functional::dual(m, g));
            if m.d.values[g].is_zero() {
                k += 1;
                letters.insert(format!("x{k}"), Functional::dual(m, g));
            }
        }
        BracketEval { m, letters }
    }

    pub fn eval(&self, e: &LieExpr) -> Result<Functional> {
        e.eval(self)
    }
}

impl LieTarget for BracketEval<'_> {
    type Elem = Functional;

    fn letter(&self, name: &str) -> Result<Functional> {
        self.letters.get(name).cloned().ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    fn bracket(&self, a: &Functional, b: &Functional) -> Result<Functional> {
        homotopy_bracket(self.m, a, b)
    }

    fn add(&self, a: &Functional, b: &Functional) -> Result<Functional> {
        a.add(b)
    }

    fn scale(&self, c: &Q, a: &Functional) -> Functional {
        a.scale(c)
    }

    fn zero(&self) -> Functional {
        Functional::default()
    }
}

/// Block key of a generator: `(degree, weight)`, weight 0 when ungraded.
fn block_of(m: &SullivanAlgebra, g: usize) -> (u32, u32) {
    let gen = m.gen(g);
    (gen.degree, if m.gca.graded { gen.weight } else { 0 })
}

/// Subspace of the generators, stored per block as coordinate vectors over
/// the block's generators (listed in `gens`).
#[derive(Debug, Clone, Default)]
pub struct GenSubspace {
    pub gens: BTreeMap<(u32, u32), Vec<usize>>,
    pub basis: BTreeMap<(u32, u32), Vec<SparseVec>>,
}

impl GenSubspace {
    pub fn dim(&self, block: (u32, u32)) -> usize {
        self.basis.get(&block).map(|b| b.len()).unwrap_or(0)
    }

    pub fn dims(&self) -> BTreeMap<(u32, u32), usize> {
        self.basis.iter().map(|(k, v)| (*k, v.len())).collect()
    }

    pub fn to_poly(&self, block: (u32, u32), v: &SparseVec) -> Poly {
        let mut p = Poly::zero();
        for (i, c) in v {
            p.add_term(crate::gca::Mono::gen(self.gens[&block][*i]), c.clone());
        }
        p
    }
}

/// `V(0) = ker d₁`, `V(k+1) = d₁⁻¹(Λ²V(k))`, through stage `max_stage`.
/// Generators of degree above `max_degree` are ignored.
pub fn stage_filtration(m: &SullivanAlgebra, max_degree: u32, max_stage: u32) -> Result<Vec<GenSubspace>> {
    let d1: Vec<Poly> = m.d.values.iter().map(|v| v.wedge_part(2)).collect();
    let mut gens: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
    for g in 0..m.len() {
        if m.gen(g).degree <= max_degree {
            gens.entry(block_of(m, g)).or_default().push(g);
        }
    }
    let mut out: Vec<GenSubspace> = Vec::new();
    let mut prev: Option<GenSubspace> = None;
    for _ in 0..=max_stage {
        // annihilator of the previous stage, as functionals on generators
        let mut annihilators: Vec<((u32, u32), SparseVec)> = Vec::new();
        for (block, gs) in &gens {
            let basis: Vec<SparseVec> = prev.as_ref().and_then(|p| p.basis.get(block)).cloned().unwrap_or_default();
            // kernel of j -> (b_1[j], b_2[j], ...)
            let mut rows: Vec<SparseVec> = vec![Vec::new(); gs.len()];
            for (bi, b) in basis.iter().enumerate() {
                for (j, c) in b {
                    rows[*j].push((bi, c.clone()));
                }
            }
            for phi in linalg::kernel(&rows) {
                annihilators.push((*block, phi));
            }
        }
        let contractions: Vec<Derivation> = annihilators
            .iter()
            .map(|(block, phi)| {
                let mut values = vec![Poly::zero(); m.len()];
                for (j, c) in phi {
                    values[gens[block][*j]] = Poly::mono(crate::gca::Mono::one(), c.clone());
                }
                Derivation { shift: -(block.0 as i32), values }
            })
            .collect();
        let mut cur = GenSubspace { gens: gens.clone(), basis: BTreeMap::new() };
        for (block, gs) in &gens {
            let mut index: BTreeMap<(usize, crate::gca::Mono), usize> = BTreeMap::new();
            let mut cols: Vec<SparseVec> = Vec::with_capacity(gs.len());
            for &g in gs {
                let mut col: SparseVec = Vec::new();
                let present: Vec<(u32, u32)> =
                    d1[g].terms.keys().flat_map(|mo| mo.0.iter().map(|&(h, _)| block_of(m, h as usize))).collect();
                for (ci, (ablock, _)) in annihilators.iter().enumerate() {
                    if !present.contains(ablock) {
                        continue;
                    }
                    let img = m.gca.apply(&contractions[ci], &d1[g])?;
                    for (mo, c) in img.terms {
                        let k = index.len();
                        let k = *index.entry((ci, mo)).or_insert(k);
                        col.push((k, c));
                    }
                }
                col.sort_by_key(|e| e.0);
                cols.push(col);
            }
            let ker = linalg::kernel(&cols);
            if !ker.is_empty() {
                cur.basis.insert(*block, ker);
            }
        }
        out.push(cur.clone());
        prev = Some(cur);
    }
    Ok(out)
}

/// Dimensions of `L/L^(r)` per Lie degree (and weight for graded algebras).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcsTable {
    /// `((lie_degree, weight, r), dim)`.
    pub dims: Vec<((u32, u32, u32), usize)>,
}

impl LcsTable {
    pub fn get(&self, lie_degree: u32, weight: u32, r: u32) -> usize {
        self.dims.iter().find(|(k, _)| *k == (lie_degree, weight, r)).map(|(_, d)| *d).unwrap_or(0)
    }

    /// Total over weights.
    pub fn total(&self, lie_degree: u32, r: u32) -> usize {
        self.dims.iter().filter(|((d, _, rr), _)| *d == lie_degree && *rr == r).map(|(_, n)| n).sum()
    }
}

/// `dim (L/L^(r))_k = dim V(r-2)^{k+1}` for `r = 2..=max_r`.
pub fn lcs_quotients(m: &SullivanAlgebra, max_degree: u32, max_r: u32) -> Result<LcsTable> {
    if m.d.values.iter().any(|v| v.terms.keys().any(|mo| mo.length() == 1)) {
        return Err(Error::Unsupported("the differential has a linear part".into()));
    }
    let filt = stage_filtration(m, max_degree, max_r.saturating_sub(2))?;
    let mut dims = Vec::new();
    for r in 2..=max_r {
        let st = &filt[(r - 2) as usize];
        for (block, gs) in &st.gens {
            if block.0 == 0 || gs.is_empty() {
                continue;
            }
            dims.push(((block.0 - 1, block.1, r), st.dim(*block)));
        }
    }
    Ok(LcsTable { dims })
}
