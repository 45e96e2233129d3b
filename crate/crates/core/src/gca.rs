//! Free graded-commutative algebras over `Q`.
//!
//! A monomial is a sorted list of `(generator index, exponent)` pairs; odd
//! generators appear with exponent 1 at most. Generators are ordered by
//! creation index, which fixes the sign convention: a monomial always means
//! the product of its factors in increasing index order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Echelon, SparseVec};
use crate::rational::{q_to_string, Q};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    /// Length grading. Differentials of graded algebras preserve it.
    #[serde(default = "one")]
    pub weight: u32,
}

fn one() -> u32 {
    1
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Generator { name: name.into(), degree, weight: 1 }
    }

    pub fn weighted(name: impl Into<String>, degree: u32, weight: u32) -> Self {
        Generator { name: name.into(), degree, weight }
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mono(pub Vec<(u32, u32)>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn gen(i: usize) -> Self {
        Mono(vec![(i as u32, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Wedge degree: number of factors with multiplicity.
    pub fn length(&self) -> u32 {
        self.0.iter().map(|e| e.1).sum()
    }

    /// The generator index if this monomial is a single generator.
    pub fn as_gen(&self) -> Option<usize> {
        match self.0.as_slice() {
            [(g, 1)] => Some(*g as usize),
            _ => None,
        }
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.0.last().map(|e| e.0 as usize)
    }
}

/// Linear combination of monomials with nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    pub terms: BTreeMap<Mono, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::mono(Mono::one(), Q::one())
    }

    pub fn mono(m: Mono, c: Q) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn gen(i: usize) -> Self {
        Poly::mono(Mono::gen(i), Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, c: &Q, other: &Poly) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), c * x);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut r = self.clone();
        r.add_assign_scaled(&Q::one(), other);
        r
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut r = self.clone();
        r.add_assign_scaled(&-Q::one(), other);
        r
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Q::one())
    }

    /// Component of wedge degree exactly `p`.
    pub fn wedge_part(&self, p: u32) -> Poly {
        Poly {
            terms: self.terms.iter().filter(|(m, _)| m.length() == p).map(|(m, x)| (m.clone(), x.clone())).collect(),
        }
    }

    /// Coefficient of a single generator.
    pub fn coeff_of_gen(&self, i: usize) -> Q {
        self.terms.get(&Mono::gen(i)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn min_length(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.length()).min()
    }
}

/// Which total weights a degree slice keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightSel {
    Any,
    AtMost(u32),
    Exactly(u32),
}

impl WeightSel {
    fn bound(&self) -> Option<u32> {
        match self {
            WeightSel::Any => None,
            WeightSel::AtMost(w) | WeightSel::Exactly(w) => Some(*w),
        }
    }

    fn accepts(&self, w: u32) -> bool {
        match self {
            WeightSel::Any => true,
            WeightSel::AtMost(b) => w <= *b,
            WeightSel::Exactly(b) => w == *b,
        }
    }
}

/// Linear map of fixed degree shift, extended to products by the graded
/// Leibniz rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub shift: i32,
    pub values: Vec<Poly>,
}

impl Derivation {
    pub fn zero(shift: i32, n: usize) -> Self {
        Derivation { shift, values: vec![Poly::zero(); n] }
    }
}

/// Free graded-commutative algebra on an ordered generator list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gca {
    pub gens: Vec<Generator>,
    /// When set, computations split by total weight.
    pub graded: bool,
}

/// All monomials of one degree (and weight selection), canonically ordered.
#[derive(Debug, Clone)]
pub struct DegreeSlice {
    pub degree: u32,
    pub sel: WeightSel,
    pub basis: Vec<Mono>,
    pub index: HashMap<Mono, usize>,
}

impl DegreeSlice {
    pub fn new(degree: u32, sel: WeightSel, mut basis: Vec<Mono>) -> Self {
        basis.sort();
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        DegreeSlice { degree, sel, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn to_poly(&self, v: &SparseVec) -> Poly {
        let mut p = Poly::zero();
        for (i, c) in v {
            p.add_term(self.basis[*i].clone(), c.clone());
        }
        p
    }

    /// Coordinates of `p`; `None` if a term lies outside the slice.
    pub fn coords(&self, p: &Poly) -> Option<SparseVec> {
        let mut v: SparseVec = Vec::with_capacity(p.terms.len());
        for (m, c) in &p.terms {
            v.push((*self.index.get(m)?, c.clone()));
        }
        v.sort_by_key(|e| e.0);
        Some(v)
    }
}

#[derive(Debug, Clone)]
pub struct Cohomology {
    pub degree: u32,
    pub dim: usize,
    pub representatives: Vec<Poly>,
    pub boundaries: Vec<Poly>,
    pub cocycles: Vec<Poly>,
}

impl Gca {
    pub fn new(gens: Vec<Generator>) -> Self {
        Gca { gens, graded: false }
    }

    pub fn graded(gens: Vec<Generator>) -> Self {
        Gca { gens, graded: true }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn push(&mut self, g: Generator) -> usize {
        self.gens.push(g);
        self.gens.len() - 1
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.gens[i].is_odd()
    }

    pub fn mono_degree(&self, m: &Mono) -> u32 {
        m.0.iter().map(|&(g, e)| self.gens[g as usize].degree * e).sum()
    }

    pub fn mono_weight(&self, m: &Mono) -> u32 {
        m.0.iter().map(|&(g, e)| self.gens[g as usize].weight * e).sum()
    }

    /// Weight used for block decompositions (0 when ungraded).
    pub fn block_weight(&self, m: &Mono) -> u32 {
        if self.graded {
            self.mono_weight(m)
        } else {
            0
        }
    }

    pub fn poly_degree(&self, p: &Poly) -> Option<u32> {
        p.terms.keys().next().map(|m| self.mono_degree(m))
    }

    /// Product of monomials: `None` when an odd generator repeats, otherwise
    /// the sign and the sorted result.
    pub fn mul_mono(&self, a: &Mono, b: &Mono) -> Option<(bool, Mono)> {
        let mut out = Vec::with_capacity(a.0.len() + b.0.len());
        let mut neg = false;
        // odd factors of `a` not yet passed
        let mut odd_rest: u32 = a.0.iter().filter(|&&(g, _)| self.is_odd(g as usize)).count() as u32;
        let (mut i, mut j) = (0, 0);
        while i < a.0.len() || j < b.0.len() {
            if j >= b.0.len() || (i < a.0.len() && a.0[i].0 < b.0[j].0) {
                if self.is_odd(a.0[i].0 as usize) {
                    odd_rest -= 1;
                }
                out.push(a.0[i]);
                i += 1;
            } else if i >= a.0.len() || b.0[j].0 < a.0[i].0 {
                if self.is_odd(b.0[j].0 as usize) && odd_rest % 2 == 1 {
                    neg = !neg;
                }
                out.push(b.0[j]);
                j += 1;
            } else {
                let g = a.0[i].0;
                if self.is_odd(g as usize) {
                    return None;
                }
                out.push((g, a.0[i].1 + b.0[j].1));
                i += 1;
                j += 1;
            }
        }
        Some((neg, Mono(out)))
    }

    pub fn mul(&self, p: &Poly, q: &Poly) -> Poly {
        let mut r = Poly::zero();
        for (a, x) in &p.terms {
            for (b, y) in &q.terms {
                if let Some((neg, m)) = self.mul_mono(a, b) {
                    let c = x * y;
                    r.add_term(m, if neg { -c } else { c });
                }
            }
        }
        r
    }

    pub fn mul_all(&self, ps: &[Poly]) -> Poly {
        ps.iter().fold(Poly::one(), |acc, p| self.mul(&acc, p))
    }

    pub fn pow_gen(&self, g: usize, e: u32) -> Poly {
        if e == 0 {
            return Poly::one();
        }
        if e > 1 && self.is_odd(g) {
            return Poly::zero();
        }
        Poly::mono(Mono(vec![(g as u32, e)]), Q::one())
    }

    /// Applies a derivation to a monomial via the graded Leibniz rule.
    pub fn apply_mono(&self, d: &Derivation, m: &Mono) -> Result<Poly> {
        let mut out = Poly::zero();
        let mut prefix_deg: u32 = 0;
        for (k, &(g, e)) in m.0.iter().enumerate() {
            let gi = g as usize;
            let dg = d.values.get(gi).ok_or_else(|| Error::UndefinedGenerator(self.gens[gi].name.clone()))?;
            if !dg.is_zero() {
                let prefix = Mono(m.0[..k].to_vec());
                let mut rest = m.0[k + 1..].to_vec();
                if e > 1 {
                    rest.insert(0, (g, e - 1));
                }
                let suffix = Mono(rest);
                let mut term = self.mul(&Poly::mono(prefix, Q::one()), dg);
                term = self.mul(&term, &Poly::mono(suffix, Q::one()));
                let mut c = Q::from_integer(e.into());
                if (d.shift.rem_euclid(2) == 1) && prefix_deg % 2 == 1 {
                    c = -c;
                }
                out.add_assign_scaled(&c, &term);
            }
            prefix_deg += self.gens[gi].degree * e;
        }
        Ok(out)
    }

    pub fn apply(&self, d: &Derivation, p: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        for (m, c) in &p.terms {
            out.add_assign_scaled(c, &self.apply_mono(d, m)?);
        }
        Ok(out)
    }

    /// Monomials of the given degree, canonically ordered.
    pub fn monomial_basis(&self, degree: u32, sel: WeightSel) -> Result<DegreeSlice> {
        let bound = sel.bound();
        for g in &self.gens {
            if g.degree == 0 && !g.is_odd() && (bound.is_none() || g.weight == 0) {
                return Err(Error::CapMissing(format!(
                    "generator {} has degree 0; a finite length cap is required",
                    g.name
                )));
            }
        }
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.enumerate(0, degree, 0, bound, sel, &mut cur, &mut out);
        Ok(DegreeSlice::new(degree, sel, out))
    }

    #[allow(clippy::too_many_arguments)]
    fn enumerate(
        &self,
        start: usize,
        rem: u32,
        wt: u32,
        bound: Option<u32>,
        sel: WeightSel,
        cur: &mut Vec<(u32, u32)>,
        out: &mut Vec<Mono>,
    ) {
        if rem == 0 && sel.accepts(wt) {
            out.push(Mono(cur.clone()));
        }
        for j in start..self.gens.len() {
            let g = &self.gens[j];
            if g.degree > rem {
                continue;
            }
            if g.degree == 0 && rem == 0 && bound.is_none() {
                continue;
            }
            let max_e = if g.is_odd() { 1 } else { rem.checked_div(g.degree).unwrap_or(u32::MAX) };
            let mut e = 1;
            while e <= max_e {
                let w = wt + g.weight * e;
                if let Some(b) = bound {
                    if w > b {
                        break;
                    }
                }
                cur.push((j as u32, e));
                self.enumerate(j + 1, rem - g.degree * e, w, bound, sel, cur, out);
                cur.pop();
                e += 1;
                if g.weight == 0 && g.degree == 0 {
                    break;
                }
            }
        }
    }

    /// Matrix of `d` from `src` to `tgt`, one sparse column per source
    /// monomial. The flag reports terms that fell outside `tgt`.
    pub fn matrix(&self, d: &Derivation, src: &DegreeSlice, tgt: &DegreeSlice) -> Result<(Vec<SparseVec>, bool)> {
        let mut touched = false;
        let mut cols = Vec::with_capacity(src.dim());
        for m in &src.basis {
            let img = self.apply_mono(d, m)?;
            let mut v: SparseVec = Vec::with_capacity(img.terms.len());
            for (t, c) in img.terms {
                match tgt.index.get(&t) {
                    Some(&i) => v.push((i, c)),
                    None => touched = true,
                }
            }
            v.sort_by_key(|e| e.0);
            cols.push(v);
        }
        Ok((cols, touched))
    }

    /// Cohomology of `(self, d)` in one degree.
    pub fn cohomology(&self, d: &Derivation, k: u32, sel: WeightSel) -> Result<Cohomology> {
        let here = self.monomial_basis(k, sel)?;
        let next = self.monomial_basis(k + 1, sel)?;
        let (dk, _) = self.matrix(d, &here, &next)?;
        let kernel = linalg::kernel(&dk);
        let mut ech = Echelon::new();
        let mut boundaries = Vec::new();
        if k > 0 {
            let prev = self.monomial_basis(k - 1, sel)?;
            let (dp, _) = self.matrix(d, &prev, &here)?;
            for v in dp {
                if ech.insert(&v).is_ok() {
                    boundaries.push(here.to_poly(&v));
                }
            }
        }
        let mut reps = Vec::new();
        for v in &kernel {
            if ech.insert(v).is_ok() {
                reps.push(here.to_poly(v));
            }
        }
        Ok(Cohomology {
            degree: k,
            dim: reps.len(),
            representatives: reps,
            boundaries,
            cocycles: kernel.iter().map(|v| here.to_poly(v)).collect(),
        })
    }

    /// Checks `d(d(g)) = 0` on every generator; returns the first failure.
    pub fn check_square_zero(&self, d: &Derivation) -> Result<()> {
        for (i, v) in d.values.iter().enumerate() {
            if !self.apply(d, v)?.is_zero() {
                return Err(Error::NotSquareZero(self.gens[i].name.clone()));
            }
        }
        Ok(())
    }

    pub fn fmt_mono(&self, m: &Mono) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.0.iter()
            .map(|&(g, e)| {
                let n = &self.gens[g as usize].name;
                if e == 1 {
                    n.clone()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn fmt_poly(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in p.terms.iter().enumerate() {
            let neg = *c < Q::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if a.is_one() && !m.is_one() {
                s.push_str(&self.fmt_mono(m));
            } else if m.is_one() {
                s.push_str(&q_to_string(&a));
            } else {
                s.push_str(&format!("{}*{}", q_to_string(&a), self.fmt_mono(m)));
            }
        }
        s
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.name, self.degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn alg(spec: &[(&str, u32)]) -> Gca {
        Gca::new(spec.iter().map(|(n, d)| Generator::new(*n, *d)).collect())
    }

    #[test]
    fn basis_counts() {
        let a = alg(&[("a", 2), ("b", 2)]);
        assert_eq!(a.monomial_basis(4, WeightSel::Any).unwrap().dim(), 3);
        let b = alg(&[("x", 1), ("y", 1)]);
        assert_eq!(b.monomial_basis(2, WeightSel::Any).unwrap().dim(), 1);
        let c = alg(&[("e", 2), ("f", 3)]);
        let s = c.monomial_basis(6, WeightSel::Any).unwrap();
        assert_eq!(s.basis, vec![Mono(vec![(0, 3)])]);
    }

    #[test]
    fn degree_zero_needs_cap() {
        let a = alg(&[("u", 0), ("v", 1)]);
        assert!(matches!(a.monomial_basis(1, WeightSel::Any), Err(Error::CapMissing(_))));
        assert_eq!(a.monomial_basis(1, WeightSel::AtMost(3)).unwrap().dim(), 3);
    }

    #[test]
    fn koszul_signs() {
        let a = alg(&[("x", 1), ("y", 1), ("a", 2)]);
        let (x, y, z) = (Poly::gen(0), Poly::gen(1), Poly::gen(2));
        assert_eq!(a.mul(&y, &x), a.mul(&x, &y).neg());
        assert!(a.mul(&x, &x).is_zero());
        assert_eq!(a.mul(&z, &z), a.pow_gen(2, 2));
    }

    #[test]
    fn leibniz() {
        let a = alg(&[("e", 2), ("f", 3)]);
        let mut d = Derivation::zero(1, 2);
        d.values[1] = a.pow_gen(0, 2);
        let ef = a.mul(&Poly::gen(0), &Poly::gen(1));
        assert_eq!(a.apply(&d, &ef).unwrap(), a.pow_gen(0, 3));
        let h: Vec<usize> = (0..6).map(|k| a.cohomology(&d, k, WeightSel::Any).unwrap().dim).collect();
        assert_eq!(h, vec![1, 0, 1, 0, 0, 0]);
    }

    #[test]
    fn odd_product_vanishes_under_d() {
        let a = alg(&[("x", 1), ("y", 1), ("v", 1)]);
        let mut d = Derivation::zero(1, 3);
        d.values[2] = a.mul(&Poly::gen(0), &Poly::gen(1));
        let vx = a.mul(&Poly::gen(2), &Poly::gen(0));
        assert!(a.apply(&d, &vx).unwrap().is_zero());
        assert_eq!(a.apply(&d, &Poly::one()).unwrap(), Poly::zero());
        let _ = q(0);
    }
}
