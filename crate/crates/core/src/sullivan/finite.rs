//! Finite-dimensional cdgas used as targets of model constructions.
//!
//! A target is split into blocks indexed by `(degree, weight)`. Ungraded
//! targets put everything in weight 0.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gca::{DegreeSlice, Mono, Poly, WeightSel};
use crate::linalg::{self, axpy, Solver, SparseVec};
use crate::rational::Q;

use super::SullivanAlgebra;

/// Homogeneous element of a finite cdga.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elem {
    pub deg: u32,
    pub wt: u32,
    pub v: SparseVec,
}

impl Elem {
    pub fn zero(deg: u32, wt: u32) -> Self {
        Elem { deg, wt, v: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Elem {
        if c.is_zero() {
            return Elem::zero(self.deg, self.wt);
        }
        Elem { deg: self.deg, wt: self.wt, v: self.v.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    pub fn axpy(&self, c: &Q, other: &Elem) -> Elem {
        Elem { deg: self.deg, wt: self.wt, v: axpy(&self.v, c, &other.v) }
    }
}

pub trait FiniteCdga {
    /// Whether blocks are split by weight.
    fn graded(&self) -> bool;
    /// Largest degree with nonzero blocks.
    fn top_degree(&self) -> u32;
    /// Weights whose block in `deg` is nonzero, ascending.
    fn weights(&self, deg: u32) -> Vec<u32>;
    fn dim(&self, deg: u32, wt: u32) -> usize;
    /// Product of basis elements; result lives in the sum block.
    fn mul_basis(&self, a: (u32, u32, usize), b: (u32, u32, usize)) -> SparseVec;
    /// Differential of a basis element; result lives in `(deg + 1, wt)`.
    fn diff_basis(&self, deg: u32, wt: u32, i: usize) -> SparseVec;
    /// Index of the unit in block `(0, 0)`.
    fn unit(&self) -> usize;
    fn label(&self, deg: u32, wt: u32, i: usize) -> String;
}

pub fn unit_elem(a: &dyn FiniteCdga) -> Elem {
    Elem { deg: 0, wt: 0, v: vec![(a.unit(), Q::one())] }
}

pub fn mul_elem(a: &dyn FiniteCdga, x: &Elem, y: &Elem) -> Elem {
    let (deg, wt) = (x.deg + y.deg, x.wt + y.wt);
    if x.is_zero() || y.is_zero() || deg > a.top_degree() {
        return Elem::zero(deg, wt);
    }
    let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
    for (i, c) in &x.v {
        for (j, e) in &y.v {
            for (k, f) in a.mul_basis((x.deg, x.wt, *i), (y.deg, y.wt, *j)) {
                *acc.entry(k).or_insert_with(Q::zero) += c * e * f;
            }
        }
    }
    Elem { deg, wt, v: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
}

pub fn diff_elem(a: &dyn FiniteCdga, x: &Elem) -> Elem {
    let mut out: SparseVec = Vec::new();
    for (i, c) in &x.v {
        out = axpy(&out, c, &a.diff_basis(x.deg, x.wt, *i));
    }
    Elem { deg: x.deg + 1, wt: x.wt, v: out }
}

/// Per-block linear algebra of a finite cdga, computed on demand.
pub struct BlockData {
    /// `d` of each basis element of the block.
    pub d_cols: Vec<SparseVec>,
    /// Solver for `d y = x` with `y` in this block.
    pub solver: Solver,
    pub cocycles: Vec<SparseVec>,
}

pub struct CdgaCache<'a> {
    pub a: &'a dyn FiniteCdga,
    blocks: HashMap<(u32, u32), BlockData>,
}

impl<'a> CdgaCache<'a> {
    pub fn new(a: &'a dyn FiniteCdga) -> Self {
        CdgaCache { a, blocks: HashMap::new() }
    }

    pub fn block(&mut self, deg: u32, wt: u32) -> &BlockData {
        let a = self.a;
        self.blocks.entry((deg, wt)).or_insert_with(|| {
            let n = a.dim(deg, wt);
            let d_cols: Vec<SparseVec> = (0..n).map(|i| a.diff_basis(deg, wt, i)).collect();
            let solver = Solver::new(&d_cols);
            let cocycles = linalg::kernel(&d_cols);
            BlockData { d_cols, solver, cocycles }
        })
    }

    /// `y` with `d y = x`, if `x` is exact.
    pub fn preimage(&mut self, x: &Elem) -> Option<Elem> {
        if x.deg == 0 {
            return if x.is_zero() { Some(Elem::zero(0, x.wt)) } else { None };
        }
        if x.is_zero() {
            return Some(Elem::zero(x.deg - 1, x.wt));
        }
        let b = self.block(x.deg - 1, x.wt);
        let coeffs = b.solver.solve(&x.v)?;
        Some(Elem { deg: x.deg - 1, wt: x.wt, v: coeffs })
    }

    /// Boundary vectors spanning `d(block(deg - 1, wt))`.
    pub fn boundaries(&mut self, deg: u32, wt: u32) -> Vec<SparseVec> {
        if deg == 0 {
            return Vec::new();
        }
        self.block(deg - 1, wt).d_cols.clone()
    }

    pub fn h_dim(&mut self, deg: u32, wt: u32) -> usize {
        let z = self.block(deg, wt).cocycles.len();
        let b = if deg == 0 { 0 } else { self.block(deg - 1, wt).solver.rank() };
        z - b
    }
}

/// Finite cdga given by explicit structure constants.
#[derive(Debug, Clone, PartialEq)]
pub struct CdgaPresentation {
    pub names: Vec<String>,
    pub degrees: Vec<u32>,
    pub weights: Option<Vec<u32>>,
    /// Products of basis pairs, global indices.
    pub products: HashMap<(usize, usize), SparseVec>,
    pub differential: Vec<SparseVec>,
    layout: Layout,
}

#[derive(Debug, Clone, PartialEq, Default)]
struct Layout {
    /// global index -> (deg, wt, local)
    local: Vec<(u32, u32, usize)>,
    /// (deg, wt) -> global indices
    blocks: BTreeMap<(u32, u32), Vec<usize>>,
}

impl CdgaPresentation {
    /// Starts a presentation whose basis element 0 is the unit `1`.
    pub fn new() -> Self {
        let mut p = CdgaPresentation {
            names: Vec::new(),
            degrees: Vec::new(),
            weights: None,
            products: HashMap::new(),
            differential: Vec::new(),
            layout: Layout::default(),
        };
        p.add_basis("1", 0);
        p
    }

    pub fn add_basis(&mut self, name: &str, degree: u32) -> usize {
        self.names.push(name.to_string());
        self.degrees.push(degree);
        self.differential.push(Vec::new());
        if let Some(w) = self.weights.as_mut() {
            w.push(0);
        }
        self.relayout();
        self.names.len() - 1
    }

    pub fn set_weights(&mut self, w: Vec<u32>) {
        assert_eq!(w.len(), self.names.len());
        self.weights = Some(w);
        self.relayout();
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Sets `e_i * e_j` and the graded-commutative mirror `e_j * e_i`.
    pub fn set_product(&mut self, i: usize, j: usize, v: SparseVec) {
        let sign = (self.degrees[i] * self.degrees[j]) % 2 == 1;
        let mirrored: SparseVec = if sign { v.iter().map(|(k, c)| (*k, -c.clone())).collect() } else { v.clone() };
        self.products.insert((i, j), v);
        self.products.insert((j, i), mirrored);
    }

    pub fn set_diff(&mut self, i: usize, v: SparseVec) {
        self.differential[i] = v;
    }

    pub fn weight_of(&self, i: usize) -> u32 {
        self.weights.as_ref().map(|w| w[i]).unwrap_or(0)
    }

    fn relayout(&mut self) {
        let mut l = Layout::default();
        for i in 0..self.names.len() {
            let key = (self.degrees[i], self.weight_of(i));
            let b = l.blocks.entry(key).or_default();
            l.local.push((key.0, key.1, b.len()));
            b.push(i);
        }
        self.layout = l;
    }

    fn to_local(&self, v: &SparseVec) -> SparseVec {
        let mut out: SparseVec = v.iter().map(|(g, c)| (self.layout.local[*g].2, c.clone())).collect();
        out.sort_by_key(|e| e.0);
        out
    }

    pub fn global(&self, deg: u32, wt: u32, local: usize) -> usize {
        self.layout.blocks[&(deg, wt)][local]
    }

    /// Element of `A` from a global sparse vector (must be homogeneous).
    pub fn elem(&self, v: &SparseVec) -> Option<Elem> {
        let (g, _) = v.first()?;
        let (deg, wt, _) = self.layout.local[*g];
        Some(Elem { deg, wt, v: self.to_local(v) })
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        let (deg, wt, l) = self.layout.local[i];
        Elem { deg, wt, v: vec![(l, Q::one())] }
    }

    pub fn global_vec(&self, e: &Elem) -> SparseVec {
        let mut v: SparseVec = e.v.iter().map(|(l, c)| (self.global(e.deg, e.wt, *l), c.clone())).collect();
        v.sort_by_key(|x| x.0);
        v
    }

    pub fn product_global(&self, i: usize, j: usize) -> SparseVec {
        if i == 0 {
            return vec![(j, Q::one())];
        }
        if j == 0 {
            return vec![(i, Q::one())];
        }
        self.products.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Checks the cdga axioms on the basis.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        if n == 0 || self.degrees[0] != 0 || self.names[0] != "1" {
            return Err(Error::Input("basis element 0 must be the unit `1` in degree 0".into()));
        }
        let deg_of = |v: &SparseVec| -> Option<u32> { v.first().map(|(g, _)| self.degrees[*g]) };
        for (&(i, j), v) in &self.products {
            for (k, _) in v {
                if self.degrees[*k] != self.degrees[i] + self.degrees[j] {
                    return Err(Error::DegreeMismatch(format!(
                        "{}*{} has a term {} of wrong degree",
                        self.names[i], self.names[j], self.names[*k]
                    )));
                }
            }
        }
        for i in 0..n {
            for (k, _) in &self.differential[i] {
                if self.degrees[*k] != self.degrees[i] + 1 {
                    return Err(Error::DegreeMismatch(format!(
                        "d{} has a term {} of wrong degree",
                        self.names[i], self.names[*k]
                    )));
                }
            }
            let dd = self.apply_d(&self.differential[i]);
            if !dd.is_empty() {
                return Err(Error::NotSquareZero(self.names[i].clone()));
            }
        }
        // associativity and Leibniz on basis triples / pairs
        for i in 1..n {
            for j in 1..n {
                let ij = self.product_global(i, j);
                for k in 1..n {
                    let left = self.mul_vec(&ij, &vec![(k, Q::one())]);
                    let right = self.mul_vec(&vec![(i, Q::one())], &self.product_global(j, k));
                    if left != right {
                        return Err(Error::Input(format!(
                            "product not associative on ({}, {}, {})",
                            self.names[i], self.names[j], self.names[k]
                        )));
                    }
                }
                let lhs = self.apply_d(&ij);
                let mut rhs = self.mul_vec(&self.differential[i], &vec![(j, Q::one())]);
                let second = self.mul_vec(&vec![(i, Q::one())], &self.differential[j]);
                let s = if self.degrees[i] % 2 == 1 { -Q::one() } else { Q::one() };
                rhs = axpy(&rhs, &s, &second);
                if lhs != rhs {
                    return Err(Error::Input(format!("d is not a derivation on {}*{}", self.names[i], self.names[j])));
                }
            }
        }
        let _ = deg_of;
        if !self.differential[0].is_empty() {
            return Err(Error::Input("d(1) must vanish".into()));
        }
        let h0 = {
            let mut c = CdgaCache::new(self);
            c.h_dim(0, 0)
        };
        if h0 != 1 {
            return Err(Error::Hypothesis(format!("H^0 has dimension {h0}, expected 1")));
        }
        Ok(())
    }

    pub fn apply_d(&self, v: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (i, c) in v {
            out = axpy(&out, c, &self.differential[*i]);
        }
        out
    }

    pub fn mul_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                out = axpy(&out, &(a * b), &self.product_global(*i, *j));
            }
        }
        out
    }

    /// `Q ⊕ classes` with all products and differentials zero.
    pub fn trivial(classes: &[(&str, u32)]) -> Self {
        let mut p = CdgaPresentation::new();
        for (n, d) in classes {
            p.add_basis(n, *d);
        }
        p
    }

    /// Cohomology of a sphere.
    pub fn sphere(n: u32) -> Self {
        CdgaPresentation::trivial(&[("w", n)])
    }

    /// Truncated polynomial algebra `Q[x]/x^{h+1}` with `|x| = deg`.
    pub fn truncated_poly(deg: u32, height: u32) -> Self {
        let mut p = CdgaPresentation::new();
        for k in 1..=height {
            p.add_basis(&format!("x{k}"), deg * k);
        }
        for i in 1..=height {
            for j in i..=height {
                if i + j <= height {
                    let v = vec![((i + j) as usize, Q::one())];
                    p.set_product(i as usize, j as usize, v);
                }
            }
        }
        p
    }

    /// Cohomology of a product of two spheres.
    pub fn sphere_product(p_dim: u32, q_dim: u32) -> Self {
        let mut p = CdgaPresentation::new();
        let a = p.add_basis("a", p_dim);
        let b = p.add_basis("b", q_dim);
        let ab = p.add_basis("ab", p_dim + q_dim);
        p.set_product(a, b, vec![(ab, Q::one())]);
        p
    }

    /// Product cohomology of two cdgas with zero differential.
    pub fn tensor(x: &CdgaPresentation, y: &CdgaPresentation) -> Self {
        let mut p = CdgaPresentation::new();
        let mut idx = HashMap::new();
        idx.insert((0usize, 0usize), 0usize);
        for i in 0..x.len() {
            for j in 0..y.len() {
                if i == 0 && j == 0 {
                    continue;
                }
                let name = match (i, j) {
                    (_, 0) => x.names[i].clone(),
                    (0, _) => y.names[j].clone(),
                    _ => format!("{}{}", x.names[i], y.names[j]),
                };
                idx.insert((i, j), p.add_basis(&name, x.degrees[i] + y.degrees[j]));
            }
        }
        for (&(i1, j1), &g1) in &idx {
            for (&(i2, j2), &g2) in &idx {
                if g1 == 0 || g2 == 0 {
                    continue;
                }
                // (x1 y1)(x2 y2) = (-1)^{|y1||x2|} x1x2 y1y2
                let sign = (y.degrees[j1] * x.degrees[i2]) % 2 == 1;
                let xs = x.product_global(i1, i2);
                let ys = y.product_global(j1, j2);
                let mut v: SparseVec = Vec::new();
                for (a, c) in &xs {
                    for (b, e) in &ys {
                        let c = c * e;
                        v.push((idx[&(*a, *b)], if sign { -c } else { c }));
                    }
                }
                v.sort_by_key(|e| e.0);
                if !v.is_empty() {
                    p.products.insert((g1, g2), v);
                }
            }
        }
        p
    }

    /// Fibre product `Q ⊕ A^+ ⊕ B^+` of two cdgas (cohomology of the wedge).
    pub fn wedge(x: &CdgaPresentation, y: &CdgaPresentation) -> Self {
        let mut p = CdgaPresentation::new();
        let xs: Vec<usize> = (1..x.len()).map(|i| p.add_basis(&x.names[i], x.degrees[i])).collect();
        let ys: Vec<usize> = (1..y.len()).map(|j| p.add_basis(&y.names[j], y.degrees[j])).collect();
        let remap =
            |v: &SparseVec, m: &Vec<usize>| -> SparseVec { v.iter().map(|(k, c)| (m[*k - 1], c.clone())).collect() };
        for (&(i, j), v) in &x.products {
            if i > 0 && j > 0 {
                p.products.insert((xs[i - 1], xs[j - 1]), remap(v, &xs));
            }
        }
        for (&(i, j), v) in &y.products {
            if i > 0 && j > 0 {
                p.products.insert((ys[i - 1], ys[j - 1]), remap(v, &ys));
            }
        }
        for i in 1..x.len() {
            p.differential[xs[i - 1]] = remap(&x.differential[i], &xs);
        }
        for j in 1..y.len() {
            p.differential[ys[j - 1]] = remap(&y.differential[j], &ys);
        }
        p
    }

    /// Betti numbers up to the top degree.
    pub fn betti(&self) -> Vec<usize> {
        let top = self.top_degree();
        let mut c = CdgaCache::new(self);
        (0..=top).map(|k| self.weights(k).iter().map(|&w| c.h_dim(k, w)).sum()).collect()
    }
}

impl Default for CdgaPresentation {
    fn default() -> Self {
        Self::new()
    }
}

impl FiniteCdga for CdgaPresentation {
    fn graded(&self) -> bool {
        self.weights.is_some()
    }

    fn top_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    fn weights(&self, deg: u32) -> Vec<u32> {
        self.layout.blocks.keys().filter(|(d, _)| *d == deg).map(|(_, w)| *w).collect()
    }

    fn dim(&self, deg: u32, wt: u32) -> usize {
        self.layout.blocks.get(&(deg, wt)).map(|b| b.len()).unwrap_or(0)
    }

    fn mul_basis(&self, a: (u32, u32, usize), b: (u32, u32, usize)) -> SparseVec {
        let i = self.global(a.0, a.1, a.2);
        let j = self.global(b.0, b.1, b.2);
        self.to_local(&self.product_global(i, j))
    }

    fn diff_basis(&self, deg: u32, wt: u32, i: usize) -> SparseVec {
        self.to_local(&self.differential[self.global(deg, wt, i)])
    }

    fn unit(&self) -> usize {
        self.layout.local[0].2
    }

    fn label(&self, deg: u32, wt: u32, i: usize) -> String {
        self.names[self.global(deg, wt, i)].clone()
    }
}

/// A Sullivan algebra truncated above a degree, optionally extended to the
/// cone `ΛW ⊕ Q a` with `D w = d w + ε(w) a`.
pub struct Truncated<'a> {
    pub alg: &'a SullivanAlgebra,
    pub top: u32,
    pub sel: WeightSel,
    slices: BTreeMap<(u32, u32), DegreeSlice>,
    cone: Option<ConePart>,
}

struct ConePart {
    deg: u32,
    wt: u32,
    eps: Vec<Q>,
}

impl<'a> Truncated<'a> {
    pub fn new(alg: &'a SullivanAlgebra, top: u32, sel: WeightSel) -> Result<Self> {
        let mut slices = BTreeMap::new();
        for k in 0..=top {
            let s = alg.gca.monomial_basis(k, sel)?;
            let mut by_w: BTreeMap<u32, Vec<Mono>> = BTreeMap::new();
            for m in s.basis {
                by_w.entry(alg.gca.block_weight(&m)).or_default().push(m);
            }
            for (w, ms) in by_w {
                slices.insert((k, w), DegreeSlice::new(k, sel, ms));
            }
        }
        Ok(Truncated { alg, top, sel, slices, cone: None })
    }

    /// Adds the class `a` of degree `n + 1` with `D w = d w + eps(w) a`.
    pub fn with_cone(mut self, n: u32, a_weight: u32, eps: Vec<Q>) -> Self {
        let wt = if self.alg.gca.graded { a_weight } else { 0 };
        self.cone = Some(ConePart { deg: n + 1, wt, eps });
        self
    }

    pub fn slice(&self, deg: u32, wt: u32) -> Option<&DegreeSlice> {
        self.slices.get(&(deg, wt))
    }

    /// Index of `a` if it sits in this block.
    pub fn a_index(&self, deg: u32, wt: u32) -> Option<usize> {
        let c = self.cone.as_ref()?;
        if c.deg == deg && c.wt == wt && deg <= self.top {
            Some(self.slice(deg, wt).map(|s| s.dim()).unwrap_or(0))
        } else {
            None
        }
    }

    pub fn poly_to_elem(&self, p: &Poly, deg: u32, wt: u32) -> Option<Elem> {
        if p.is_zero() {
            return Some(Elem::zero(deg, wt));
        }
        let s = self.slice(deg, wt)?;
        Some(Elem { deg, wt, v: s.coords(p)? })
    }

    /// Splits an element into its `ΛW` part and its `a` coefficient.
    pub fn elem_to_poly(&self, e: &Elem) -> (Poly, Q) {
        let mut p = Poly::zero();
        let mut a = Q::zero();
        let ai = self.a_index(e.deg, e.wt);
        for (i, c) in &e.v {
            if Some(*i) == ai {
                a = c.clone();
            } else if let Some(s) = self.slice(e.deg, e.wt) {
                p.add_term(s.basis[*i].clone(), c.clone());
            }
        }
        (p, a)
    }

    fn poly_coords(&self, p: &Poly, deg: u32, wt: u32) -> SparseVec {
        match self.slice(deg, wt) {
            None => Vec::new(),
            Some(s) => {
                let mut v: SparseVec =
                    p.terms.iter().filter_map(|(m, c)| s.index.get(m).map(|i| (*i, c.clone()))).collect();
                v.sort_by_key(|e| e.0);
                v
            }
        }
    }
}

impl FiniteCdga for Truncated<'_> {
    fn graded(&self) -> bool {
        self.alg.gca.graded
    }

    fn top_degree(&self) -> u32 {
        self.top
    }

    fn weights(&self, deg: u32) -> Vec<u32> {
        let mut w: Vec<u32> = self.slices.keys().filter(|(d, _)| *d == deg).map(|(_, w)| *w).collect();
        if let Some(c) = &self.cone {
            if c.deg == deg && deg <= self.top && !w.contains(&c.wt) {
                w.push(c.wt);
                w.sort_unstable();
            }
        }
        w
    }

    fn dim(&self, deg: u32, wt: u32) -> usize {
        let base = self.slice(deg, wt).map(|s| s.dim()).unwrap_or(0);
        base + usize::from(self.a_index(deg, wt).is_some())
    }

    fn mul_basis(&self, a: (u32, u32, usize), b: (u32, u32, usize)) -> SparseVec {
        let (deg, wt) = (a.0 + b.0, a.1 + b.1);
        if deg > self.top {
            return Vec::new();
        }
        let a_is = self.a_index(a.0, a.1) == Some(a.2);
        let b_is = self.a_index(b.0, b.1) == Some(b.2);
        if a_is || b_is {
            let other = if a_is { b } else { a };
            let other_is_unit =
                other.0 == 0 && other.1 == 0 && self.slice(0, 0).map(|s| s.basis[other.2].is_one()).unwrap_or(false);
            if a_is && b_is || !other_is_unit {
                return Vec::new();
            }
            return vec![(self.a_index(deg, wt).expect("a block"), Q::one())];
        }
        let ma = &self.slices[&(a.0, a.1)].basis[a.2];
        let mb = &self.slices[&(b.0, b.1)].basis[b.2];
        match self.alg.gca.mul_mono(ma, mb) {
            None => Vec::new(),
            Some((neg, m)) => match self.slice(deg, wt).and_then(|s| s.index.get(&m)) {
                None => Vec::new(),
                Some(&i) => vec![(i, if neg { -Q::one() } else { Q::one() })],
            },
        }
    }

    fn diff_basis(&self, deg: u32, wt: u32, i: usize) -> SparseVec {
        if self.a_index(deg, wt) == Some(i) || deg >= self.top {
            return Vec::new();
        }
        let m = &self.slices[&(deg, wt)].basis[i];
        let img = self.alg.gca.apply_mono(&self.alg.d, m).expect("differential defined on all generators");
        let mut v = self.poly_coords(&img, deg + 1, wt);
        if let (Some(c), Some(g)) = (&self.cone, m.as_gen()) {
            if let Some(e) = c.eps.get(g) {
                if !e.is_zero() {
                    if let Some(ai) = self.a_index(deg + 1, wt) {
                        v.push((ai, e.clone()));
                        v.sort_by_key(|x| x.0);
                    }
                }
            }
        }
        v
    }

    fn unit(&self) -> usize {
        self.slice(0, 0).and_then(|s| s.index.get(&Mono::one()).copied()).unwrap_or(0)
    }

    fn label(&self, deg: u32, wt: u32, i: usize) -> String {
        if self.a_index(deg, wt) == Some(i) {
            return "a".into();
        }
        self.alg.gca.fmt_mono(&self.slices[&(deg, wt)].basis[i])
    }
}
