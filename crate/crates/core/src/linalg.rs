//! Sparse exact linear algebra.
//!
//! Rows are kept as primitive integer vectors and eliminated fraction-free
//! (`y·cur − x·row`, then divided by the content), so no rational
//! normalisation happens inside the elimination loop. Rational answers are
//! produced only when a solution or kernel vector is read back.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Q;

/// Sparse rational vector, sorted by index, no explicit zeros.
pub type SparseVec = Vec<(usize, Q)>;

type IntVec = Vec<(usize, BigInt)>;

/// Adds `c * x` into `acc` (both sorted).
pub fn axpy(acc: &SparseVec, c: &Q, x: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(acc.len() + x.len());
    let (mut i, mut j) = (0, 0);
    while i < acc.len() || j < x.len() {
        if j >= x.len() || (i < acc.len() && acc[i].0 < x[j].0) {
            out.push(acc[i].clone());
            i += 1;
        } else if i >= acc.len() || x[j].0 < acc[i].0 {
            out.push((x[j].0, c * &x[j].1));
            j += 1;
        } else {
            let v = &acc[i].1 + c * &x[j].1;
            if !v.is_zero() {
                out.push((acc[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn from_dense(v: &[Q]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn to_dense(v: &SparseVec, n: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Clears denominators: returns `(s, w)` with `w = s·v` integral and primitive.
fn integralize(v: &SparseVec) -> (BigInt, IntVec) {
    let mut l = BigInt::one();
    for (_, x) in v {
        l = l.lcm(x.denom());
    }
    let w: IntVec = v.iter().map(|(i, x)| (*i, (x * Q::from_integer(l.clone())).to_integer())).collect();
    (l, w)
}

fn int_combine(y: &BigInt, a: &IntVec, x: &BigInt, b: &IntVec) -> IntVec {
    // y·a − x·b
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push((a[i].0, y * &a[i].1));
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(x * &b[j].1)));
            j += 1;
        } else {
            let v = y * &a[i].1 - x * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn content(v: &IntVec, g: &mut BigInt) {
    for (_, x) in v {
        if g.is_one() {
            return;
        }
        *g = g.gcd(x);
    }
}

fn divide(v: &mut IntVec, g: &BigInt) {
    for (_, x) in v.iter_mut() {
        *x = &*x / g;
    }
}

#[derive(Debug, Clone)]
struct Row {
    entries: IntVec,
    /// `entries = Σ tag_j · input_j`.
    tag: IntVec,
}

/// Outcome of reducing a vector against an [`Echelon`] basis.
#[derive(Debug, Clone)]
pub enum Reduced {
    /// The vector lies in the span: `v = Σ c_j · input_j`.
    InSpan(SparseVec),
    /// Not in the span; the leading column of the residual is returned.
    Independent(usize),
}

/// Incremental row-echelon basis with provenance tracking.
///
/// Every inserted vector gets an input index (in insertion order). Pivots
/// are the smallest column index of the reduced residual, so the first
/// independent vectors in canonical column order win.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<Row>,
    pivot_row: HashMap<usize, usize>,
    inputs: usize,
}

struct Work {
    cur: IntVec,
    scale: BigInt,
    tag: IntVec,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.pivot_row.keys().copied().collect();
        p.sort_unstable();
        p
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    fn run(&self, v: &SparseVec) -> Work {
        let (scale, cur) = integralize(v);
        let mut w = Work { cur, scale, tag: Vec::new() };
        while let Some((lead, x)) = w.cur.first().cloned() {
            let Some(&r) = self.pivot_row.get(&lead) else { break };
            let row = &self.rows[r];
            let y = row.entries[0].1.clone();
            let g = y.gcd(&x);
            let (y, x) = (&y / &g, &x / &g);
            w.cur = int_combine(&y, &w.cur, &x, &row.entries);
            // tag tracks Σ t_j input_j with cur = scale·v − Σ t_j input_j
            w.tag = int_combine(&y, &w.tag, &-x.clone(), &row.tag);
            w.scale = &w.scale * &y;
            let mut g = w.scale.abs();
            content(&w.cur, &mut g);
            content(&w.tag, &mut g);
            if !g.is_one() && !g.is_zero() {
                divide(&mut w.cur, &g);
                divide(&mut w.tag, &g);
                w.scale = &w.scale / &g;
            }
        }
        w
    }

    /// Reduces `v` without modifying the basis.
    pub fn reduce(&self, v: &SparseVec) -> Reduced {
        let w = self.run(v);
        match w.cur.first() {
            None => {
                let s = Q::from_integer(w.scale);
                Reduced::InSpan(w.tag.into_iter().map(|(i, t)| (i, Q::from_integer(t) / &s)).collect())
            }
            Some((c, _)) => Reduced::Independent(*c),
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        matches!(self.reduce(v), Reduced::InSpan(_))
    }

    /// Inserts `v` as the next input. Returns the pivot column when
    /// independent, or the dependency `v = Σ c_j input_j` otherwise.
    pub fn insert(&mut self, v: &SparseVec) -> Result<usize, SparseVec> {
        let idx = self.inputs;
        self.inputs += 1;
        let w = self.run(v);
        match w.cur.first() {
            None => {
                let s = Q::from_integer(w.scale);
                Err(w.tag.into_iter().map(|(i, t)| (i, Q::from_integer(t) / &s)).collect())
            }
            Some(&(col, _)) => {
                // cur = scale·v − tag  =>  row tag = scale·e_idx − tag
                let mut tag: IntVec = w.tag.into_iter().map(|(i, t)| (i, -t)).collect();
                tag.push((idx, w.scale));
                tag.sort_by_key(|e| e.0);
                let mut entries = w.cur;
                if entries[0].1.is_negative() {
                    for e in entries.iter_mut() {
                        e.1 = -e.1.clone();
                    }
                    for e in tag.iter_mut() {
                        e.1 = -e.1.clone();
                    }
                }
                self.pivot_row.insert(col, self.rows.len());
                self.rows.push(Row { entries, tag });
                Ok(col)
            }
        }
    }

    /// Residual of `v` modulo the span, fully reduced against every pivot.
    pub fn residual(&self, v: &SparseVec) -> SparseVec {
        let (_, mut cur) = integralize(v);
        let mut scale = Q::from_integer(integralize(v).0);
        let mut out: SparseVec = Vec::new();
        while let Some((lead, x)) = cur.first().cloned() {
            match self.pivot_row.get(&lead) {
                None => {
                    out.push((lead, Q::from_integer(x)));
                    cur.remove(0);
                }
                Some(&r) => {
                    let row = &self.rows[r];
                    let y = row.entries[0].1.clone();
                    let g = y.gcd(&x);
                    let (y, x) = (&y / &g, &x / &g);
                    cur = int_combine(&y, &cur, &x, &row.entries);
                    for e in out.iter_mut() {
                        e.1 = &e.1 * Q::from_integer(y.clone());
                    }
                    scale *= Q::from_integer(y);
                }
            }
        }
        out.into_iter().map(|(i, x)| (i, x / &scale)).collect()
    }
}

/// Rank of a family of vectors.
pub fn rank(vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        let _ = e.insert(v);
    }
    e.rank()
}

/// Kernel of the linear map sending basis vector `j` to `images[j]`.
/// One kernel vector per dependent column, in column order.
pub fn kernel(images: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    let mut out = Vec::new();
    for (j, v) in images.iter().enumerate() {
        if let Err(dep) = e.insert(v) {
            let mut k: SparseVec = dep.into_iter().map(|(i, c)| (i, -c)).collect();
            k.push((j, Q::one()));
            k.sort_by_key(|e| e.0);
            out.push(k);
        }
    }
    out
}

/// Solves `Σ x_j images[j] = target`, free variables set to zero.
pub fn solve(images: &[SparseVec], target: &SparseVec) -> Option<SparseVec> {
    let mut e = Echelon::new();
    for v in images {
        let _ = e.insert(v);
    }
    match e.reduce(target) {
        Reduced::InSpan(x) => Some(x),
        Reduced::Independent(_) => None,
    }
}

/// Reusable solver for a fixed family of columns.
#[derive(Debug, Clone)]
pub struct Solver {
    ech: Echelon,
}

impl Solver {
    pub fn new(images: &[SparseVec]) -> Self {
        let mut ech = Echelon::new();
        for v in images {
            let _ = ech.insert(v);
        }
        Solver { ech }
    }

    pub fn rank(&self) -> usize {
        self.ech.rank()
    }

    pub fn solve(&self, target: &SparseVec) -> Option<SparseVec> {
        match self.ech.reduce(target) {
            Reduced::InSpan(x) => Some(x),
            Reduced::Independent(_) => None,
        }
    }
}

/// Indices of `candidates` that extend `base` to a basis of the joint span,
/// chosen greedily in order.
pub fn complement(base: &[SparseVec], candidates: &[SparseVec]) -> Vec<usize> {
    let mut e = Echelon::new();
    for v in base {
        let _ = e.insert(v);
    }
    candidates.iter().enumerate().filter_map(|(i, v)| e.insert(v).ok().map(|_| i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn sv(v: &[i64]) -> SparseVec {
        from_dense(&v.iter().map(|x| q(*x)).collect::<Vec<_>>())
    }

    #[test]
    fn rank_and_kernel() {
        let cols = vec![sv(&[1, 2, 3]), sv(&[2, 4, 6]), sv(&[0, 1, 1]), sv(&[1, 3, 4])];
        assert_eq!(rank(&cols), 2);
        let k = kernel(&cols);
        assert_eq!(k.len(), 2);
        for kv in &k {
            let mut acc = SparseVec::new();
            for (j, c) in kv {
                acc = axpy(&acc, c, &cols[*j]);
            }
            assert!(acc.is_empty());
        }
    }

    #[test]
    fn solve_rational() {
        let cols = vec![sv(&[2, 0]), sv(&[0, 3])];
        let x = solve(&cols, &sv(&[1, 1])).unwrap();
        assert_eq!(x, vec![(0, qf(1, 2)), (1, qf(1, 3))]);
        assert!(solve(&[sv(&[1, 1])], &sv(&[1, 0])).is_none());
    }

    #[test]
    fn residual_is_reduced() {
        let mut e = Echelon::new();
        e.insert(&sv(&[1, 1, 0])).unwrap();
        let r = e.residual(&sv(&[2, 0, 5]));
        assert_eq!(r, vec![(1, q(-2)), (2, q(5))]);
    }

    #[test]
    fn complement_prefers_order() {
        let base = vec![sv(&[1, 0, 0])];
        let cand = vec![sv(&[2, 0, 0]), sv(&[0, 1, 0]), sv(&[1, 1, 0]), sv(&[0, 0, 1])];
        assert_eq!(complement(&base, &cand), vec![1, 3]);
    }
}
