//! Cohomology tables of fibres and the checks run on them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gca::{Gca, Poly, WeightSel};
use crate::lie::stage_filtration;
use crate::linalg::{self, Echelon};
use crate::sullivan::SullivanAlgebra;

/// Weights of degree-`k` monomials (0 when ungraded).
pub fn block_weights(gca: &Gca, k: u32, sel: WeightSel) -> Result<Vec<u32>> {
    let mut ws: Vec<u32> = gca.monomial_basis(k, sel)?.basis.iter().map(|m| gca.block_weight(m)).collect();
    ws.sort_unstable();
    ws.dedup();
    Ok(ws)
}

fn block_sel(gca: &Gca, w: u32, outer: WeightSel) -> WeightSel {
    if gca.graded {
        WeightSel::Exactly(w)
    } else {
        outer
    }
}

/// `dim (ΛU)` per `(degree, weight)` through `max_degree`.
pub fn monomial_dims(gca: &Gca, max_degree: u32, sel: WeightSel) -> Result<BTreeMap<(u32, u32), usize>> {
    let mut out = BTreeMap::new();
    for k in 0..=max_degree {
        for m in gca.monomial_basis(k, sel)?.basis {
            *out.entry((k, gca.block_weight(&m))).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// Cohomology of one block with representatives.
#[derive(Debug, Clone)]
pub struct Block {
    pub dim: usize,
    pub reps: Vec<Poly>,
}

/// `H^k` per `(degree, weight)` for `1 ≤ k ≤ max_degree`.
pub fn cohomology_table(alg: &SullivanAlgebra, max_degree: u32, sel: WeightSel) -> Result<BTreeMap<(u32, u32), Block>> {
    let mut out = BTreeMap::new();
    for k in 1..=max_degree {
        for w in block_weights(&alg.gca, k, sel)? {
            let h = alg.gca.cohomology(&alg.d, k, block_sel(&alg.gca, w, sel))?;
            out.insert((k, w), Block { dim: h.dim, reps: h.representatives });
        }
    }
    Ok(out)
}

/// Whether a closed element is exact.
pub fn is_coboundary(alg: &SullivanAlgebra, p: &Poly, k: u32, w: u32, sel: WeightSel) -> Result<bool> {
    if p.is_zero() {
        return Ok(true);
    }
    if k == 0 {
        return Ok(false);
    }
    let s = block_sel(&alg.gca, w, sel);
    let here = alg.gca.monomial_basis(k, s)?;
    let prev = alg.gca.monomial_basis(k - 1, s)?;
    let (cols, _) = alg.gca.matrix(&alg.d, &prev, &here)?;
    match here.coords(p) {
        None => Ok(false),
        Some(v) => Ok(linalg::solve(&cols, &v).is_some()),
    }
}

/// `H^{≥1} · H^{≥1} = 0` on representatives, through `max_degree` (and
/// the weight cap, when graded).
pub fn products_vanish(
    alg: &SullivanAlgebra,
    table: &BTreeMap<(u32, u32), Block>,
    max_degree: u32,
    sel: WeightSel,
) -> Result<bool> {
    let entries: Vec<(&(u32, u32), &Block)> = table.iter().filter(|(_, b)| b.dim > 0).collect();
    for (i, (ka, a)) in entries.iter().enumerate() {
        for (kb, b) in &entries[i..] {
            let k = ka.0 + kb.0;
            if k > max_degree {
                continue;
            }
            // products past the weight cap are not certified
            if let WeightSel::AtMost(cap) = sel {
                if alg.gca.graded && ka.1 + kb.1 > cap {
                    continue;
                }
            }
            for x in &a.reps {
                for y in &b.reps {
                    let p = alg.gca.mul(x, y);
                    if !is_coboundary(alg, &p, k, ka.1 + kb.1, sel)? {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// One row of the wedge-like test: `h = dim H^k`, `rho` = rank of the
/// linear parts of cocycle representatives, `kappa = dim (Z ∩ ker d₁)^k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeRow {
    pub degree: u32,
    pub weight: u32,
    pub h: usize,
    pub rho: usize,
    pub kappa: usize,
}

/// `H(ΛZ) = Q ⊕ (Z ∩ ker d)` for a suitable choice of `Z`, tested without
/// choosing: every class has an independent linear part, and these fill
/// `Z ∩ ker d₁`.
pub fn wedge_like_rows(
    z: &SullivanAlgebra,
    table: &BTreeMap<(u32, u32), Block>,
    max_degree: u32,
) -> Result<Vec<WedgeRow>> {
    let base = stage_filtration(z, max_degree, 0)?.remove(0);
    let mut keys: Vec<(u32, u32)> = table.keys().copied().collect();
    keys.extend(base.gens.keys().copied().filter(|k| k.0 >= 1 && k.0 <= max_degree));
    keys.sort_unstable();
    keys.dedup();
    let mut rows = Vec::new();
    for (k, w) in keys {
        let (h, reps) = table.get(&(k, w)).map(|b| (b.dim, b.reps.as_slice())).unwrap_or((0, &[]));
        let mut ech = Echelon::new();
        for r in reps {
            let lin = r.wedge_part(1);
            let v: Vec<_> = (0..z.len())
                .filter_map(|g| {
                    let c = lin.coeff_of_gen(g);
                    (!num_traits::Zero::is_zero(&c)).then_some((g, c))
                })
                .collect();
            let _ = ech.insert(&v);
        }
        rows.push(WedgeRow { degree: k, weight: w, h, rho: ech.rank(), kappa: base.dim((k, w)) });
    }
    Ok(rows)
}

/// Row of the fibre table: `dim H^k(ΛZ)` against `dim (ΛU)^{k-n}` in the
/// matching weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberRow {
    pub degree: u32,
    pub weight: u32,
    pub fiber: usize,
    pub closure: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberTable {
    pub rows: Vec<FiberRow>,
    pub matches: bool,
    pub products_vanish: bool,
}

impl FiberTable {
    /// Totals over weights, degrees `1..=max_degree`.
    pub fn fiber_dims(&self, max_degree: u32) -> Vec<usize> {
        (1..=max_degree).map(|k| self.rows.iter().filter(|r| r.degree == k).map(|r| r.fiber).sum()).collect()
    }

    pub fn closure_dims(&self, max_degree: u32) -> Vec<usize> {
        (1..=max_degree).map(|k| self.rows.iter().filter(|r| r.degree == k).map(|r| r.closure).sum()).collect()
    }
}

pub fn fiber_rows(
    table: &BTreeMap<(u32, u32), Block>,
    u_dims: &BTreeMap<(u32, u32), usize>,
    n: u32,
    a_weight: u32,
    max_degree: u32,
) -> Vec<FiberRow> {
    let mut keys: Vec<(u32, u32)> = table.keys().copied().collect();
    for &(k, w) in u_dims.keys() {
        if k + n <= max_degree && k + n >= 1 {
            keys.push((k + n, w + a_weight));
        }
    }
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .map(|(k, w)| {
            let fiber = table.get(&(k, w)).map(|b| b.dim).unwrap_or(0);
            let closure =
                if k >= n && w >= a_weight { u_dims.get(&(k - n, w - a_weight)).copied().unwrap_or(0) } else { 0 };
            FiberRow { degree: k, weight: w, fiber, closure }
        })
        .filter(|r| r.fiber > 0 || r.closure > 0)
        .collect()
}
