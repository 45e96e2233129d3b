//! The fibre of `X ∨ Y → X × Y` for formal `X`, `Y`, against the count
//! `d₁(Λ^{≥1}U_W) ⊗ Λ^{≥1}U_Q` from the two acyclic closures.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::gca::{Generator, Mono, Poly, WeightSel};
use crate::sullivan::{acyclic_closure, minimal_model, relative_model, CdgaPresentation, Elem, SullivanAlgebra};

use super::fiber::{cohomology_table, monomial_dims};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeFiberRow {
    pub degree: u32,
    pub weight: u32,
    pub fiber: usize,
    pub predicted: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeFiberReport {
    /// Weights are the word lengths; only set when a circle is present.
    pub graded: bool,
    pub rows: Vec<WedgeFiberRow>,
    pub matches: bool,
}

impl WedgeFiberReport {
    /// Totals per degree `1..=max_degree`.
    pub fn fiber_dims(&self, max_degree: u32) -> Vec<usize> {
        (1..=max_degree).map(|k| self.rows.iter().filter(|r| r.degree == k).map(|r| r.fiber).sum()).collect()
    }

    pub fn get(&self, degree: u32, weight: u32) -> usize {
        self.rows.iter().find(|r| r.degree == degree && r.weight == weight).map(|r| r.fiber).unwrap_or(0)
    }
}

fn weighted(h: &CdgaPresentation) -> CdgaPresentation {
    let mut w = h.clone();
    w.set_weights(h.degrees.clone());
    w
}

fn tagged(alg: &SullivanAlgebra, tag: &str, offset: u32) -> (Vec<Generator>, Vec<Poly>) {
    let gens = alg.gca.gens.iter().map(|g| Generator { name: format!("{tag}{}", g.name), ..g.clone() }).collect();
    let ds = alg
        .d
        .values
        .iter()
        .map(|p| {
            let mut q = Poly::zero();
            for (m, c) in &p.terms {
                q.add_term(Mono(m.0.iter().map(|&(g, e)| (g + offset, e)).collect()), c.clone());
            }
            q
        })
        .collect();
    (gens, ds)
}

/// `dim (Λ^{≥1}U)` per `(degree, weight)` of the acyclic closure of `m`.
fn positive_u(m: &SullivanAlgebra, max_degree: u32, sel: WeightSel) -> Result<BTreeMap<(u32, u32), usize>> {
    let cl = acyclic_closure(m)?;
    let mut d = monomial_dims(&cl.lambda_u(), max_degree, sel)?;
    d.remove(&(0, 0));
    Ok(d)
}

/// Models `X` and `Y` from their cohomology, maps `ΛW ⊗ ΛQ` onto the
/// cohomology of the wedge, takes the fibre `ΛR` of a relative model and
/// compares `dim H^k(ΛR)` with `Σ dim (Λ^{≥1}U_W)^{i-1} · dim (Λ^{≥1}U_Q)^j`
/// over `i + j = k` (and over splittings of the weight).
pub fn wedge_fiber_check(hx: &CdgaPresentation, hy: &CdgaPresentation, caps: Caps) -> Result<WedgeFiberReport> {
    for h in [hx, hy] {
        h.validate()?;
        if h.differential.iter().any(|d| !d.is_empty()) {
            return Err(Error::Unsupported("inputs must be formal, given by their cohomology".into()));
        }
    }
    let nn = caps.max_degree;
    let graded = hx.degrees.contains(&1) || hy.degrees.contains(&1);
    let (hx, hy, lmax, sel) = if graded {
        let l = caps.max_length.ok_or_else(|| Error::CapMissing("circle classes".into()))?;
        (weighted(hx), weighted(hy), Some(l), WeightSel::AtMost(l))
    } else {
        (hx.clone(), hy.clone(), None, WeightSel::Any)
    };
    let mx = minimal_model(&hx, nn + 2, lmax)?;
    let my = minimal_model(&hy, nn + 2, lmax)?;

    let mut p = SullivanAlgebra::empty(graded);
    let (gx, dx) = tagged(&mx.alg, "x", 0);
    let (gy, dy) = tagged(&my.alg, "y", mx.alg.len() as u32);
    for (g, d) in gx.into_iter().zip(dx).chain(gy.into_iter().zip(dy)) {
        p.push(g, d);
    }

    let mut t = CdgaPresentation::wedge(&hx, &hy);
    let shift_y = hx.len() - 1;
    if graded {
        let mut w = vec![0];
        w.extend(hx.degrees[1..].iter().copied());
        w.extend(hy.degrees[1..].iter().copied());
        t.set_weights(w);
    }
    let mut phi: Vec<Elem> = Vec::with_capacity(p.len());
    for (h, m, shift) in [(&hx, &mx, 0usize), (&hy, &my, shift_y)] {
        for (g, e) in m.rho.iter().enumerate() {
            let v: Vec<_> = h.global_vec(e).into_iter().map(|(i, c)| (i + shift, c)).collect();
            let gen = m.alg.gen(g);
            let wt = if graded { gen.weight } else { 0 };
            phi.push(t.elem(&v).unwrap_or_else(|| Elem::zero(gen.degree, wt)));
        }
    }
    let rm = relative_model(&p, &phi, &t, nn + 1, lmax, "r")?;
    let fiber = rm.fiber();
    let table = cohomology_table(&fiber, nn, sel)?;

    let ux = positive_u(&mx.alg, nn, sel)?;
    let uy = positive_u(&my.alg, nn, sel)?;
    let mut predicted: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for (&(i1, m1), a) in &ux {
        for (&(j, m2), b) in &uy {
            let k = i1 + 1 + j;
            let m = m1 + m2;
            if k <= nn && lmax.is_none_or(|l| m <= l) {
                *predicted.entry((k, m)).or_insert(0) += a * b;
            }
        }
    }
    let mut keys: Vec<(u32, u32)> = table.keys().copied().chain(predicted.keys().copied()).collect();
    keys.sort_unstable();
    keys.dedup();
    let rows: Vec<WedgeFiberRow> = keys
        .into_iter()
        .map(|(k, m)| WedgeFiberRow {
            degree: k,
            weight: m,
            fiber: table.get(&(k, m)).map(|b| b.dim).unwrap_or(0),
            predicted: predicted.get(&(k, m)).copied().unwrap_or(0),
        })
        .filter(|r| r.fiber > 0 || r.predicted > 0)
        .collect();
    let matches = rows.iter().all(|r| r.fiber == r.predicted);
    Ok(WedgeFiberReport { graded, rows, matches })
}
