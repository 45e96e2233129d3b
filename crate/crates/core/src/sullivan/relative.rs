//! Relative Sullivan models `(B ⊗ ΛZ, d) → A` built degree by degree.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gca::{DegreeSlice, Generator, Mono, Poly, WeightSel};
use crate::linalg::{self, Echelon, SparseVec};

use super::finite::{mul_elem, unit_elem, CdgaCache, Elem, FiniteCdga};
use super::SullivanAlgebra;

const LOOP_LIMIT: usize = 64;

/// Result of [`relative_model`]: the algebra `B ⊗ ΛZ` (base generators
/// first) and the quasi-isomorphism onto the target through
/// `max_degree`.
#[derive(Debug, Clone)]
pub struct RelativeModel {
    pub alg: SullivanAlgebra,
    pub base_len: usize,
    pub rho: Vec<Elem>,
    pub max_degree: u32,
}

impl RelativeModel {
    /// The new generators only, as indices into `alg`.
    pub fn new_gens(&self) -> std::ops::Range<usize> {
        self.base_len..self.alg.len()
    }

    /// Quotient `ΛZ = Q ⊗_{ΛV} (ΛV ⊗ ΛZ)` by the base generators.
    pub fn fiber(&self) -> SullivanAlgebra {
        let b = self.base_len as u32;
        let mut z = SullivanAlgebra::empty(self.alg.gca.graded);
        for g in self.new_gens() {
            let mut dz = Poly::zero();
            for (m, c) in &self.alg.d.values[g].terms {
                if m.0.iter().all(|&(h, _)| h >= b) {
                    dz.add_term(Mono(m.0.iter().map(|&(h, e)| (h - b, e)).collect()), c.clone());
                }
            }
            z.push(self.alg.gen(g).clone(), dz);
        }
        z
    }
}

struct Builder<'a, 'b> {
    m: SullivanAlgebra,
    rho: Vec<Elem>,
    cache: CdgaCache<'a>,
    a: &'a dyn FiniteCdga,
    memo: HashMap<Mono, Elem>,
    prefix: &'b str,
    counters: HashMap<u32, usize>,
}

impl Builder<'_, '_> {
    fn sel(&self, w: u32) -> WeightSel {
        if self.m.gca.graded {
            WeightSel::Exactly(w)
        } else {
            WeightSel::Any
        }
    }

    fn rho_mono(&mut self, mono: &Mono) -> Elem {
        if let Some(e) = self.memo.get(mono) {
            return e.clone();
        }
        let out = if mono.is_one() {
            unit_elem(self.a)
        } else {
            let mut rest = mono.0.clone();
            let (g, e) = rest.pop().expect("nonempty");
            if e > 1 {
                rest.push((g, e - 1));
            }
            let left = self.rho_mono(&Mono(rest));
            mul_elem(self.a, &left, &self.rho[g as usize])
        };
        self.memo.insert(mono.clone(), out.clone());
        out
    }

    fn rho_vec(&mut self, slice: &DegreeSlice, v: &SparseVec, wt: u32) -> SparseVec {
        let mut acc = Elem::zero(slice.degree, wt);
        for (i, c) in v {
            let r = self.rho_mono(&slice.basis[*i]);
            if !r.is_zero() {
                acc = acc.axpy(c, &r);
            }
        }
        acc.v
    }

    fn slice(&self, k: u32, w: u32) -> Result<DegreeSlice> {
        self.m.gca.monomial_basis(k, self.sel(w))
    }

    /// Matrix of `d_M` on slice `src` into `tgt` plus its kernel.
    fn d_matrix(&self, src: &DegreeSlice, tgt: &DegreeSlice) -> Result<Vec<SparseVec>> {
        let (cols, touched) = self.m.gca.matrix(&self.m.d, src, tgt)?;
        debug_assert!(!touched);
        Ok(cols)
    }

    fn add_gen(&mut self, k: u32, w: u32, dv: Poly, rho: Elem) {
        let c = self.counters.entry(k).or_insert(0);
        *c += 1;
        let name = format!("{}{}_{}", self.prefix, k, c);
        let g = Generator::weighted(name, k, if self.m.gca.graded { w } else { 1 });
        self.m.push(g, dv);
        self.rho.push(rho);
    }

    /// Adds cocycle generators onto `coker(H^k_w(M) → H^k_w(A))`.
    fn coker_step(&mut self, k: u32, w: u32) -> Result<usize> {
        let a_cocycles = self.cache.block(k, w).cocycles.clone();
        if a_cocycles.is_empty() {
            return Ok(0);
        }
        let mut ech = Echelon::new();
        for b in self.cache.boundaries(k, w) {
            let _ = ech.insert(&b);
        }
        let here = self.slice(k, w)?;
        let next = self.slice(k + 1, w)?;
        let cols = self.d_matrix(&here, &next)?;
        for z in linalg::kernel(&cols) {
            let img = self.rho_vec(&here, &z, w);
            let _ = ech.insert(&img);
        }
        let mut added = 0;
        for c in a_cocycles {
            if ech.insert(&c).is_ok() {
                self.add_gen(k, w, Poly::zero(), Elem { deg: k, wt: w, v: c });
                added += 1;
            }
        }
        Ok(added)
    }

    /// Generators `(dv, ρ v)` of degree `k` killing
    /// `ker(H^{k+1}_w(M) → H^{k+1}_w(A))`.
    fn kill_candidates(&mut self, k: u32, w: u32) -> Result<Vec<(Poly, Elem)>> {
        let here = self.slice(k + 1, w)?;
        if here.dim() == 0 {
            return Ok(Vec::new());
        }
        let next = self.slice(k + 2, w)?;
        let cocycles = linalg::kernel(&self.d_matrix(&here, &next)?);
        if cocycles.is_empty() {
            return Ok(Vec::new());
        }
        let prev = self.slice(k, w)?;
        let m_bound = self.d_matrix(&prev, &here)?;
        let a_bound = self.cache.block(k, w).d_cols.clone();
        let nb = a_bound.len();
        let mut cols = a_bound;
        for z in &cocycles {
            cols.push(self.rho_vec(&here, z, w));
        }
        let mut ech = Echelon::new();
        for b in &m_bound {
            let _ = ech.insert(b);
        }
        let mut out = Vec::new();
        for kv in linalg::kernel(&cols) {
            if kv.last().map(|e| e.0).unwrap_or(0) < nb {
                continue;
            }
            let mut x: SparseVec = Vec::new();
            let mut y: SparseVec = Vec::new();
            for (i, c) in kv {
                if i < nb {
                    y.push((i, -c));
                } else {
                    x = linalg::axpy(&x, &c, &cocycles[i - nb]);
                }
            }
            if ech.insert(&x).is_ok() {
                out.push((here.to_poly(&x), Elem { deg: k, wt: w, v: y }));
            }
        }
        Ok(out)
    }

    fn weight_bound(&self, k: u32) -> u32 {
        if !self.m.gca.graded {
            return 0;
        }
        let mut b = 0;
        for d in [k, k + 1] {
            if let Some(w) = self.a.weights(d).last() {
                b = b.max(*w);
            }
        }
        let ratio =
            self.m.gca.gens.iter().filter(|g| g.degree > 0).map(|g| g.weight.div_ceil(g.degree)).max().unwrap_or(0);
        b.max((k + 2) * ratio)
    }

    fn loops(&self) -> bool {
        self.m.gca.gens.iter().any(|g| g.degree == 1 && (!self.m.gca.graded || g.weight == 0))
    }
}

/// Extends `base → A` (given by `phi` on generators) to a relative Sullivan
/// model that is a quasi-isomorphism through `max_degree`. New generators
/// are named `{prefix}{degree}_{i}`. `max_weight` bounds the weights of new
/// generators of graded models; it is required when degree-one generators
/// make the weight blocks infinite.
pub fn relative_model(
    base: &SullivanAlgebra,
    phi: &[Elem],
    a: &dyn FiniteCdga,
    max_degree: u32,
    max_weight: Option<u32>,
    prefix: &str,
) -> Result<RelativeModel> {
    if base.gca.graded != a.graded() {
        return Err(Error::Input("base and target must agree on weight grading".into()));
    }
    if phi.len() != base.len() {
        return Err(Error::Input("base map must be given on every generator".into()));
    }
    let mut b = Builder {
        m: base.clone(),
        rho: phi.to_vec(),
        cache: CdgaCache::new(a),
        a,
        memo: HashMap::new(),
        prefix,
        counters: HashMap::new(),
    };
    for w in 0..=b.weight_bound(0).min(max_weight.unwrap_or(u32::MAX)) {
        if !b.kill_candidates(0, w)?.is_empty() {
            return Err(Error::Unsupported("the model would need generators of degree 0".into()));
        }
    }
    for k in 1..=max_degree {
        let mut w = 0;
        while w <= b.weight_bound(k) && max_weight.is_none_or(|c| w <= c) {
            b.coker_step(k, w)?;
            let mut rounds = 0;
            loop {
                let kills = b.kill_candidates(k, w)?;
                if kills.is_empty() {
                    break;
                }
                for (dv, r) in kills {
                    b.add_gen(k, w, dv, r);
                }
                rounds += 1;
                if !b.loops() {
                    break;
                }
                if rounds >= LOOP_LIMIT {
                    return Err(Error::CapExhausted(format!("degree-{k} generators did not stabilise")));
                }
            }
            if !b.m.gca.graded {
                break;
            }
            w += 1;
        }
    }
    Ok(RelativeModel { alg: b.m, base_len: base.len(), rho: b.rho, max_degree })
}

/// Minimal Sullivan model of a finite cdga through `max_degree`, with the
/// quasi-isomorphism `ρ` to it.
pub fn minimal_model(a: &dyn FiniteCdga, max_degree: u32, max_weight: Option<u32>) -> Result<RelativeModel> {
    let base = SullivanAlgebra::empty(a.graded());
    relative_model(&base, &[], a, max_degree, max_weight, "v")
}

/// Whether `ρ` induces isomorphisms on cohomology through `max_degree`
/// (checked block by block; the target must be finite there).
pub fn check_quasi_iso(model: &RelativeModel, a: &dyn FiniteCdga, max_weight: Option<u32>) -> Result<bool> {
    let m = &model.alg;
    let mut cache = CdgaCache::new(a);
    for k in 0..=model.max_degree {
        let weights: Vec<u32> = if m.gca.graded {
            let top = max_weight.unwrap_or_else(|| a.weights(k).last().copied().unwrap_or(0) + k * 4);
            (0..=top).collect()
        } else {
            vec![0]
        };
        for w in weights {
            let sel = if m.gca.graded { WeightSel::Exactly(w) } else { WeightSel::Any };
            let h = m.gca.cohomology(&m.d, k, sel)?;
            let ha = cache.h_dim(k, w);
            if h.dim != ha {
                return Ok(false);
            }
            let mut ech = Echelon::new();
            for bd in cache.boundaries(k, w) {
                let _ = ech.insert(&bd);
            }
            for r in &h.representatives {
                let mut acc = Elem::zero(k, w);
                for (mono, c) in &r.terms {
                    let mut e = unit_elem(a);
                    for &(g, ex) in &mono.0 {
                        for _ in 0..ex {
                            e = mul_elem(a, &e, &model.rho[g as usize]);
                        }
                    }
                    if !e.is_zero() {
                        acc = acc.axpy(c, &e);
                    }
                }
                if ech.insert(&acc.v).is_err() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
