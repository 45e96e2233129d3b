//! Step One on the cochain side: the linear derivation `d₀` on the
//! quadratic model `ΛW` of `S¹ ∨ … ∨ S¹ ∨ S²`, and the filtration showing
//! that `(ΛW, d₁ + d₀)` is a Sullivan algebra.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::attach::{attach_trace, Check, ClassSpec};
use crate::error::{Error, Result};
use crate::gca::{Derivation, Mono, Poly};
use crate::linalg::{self, Echelon, Solver, SparseVec};
use crate::rational::Q;
use crate::sullivan::{quadratic_model, QuadraticModel, SphereClass};

use super::OneRelatorScenario;

/// Dimensions of one step of `Q(0) ⊂ P(0) ⊂ … ⊂ Q(j) ⊂ P(j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepTwoStage {
    pub index: usize,
    pub v: usize,
    pub q: usize,
    pub p: usize,
}

#[derive(Debug, Clone)]
pub struct D0Datum {
    /// `ΛW` with `d₁`; circles `z1, …, zr` then `a`.
    pub model: QuadraticModel,
    pub a: usize,
    /// Leading length of `α`; `None` for the trivial word.
    pub n: Option<u32>,
    /// `ε` on generators (zero off `W¹`).
    pub eps: Vec<Q>,
    /// `d₀` on generators, linear; zero above `defined_degree`.
    pub d0: Vec<Poly>,
    pub defined_degree: u32,
    pub max_weight: u32,
    pub step_two: Vec<StepTwoStage>,
    pub step_two_holds: bool,
}

type Block = (HashMap<Mono, usize>, Solver, Vec<usize>);

/// `(degree, weight)` blocks of `W` solved for `d₁ u = Φ`.
struct LiftSolver {
    blocks: HashMap<(u32, u32), Block>,
}

impl LiftSolver {
    fn solve(&mut self, w: &QuadraticModel, skip: usize, k: u32, phi: &Poly) -> Option<Poly> {
        let gca = &w.alg.gca;
        let mut by_weight: BTreeMap<u32, Vec<(&Mono, &Q)>> = BTreeMap::new();
        for (m, c) in &phi.terms {
            by_weight.entry(gca.mono_weight(m)).or_default().push((m, c));
        }
        let mut out = Poly::zero();
        for (m, terms) in by_weight {
            let (index, solver, gens) = self.blocks.entry((k, m)).or_insert_with(|| {
                let gens: Vec<usize> = w.block(k, m).into_iter().filter(|&g| g != skip).collect();
                let mut index = HashMap::new();
                let cols: Vec<SparseVec> = gens.iter().map(|&g| poly_vec(&w.alg.d.values[g], &mut index)).collect();
                (index, Solver::new(&cols), gens)
            });
            let mut t: SparseVec = Vec::with_capacity(terms.len());
            for (mo, c) in terms {
                t.push((*index.get(mo)?, c.clone()));
            }
            t.sort_by_key(|e| e.0);
            for (j, c) in solver.solve(&t)? {
                out.add_term(Mono::gen(gens[j]), c);
            }
        }
        Some(out)
    }
}

fn poly_vec(p: &Poly, index: &mut HashMap<Mono, usize>) -> SparseVec {
    let mut v: SparseVec = p
        .terms
        .iter()
        .map(|(m, c)| {
            let k = index.len();
            (*index.entry(m.clone()).or_insert(k), c.clone())
        })
        .collect();
    v.sort_by_key(|e| e.0);
    v
}

/// Linear polynomial as a vector over generator indices.
pub(crate) fn linear_vec(p: &Poly) -> SparseVec {
    let mut v: SparseVec = p.terms.iter().filter_map(|(m, c)| m.as_gen().map(|g| (g, c.clone()))).collect();
    v.sort_by_key(|e| e.0);
    v
}

pub(crate) fn vec_poly(v: &SparseVec) -> Poly {
    let mut p = Poly::zero();
    for (g, c) in v {
        p.add_term(Mono::gen(*g), c.clone());
    }
    p
}

/// Builds `d₀` generator by generator in creation order: on `W¹`,
/// `d₀w = ε(w)a - u` with `d₁u = d₀d₁w`, `u ∈ R²`; above, `d₀w = -u` with
/// `d₁u = d₀d₁w`. The lifts are unique since `d₁` is injective on `R`.
#[allow(clippy::needless_range_loop)]
pub fn build_d0(s: &OneRelatorScenario) -> Result<D0Datum> {
    let l = s.max_length();
    let top = s.caps.max_degree;
    let log = crate::lie::magnus_log(&s.group_word, l)?;
    let n = log.leading_length;
    let mut classes = SphereClass::wedge(&vec![1; s.r]);
    classes.push(SphereClass::new("a", 2, n.unwrap_or(1)));
    let model = quadratic_model(&classes, top + 1, Some(l))?;
    let a = model.alg.find("a").ok_or_else(|| Error::CapExhausted("the 2-cell class exceeds the length cap".into()))?;
    let eps = if n.is_some() {
        attach_trace(&model.alg, 1, &ClassSpec::group(&s.word), Some(l))?.values
    } else {
        vec![Q::zero(); model.alg.len()]
    };
    let gca = &model.alg.gca;
    let len = model.alg.len();
    let mut der = Derivation::zero(1, len);
    let mut lifts = LiftSolver { blocks: HashMap::new() };
    for g in 0..len {
        let k = model.alg.gen(g).degree;
        if k > top {
            continue;
        }
        let phi = gca.apply(&der, &model.alg.d.values[g])?;
        let mut val = Poly::zero();
        if k == 1 && !eps[g].is_zero() {
            val.add_term(Mono::gen(a), eps[g].clone());
        }
        if !phi.is_zero() {
            let u = lifts
                .solve(&model, a, k + 1, &phi)
                .ok_or_else(|| Error::Falsified(format!("d₀d₁{} is not d₁ of a generator", model.alg.gen(g).name)))?;
            val = val.sub(&u);
        }
        der.values[g] = val;
    }
    let mut datum = D0Datum {
        model,
        a,
        n,
        eps,
        d0: der.values,
        defined_degree: top,
        max_weight: l,
        step_two: Vec::new(),
        step_two_holds: true,
    };
    let (stages, holds) = datum.step_two_filtration()?;
    datum.step_two = stages;
    datum.step_two_holds = holds;
    Ok(datum)
}

impl D0Datum {
    pub fn len(&self) -> usize {
        self.model.alg.len()
    }

    pub fn is_empty(&self) -> bool {
        self.model.alg.is_empty()
    }

    pub fn derivation(&self) -> Derivation {
        Derivation { shift: 1, values: self.d0.clone() }
    }

    fn degree(&self, g: usize) -> u32 {
        self.model.alg.gen(g).degree
    }

    fn weight(&self, g: usize) -> u32 {
        self.model.alg.gen(g).weight
    }

    /// `d₀` of a linear combination of generators.
    pub fn apply_vec(&self, v: &SparseVec) -> SparseVec {
        let mut acc: SparseVec = Vec::new();
        for (g, c) in v {
            acc = linalg::axpy(&acc, c, &linear_vec(&self.d0[*g]));
        }
        acc
    }

    /// Weight-preserving part of `d₀` on a generator.
    pub fn graded_part(&self, g: usize) -> SparseVec {
        let w = self.weight(g);
        linear_vec(&self.d0[g]).into_iter().filter(|(h, _)| self.weight(*h) == w).collect()
    }

    fn gens_where(&self, f: impl Fn(u32, u32) -> bool) -> Vec<usize> {
        (0..self.len()).filter(|&g| f(self.degree(g), self.weight(g))).collect()
    }

    /// Least weight of a degree-one generator with `d₀ ≠ 0`.
    pub fn first_nonzero_weight(&self) -> Option<u32> {
        self.gens_where(|k, _| k == 1).into_iter().filter(|&g| !self.d0[g].is_zero()).map(|g| self.weight(g)).min()
    }

    /// `φ: ΛW → ΛW¹ ⊕ Qa`: kills `R` and `a · Λ⁺`.
    fn phi(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &p.terms {
            let keep = m.0.iter().all(|&(g, _)| self.degree(g as usize) == 1) || m.as_gen() == Some(self.a);
            if keep {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// `δ` on `ΛW¹ ⊕ Qa`: `δw = ε(w)a` on `W¹`, zero on products and `a`.
    fn delta(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &p.terms {
            if let Some(g) = m.as_gen() {
                if self.degree(g) == 1 && !self.eps[g].is_zero() {
                    out.add_term(Mono::gen(self.a), c * &self.eps[g]);
                }
            }
        }
        out
    }

    /// `d₁² = 0`, `d₀² = 0`, `d₀d₁ + d₁d₀ = 0`, `φ ∘ (d₁+d₀) = (d₁+δ) ∘ φ`,
    /// the leading length and the Step Two filtration.
    pub fn checks(&self) -> Result<Vec<Check>> {
        let alg = &self.model.alg;
        let gca = &alg.gca;
        let der = self.derivation();
        let top = self.defined_degree;
        let mut sq = true;
        let mut anti = true;
        let mut chain = true;
        for g in 0..self.len() {
            let k = self.degree(g);
            if k < top && !gca.apply(&der, &self.d0[g])?.is_zero() {
                sq = false;
            }
            if k <= top {
                let lhs = gca.apply(&der, &alg.d.values[g])?.add(&alg.diff(&self.d0[g]));
                anti &= lhs.is_zero();
                let left = self.phi(&alg.d.values[g].add(&self.d0[g]));
                let pg = self.phi(&Poly::gen(g));
                let right = self.phi(&alg.diff(&pg).add(&self.delta(&pg)));
                chain &= left == right;
            }
        }
        let leading = self.first_nonzero_weight();
        Ok(vec![
            Check::new("d₁² = 0", alg.check_square_zero().is_ok()),
            Check::new("d₀² = 0", sq),
            Check::new("d₀d₁ + d₁d₀ = 0", anti),
            Check::new("φ ∘ (d₁+d₀) = (d₁+δ) ∘ φ", chain),
            Check::with_detail(
                "leading length of α = least weight with d₀ ≠ 0 on W¹",
                leading == self.n,
                format!("{:?} vs {:?}", self.n, leading),
            ),
            Check::new("Q(j) ⊂ P(j) filtration of (ΛW, d₁+d₀)", self.step_two_holds),
        ])
    }

    /// `ι_g p` for a quadratic `p`, as a vector over generators.
    fn contract(&self, p: &Poly, g: usize) -> SparseVec {
        let mut out = Poly::zero();
        for (m, c) in &p.terms {
            match m.0.as_slice() {
                [(h, 2)] if *h as usize == g => out.add_term(Mono::gen(g), c * Q::from_integer(2.into())),
                [(h1, 1), (h2, 1)] if *h1 as usize == g => out.add_term(Mono::gen(*h2 as usize), c.clone()),
                [(h1, 1), (h2, 1)] if *h2 as usize == g => {
                    let odd = (self.degree(*h1 as usize) * self.degree(g)) % 2 == 1;
                    out.add_term(Mono::gen(*h1 as usize), if odd { -c.clone() } else { c.clone() });
                }
                _ => {}
            }
        }
        linear_vec(&out)
    }

    /// Whether a quadratic polynomial lies in `Λ²` of the span.
    fn in_square(&self, p: &Poly, span: &Echelon) -> bool {
        let mut gens: Vec<usize> = p.terms.keys().flat_map(|m| m.0.iter().map(|&(g, _)| g as usize)).collect();
        gens.sort_unstable();
        gens.dedup();
        gens.into_iter().all(|g| span.contains(&self.contract(p, g)))
    }

    fn d1_vec(&self, v: &SparseVec) -> Poly {
        let mut p = Poly::zero();
        for (g, c) in v {
            p.add_assign_scaled(c, &self.model.alg.d.values[*g]);
        }
        p
    }

    /// Both `d₁` and `d₀` map `from` into `Λ(into)`.
    fn maps_into(&self, from: &[SparseVec], into: &[SparseVec]) -> bool {
        let mut ech = Echelon::new();
        for v in into {
            let _ = ech.insert(v);
        }
        from.iter().all(|x| ech.contains(&self.apply_vec(x)) && self.in_square(&self.d1_vec(x), &ech))
    }

    /// `S(j+1)` complements `V(j+1) ∩ P(j)` in `V(j+1)`,
    /// `Q(j+1) = P(j) + d₀S(j+1)` and `P(j+1) = Q(j+1) + S(j+1)`, on
    /// generators of degree below the one where `d₀` stops.
    fn step_two_filtration(&self) -> Result<(Vec<StepTwoStage>, bool)> {
        let stages = self.model.alg.stages();
        let top = self.defined_degree.saturating_sub(1);
        let live: Vec<usize> = (0..self.len()).filter(|&g| self.degree(g) <= top).collect();
        let max_stage = live.iter().map(|&g| stages[g]).max().unwrap_or(0);
        let mut p: Vec<SparseVec> = Vec::new();
        let mut out = Vec::new();
        let mut holds = true;
        for j in 0..=max_stage as usize {
            let v: Vec<SparseVec> = live
                .iter()
                .filter(|&&g| stages[g] as usize <= j)
                .map(|&g| vec![(g, Q::from_integer(1.into()))])
                .collect();
            let s: Vec<SparseVec> = linalg::complement(&p, &v).into_iter().map(|i| v[i].clone()).collect();
            let mut q = p.clone();
            for x in &s {
                let y = self.apply_vec(x);
                if !y.is_empty() {
                    q.push(y);
                }
            }
            let mut p_next = q.clone();
            p_next.extend(s.iter().cloned());
            holds &= self.maps_into(&q, &p) && self.maps_into(&p_next, &q);
            let mut all = Echelon::new();
            for x in &p_next {
                let _ = all.insert(x);
            }
            holds &= v.iter().all(|x| all.contains(x));
            out.push(StepTwoStage { index: j + 1, v: v.len(), q: linalg::rank(&q), p: all.rank() });
            p = p_next;
        }
        Ok((out, holds))
    }

    /// `dim H^k(W, d₀^{gr})` per `(degree, weight)`, for `k ≤ defined_degree`.
    pub fn graded_cohomology(&self) -> BTreeMap<(u32, u32), usize> {
        let mut blocks: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
        for g in 0..self.len() {
            blocks.entry((self.degree(g), self.weight(g))).or_default().push(g);
        }
        let rank_out = |k: u32, m: u32| -> usize {
            if k > self.defined_degree {
                return 0;
            }
            blocks
                .get(&(k, m))
                .map(|gs| linalg::rank(&gs.iter().map(|&g| self.graded_part(g)).collect::<Vec<_>>()))
                .unwrap_or(0)
        };
        let mut out = BTreeMap::new();
        for (&(k, m), gs) in &blocks {
            if k > self.defined_degree {
                continue;
            }
            let inc = if k > 1 { rank_out(k - 1, m) } else { 0 };
            out.insert((k, m), gs.len() - rank_out(k, m) - inc);
        }
        out
    }

    /// `dim H^k(W, d₀)` for `1 ≤ k ≤ defined_degree` (index `k - 1`).
    pub fn cohomology(&self) -> Vec<usize> {
        let rank_out = |k: u32| -> usize {
            linalg::rank(
                &self.gens_where(|d, _| d == k).into_iter().map(|g| linear_vec(&self.d0[g])).collect::<Vec<_>>(),
            )
        };
        (1..=self.defined_degree)
            .map(|k| {
                let inc = if k > 1 { rank_out(k - 1) } else { 0 };
                self.gens_where(|d, _| d == k).len() - rank_out(k) - inc
            })
            .collect()
    }

    /// Basis of `V = W¹ ∩ ker d₀` adapted to the weight filtration: each
    /// vector with its leading weight.
    pub fn corollary_basis(&self) -> Vec<(u32, SparseVec)> {
        let mut out: Vec<(u32, SparseVec)> = Vec::new();
        let mut seen: Vec<SparseVec> = Vec::new();
        for m in 1..=self.max_weight {
            let gens = self.gens_where(|k, w| k == 1 && w <= m);
            let images: Vec<SparseVec> = gens.iter().map(|&g| linear_vec(&self.d0[g])).collect();
            let kernel: Vec<SparseVec> = linalg::kernel(&images)
                .into_iter()
                .map(|v| {
                    let mut x: SparseVec = v.into_iter().map(|(i, c)| (gens[i], c)).collect();
                    x.sort_by_key(|e| e.0);
                    x
                })
                .collect();
            for i in linalg::complement(&seen, &kernel) {
                seen.push(kernel[i].clone());
                out.push((m, kernel[i].clone()));
            }
        }
        out
    }

    /// `dim gr_m (W¹ ∩ ker d₀)` for `m = 1..=max_weight`.
    pub fn v_dims(&self) -> Vec<usize> {
        let basis = self.corollary_basis();
        (1..=self.max_weight).map(|m| basis.iter().filter(|(w, _)| *w == m).count()).collect()
    }

    /// `W¹ ∩ ker d₀^{gr}` per weight.
    pub fn graded_kernel(&self) -> BTreeMap<u32, Vec<SparseVec>> {
        let mut out = BTreeMap::new();
        for m in 1..=self.max_weight {
            let gens = self.gens_where(|k, w| k == 1 && w == m);
            let images: Vec<SparseVec> = gens.iter().map(|&g| self.graded_part(g)).collect();
            let kernel: Vec<SparseVec> = linalg::kernel(&images)
                .into_iter()
                .map(|v| v.into_iter().map(|(i, c)| (gens[i], c)).collect())
                .collect();
            out.insert(m, kernel);
        }
        out
    }
}
