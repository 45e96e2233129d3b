//! Acyclic closures `ΛV ⊗ ΛU` of minimal algebras.

use crate::error::{Error, Result};
use crate::gca::{Gca, Generator, Mono, Poly, WeightSel};
use crate::linalg::{self, SparseVec};

use super::SullivanAlgebra;

use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct AcyclicClosure {
    /// `ΛV ⊗ ΛU`, generators of `V` first.
    pub alg: SullivanAlgebra,
    pub n_v: usize,
}

impl AcyclicClosure {
    /// Index of `u_i` in `alg`.
    pub fn u(&self, i: usize) -> usize {
        self.n_v + i
    }

    /// The free algebra `ΛU` alone.
    pub fn lambda_u(&self) -> Gca {
        let gens: Vec<Generator> = self.alg.gca.gens[self.n_v..].to_vec();
        Gca { gens, graded: self.alg.gca.graded }
    }

    /// `dim (ΛU)^k` per degree, restricted to weight `sel`.
    pub fn u_dims(&self, max_degree: u32, sel: WeightSel) -> Result<Vec<usize>> {
        let g = self.lambda_u();
        (0..=max_degree).map(|k| Ok(g.monomial_basis(k, sel)?.dim())).collect()
    }
}

/// Builds `d u_i = v_i + Φ_i` with `Φ_i ∈ Λ⁺V ⊗ Λ⁺U_{<i}` solving
/// `d Φ_i = -d v_i`, taking the basic solution of each linear system.
pub fn acyclic_closure(m: &SullivanAlgebra) -> Result<AcyclicClosure> {
    let n_v = m.len();
    let mut alg = m.clone();
    for i in 0..n_v {
        let v = alg.gen(i).clone();
        if v.degree == 0 {
            return Err(Error::Unsupported("closure of degree-0 generators".into()));
        }
        let sel = if alg.gca.graded { WeightSel::Exactly(v.weight) } else { WeightSel::Any };
        let target = alg.d.values[i].neg();
        let phi = if target.is_zero() {
            Poly::zero()
        } else {
            let slice = alg.gca.monomial_basis(v.degree, sel)?;
            let cands: Vec<&Mono> = slice
                .basis
                .iter()
                .filter(|mo| {
                    mo.0.iter().any(|&(g, _)| (g as usize) < n_v) && mo.0.iter().any(|&(g, _)| (g as usize) >= n_v)
                })
                .collect();
            let mut index: HashMap<Mono, usize> = HashMap::new();
            let mut to_vec = |p: &Poly| -> SparseVec {
                let mut out: SparseVec = p
                    .terms
                    .iter()
                    .map(|(t, c)| {
                        let k = index.len();
                        (*index.entry(t.clone()).or_insert(k), c.clone())
                    })
                    .collect();
                out.sort_by_key(|e| e.0);
                out
            };
            let mut cols = Vec::with_capacity(cands.len());
            for mo in &cands {
                let img = alg.gca.apply_mono(&alg.d, mo)?;
                cols.push(to_vec(&img));
            }
            let t = to_vec(&target);
            let x = linalg::solve(&cols, &t)
                .ok_or_else(|| Error::Hypothesis(format!("closure equation for {} has no solution", v.name)))?;
            let mut phi = Poly::zero();
            for (j, c) in x {
                phi.add_term(cands[j].clone(), c);
            }
            phi
        };
        let du = Poly::gen(i).add(&phi);
        alg.push(Generator::weighted(format!("u_{}", v.name), v.degree - 1, v.weight), du);
    }
    Ok(AcyclicClosure { alg, n_v })
}
