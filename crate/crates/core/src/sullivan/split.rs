//! Splitting `ΛW ≅ ΛV ⊗ ΛZ` along a morphism `λ: ΛV → ΛW` whose linear part
//! is injective.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gca::{Gca, Mono, Poly};
use crate::linalg::{self, Echelon, SparseVec};
use crate::rational::{q_to_string, Q};

use super::{CdgaMorphism, SullivanAlgebra};

/// Least degree where the linear part of `λ` fails to be injective, with a
/// vector of its kernel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureWitness {
    pub degree: u32,
    pub kernel: Vec<(String, String)>,
}

#[derive(Debug, Clone)]
pub struct Split {
    /// `(v, w)`: `λ v` is used to eliminate the generator `w`.
    pub pivots: Vec<(usize, usize)>,
    /// Generators of `W` kept in `Z`, in order.
    pub z: Vec<usize>,
    /// `ΛZ = ΛW / (λ V)` with the induced differential.
    pub quotient: SullivanAlgebra,
    /// Projection `ΛW → ΛZ` on generators of degree at most the cap.
    pub q: Vec<Option<Poly>>,
}

impl Split {
    pub fn project(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &p.terms {
            let mut t = Poly::one();
            for &(g, e) in &m.0 {
                let qg = self.q[g as usize].as_ref().expect("projection defined below the cap");
                for _ in 0..e {
                    t = self.quotient.gca.mul(&t, qg);
                }
            }
            out.add_assign_scaled(c, &t);
        }
        out
    }
}

#[derive(Debug, Clone)]
pub enum SplitOutcome {
    Split(Split),
    Failure(FailureWitness),
}

/// Linear part of `λ v` on the generators of `W` of degree `k`.
fn linear_cols(lambda: &CdgaMorphism, vs: &[usize], ws: &[usize]) -> Vec<SparseVec> {
    let n = ws.len();
    vs.iter()
        .map(|&v| {
            let mut col: SparseVec = ws
                .iter()
                .enumerate()
                .filter_map(|(pos, &w)| {
                    let c = lambda.values[v].coeff_of_gen(w);
                    (!num_traits::Zero::is_zero(&c)).then(|| (n - 1 - pos, c))
                })
                .collect();
            col.sort_by_key(|e| e.0);
            col
        })
        .collect()
}

/// Splits `ΛW` along `λ` through `max_degree`. Pivots are taken at the
/// latest generators of `W` so that early generators stay in `Z`.
pub fn extension_split(
    v: &SullivanAlgebra,
    w: &SullivanAlgebra,
    lambda: &CdgaMorphism,
    max_degree: u32,
) -> Result<SplitOutcome> {
    let mut q: Vec<Option<Poly>> = vec![None; w.len()];
    let mut pivots = Vec::new();
    let mut is_pivot = vec![false; w.len()];
    let mut z = Vec::new();
    let mut z_index = vec![usize::MAX; w.len()];
    let mut zgca = Gca { gens: Vec::new(), graded: w.gca.graded };
    for k in 1..=max_degree {
        let vs: Vec<usize> = (0..v.len()).filter(|&i| v.gen(i).degree == k).collect();
        let ws: Vec<usize> = (0..w.len()).filter(|&i| w.gen(i).degree == k).collect();
        let cols = linear_cols(lambda, &vs, &ws);
        if let Some(kv) = linalg::kernel(&cols).into_iter().next() {
            let kernel = kv.iter().map(|(i, c)| (v.gen(vs[*i]).name.clone(), q_to_string(c))).collect();
            return Ok(SplitOutcome::Failure(FailureWitness { degree: k, kernel }));
        }
        let mut ech = Echelon::new();
        let mut piv_pos = Vec::new();
        for c in &cols {
            let p = ech.insert(c).map_err(|_| Error::Hypothesis("linear part not injective".into()))?;
            piv_pos.push(p);
        }
        let n = ws.len();
        let piv_w: Vec<usize> = piv_pos.iter().map(|p| ws[n - 1 - p]).collect();
        for &pw in &piv_w {
            is_pivot[pw] = true;
        }
        for &wi in &ws {
            if !is_pivot[wi] {
                z_index[wi] = zgca.gens.len();
                zgca.push(w.gen(wi).clone());
                z.push(wi);
                q[wi] = Some(Poly::gen(z_index[wi]));
            }
        }
        // restriction of each linear part to the pivot coordinates
        let restricted: Vec<SparseVec> = cols
            .iter()
            .map(|c| {
                let mut r: SparseVec = c
                    .iter()
                    .filter_map(|(pos, x)| piv_pos.iter().position(|p| p == pos).map(|j| (j, x.clone())))
                    .collect();
                r.sort_by_key(|e| e.0);
                r
            })
            .collect();
        let mut new_q = Vec::new();
        for (j, &pw) in piv_w.iter().enumerate() {
            let coeffs = linalg::solve(&restricted, &vec![(j, Q::from_integer(1.into()))])
                .ok_or_else(|| Error::Hypothesis("pivot system singular".into()))?;
            let mut e = Poly::zero();
            for (i, c) in coeffs {
                e.add_assign_scaled(&c, &lambda.values[vs[i]]);
            }
            // q(w_p) = -(q(e) - w_p) with q(w_p) unknown; every other term is known
            let mut rest = e.clone();
            rest.add_term(Mono::gen(pw), -Q::from_integer(1.into()));
            let mut img = Poly::zero();
            for (m, c) in &rest.terms {
                let mut t = Poly::one();
                for &(g, ex) in &m.0 {
                    let qg = q[g as usize].as_ref().ok_or_else(|| {
                        Error::Hypothesis(format!("λ({}) involves a pivot linearly", v.gen(vs[j]).name))
                    })?;
                    for _ in 0..ex {
                        t = zgca.mul(&t, qg);
                    }
                }
                img.add_assign_scaled(c, &t);
            }
            new_q.push((pw, img.neg()));
            pivots.push((vs[j], pw));
        }
        for (pw, img) in new_q {
            q[pw] = Some(img);
        }
    }
    let mut quotient = SullivanAlgebra::new(zgca);
    for (zi, &wi) in z.iter().enumerate() {
        let dw = &w.d.values[wi];
        let mut img = Poly::zero();
        for (m, c) in &dw.terms {
            let mut t = Poly::one();
            for &(g, ex) in &m.0 {
                let qg = q[g as usize]
                    .as_ref()
                    .ok_or_else(|| Error::CapExhausted(format!("d{} leaves the degree cap", w.gen(wi).name)))?;
                for _ in 0..ex {
                    t = quotient.gca.mul(&t, qg);
                }
            }
            img.add_assign_scaled(c, &t);
        }
        quotient.d.values[zi] = img;
    }
    Ok(SplitOutcome::Split(Split { pivots, z, quotient, q }))
}
