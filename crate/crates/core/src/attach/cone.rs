//! The cone `(ΛW ⊕ Q a, D)` with `D Φ = dΦ + ε(Φ) a`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gca::{Poly, WeightSel};
use crate::rational::Q;
use crate::sullivan::{CdgaCache, FiniteCdga, SullivanAlgebra, Truncated};

use super::trace::AttachTrace;

#[derive(Debug, Clone)]
pub struct ConeCdga {
    /// `ΛW`; weight grading is dropped when `ε` is not homogeneous.
    pub base: SullivanAlgebra,
    pub n: u32,
    pub eps: Vec<Q>,
    /// Weight of `a` (0 for ungraded cones).
    pub a_weight: u32,
}

pub fn cone_cdga(trace: &AttachTrace) -> Result<ConeCdga> {
    trace.check_closed()?;
    let mut base = trace.algebra.clone();
    let a_weight = if !base.gca.graded {
        0
    } else if trace.is_zero() {
        1
    } else {
        match trace.weight() {
            Some(w) => w,
            None => {
                base.gca.graded = false;
                0
            }
        }
    };
    Ok(ConeCdga { base, n: trace.n, eps: trace.values.clone(), a_weight })
}

impl ConeCdga {
    pub fn graded(&self) -> bool {
        self.base.gca.graded
    }

    /// `D g = (d g, ε(g))`, the second entry being the coefficient of `a`.
    pub fn d_gen(&self, g: usize) -> (Poly, Q) {
        (self.base.d.values[g].clone(), self.eps[g].clone())
    }

    fn eps_of(&self, p: &Poly) -> Q {
        let mut s = Q::zero();
        for (g, e) in self.eps.iter().enumerate() {
            if !e.is_zero() {
                s += e * p.coeff_of_gen(g);
            }
        }
        s
    }

    /// `D² = 0` on generators: `d² g = 0` and `ε(d g) = 0`.
    pub fn check_square_zero(&self) -> Result<()> {
        self.base.check_square_zero()?;
        for g in 0..self.base.len() {
            if !self.eps_of(&self.base.d.values[g]).is_zero() {
                return Err(Error::NotSquareZero(self.base.gen(g).name.clone()));
            }
        }
        Ok(())
    }

    /// Division by `a` gives back `(ΛW, d)` exactly.
    pub fn quotient_is_base(&self, w: &SullivanAlgebra) -> bool {
        w.len() == self.base.len()
            && (0..w.len()).all(|g| self.d_gen(g).0 == w.d.values[g] && self.base.gen(g) == w.gen(g))
    }

    /// `ΛW^{≤ top} ⊕ Q a` as a finite cdga.
    pub fn truncated(&self, top: u32, sel: WeightSel) -> Result<Truncated<'_>> {
        Ok(Truncated::new(&self.base, top, sel)?.with_cone(self.n, self.a_weight, self.eps.clone()))
    }

    /// Betti numbers of the cone in degrees `0..top` (degree `top` is cut).
    pub fn cohomology_dims(&self, top: u32, sel: WeightSel) -> Result<Vec<usize>> {
        let t = self.truncated(top + 1, sel)?;
        let mut cache = CdgaCache::new(&t);
        Ok((0..=top).map(|k| t.weights(k).iter().map(|&w| cache.h_dim(k, w)).sum()).collect())
    }
}
