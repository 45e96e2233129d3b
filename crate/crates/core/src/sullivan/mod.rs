//! Sullivan algebras and the constructions built on them: relative and
//! minimal models, quadratic models of wedges of spheres, acyclic closures
//! and extension splittings.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gca::{Derivation, Gca, Generator, Mono, Poly, WeightSel};
use crate::rational::Q;

mod closure;
pub mod finite;
mod quadratic;
mod relative;
mod split;

pub use closure::{acyclic_closure, AcyclicClosure};
pub use finite::{CdgaCache, CdgaPresentation, Elem, FiniteCdga, Truncated};
pub use quadratic::{quadratic_model, QuadraticModel, SphereClass};
pub use relative::{check_quasi_iso, minimal_model, relative_model, RelativeModel};
pub use split::{extension_split, FailureWitness, Split, SplitOutcome};

/// Free graded-commutative algebra with a differential, generators ordered
/// so that `d` of each generator only involves earlier ones.
#[derive(Debug, Clone, PartialEq)]
pub struct SullivanAlgebra {
    pub gca: Gca,
    pub d: Derivation,
}

impl SullivanAlgebra {
    pub fn new(gca: Gca) -> Self {
        let n = gca.len();
        SullivanAlgebra { gca, d: Derivation::zero(1, n) }
    }

    pub fn empty(graded: bool) -> Self {
        let gca = if graded { Gca::graded(Vec::new()) } else { Gca::new(Vec::new()) };
        SullivanAlgebra::new(gca)
    }

    pub fn len(&self) -> usize {
        self.gca.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gca.is_empty()
    }

    /// Appends a generator with the given differential.
    pub fn push(&mut self, g: Generator, dg: Poly) -> usize {
        let i = self.gca.push(g);
        self.d.values.push(dg);
        i
    }

    pub fn gen(&self, i: usize) -> &Generator {
        &self.gca.gens[i]
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.gca.find(name)
    }

    pub fn diff(&self, p: &Poly) -> Poly {
        self.gca.apply(&self.d, p).expect("differential covers every generator")
    }

    pub fn check_square_zero(&self) -> Result<()> {
        self.gca.check_square_zero(&self.d)
    }

    /// `d` has no linear part.
    pub fn is_minimal(&self) -> bool {
        self.d.values.iter().all(|v| v.terms.keys().all(|m| m.length() != 1))
    }

    /// `d` is purely quadratic.
    pub fn is_quadratic(&self) -> bool {
        self.d.values.iter().all(|v| v.terms.keys().all(|m| m.length() == 2))
    }

    /// Generator counts per degree, index = degree.
    pub fn degree_counts(&self, max_degree: u32) -> Vec<usize> {
        let mut out = vec![0; max_degree as usize + 1];
        for g in &self.gca.gens {
            if g.degree <= max_degree {
                out[g.degree as usize] += 1;
            }
        }
        out
    }

    /// Generator counts of one degree, index = weight.
    pub fn weight_counts(&self, degree: u32, max_weight: u32) -> Vec<usize> {
        let mut out = vec![0; max_weight as usize + 1];
        for g in &self.gca.gens {
            if g.degree == degree && g.weight <= max_weight {
                out[g.weight as usize] += 1;
            }
        }
        out
    }

    /// Stage of each generator: 0 for cocycles, else one more than the
    /// largest stage appearing in its differential.
    pub fn stages(&self) -> Vec<u32> {
        let mut st: Vec<u32> = Vec::with_capacity(self.len());
        for v in &self.d.values {
            let s = v
                .terms
                .keys()
                .flat_map(|m| m.0.iter().map(|&(g, _)| st.get(g as usize).copied().unwrap_or(0) + 1))
                .max()
                .unwrap_or(0);
            st.push(s);
        }
        st
    }

    /// Betti numbers of `(ΛV, d)` in degrees `0..=max_degree`. For graded
    /// algebras the weights are restricted to `max_weight` when given.
    pub fn cohomology_dims(&self, max_degree: u32, max_weight: Option<u32>) -> Result<Vec<usize>> {
        let sel = max_weight.map(WeightSel::AtMost).unwrap_or(WeightSel::Any);
        (0..=max_degree).map(|k| Ok(self.gca.cohomology(&self.d, k, sel)?.dim)).collect()
    }

    /// Cohomology dimension of one `(degree, weight)` block.
    pub fn cohomology_block(&self, k: u32, w: u32) -> Result<usize> {
        Ok(self.gca.cohomology(&self.d, k, WeightSel::Exactly(w))?.dim)
    }

    /// Differential truncated to its quadratic part.
    pub fn quadratic_part(&self) -> SullivanAlgebra {
        SullivanAlgebra {
            gca: self.gca.clone(),
            d: Derivation { shift: 1, values: self.d.values.iter().map(|v| v.wedge_part(2)).collect() },
        }
    }

    /// Linear part `d_0` of the differential.
    pub fn linear_part(&self) -> Vec<Poly> {
        self.d.values.iter().map(|v| v.wedge_part(1)).collect()
    }

    pub fn fmt_poly(&self, p: &Poly) -> String {
        self.gca.fmt_poly(p)
    }

    pub fn to_doc(&self) -> SullivanDoc {
        SullivanDoc {
            graded: self.gca.graded,
            generators: self
                .gca
                .gens
                .iter()
                .zip(&self.d.values)
                .map(|(g, dv)| GeneratorDoc {
                    name: g.name.clone(),
                    degree: g.degree,
                    weight: g.weight,
                    d: self.fmt_poly(dv),
                })
                .collect(),
        }
    }
}

impl fmt::Display for SullivanAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (g, dv) in self.gca.gens.iter().zip(&self.d.values) {
            if self.gca.graded {
                writeln!(f, "{} (deg {}, wt {}): d = {}", g.name, g.degree, g.weight, self.fmt_poly(dv))?;
            } else {
                writeln!(f, "{} (deg {}): d = {}", g.name, g.degree, self.fmt_poly(dv))?;
            }
        }
        Ok(())
    }
}

/// Serializable view of a Sullivan algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SullivanDoc {
    pub graded: bool,
    pub generators: Vec<GeneratorDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub name: String,
    pub degree: u32,
    pub weight: u32,
    pub d: String,
}

/// Algebra map `ΛV → ΛW` given on generators.
#[derive(Debug, Clone, PartialEq)]
pub struct CdgaMorphism {
    pub values: Vec<Poly>,
}

impl CdgaMorphism {
    pub fn apply_mono(&self, target: &Gca, m: &Mono) -> Poly {
        let mut out = Poly::one();
        for &(g, e) in &m.0 {
            for _ in 0..e {
                out = target.mul(&out, &self.values[g as usize]);
            }
        }
        out
    }

    pub fn apply(&self, target: &Gca, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &p.terms {
            if !c.is_zero() {
                out.add_assign_scaled(c, &self.apply_mono(target, m));
            }
        }
        out
    }

    /// Checks `d_W ∘ φ = φ ∘ d_V` on generators.
    pub fn check_chain_map(&self, source: &SullivanAlgebra, target: &SullivanAlgebra) -> Result<()> {
        for (i, v) in self.values.iter().enumerate() {
            let lhs = target.diff(v);
            let rhs = self.apply(&target.gca, &source.d.values[i]);
            if lhs != rhs {
                return Err(Error::NotChainMap(source.gen(i).name.clone()));
            }
        }
        Ok(())
    }
}

/// Coefficient helper for tests and reports.
pub fn coeff(p: &Poly, m: &Mono) -> Q {
    p.terms.get(m).cloned().unwrap_or_else(Q::zero)
}

#[cfg(test)]
mod tests;
