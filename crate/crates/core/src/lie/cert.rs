//! Dimension certificate for the free Lie structure of the fibre of an
//! inert attachment.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::sullivan::SullivanAlgebra;

use super::bracket::stage_filtration;
use super::tensor::Letter;
use super::witt::witt_dims_bounded;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeLieCertificate {
    /// `dim (Z ∩ ker d̄₁)` per `(degree, weight)`.
    pub generator_dims: Vec<((u32, u32), usize)>,
    pub prop5_match: bool,
    pub free_dims_match: bool,
    pub mismatches: Vec<String>,
}

/// Inputs: the fibre algebra `(ΛZ, d̄)`, the cell dimension shift `n`, the
/// weight of the attached class, and `dim (ΛU)` per `(degree, weight)`.
/// Checks `dim (Z ∩ ker d̄₁)_{k,m} = dim (ΛU)_{k-n, m-a}` and that the
/// stage filtration of `Z` has the dimensions of the lower central series
/// of the free Lie algebra on the dual of `Z ∩ ker d̄₁`.
pub fn theorem3_certificate(
    z: &SullivanAlgebra,
    n: u32,
    a_weight: u32,
    u_dims: &BTreeMap<(u32, u32), usize>,
    max_degree: u32,
    max_r: u32,
) -> Result<FreeLieCertificate> {
    let filt = stage_filtration(z, max_degree, max_r.saturating_sub(2))?;
    let base = &filt[0];
    let mut mismatches = Vec::new();
    let mut generator_dims = Vec::new();
    let mut letters = Vec::new();
    for &(k, m) in base.gens.keys() {
        let dim = base.dim((k, m));
        generator_dims.push(((k, m), dim));
        for i in 0..dim {
            letters.push(Letter::weighted(format!("s{k}_{m}_{i}"), k.saturating_sub(1), m));
        }
    }
    let mut prop5 = true;
    let weights: Vec<u32> = {
        let mut w: Vec<u32> = base.gens.keys().map(|b| b.1).chain(u_dims.keys().map(|b| b.1 + a_weight)).collect();
        w.sort_unstable();
        w.dedup();
        w
    };
    for k in 1..=max_degree {
        for &m in &weights {
            let got = base.dim((k, m));
            let want =
                if k >= n && m >= a_weight { u_dims.get(&(k - n, m - a_weight)).copied().unwrap_or(0) } else { 0 };
            if got != want {
                prop5 = false;
                mismatches.push(format!("ker d₁ in degree {k}, weight {m}: {got} vs {want} from the closure"));
            }
        }
    }
    let witt = witt_dims_bounded(&letters, max_r.max(1), Some(max_degree.saturating_sub(1)));
    let mut free = true;
    for r in 2..=max_r {
        let st = &filt[(r - 2) as usize];
        for &(k, m) in st.gens.keys() {
            if k == 0 {
                continue;
            }
            let got = st.dim((k, m));
            let want: usize = (1..r).map(|s| witt.get(&(s, k - 1, m)).copied().unwrap_or(0)).sum();
            if got != want {
                free = false;
                mismatches.push(format!("stage {} in degree {k}, weight {m}: {got} vs free {want}", r - 2));
            }
        }
    }
    Ok(FreeLieCertificate { generator_dims, prop5_match: prop5, free_dims_match: free, mismatches })
}
