//! Quadratic minimal models of wedges of spheres.
//!
//! `V` is built weight by weight: the generators of weight `m` have
//! differentials running over a basis of the cocycles in `Λ²` of the
//! generators of smaller weight. Work is split by multidegree (one
//! coordinate per sphere) so the linear algebra stays small.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gca::{Derivation, Gca, Generator, Mono, Poly};
use crate::linalg::{self, SparseVec};

use super::SullivanAlgebra;

/// One sphere of the wedge: its fundamental class has `degree` and
/// `weight`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereClass {
    pub name: String,
    pub degree: u32,
    pub weight: u32,
}

impl SphereClass {
    pub fn new(name: impl Into<String>, degree: u32, weight: u32) -> Self {
        SphereClass { name: name.into(), degree, weight }
    }

    /// Classes `z1, …, zk` of weight one.
    pub fn wedge(degrees: &[u32]) -> Vec<SphereClass> {
        degrees.iter().enumerate().map(|(i, d)| SphereClass::new(format!("z{}", i + 1), *d, 1)).collect()
    }
}

#[derive(Debug, Clone)]
pub struct QuadraticModel {
    pub alg: SullivanAlgebra,
    pub classes: Vec<SphereClass>,
    /// Multidegree of each generator, one entry per class.
    pub multideg: Vec<Vec<u32>>,
    /// Generators are complete through this degree.
    pub max_degree: u32,
    /// Generators are complete through this weight.
    pub max_weight: u32,
}

impl QuadraticModel {
    /// Generators of the given degree and weight.
    pub fn block(&self, degree: u32, weight: u32) -> Vec<usize> {
        (0..self.alg.len()).filter(|&i| self.alg.gen(i).degree == degree && self.alg.gen(i).weight == weight).collect()
    }

    /// Generators of one multidegree and degree.
    pub fn multi_block(&self, degree: u32, mu: &[u32]) -> Vec<usize> {
        (0..self.alg.len()).filter(|&i| self.alg.gen(i).degree == degree && self.multideg[i] == mu).collect()
    }
}

/// Quadratic minimal model of the wedge of the given spheres, through
/// generator degree `max_degree` and weight `max_weight`. A weight cap is
/// required when some sphere is a circle.
pub fn quadratic_model(classes: &[SphereClass], max_degree: u32, max_weight: Option<u32>) -> Result<QuadraticModel> {
    if classes.iter().any(|c| c.degree == 0 || c.weight == 0) {
        return Err(Error::Input("sphere classes need positive degree and weight".into()));
    }
    let has_circle = classes.iter().any(|c| c.degree == 1);
    let max_class_w = classes.iter().map(|c| c.weight).max().unwrap_or(1);
    let wmax = match max_weight {
        Some(w) => w,
        None if has_circle => {
            return Err(Error::CapMissing("a wedge with circles needs a weight cap".into()));
        }
        None => max_degree.saturating_sub(1).max(1) * max_class_w,
    };
    let r = classes.len();
    let mut gca = Gca::graded(Vec::new());
    let mut d: Vec<Poly> = Vec::new();
    let mut multideg: Vec<Vec<u32>> = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        if c.degree <= max_degree && c.weight <= wmax {
            gca.push(Generator::weighted(c.name.clone(), c.degree, c.weight));
            d.push(Poly::zero());
            let mut mu = vec![0; r];
            mu[i] = 1;
            multideg.push(mu);
        }
    }
    let mut counters: HashMap<u32, usize> = HashMap::new();
    let mut alg = SullivanAlgebra { gca, d: Derivation { shift: 1, values: d } };
    for m in 2..=wmax {
        let n = alg.len();
        let mut groups: BTreeMap<(Vec<u32>, u32), Vec<Mono>> = BTreeMap::new();
        for i in 0..n {
            let gi = alg.gen(i);
            if gi.weight >= m {
                continue;
            }
            for j in i..n {
                let gj = alg.gen(j);
                if gi.weight + gj.weight != m || gi.degree + gj.degree > max_degree + 1 {
                    continue;
                }
                let mono = if i == j {
                    if gi.is_odd() {
                        continue;
                    }
                    Mono(vec![(i as u32, 2)])
                } else {
                    Mono(vec![(i as u32, 1), (j as u32, 1)])
                };
                let mu: Vec<u32> = multideg[i].iter().zip(&multideg[j]).map(|(a, b)| a + b).collect();
                groups.entry((mu, gi.degree + gj.degree)).or_default().push(mono);
            }
        }
        let mut new: Vec<(Generator, Poly, Vec<u32>)> = Vec::new();
        for ((mu, deg), monos) in groups {
            let mut index: HashMap<Mono, usize> = HashMap::new();
            let mut cols: Vec<SparseVec> = Vec::with_capacity(monos.len());
            for mo in &monos {
                let img = alg.gca.apply_mono(&alg.d, mo)?;
                let mut v: SparseVec = Vec::new();
                for (t, c) in img.terms {
                    let k = index.len();
                    let k = *index.entry(t).or_insert(k);
                    v.push((k, c));
                }
                v.sort_by_key(|e| e.0);
                cols.push(v);
            }
            for kv in linalg::kernel(&cols) {
                let mut dv = Poly::zero();
                for (i, c) in kv {
                    dv.add_term(monos[i].clone(), c);
                }
                let c = counters.entry(deg - 1).or_insert(0);
                *c += 1;
                let g = Generator::weighted(format!("w{}_{}", deg - 1, c), deg - 1, m);
                new.push((g, dv, mu.clone()));
            }
        }
        for (g, dv, mu) in new {
            alg.push(g, dv);
            multideg.push(mu);
        }
    }
    Ok(QuadraticModel { alg, classes: classes.to_vec(), multideg, max_degree, max_weight: wmax })
}
