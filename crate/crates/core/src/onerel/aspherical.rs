//! The quadratic model `(ΛV, d₁)`, the circle-case inertness verdict and asphericity.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::attach::{
    cohomology_table, fiber_rows, monomial_dims, products_vanish, wedge_like_rows, Check, FiberReport, FiberTable,
    InertnessVerdict, Status,
};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::gca::{Gca, Generator, Mono, Poly, WeightSel};
use crate::lie::theorem3_certificate;
use crate::linalg::{Echelon, Reduced, SparseVec};
use crate::sullivan::{extension_split, CdgaMorphism, FailureWitness, SplitOutcome, SullivanAlgebra, SullivanDoc};

use super::d0::{vec_poly, D0Datum};
use super::dglie::{build_dg_lie, dg_lie_homology, DgLieHomology};
use super::{build_d0, OneRelatorScenario, StepTwoStage};

/// `(ΛV, d₁)` with `V ⊂ W¹`, and the inclusion into the degree-one part of
/// `ΛW`.
#[derive(Debug, Clone)]
pub struct CorollaryModel {
    pub alg: SullivanAlgebra,
    /// `ΛW¹` with `d₁`.
    pub w1: SullivanAlgebra,
    /// Generators of `V` as polynomials in `ΛW¹`.
    pub inclusion: CdgaMorphism,
}

/// `ΛW¹` on its own, with the map from indices of `W`.
fn degree_one_part(d: &D0Datum) -> (SullivanAlgebra, HashMap<usize, usize>) {
    let alg = &d.model.alg;
    let mut w1 = SullivanAlgebra::empty(true);
    let mut map = HashMap::new();
    for g in 0..alg.len() {
        if alg.gen(g).degree == 1 {
            map.insert(g, w1.len());
            let dg = remap(&alg.d.values[g], &map);
            w1.push(alg.gen(g).clone(), dg);
        }
    }
    (w1, map)
}

fn remap(p: &Poly, map: &HashMap<usize, usize>) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in &p.terms {
        out.add_term(Mono(m.0.iter().map(|&(g, e)| (map[&(g as usize)] as u32, e)).collect()), c.clone());
    }
    out
}

fn to_vec(p: &Poly, index: &mut HashMap<Mono, usize>) -> SparseVec {
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

/// Writes `d₁v` for each basis vector `v` in terms of products `v_i v_j`
/// of earlier-or-equal leading weight. The basis must be ordered by
/// leading weight.
fn build_model(d: &D0Datum, basis: &[(u32, SparseVec)], graded: bool) -> Result<CorollaryModel> {
    let (w1, map) = degree_one_part(d);
    let gca = &d.model.alg.gca;
    let polys: Vec<Poly> = basis.iter().map(|(_, v)| vec_poly(v)).collect();
    let mut alg = SullivanAlgebra::empty(graded);
    let mut inclusion = CdgaMorphism { values: Vec::new() };
    let mut index: HashMap<Mono, usize> = HashMap::new();
    let mut ech = Echelon::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut inserted: BTreeMap<u32, bool> = BTreeMap::new();
    let mut counters: BTreeMap<u32, usize> = BTreeMap::new();
    for (k, (m, v)) in basis.iter().enumerate() {
        for s in 2..=*m {
            if inserted.insert(s, true).is_some() {
                continue;
            }
            for i in 0..k {
                for j in i + 1..k {
                    if basis[i].0 + basis[j].0 == s {
                        let prod = gca.mul(&polys[i], &polys[j]);
                        ech.insert(&to_vec(&prod, &mut index)).ok();
                        pairs.push((i, j));
                    }
                }
            }
        }
        let mut d1v = Poly::zero();
        for (g, c) in v {
            d1v.add_assign_scaled(c, &d.model.alg.d.values[*g]);
        }
        let mut dv = Poly::zero();
        if !d1v.is_zero() {
            let t = to_vec(&d1v, &mut index);
            match ech.reduce(&t) {
                Reduced::InSpan(x) => {
                    for (p, c) in x {
                        let (i, j) = pairs[p];
                        dv.add_term(Mono(vec![(i as u32, 1), (j as u32, 1)]), c);
                    }
                }
                Reduced::Independent(_) => return Err(Error::Falsified("d₁(V) is not contained in Λ²V".into())),
            }
        }
        let c = counters.entry(*m).or_insert(0);
        *c += 1;
        alg.push(Generator::weighted(format!("v{m}_{c}"), 1, *m), dv);
        inclusion.values.push(remap(&polys[k], &map));
    }
    Ok(CorollaryModel { alg, w1, inclusion })
}

/// `V = W¹ ∩ ker d₀` with `d₁`; minimal model of the 2-cell complex.
pub fn corollary_model(d: &D0Datum) -> Result<CorollaryModel> {
    build_model(d, &d.corollary_basis(), false)
}

/// Same with `d₀` replaced by its weight-preserving part; weight graded.
fn graded_model(d: &D0Datum) -> Result<CorollaryModel> {
    let basis: Vec<(u32, SparseVec)> =
        d.graded_kernel().into_iter().flat_map(|(m, vs)| vs.into_iter().map(move |v| (m, v))).collect();
    build_model(d, &basis, true)
}

/// Every generator through `max_degree` has degree one.
pub fn model_aspherical(m: &SullivanAlgebra, max_degree: u32) -> bool {
    m.gca.gens.iter().all(|g| g.degree == 1 || g.degree > max_degree)
}

/// Asphericity of `X` against that of `X` with 2-cells attached, both
/// read off their models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhiteheadCheck {
    pub complex_aspherical: bool,
    pub subcomplex_aspherical: bool,
    /// The complex being aspherical forces the subcomplex to be.
    pub holds: bool,
}

pub fn whitehead_check(subcomplex: &SullivanAlgebra, complex: &SullivanAlgebra, max_degree: u32) -> WhiteheadCheck {
    let big = model_aspherical(complex, max_degree);
    let small = model_aspherical(subcomplex, max_degree);
    WhiteheadCheck { complex_aspherical: big, subcomplex_aspherical: small, holds: !big || small }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OneRelatorReport {
    pub r: usize,
    pub word: String,
    pub caps: Caps,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leading_length: Option<u32>,
    /// `H_q` of the leading-term complex per `(q, length)`.
    pub homology: DgLieHomology,
    /// `H_0` per length `1..=L`.
    pub h0_dims: Vec<usize>,
    /// `dim gr (W¹ ∩ ker d₀)` per length `1..=L`.
    pub v_dims: Vec<usize>,
    /// `dim H^k(W, d₀)` for `k = 1..=N`.
    pub d0_cohomology: Vec<usize>,
    pub step_two: Vec<StepTwoStage>,
    pub aspherical: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corollary: Option<SullivanDoc>,
    pub verdict: InertnessVerdict,
}

/// Graded fibre `ΛZ = ΛW¹/(V_gr)` and everything checked on it.
struct GradedFibre {
    report: FiberReport,
    wedge_like: bool,
    checks: Vec<Check>,
    certificate: Option<crate::lie::FreeLieCertificate>,
}

fn graded_fibre(d: &D0Datum, n: u32, caps: Caps, inert: bool) -> Result<GradedFibre> {
    let nn = caps.max_degree;
    let l = d.max_weight;
    let gm = graded_model(d)?;
    let mut checks = vec![Check::new("d₁(V_gr) ⊆ Λ²V_gr", gm.alg.check_square_zero().is_ok())];
    checks.push(Check::new("V_gr → W¹ chain map", gm.inclusion.check_chain_map(&gm.alg, &gm.w1).is_ok()));
    let split = match extension_split(&gm.alg, &gm.w1, &gm.inclusion, nn)? {
        SplitOutcome::Split(s) => s,
        SplitOutcome::Failure(f) => {
            return Err(Error::Falsified(format!("V_gr → W¹ not injective in degree {}", f.degree)));
        }
    };
    let z = split.quotient;
    let sel = WeightSel::AtMost(l);
    let table = cohomology_table(&z, nn, sel)?;
    let rows = wedge_like_rows(&z, &table, nn)?;
    let wedge_like = rows.iter().all(|r| r.h == r.rho && r.rho == r.kappa);
    // ΛU of the acyclic closure only depends on the degrees and weights of U = s⁻¹V
    let u = Gca {
        gens: gm
            .alg
            .gca
            .gens
            .iter()
            .map(|g| Generator::weighted(format!("u_{}", g.name), g.degree - 1, g.weight))
            .collect(),
        graded: true,
    };
    let u_dims: BTreeMap<(u32, u32), usize> =
        if l >= n { monomial_dims(&u, nn, WeightSel::AtMost(l - n))? } else { BTreeMap::new() };
    let frows = fiber_rows(&table, &u_dims, 1, n, nn);
    let matches = frows.iter().all(|r| r.fiber == r.closure);
    let products = products_vanish(&z, &table, nn, sel)?;
    checks.push(Check::new("H(ΛZ) ≅ Qa ⊗ ΛU", matches));
    let mut certificate = None;
    if inert {
        checks.push(Check::new("H⁺(ΛZ) · H⁺(ΛZ) = 0", products));
        let c = theorem3_certificate(&z, 1, n, &u_dims, nn, nn)?;
        checks.push(Check::new("Z ∩ ker d̄ ≅ Qa ⊗ ΛU", c.prop5_match));
        checks.push(Check::new("L_Z free on (Z ∩ ker d̄)^∨", c.free_dims_match));
        certificate = Some(c);
    }
    Ok(GradedFibre {
        report: FiberReport {
            generators: z.to_doc(),
            table: FiberTable { rows: frows, matches, products_vanish: products },
            wedge_rows: rows,
        },
        wedge_like,
        checks,
        certificate,
    })
}

/// Runs the whole pipeline: dg Lie homology, `d₀` with its identities,
/// `H(W, d₀)`, the quadratic model and the graded fibre.
pub fn aspherical_check(s: &OneRelatorScenario) -> Result<OneRelatorReport> {
    let nn = s.caps.max_degree;
    let dg = build_dg_lie(s)?;
    let homology = dg_lie_homology(&dg);
    let d = build_d0(s)?;
    let mut checks = d.checks()?;
    let mut notes = Vec::new();

    let graded = d.graded_cohomology();
    let dual = graded.iter().all(|(&(k, m), &h)| h == homology.get(k - 1, m))
        && homology
            .rows
            .iter()
            .filter(|r| r.q < nn)
            .all(|r| graded.get(&(r.q + 1, r.weight)).copied().unwrap_or(0) == r.homology);
    checks.push(Check::new("H^{q+1}(W, d₀^gr) ≅ H_q(𝕃, ∂)^∨", dual));

    let h0_dims = homology.h0_dims();
    let v_dims = d.v_dims();
    checks.push(Check::with_detail(
        "dim V = dim H_0 per length",
        v_dims == h0_dims,
        format!("{v_dims:?} vs {h0_dims:?}"),
    ));

    let d0_cohomology = d.cohomology();
    let aspherical = d0_cohomology.iter().skip(1).all(|&h| h == 0);
    let criterion_i = homology.higher_vanish();
    checks.push(Check::new("inert ⇔ aspherical", criterion_i == aspherical));

    let corollary = corollary_model(&d)?;
    checks.push(Check::new("d₁(V) ⊆ Λ²V", corollary.alg.check_square_zero().is_ok()));
    checks.push(Check::new(
        "V → W¹ chain map",
        corollary.inclusion.check_chain_map(&corollary.alg, &corollary.w1).is_ok(),
    ));

    let (criterion_ii, fiber, certificate) = match d.n {
        Some(n) => {
            let f = graded_fibre(&d, n, s.caps, criterion_i)?;
            checks.push(Check::new("criteria (i) and (ii) agree", criterion_i == f.wedge_like));
            checks.extend(f.checks);
            (Some(f.wedge_like), Some(f.report), f.certificate)
        }
        None => {
            notes.push("trivial word: dy = 0, the cone is X ∨ S²".into());
            (None, None, None)
        }
    };
    let witness = homology.first_higher().map(|q| FailureWitness { degree: q + 1, kernel: Vec::new() });
    let verdict = InertnessVerdict {
        status: if criterion_i { Status::InertUpToCaps } else { Status::NotInert },
        witness,
        criterion_i,
        criterion_ii,
        fiber,
        certificate,
        checks,
        caps: s.caps,
        notes,
    };
    Ok(OneRelatorReport {
        r: s.r,
        word: s.word.clone(),
        caps: s.caps,
        leading_length: d.n,
        homology,
        h0_dims,
        v_dims,
        d0_cohomology,
        step_two: d.step_two.clone(),
        aspherical,
        corollary: Some(corollary.alg.to_doc()),
        verdict,
    })
}

pub fn one_relator_verdict(s: &OneRelatorScenario) -> Result<InertnessVerdict> {
    Ok(aspherical_check(s)?.verdict)
}
