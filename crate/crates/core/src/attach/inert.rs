//! Deciding inertness of a cell attachment and the checks that come with it.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::gca::{Poly, WeightSel};
use crate::lie::{theorem3_certificate, FreeLieCertificate};
use crate::sullivan::{
    acyclic_closure, extension_split, minimal_model, relative_model, AcyclicClosure, CdgaMorphism, Elem,
    FailureWitness, Split, SplitOutcome, SullivanAlgebra, SullivanDoc, Truncated,
};

use super::cone::{cone_cdga, ConeCdga};
use super::fiber::{
    cohomology_table, fiber_rows, monomial_dims, products_vanish, wedge_like_rows, FiberTable, WedgeRow,
};
use super::trace::{attach_trace, AttachTrace, ClassSpec};

/// Extra degrees carried by the cone truncation. The top degree of the
/// truncation is cut, its minimal model is right two below, the fibre
/// three below.
pub const SLACK: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    InertUpToCaps,
    NotInert,
    UndecidedAtCaps,
}

/// One identity checked along the way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: &str, passed: bool) -> Self {
        Check { name: name.into(), passed, detail: None }
    }

    pub fn with_detail(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: Some(detail.into()) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiberReport {
    pub generators: SullivanDoc,
    pub table: FiberTable,
    /// `(h, ρ, κ)` per degree and weight.
    pub wedge_rows: Vec<WedgeRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InertnessVerdict {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<FailureWitness>,
    /// Injectivity of `λ` on indecomposables.
    pub criterion_i: bool,
    /// The fibre is wedge-like; `None` when not evaluated.
    pub criterion_ii: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fiber: Option<FiberReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<FreeLieCertificate>,
    pub checks: Vec<Check>,
    pub caps: Caps,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl InertnessVerdict {
    pub fn inert(&self) -> bool {
        self.status == Status::InertUpToCaps
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn undecided(caps: Caps, why: String) -> Self {
        InertnessVerdict {
            status: Status::UndecidedAtCaps,
            witness: None,
            criterion_i: false,
            criterion_ii: None,
            fiber: None,
            certificate: None,
            checks: Vec::new(),
            caps,
            notes: vec![why],
        }
    }
}

/// Everything computed on the way to a verdict.
#[derive(Debug, Clone)]
pub struct AttachAnalysis {
    pub verdict: InertnessVerdict,
    pub cone: ConeCdga,
    /// Minimal model `ΛV` of the cone.
    pub model: SullivanAlgebra,
    /// `λ: ΛV → ΛW`.
    pub lambda: CdgaMorphism,
    /// `ΛZ` of the factorisation `ΛV → ΛV ⊗ ΛZ ≃ ΛW`.
    pub fiber: SullivanAlgebra,
    pub closure: AcyclicClosure,
    pub split: Option<Split>,
}

/// Same as [`inertness_analysis`] with the class given by a spec.
/// Wedges of circles go through the one-relator pipeline.
pub fn inertness_check(w: &SullivanAlgebra, n: u32, spec: &ClassSpec, caps: Caps) -> Result<InertnessVerdict> {
    if (0..w.len()).any(|g| w.gen(g).degree == 1) {
        return circle_verdict(w, n, spec, caps);
    }
    let trace = attach_trace(w, n, spec, caps.max_length)?;
    match inertness_analysis(&trace, caps) {
        Ok(a) => Ok(a.verdict),
        Err(Error::CapExhausted(why)) => Ok(InertnessVerdict::undecided(caps, why)),
        Err(e) => Err(e),
    }
}

fn circle_verdict(w: &SullivanAlgebra, n: u32, spec: &ClassSpec, caps: Caps) -> Result<InertnessVerdict> {
    if (0..w.len()).any(|g| w.gen(g).degree != 1) {
        return Err(Error::Unsupported("circles mixed with higher spheres".into()));
    }
    if n != 1 {
        return Err(Error::DegreeMismatch("classes on circles attach 2-cells (n = 1)".into()));
    }
    let word = match spec {
        ClassSpec::GroupWord { word } => word.as_str(),
        ClassSpec::Zero => "1",
        _ => return Err(Error::Unsupported("classes on circles are given as group words".into())),
    };
    let r = (0..w.len()).filter(|&g| w.d.values[g].is_zero()).count();
    crate::onerel::one_relator_verdict(&crate::onerel::OneRelatorScenario::new(r, word, caps)?)
}

fn block_sel(graded: bool, w: u32) -> WeightSel {
    if graded {
        WeightSel::Exactly(w)
    } else {
        WeightSel::Any
    }
}

/// Cone, model, `λ`, splitting, fibre and every identity on it, through
/// degree `caps.max_degree`. Inputs with degree-one generators go through
/// the one-relator pipeline instead.
pub fn inertness_analysis(trace: &AttachTrace, caps: Caps) -> Result<AttachAnalysis> {
    let w = &trace.algebra;
    if (0..w.len()).any(|g| w.gen(g).degree <= 1) {
        return Err(Error::Unsupported("degree-one generators: use the one-relator pipeline".into()));
    }
    let nn = caps.max_degree;
    let top = nn + SLACK;
    let mut checks = Vec::new();
    let mut notes = Vec::new();

    let cone = cone_cdga(trace)?;
    checks.push(Check::new("cone D² = 0", cone.check_square_zero().is_ok()));
    checks.push(Check::new("cone / a = ΛW", cone.quotient_is_base(w)));
    if !cone.graded() && w.gca.graded {
        notes.push("ε is not weight-homogeneous; weights dropped".into());
    }
    let graded = cone.graded();

    let tr = cone.truncated(top, WeightSel::Any)?;
    let mm = minimal_model(&tr, top - 2, None)?;
    let model = mm.alg.clone();
    let mut lambda = CdgaMorphism { values: Vec::with_capacity(model.len()) };
    let mut eps_lambda = true;
    for e in &mm.rho {
        let (p, _) = tr.elem_to_poly(e);
        eps_lambda &= cone_eps(&cone, &p).is_zero();
        lambda.values.push(p);
    }
    checks.push(Check::new("λ chain map", lambda.check_chain_map(&model, &cone.base).is_ok()));
    checks.push(Check::new("ε ∘ λ = 0", eps_lambda));

    let (split, witness) = match extension_split(&model, &cone.base, &lambda, nn + 1)? {
        SplitOutcome::Split(s) => (Some(s), None),
        SplitOutcome::Failure(f) => (None, Some(f)),
    };
    let criterion_i = split.is_some();

    // general factorisation, independent of (i)
    let tw = Truncated::new(&cone.base, top, WeightSel::Any)?;
    let phi: Vec<Elem> = (0..model.len())
        .map(|v| {
            let g = model.gen(v);
            let wt = if graded { g.weight } else { 0 };
            tw.poly_to_elem(&lambda.values[v], g.degree, wt)
                .ok_or_else(|| Error::CapExhausted(format!("λ({}) leaves the truncation", g.name)))
        })
        .collect::<Result<_>>()?;
    let rm = relative_model(&model, &phi, &tw, nn + 1, None, "z")?;
    let fiber = rm.fiber();

    let table = cohomology_table(&fiber, nn, WeightSel::Any)?;
    let rows = wedge_like_rows(&fiber, &table, nn)?;
    let wedge_like = rows.iter().all(|r| r.h == r.rho && r.rho == r.kappa);
    // a fibre that looks wedge-like through N may still fail above it
    let criterion_ii = if !criterion_i && wedge_like {
        notes.push(format!("the fibre is wedge-like through degree {nn}; (ii) is undecided at this cap"));
        None
    } else {
        checks.push(Check::new("criteria (i) and (ii) agree", criterion_i == wedge_like));
        Some(wedge_like)
    };

    if let Some(s) = &split {
        let mut same = true;
        for k in 1..=nn {
            for wt in super::fiber::block_weights(&fiber.gca, k, WeightSel::Any)?
                .into_iter()
                .chain(super::fiber::block_weights(&s.quotient.gca, k, WeightSel::Any)?)
            {
                let a = fiber.gca.cohomology(&fiber.d, k, block_sel(graded, wt))?.dim;
                let b = s.quotient.gca.cohomology(&s.quotient.d, k, block_sel(graded, wt))?.dim;
                same &= a == b;
            }
        }
        checks.push(Check::new("ΛW/(λV) and the relative fibre agree", same));
    }

    let closure = acyclic_closure(&model)?;
    let u_dims = monomial_dims(&closure.lambda_u(), nn, WeightSel::Any)?;
    let frows = fiber_rows(&table, &u_dims, trace.n, cone.a_weight, nn);
    let matches = frows.iter().all(|r| r.fiber == r.closure);
    let products = products_vanish(&fiber, &table, nn, WeightSel::Any)?;
    checks.push(Check::new("H(ΛZ) ≅ Qa ⊗ ΛU", matches));
    if criterion_i {
        checks.push(Check::new("H⁺(ΛZ) · H⁺(ΛZ) = 0", products));
    } else if !products {
        notes.push("H⁺(ΛZ) has nonzero products".into());
    }

    let status = if criterion_i { Status::InertUpToCaps } else { Status::NotInert };
    let certificate = if criterion_i {
        let uw: BTreeMap<(u32, u32), usize> = u_dims.clone();
        let c = theorem3_certificate(&fiber, trace.n, cone.a_weight, &uw, nn, nn)?;
        checks.push(Check::new("Z ∩ ker d̄ ≅ Qa ⊗ ΛU", c.prop5_match));
        checks.push(Check::new("L_Z free on (Z ∩ ker d̄)^∨", c.free_dims_match));
        Some(c)
    } else {
        None
    };

    let verdict = InertnessVerdict {
        status,
        witness,
        criterion_i,
        criterion_ii,
        fiber: Some(FiberReport {
            generators: fiber.to_doc(),
            table: FiberTable { rows: frows, matches, products_vanish: products },
            wedge_rows: rows,
        }),
        certificate,
        checks,
        caps,
        notes,
    };
    Ok(AttachAnalysis { verdict, cone, model, lambda, fiber, closure, split })
}

fn cone_eps(cone: &ConeCdga, p: &Poly) -> crate::rational::Q {
    let mut s = crate::rational::Q::zero();
    for (g, e) in cone.eps.iter().enumerate() {
        if !e.is_zero() {
            s += e * p.coeff_of_gen(g);
        }
    }
    s
}

/// The fibre table of a verdict (computed with it).
pub fn fiber_dimension_table(verdict: &InertnessVerdict) -> Option<&FiberTable> {
    verdict.fiber.as_ref().map(|f| &f.table)
}
