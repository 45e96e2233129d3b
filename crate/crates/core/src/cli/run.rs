//! Dispatch of a command on a space spec.

use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::attach::{
    attach_trace, cone_cdga, describe, inertness_analysis, lemma2_check, pd_complex_model, pd_trace, wedge_fiber_check,
    AttachTrace, Check, ClassSpec, InertnessVerdict, PdModel, Status, SLACK,
};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::gca::WeightSel;
use crate::onerel::{
    aspherical_check, build_d0, corollary_model, model_aspherical, whitehead_check, OneRelatorScenario,
};
use crate::sullivan::{
    check_quasi_iso, minimal_model, quadratic_model, CdgaPresentation, SphereClass, SullivanAlgebra,
};

use super::report::{AttachSection, ModelSection, Report};
use super::spec::{cdga_presentation, preset_cohomology, PdSource, Space, SpaceSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Model,
    Attach,
    Inert,
    Fiber,
    Certify,
    Onerel,
    Aspherical,
}

impl Command {
    pub const ALL: [Command; 7] = [
        Command::Model,
        Command::Attach,
        Command::Inert,
        Command::Fiber,
        Command::Certify,
        Command::Onerel,
        Command::Aspherical,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Command::Model => "model",
            Command::Attach => "attach",
            Command::Inert => "inert",
            Command::Fiber => "fiber",
            Command::Certify => "certify",
            Command::Onerel => "onerel",
            Command::Aspherical => "aspherical",
        }
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| Error::Input(format!("unknown command '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Options {
    /// Run every cross-identity available for the input.
    pub certify: bool,
    /// Record wall-clock time (text output only).
    pub timing: bool,
}

/// What the attachment of a spec resolves to.
enum Target {
    None,
    Cell(AttachTrace),
    Circles(OneRelatorScenario),
}

struct Resolved {
    /// Model of the base `X`, through `N + SLACK`.
    base: Option<SullivanAlgebra>,
    presentation: Option<CdgaPresentation>,
    pd: Option<PdModel>,
    target: Target,
}

fn circle_cap(caps: Caps) -> Result<u32> {
    caps.max_length.ok_or_else(|| Error::CapMissing("degree-one classes".into()))
}

fn wedge_model(spheres: &[u32], top: u32, caps: Caps) -> Result<SullivanAlgebra> {
    let cap = if spheres.contains(&1) { Some(circle_cap(caps)?) } else { None };
    Ok(quadratic_model(&SphereClass::wedge(spheres), top, cap)?.alg)
}

fn surface_word(g: u32) -> String {
    (0..g)
        .map(|i| {
            let a = (b'a' + 2 * i as u8) as char;
            let b = (b'a' + 2 * i as u8 + 1) as char;
            format!("[{a},{b}]")
        })
        .collect()
}

fn pd_cohomology(src: &PdSource) -> Result<CdgaPresentation> {
    match src {
        PdSource::Preset(p) => preset_cohomology(p).ok_or_else(|| Error::Input(format!("unknown preset '{p}'"))),
        PdSource::Algebra(d) => cdga_presentation(d, "algebra."),
    }
}

fn resolve(spec: &SpaceSpec, need_target: bool) -> Result<Resolved> {
    let caps = spec.caps;
    let top = caps.max_degree + SLACK;
    let mut out = Resolved { base: None, presentation: None, pd: None, target: Target::None };
    match &spec.space {
        Space::Wedge { spheres } => {
            let circles = !spheres.is_empty() && spheres.iter().all(|&d| d == 1);
            match &spec.scenario {
                Some(sc) if circles && matches!(sc.class, ClassSpec::GroupWord { .. } | ClassSpec::Zero) => {
                    let word = match &sc.class {
                        ClassSpec::GroupWord { word } => word.as_str(),
                        _ => "1",
                    };
                    if sc.n != 1 {
                        return Err(Error::DegreeMismatch("classes on circles attach 2-cells (n = 1)".into()));
                    }
                    out.target = Target::Circles(OneRelatorScenario::new(spheres.len(), word, caps)?);
                    out.base = Some(wedge_model(spheres, top, caps)?);
                }
                Some(sc) if need_target => {
                    let w = wedge_model(spheres, top, caps)?;
                    out.target = Target::Cell(attach_trace(&w, sc.n, &sc.class, caps.max_length)?);
                    out.base = Some(w);
                }
                _ => out.base = Some(wedge_model(spheres, top, caps)?),
            }
        }
        Space::Cdga(d) => {
            let p = cdga_presentation(d, "")?;
            let cap = if p.weights.is_some() { caps.max_length } else { None };
            let w = minimal_model(&p, top, cap)?.alg;
            if let (Some(sc), true) = (&spec.scenario, need_target) {
                out.target = Target::Cell(attach_trace(&w, sc.n, &sc.class, caps.max_length)?);
            }
            out.base = Some(w);
            out.presentation = Some(p);
        }
        Space::Pd(src) => {
            let h = pd_cohomology(src)?;
            let pd = pd_complex_model(&h)?;
            if need_target {
                let circles = (0..h.len()).any(|i| h.degrees[i] == 1);
                out.target = match pd.genus() {
                    Some(g) => Target::Circles(OneRelatorScenario::new(2 * g as usize, &surface_word(g), caps)?),
                    None if circles => Target::None,
                    None => Target::Cell(pd_trace(&pd, caps)?),
                };
            }
            out.presentation = Some(h);
            out.pd = Some(pd);
        }
        Space::OneRelator { r, word } => {
            out.target = Target::Circles(OneRelatorScenario::new(*r, word, caps)?);
        }
    }
    Ok(out)
}

fn blank(spec: &SpaceSpec, command: Command) -> Report {
    Report {
        command: command.as_str().into(),
        kind: spec.kind().as_str().into(),
        space: spec.describe(),
        caps: spec.caps,
        status: None,
        aspherical: None,
        truncated: false,
        model: None,
        attachment: None,
        verdict: None,
        one_relator: None,
        lemma2: None,
        wedge_fiber: None,
        whitehead: None,
        checks: Vec::new(),
        notes: Vec::new(),
        elapsed: None,
    }
}

fn model_section(alg: &SullivanAlgebra, caps: Caps) -> Result<ModelSection> {
    let nn = caps.max_degree;
    let circles = (0..alg.len()).any(|g| alg.gen(g).degree == 1);
    let cap = if circles { Some(circle_cap(caps)?) } else { None };
    let mut shown = SullivanAlgebra::empty(alg.gca.graded);
    for g in 0..alg.len() {
        if alg.gen(g).degree <= nn + 1 {
            shown.push(alg.gen(g).clone(), alg.d.values[g].clone());
        }
    }
    Ok(ModelSection {
        generators: shown.to_doc(),
        degree_counts: alg.degree_counts(nn + 1),
        cohomology: alg.cohomology_dims(nn, cap)?,
        minimal: alg.is_minimal(),
    })
}

/// Runs `command` on `spec`. Cap exhaustion is reported as an undecided
/// verdict, not as an error.
pub fn run(spec: &SpaceSpec, command: Command, opts: &Options) -> Result<Report> {
    let start = Instant::now();
    let mut rep = match run_inner(spec, command, opts) {
        Err(Error::CapExhausted(why)) => {
            let mut r = blank(spec, command);
            r.status = Some(Status::UndecidedAtCaps);
            r.truncated = true;
            r.notes.push(why);
            r
        }
        other => other?,
    };
    if opts.timing {
        rep.elapsed = Some(start.elapsed());
    }
    Ok(rep)
}

fn run_inner(spec: &SpaceSpec, command: Command, opts: &Options) -> Result<Report> {
    let caps = spec.caps;
    let mut rep = blank(spec, command);
    let certify = opts.certify || command == Command::Certify;
    match command {
        Command::Model => {
            let r = resolve(spec, false)?;
            if let Target::Circles(s) = &r.target {
                let d = build_d0(s)?;
                let m = corollary_model(&d)?;
                rep.model = Some(model_section(&m.alg, caps)?);
                rep.checks.extend(d.checks()?);
                rep.checks.push(Check::new("d₁(V) ⊆ Λ²V", m.alg.check_square_zero().is_ok()));
            } else if let Some(pd) = &r.pd {
                let mut h = pd.h.clone();
                let cap = if pd.is_surface() {
                    h.set_weights(h.degrees.clone());
                    Some(circle_cap(caps)?)
                } else {
                    None
                };
                let mm = minimal_model(&h, caps.max_degree + 1, cap)?;
                rep.model = Some(model_section(&mm.alg, caps)?);
                if certify {
                    rep.checks.push(Check::new("ρ quasi-isomorphism", check_quasi_iso(&mm, &h, cap)?));
                }
            } else {
                let base = r.base.as_ref().expect("resolved base");
                rep.model = Some(model_section(base, caps)?);
                if let (true, Some(p)) = (certify, &r.presentation) {
                    let cap = if p.weights.is_some() { caps.max_length } else { None };
                    let mm = minimal_model(p, caps.max_degree + 1, cap)?;
                    rep.checks.push(Check::new("ρ quasi-isomorphism", check_quasi_iso(&mm, p, cap)?));
                }
            }
            if let Some(m) = &rep.model {
                rep.checks.push(Check::new("model is minimal", m.minimal));
            }
        }
        Command::Attach => {
            let r = resolve(spec, true)?;
            let (trace, class) = match &r.target {
                Target::Cell(t) => {
                    let class = spec.scenario.as_ref().map(|s| describe(&s.class)).unwrap_or_else(|| "top cell".into());
                    (t.clone(), class)
                }
                Target::Circles(s) => {
                    let w = wedge_model(&vec![1; s.r], caps.max_degree + SLACK, caps)?;
                    let spec = ClassSpec::GroupWord { word: s.word.clone() };
                    (attach_trace(&w, 1, &spec, caps.max_length)?, s.word.clone())
                }
                Target::None if r.pd.is_some() => {
                    return Err(Error::Unsupported("degree-one classes outside surfaces".into()));
                }
                Target::None => return Err(Error::Input("attach needs a scenario".into())),
            };
            let cone = cone_cdga(&trace)?;
            rep.checks.push(Check::new("cone D² = 0", cone.check_square_zero().is_ok()));
            rep.checks.push(Check::new("cone / a = ΛW", cone.quotient_is_base(&trace.algebra)));
            let circles = (0..trace.algebra.len()).any(|g| trace.algebra.gen(g).degree == 1);
            let sel = if circles { WeightSel::AtMost(circle_cap(caps)?) } else { WeightSel::Any };
            rep.attachment = Some(AttachSection {
                n: trace.n,
                class,
                epsilon: trace.to_map(),
                weight: trace.weight(),
                cone_cohomology: cone.cohomology_dims(caps.max_degree, sel)?,
            });
        }
        Command::Inert | Command::Fiber | Command::Certify => {
            let r = resolve(spec, true)?;
            let mut v = match &r.target {
                Target::Cell(t) => {
                    let mut v = inertness_analysis(t, caps)?.verdict;
                    settle_criterion_ii(spec, &mut v);
                    v
                }
                Target::Circles(s) => {
                    let o = aspherical_check(s)?;
                    if certify {
                        certify_circles(&mut rep, s, &r, caps)?;
                    }
                    o.verdict
                }
                Target::None if command == Command::Certify && r.pd.is_some() => {
                    certify_cell(&mut rep, spec, &r, caps)?;
                    rep.notes.push("degree-one classes outside surfaces: no verdict".into());
                    return Ok(rep);
                }
                Target::None if r.pd.is_some() => {
                    return Err(Error::Unsupported("degree-one classes outside surfaces".into()));
                }
                Target::None => return Err(Error::Input(format!("{} needs a scenario", command.as_str()))),
            };
            if certify {
                if let Target::Cell(_) = &r.target {
                    certify_cell(&mut rep, spec, &r, caps)?;
                }
            } else {
                v.certificate = None;
            }
            if command == Command::Inert {
                v.fiber = None;
            }
            finish_verdict(&mut rep, v);
        }
        Command::Onerel | Command::Aspherical => {
            let r = resolve(spec, true)?;
            match &r.target {
                Target::Circles(s) => {
                    let o = aspherical_check(s)?;
                    if certify {
                        certify_circles(&mut rep, s, &r, caps)?;
                    }
                    rep.status = Some(o.verdict.status);
                    rep.aspherical = Some(o.aspherical);
                    let mut checks = o.verdict.checks.clone();
                    checks.append(&mut rep.checks);
                    rep.checks = checks;
                    rep.notes.extend(o.verdict.notes.iter().cloned());
                    let mut o = o;
                    if command == Command::Aspherical {
                        o.step_two.clear();
                        o.corollary = None;
                        o.verdict.fiber = None;
                        o.verdict.certificate = None;
                    }
                    rep.one_relator = Some(o);
                }
                _ if command == Command::Aspherical => {
                    let base = r.base.as_ref().ok_or_else(|| {
                        Error::Unsupported("asphericity of Poincaré-duality complexes other than surfaces".into())
                    })?;
                    rep.aspherical = Some(model_aspherical(base, caps.max_degree + 1));
                }
                _ => {
                    return Err(Error::Unsupported(
                        "onerel needs a one-relator complex or circles with a group word".into(),
                    ))
                }
            }
        }
    }
    Ok(rep)
}

/// Degree cap up to which an undecided criterion (ii) is pursued.
const DEEP_LIMIT: u32 = 24;

/// When (i) fails but the fibre is wedge-like through `N`, reruns at
/// twice the witness degree to settle (ii).
fn settle_criterion_ii(spec: &SpaceSpec, v: &mut InertnessVerdict) {
    let (false, None, Some(w)) = (v.criterion_i, v.criterion_ii, &v.witness) else { return };
    let deeper = (2 * w.degree).min(DEEP_LIMIT);
    if deeper <= spec.caps.max_degree {
        return;
    }
    let mut spec2 = spec.clone();
    spec2.caps.max_degree = deeper;
    let Ok(Resolved { target: Target::Cell(t), .. }) = resolve(&spec2, true) else { return };
    if let Ok(a) = inertness_analysis(&t, spec2.caps) {
        if let Some(b) = a.verdict.criterion_ii {
            v.criterion_ii = Some(b);
            v.checks.push(Check::new("criteria (i) and (ii) agree", !b));
            v.notes.push(format!("criterion (ii) settled with N = {deeper}"));
        }
    }
}

fn finish_verdict(rep: &mut Report, v: InertnessVerdict) {
    rep.status = Some(v.status);
    rep.truncated |= v.status == Status::UndecidedAtCaps;
    let mut checks = v.checks.clone();
    checks.append(&mut rep.checks);
    rep.checks = checks;
    rep.notes.extend(v.notes.iter().cloned());
    rep.verdict = Some(v);
}

fn certify_cell(rep: &mut Report, spec: &SpaceSpec, r: &Resolved, caps: Caps) -> Result<()> {
    if let (Space::Wedge { spheres }, Some(sc)) = (&spec.space, &spec.scenario) {
        let product_class = matches!(&sc.class, ClassSpec::LieWord { word } if word.replace(' ', "") == "[x1,x2]");
        if spheres.len() == 2 && product_class {
            let x = CdgaPresentation::sphere(spheres[0]);
            let y = CdgaPresentation::sphere(spheres[1]);
            let w = wedge_fiber_check(&x, &y, caps)?;
            rep.checks.push(Check::new("fibre of X ∨ Y → X × Y", w.matches));
            rep.wedge_fiber = Some(w);
        }
    }
    if let Some(pd) = &r.pd {
        match lemma2_check(pd, caps) {
            Ok(l) => {
                rep.checks.push(Check::new("A^{n+1} ⊗ ΛU ⊂ d(A^n ⊗ ΛU)", l.holds));
                rep.checks.push(Check::new("fibre cycle products exact", l.cycle_products_exact));
                rep.lemma2 = Some(l);
            }
            Err(Error::Hypothesis(why)) => rep.notes.push(why),
            Err(e) => return Err(e),
        }
    }
    if let (Some(p), Space::Cdga(_)) = (&r.presentation, &spec.space) {
        let cap = if p.weights.is_some() { caps.max_length } else { None };
        let mm = minimal_model(p, caps.max_degree + 1, cap)?;
        rep.checks.push(Check::new("ρ quasi-isomorphism", check_quasi_iso(&mm, p, cap)?));
    }
    Ok(())
}

fn certify_circles(rep: &mut Report, s: &OneRelatorScenario, r: &Resolved, caps: Caps) -> Result<()> {
    let d = build_d0(s)?;
    let m = corollary_model(&d)?;
    let circles = wedge_model(&vec![1; s.r], caps.max_degree, caps)?;
    let w = whitehead_check(&circles, &m.alg, caps.max_degree);
    rep.checks.push(Check::new("aspherical complexes have aspherical subcomplexes", w.holds));
    rep.whitehead = Some(w);
    if let Some(pd) = &r.pd {
        let l = lemma2_check(pd, caps)?;
        rep.checks.push(Check::new("A^{n+1} ⊗ ΛU ⊂ d(A^n ⊗ ΛU)", l.holds));
        rep.checks.push(Check::new("fibre cycle products exact", l.cycle_products_exact));
        rep.lemma2 = Some(l);
    }
    Ok(())
}
