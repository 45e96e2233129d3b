//! Structured results of a run and their text and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::attach::{Check, InertnessVerdict, Lemma2Report, Status, WedgeFiberReport};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::onerel::{OneRelatorReport, WhiteheadCheck};
use crate::sullivan::SullivanDoc;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelSection {
    pub generators: SullivanDoc,
    /// Generator counts per degree, index = degree.
    pub degree_counts: Vec<usize>,
    /// Betti numbers of the model through `N`.
    pub cohomology: Vec<usize>,
    pub minimal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttachSection {
    pub n: u32,
    pub class: String,
    /// `ε` on the generators where it is nonzero.
    pub epsilon: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<u32>,
    /// Betti numbers of the cone through `N`.
    pub cone_cohomology: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub kind: String,
    pub space: String,
    pub caps: Caps,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<Status>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aspherical: Option<bool>,
    /// Some computation ran into the caps.
    pub truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub attachment: Option<AttachSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<InertnessVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub one_relator: Option<OneRelatorReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma2: Option<Lemma2Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wedge_fiber: Option<WedgeFiberReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub whitehead: Option<WhiteheadCheck>,
    /// Every identity checked, in order.
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

impl Report {
    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}: {}", self.command, self.space);
        let l = self.caps.max_length.map(|l| l.to_string()).unwrap_or_else(|| "-".into());
        let _ = writeln!(s, "caps: N = {}, L = {l}", self.caps.max_degree);
        if let Some(st) = self.status {
            let name = match st {
                Status::InertUpToCaps => "inert up to caps",
                Status::NotInert => "not inert",
                Status::UndecidedAtCaps => "undecided at caps",
            };
            let _ = writeln!(s, "verdict: {name}");
        }
        if let Some(a) = self.aspherical {
            let _ = writeln!(s, "aspherical: {a}");
        }
        if let Some(m) = &self.model {
            let _ = writeln!(s, "model generators by degree: {:?}", m.degree_counts);
            let _ = writeln!(s, "model cohomology: {:?}", m.cohomology);
            if m.generators.generators.len() <= 40 {
                for g in &m.generators.generators {
                    let _ = writeln!(s, "  d {} = {}   (degree {}, weight {})", g.name, g.d, g.degree, g.weight);
                }
            }
        }
        if let Some(a) = &self.attachment {
            let _ = writeln!(s, "class {} in degree {}", a.class, a.n);
            for (g, c) in &a.epsilon {
                let _ = writeln!(s, "  ε({g}) = {c}");
            }
            let _ = writeln!(s, "cone cohomology: {:?}", a.cone_cohomology);
        }
        let verdict = self.verdict.as_ref().or(self.one_relator.as_ref().map(|o| &o.verdict));
        if let Some(v) = verdict {
            let _ = writeln!(s, "criterion (i): {}", v.criterion_i);
            if let Some(c) = v.criterion_ii {
                let _ = writeln!(s, "criterion (ii): {c}");
            }
            if let Some(w) = &v.witness {
                let _ = writeln!(s, "witness degree: {}", w.degree);
            }
            if let Some(f) = &v.fiber {
                let _ = writeln!(s, "fibre cohomology (degree, weight, fibre, Qa ⊗ ΛU):");
                for r in &f.table.rows {
                    let _ = writeln!(s, "  {:>3} {:>3} {:>5} {:>5}", r.degree, r.weight, r.fiber, r.closure);
                }
            }
            if let Some(c) = &v.certificate {
                let _ = writeln!(s, "free Lie certificate: generators {:?}", c.generator_dims);
            }
        }
        if let Some(o) = &self.one_relator {
            let _ = writeln!(s, "H_0 per length: {:?}", o.h0_dims);
            let _ = writeln!(s, "V per length: {:?}", o.v_dims);
            let _ = writeln!(s, "H(W, d₀) by degree: {:?}", o.d0_cohomology);
        }
        if let Some(r) = &self.wedge_fiber {
            let _ = writeln!(s, "wedge fibre matches: {}", r.matches);
        }
        if let Some(r) = &self.lemma2 {
            let _ = writeln!(s, "surjectivity onto the circle quotient: {}", r.holds);
        }
        if !self.checks.is_empty() {
            let _ = writeln!(s, "checks:");
            for c in &self.checks {
                let _ = write!(s, "  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name);
                if let Some(d) = &c.detail {
                    let _ = write!(s, " ({d})");
                }
                s.push('\n');
            }
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        if let Some(t) = self.elapsed {
            let _ = writeln!(s, "time: {:.3} s", t.as_secs_f64());
        }
        s
    }
}

/// Process exit code: 0 decided, 10 undecided at the caps, 2x bad input,
/// 3x a falsified identity.
pub fn exit_code(r: &Result<Report>) -> i32 {
    match r {
        Ok(rep) if !rep.failed_checks().is_empty() => 33,
        Ok(rep) if rep.status == Some(Status::UndecidedAtCaps) || rep.truncated => 10,
        Ok(_) => 0,
        Err(e) => match e {
            Error::Schema { .. } => 20,
            Error::Input(_) => 21,
            Error::UnknownLetter(_) => 22,
            Error::DegreeMismatch(_) => 23,
            Error::CapMissing(_) => 24,
            Error::Unsupported(_) => 25,
            Error::Hypothesis(_) => 26,
            Error::UndefinedGenerator(_) => 27,
            Error::CapExhausted(_) => 10,
            Error::Falsified(_) => 30,
            Error::NotSquareZero(_) => 31,
            Error::NotChainMap(_) => 32,
        },
    }
}
