//! Space-spec documents: JSON in, validated [`SpaceSpec`] out.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::attach::{cp_cohomology, surface_cohomology, torus_cohomology, ClassSpec};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::lie::{parse_group_word, parse_lie};
use crate::rational::{parse_q, q_to_string, Q};
use crate::sullivan::CdgaPresentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceKind {
    CdgaPresentation,
    WedgeOfSpheres,
    PdComplex,
    OneRelator,
}

impl SpaceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SpaceKind::CdgaPresentation => "cdga-presentation",
            SpaceKind::WedgeOfSpheres => "wedge-of-spheres",
            SpaceKind::PdComplex => "pd-complex",
            SpaceKind::OneRelator => "one-relator",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        [SpaceKind::CdgaPresentation, SpaceKind::WedgeOfSpheres, SpaceKind::PdComplex, SpaceKind::OneRelator]
            .into_iter()
            .find(|k| k.as_str() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDoc {
    pub name: String,
    pub degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<u32>,
}

/// A finite cdga by structure constants. The unit `1` is implicit; products
/// are keyed `"x*y"` and values are linear combinations such as `"2 x - 1/2 y"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CdgaDoc {
    pub basis: Vec<BasisDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub products: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub differential: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PdSource {
    /// `cp<k>`, `torus<k>`, `surface<g>` or `s<p>xs<q>`.
    Preset(String),
    Algebra(CdgaDoc),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Space {
    Cdga(CdgaDoc),
    Wedge { spheres: Vec<u32> },
    Pd(PdSource),
    OneRelator { r: usize, word: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scenario {
    pub n: u32,
    pub class: ClassSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceSpec {
    pub space: Space,
    pub caps: Caps,
    pub scenario: Option<Scenario>,
}

fn schema(field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema { field: field.into(), message: message.into() }
}

impl SpaceSpec {
    pub fn kind(&self) -> SpaceKind {
        match self.space {
            Space::Cdga(_) => SpaceKind::CdgaPresentation,
            Space::Wedge { .. } => SpaceKind::WedgeOfSpheres,
            Space::Pd(_) => SpaceKind::PdComplex,
            Space::OneRelator { .. } => SpaceKind::OneRelator,
        }
    }

    /// One-line description for reports.
    pub fn describe(&self) -> String {
        match &self.space {
            Space::Cdga(d) => format!("cdga with {} basis elements", d.basis.len() + 1),
            Space::Wedge { spheres } if spheres.is_empty() => "point".into(),
            Space::Wedge { spheres } => spheres.iter().map(|d| format!("S{d}")).collect::<Vec<_>>().join(" ∨ "),
            Space::Pd(PdSource::Preset(p)) => format!("Poincaré-duality complex {p}"),
            Space::Pd(PdSource::Algebra(d)) => format!("Poincaré-duality complex with {} classes", d.basis.len() + 1),
            Space::OneRelator { r, word } => format!("{r} circles ∪ e² along {word}"),
        }
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("kind".into(), json!(self.kind().as_str()));
        match &self.space {
            Space::Cdga(d) => {
                let v = serde_json::to_value(d).expect("serializable");
                m.extend(v.as_object().cloned().unwrap_or_default());
            }
            Space::Wedge { spheres } => {
                m.insert("spheres".into(), json!(spheres));
            }
            Space::Pd(PdSource::Preset(p)) => {
                m.insert("preset".into(), json!(p));
            }
            Space::Pd(PdSource::Algebra(d)) => {
                m.insert("algebra".into(), serde_json::to_value(d).expect("serializable"));
            }
            Space::OneRelator { r, word } => {
                m.insert("r".into(), json!(r));
                m.insert("word".into(), json!(word));
            }
        }
        let mut caps = Map::new();
        caps.insert("N".into(), json!(self.caps.max_degree));
        if let Some(l) = self.caps.max_length {
            caps.insert("L".into(), json!(l));
        }
        m.insert("caps".into(), Value::Object(caps));
        if let Some(s) = &self.scenario {
            m.insert("scenario".into(), serde_json::to_value(s).expect("serializable"));
        }
        Value::Object(m)
    }

    /// The document form, accepted back by [`parse_spec`].
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("serializable")
    }
}

/// Parses and validates a space-spec document.
pub fn parse_spec(document: &str) -> Result<SpaceSpec> {
    let v: Value = serde_json::from_str(document)
        .map_err(|e| schema(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    spec_from_value(&v)
}

pub fn spec_from_value(v: &Value) -> Result<SpaceSpec> {
    let obj = v.as_object().ok_or_else(|| schema("$", "expected an object"))?;
    let kind = match obj.get("kind") {
        Some(Value::String(s)) => SpaceKind::parse(s).ok_or_else(|| schema("kind", format!("unknown kind '{s}'")))?,
        Some(_) => return Err(schema("kind", "expected a string")),
        None => infer_kind(obj)?,
    };
    let allowed: &[&str] = match kind {
        SpaceKind::CdgaPresentation => &["basis", "products", "differential"],
        SpaceKind::WedgeOfSpheres => &["spheres"],
        SpaceKind::PdComplex => &["preset", "algebra"],
        SpaceKind::OneRelator => &["r", "word"],
    };
    for k in obj.keys() {
        if !["kind", "caps", "scenario"].contains(&k.as_str()) && !allowed.contains(&k.as_str()) {
            return Err(schema(k.clone(), format!("not a field of a {} document", kind.as_str())));
        }
    }
    let caps = parse_caps(obj.get("caps"))?;
    let space = match kind {
        SpaceKind::CdgaPresentation => {
            let d: CdgaDoc = serde_json::from_value(Value::Object(
                obj.iter()
                    .filter(|(k, _)| allowed.contains(&k.as_str()))
                    .map(|(k, v)| (k.clone(), v.clone()))
                    .collect(),
            ))
            .map_err(|e| schema("basis", e.to_string()))?;
            cdga_presentation(&d, "")?;
            Space::Cdga(d)
        }
        SpaceKind::WedgeOfSpheres => {
            let arr = obj
                .get("spheres")
                .and_then(Value::as_array)
                .ok_or_else(|| schema("spheres", "expected a list of dimensions"))?;
            let mut spheres = Vec::new();
            for (i, d) in arr.iter().enumerate() {
                let d = d.as_u64().ok_or_else(|| schema(format!("spheres[{i}]"), "expected a positive integer"))?;
                if d == 0 || d > 64 {
                    return Err(schema(format!("spheres[{i}]"), format!("sphere dimension {d} is out of range")));
                }
                spheres.push(d as u32);
            }
            Space::Wedge { spheres }
        }
        SpaceKind::PdComplex => match (obj.get("preset"), obj.get("algebra")) {
            (Some(Value::String(p)), None) => {
                preset_cohomology(p).ok_or_else(|| schema("preset", format!("unknown preset '{p}'")))?;
                Space::Pd(PdSource::Preset(p.clone()))
            }
            (None, Some(a)) => {
                let d: CdgaDoc = serde_json::from_value(a.clone()).map_err(|e| schema("algebra", e.to_string()))?;
                cdga_presentation(&d, "algebra.")?;
                Space::Pd(PdSource::Algebra(d))
            }
            _ => return Err(schema("preset", "give exactly one of 'preset' (string) and 'algebra'")),
        },
        SpaceKind::OneRelator => {
            let r = obj.get("r").and_then(Value::as_u64).ok_or_else(|| schema("r", "expected a positive integer"))?
                as usize;
            if !(2..=26).contains(&r) {
                return Err(schema("r", format!("{r} circles is out of range 2..=26")));
            }
            let word = obj.get("word").and_then(Value::as_str).ok_or_else(|| schema("word", "expected a string"))?;
            if word.trim() != "1" {
                parse_group_word(word, r).map_err(|e| schema("word", e.to_string()))?;
            }
            Space::OneRelator { r, word: word.to_string() }
        }
    };
    let scenario = match obj.get("scenario") {
        None | Some(Value::Null) => None,
        Some(s) => {
            let sc: Scenario = serde_json::from_value(s.clone()).map_err(|e| schema("scenario", e.to_string()))?;
            Some(sc)
        }
    };
    let spec = SpaceSpec { space, caps, scenario };
    validate_scenario(&spec)?;
    Ok(spec)
}

fn infer_kind(obj: &Map<String, Value>) -> Result<SpaceKind> {
    if obj.contains_key("spheres") {
        Ok(SpaceKind::WedgeOfSpheres)
    } else if obj.contains_key("word") || obj.contains_key("r") {
        Ok(SpaceKind::OneRelator)
    } else if obj.contains_key("preset") || obj.contains_key("algebra") {
        Ok(SpaceKind::PdComplex)
    } else if obj.contains_key("basis") {
        Ok(SpaceKind::CdgaPresentation)
    } else {
        Err(schema("kind", "missing, and no payload field to infer it from"))
    }
}

fn parse_caps(v: Option<&Value>) -> Result<Caps> {
    let mut caps = Caps::default();
    let Some(v) = v else { return Ok(caps) };
    let obj = v.as_object().ok_or_else(|| schema("caps", "expected an object"))?;
    for (k, x) in obj {
        let field = format!("caps.{k}");
        let n = match x {
            Value::Null => None,
            _ => Some(x.as_u64().ok_or_else(|| schema(field.clone(), "expected a positive integer"))?),
        };
        if n == Some(0) || n.is_some_and(|n| n > 64) {
            return Err(schema(field, "caps must lie in 1..=64"));
        }
        match k.as_str() {
            "N" | "max_degree" => caps.max_degree = n.ok_or_else(|| schema(field, "N cannot be null"))? as u32,
            "L" | "max_length" => caps.max_length = n.map(|n| n as u32),
            _ => return Err(schema(field, "unknown cap")),
        }
    }
    Ok(caps)
}

fn validate_scenario(spec: &SpaceSpec) -> Result<()> {
    let Some(sc) = &spec.scenario else { return Ok(()) };
    if sc.n == 0 {
        return Err(schema("scenario.n", "cells of dimension n + 1 need n ≥ 1"));
    }
    match (&spec.space, &sc.class) {
        (Space::Wedge { spheres }, ClassSpec::LieWord { word }) => {
            parse_lie(word).map_err(|e| schema("scenario.class.word", e.to_string()))?;
            for letter in letters_x(word) {
                if letter == 0 || letter > spheres.len() {
                    return Err(schema(
                        "scenario.class.word",
                        format!("x{letter} is not one of x1..x{}", spheres.len()),
                    ));
                }
            }
        }
        (Space::Wedge { spheres }, ClassSpec::GroupWord { word }) => {
            if sc.n != 1 || spheres.iter().any(|&d| d != 1) {
                return Err(schema("scenario", "group words attach 2-cells to wedges of circles"));
            }
            if word.trim() != "1" {
                parse_group_word(word, spheres.len()).map_err(|e| schema("scenario.class.word", e.to_string()))?;
            }
        }
        (Space::Wedge { .. } | Space::Cdga(_), ClassSpec::Zero | ClassSpec::Functional { .. }) => {}
        (Space::Cdga(_), ClassSpec::LieWord { .. } | ClassSpec::GroupWord { .. }) => {
            return Err(schema("scenario.class", "classes on a cdga are given as functionals on its model"));
        }
        (Space::Pd(_) | Space::OneRelator { .. }, _) => {
            return Err(schema("scenario", "the attachment is implicit for this kind"));
        }
    }
    if let ClassSpec::Functional { values } = &sc.class {
        for (k, v) in values {
            parse_q(v).ok_or_else(|| schema(format!("scenario.class.values.{k}"), format!("bad rational '{v}'")))?;
        }
    }
    Ok(())
}

fn letters_x(word: &str) -> Vec<usize> {
    let b = word.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' && (i == 0 || !b[i - 1].is_ascii_alphanumeric()) {
            let mut j = i + 1;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            out.push(word[i + 1..j].parse().unwrap_or(0));
            i = j;
        } else {
            i += 1;
        }
    }
    out
}

/// `H(Y)` of a named Poincaré-duality complex.
pub fn preset_cohomology(p: &str) -> Option<CdgaPresentation> {
    let num = |prefix: &str| p.strip_prefix(prefix).and_then(|s| s.parse::<u32>().ok());
    if let Some(k) = num("cp") {
        return (1..=8).contains(&k).then(|| cp_cohomology(k));
    }
    if let Some(k) = num("torus") {
        return (2..=5).contains(&k).then(|| torus_cohomology(k));
    }
    if let Some(g) = num("surface") {
        return (1..=8).contains(&g).then(|| surface_cohomology(g));
    }
    let (a, b) = p.split_once('x')?;
    let a = a.strip_prefix('s')?.parse::<u32>().ok()?;
    let b = b.strip_prefix('s')?.parse::<u32>().ok()?;
    (a >= 1 && b >= 1 && a + b <= 32).then(|| CdgaPresentation::sphere_product(a, b))
}

/// Parses `"2 x - 1/2 y + z"` into coefficients by name. A bare number is a
/// multiple of the unit `1`.
pub fn parse_linear(s: &str) -> Option<Vec<(String, Q)>> {
    let mut out: Vec<(String, Q)> = Vec::new();
    let t = s.trim();
    if t.is_empty() || t == "0" {
        return Some(out);
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in t.char_indices() {
        if (ch == '+' || ch == '-') && (i == 0 || !cur.trim().is_empty()) {
            if !cur.trim().is_empty() {
                terms.push((neg, cur.trim().to_string()));
            }
            cur.clear();
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.trim().is_empty() {
        return None;
    }
    terms.push((neg, cur.trim().to_string()));
    for (neg, term) in terms {
        let split = term.find(|c: char| c.is_alphabetic() || c == '_');
        let (coef, name) = match split {
            Some(i) => (term[..i].trim().trim_end_matches('*').trim(), term[i..].trim()),
            None => (term.as_str(), "1"),
        };
        let mut c = if coef.is_empty() { Q::one() } else { parse_q(coef)? };
        if neg {
            c = -c;
        }
        if name.chars().any(|ch| ch.is_whitespace() || "*+-/".contains(ch)) {
            return None;
        }
        match out.iter_mut().find(|(n, _)| n == name) {
            Some(e) => e.1 += c,
            None => out.push((name.to_string(), c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    Some(out)
}

/// Builds the presentation of a document, with `prefix` in field names of
/// diagnostics. Basis elements are ordered by degree, then name.
pub fn cdga_presentation(d: &CdgaDoc, prefix: &str) -> Result<CdgaPresentation> {
    let mut p = CdgaPresentation::new();
    let mut order: Vec<&BasisDoc> = d.basis.iter().collect();
    order.sort_by(|a, b| (a.degree, &a.name).cmp(&(b.degree, &b.name)));
    let weighted = d.basis.iter().any(|b| b.weight.is_some());
    if weighted && d.basis.iter().any(|b| b.weight.is_none()) {
        return Err(schema(format!("{prefix}basis"), "weights must be given on every basis element or none"));
    }
    for b in &order {
        let field = format!("{prefix}basis.{}", b.name);
        if b.name.is_empty() || b.name == "1" || !b.name.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(schema(field, format!("bad name '{}'", b.name)));
        }
        if !b.name.starts_with(|c: char| c.is_alphabetic() || c == '_') {
            return Err(schema(field, format!("name '{}' must start with a letter", b.name)));
        }
        if p.find(&b.name).is_some() {
            return Err(schema(field, format!("duplicate name '{}'", b.name)));
        }
        if b.degree == 0 {
            return Err(schema(field, "basis elements other than 1 have positive degree"));
        }
        p.add_basis(&b.name, b.degree);
    }
    if weighted {
        let mut w = vec![0];
        w.extend(order.iter().map(|b| b.weight.unwrap_or(0)));
        p.set_weights(w);
    }
    let resolve = |field: &str, s: &str, p: &CdgaPresentation| -> Result<Vec<(usize, Q)>> {
        let terms = parse_linear(s).ok_or_else(|| schema(field, format!("cannot parse '{s}'")))?;
        let mut v = Vec::new();
        for (n, c) in terms {
            let i = p.find(&n).ok_or_else(|| schema(field, format!("unknown basis element '{n}'")))?;
            v.push((i, c));
        }
        v.sort_by_key(|e| e.0);
        Ok(v)
    };
    for (key, val) in &d.products {
        let field = format!("{prefix}products.{key}");
        let (a, b) = key.split_once('*').ok_or_else(|| schema(field.clone(), "keys have the form 'x*y'"))?;
        let i =
            p.find(a.trim()).ok_or_else(|| schema(field.clone(), format!("unknown basis element '{}'", a.trim())))?;
        let j =
            p.find(b.trim()).ok_or_else(|| schema(field.clone(), format!("unknown basis element '{}'", b.trim())))?;
        if i == 0 || j == 0 {
            return Err(schema(field, "products with 1 are fixed"));
        }
        let v = resolve(&field, val, &p)?;
        for &(k, _) in &v {
            if p.degrees[k] != p.degrees[i] + p.degrees[j] {
                return Err(schema(field, format!("'{}' has the wrong degree", p.names[k])));
            }
        }
        if !v.is_empty() {
            p.set_product(i, j, v);
        }
    }
    for (key, val) in &d.differential {
        let field = format!("{prefix}differential.{key}");
        let i = p
            .find(key)
            .filter(|&i| i > 0)
            .ok_or_else(|| schema(field.clone(), format!("unknown basis element '{key}'")))?;
        let v = resolve(&field, val, &p)?;
        for &(k, _) in &v {
            if p.degrees[k] != p.degrees[i] + 1 {
                return Err(schema(field, format!("'{}' has the wrong degree", p.names[k])));
            }
        }
        p.set_diff(i, v);
    }
    p.validate().map_err(|e| schema(format!("{prefix}products"), e.to_string()))?;
    Ok(p)
}

/// Document form of a presentation; inverse to [`cdga_presentation`].
pub fn cdga_doc(p: &CdgaPresentation) -> CdgaDoc {
    let lin = |v: &[(usize, Q)]| -> String {
        let mut s = String::new();
        for (k, c) in v {
            let neg = c < &Q::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if !s.is_empty() || neg {
                s.push_str(if neg {
                    if s.is_empty() {
                        "-"
                    } else {
                        " - "
                    }
                } else {
                    " + "
                });
            }
            if !a.is_one() {
                s.push_str(&q_to_string(&a));
                s.push(' ');
            }
            s.push_str(&p.names[*k]);
        }
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    };
    let basis = (1..p.len())
        .map(|i| BasisDoc { name: p.names[i].clone(), degree: p.degrees[i], weight: p.weights.as_ref().map(|w| w[i]) })
        .collect();
    let mut products = BTreeMap::new();
    for (&(i, j), v) in &p.products {
        if i > 0 && j > 0 && i <= j && !v.is_empty() {
            products.insert(format!("{}*{}", p.names[i], p.names[j]), lin(v));
        }
    }
    let mut differential = BTreeMap::new();
    for (i, v) in p.differential.iter().enumerate() {
        if i > 0 && !v.is_empty() {
            differential.insert(p.names[i].clone(), lin(v));
        }
    }
    CdgaDoc { basis, products, differential }
}

/// The same document with every basis list shuffled by `seed`. Basis
/// elements are taken in canonical order, so reports must not change.
pub fn reorder_document(v: &Value, seed: u64) -> Value {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    reorder(v, &mut rng)
}

fn reorder(v: &Value, rng: &mut ChaCha8Rng) -> Value {
    match v {
        Value::Object(m) => {
            let mut out = Map::new();
            for (k, x) in m {
                let mut x = reorder(x, rng);
                if k == "basis" {
                    if let Value::Array(a) = &mut x {
                        a.shuffle(rng);
                    }
                }
                out.insert(k.clone(), x);
            }
            Value::Object(out)
        }
        Value::Array(a) => Value::Array(a.iter().map(|x| reorder(x, rng)).collect()),
        _ => v.clone(),
    }
}
