//! Attachment traces `ε`: the degree `-n` functional on `ΛW` dual to the
//! class of the attaching map.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gca::Poly;
use crate::lie::{magnus_log, parse_group_word, parse_lie, BracketEval, FreeLie, LieExpr};
use crate::rational::{parse_q, Q};
use crate::sullivan::SullivanAlgebra;

/// How the homotopy class of the attaching map is given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum ClassSpec {
    /// Values on generators of degree `n`, as rational strings.
    Functional {
        values: BTreeMap<String, String>,
    },
    /// Bracket expression in the letters `x1, x2, …` (the sphere classes).
    LieWord {
        word: String,
    },
    /// Word in the free group on `a, b, …` (circles only).
    GroupWord {
        word: String,
    },
    Zero,
}

impl ClassSpec {
    pub fn lie(word: &str) -> Self {
        ClassSpec::LieWord { word: word.into() }
    }

    pub fn group(word: &str) -> Self {
        ClassSpec::GroupWord { word: word.into() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AttachTrace {
    pub algebra: SullivanAlgebra,
    pub n: u32,
    /// `ε` on generators; zero away from degree `n`.
    pub values: Vec<Q>,
}

impl AttachTrace {
    pub fn zero(algebra: SullivanAlgebra, n: u32) -> Self {
        let values = vec![Q::zero(); algebra.len()];
        AttachTrace { algebra, n, values }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|c| c.is_zero())
    }

    /// `ε(Φ)`: only linear terms contribute.
    pub fn eval(&self, p: &Poly) -> Q {
        let mut s = Q::zero();
        for (g, e) in self.values.iter().enumerate() {
            if !e.is_zero() {
                s += e * p.coeff_of_gen(g);
            }
        }
        s
    }

    /// Common weight of the support, when the algebra is graded and the
    /// support is homogeneous.
    pub fn weight(&self) -> Option<u32> {
        if !self.algebra.gca.graded {
            return None;
        }
        let mut ws = self.support().map(|g| self.algebra.gen(g).weight);
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.values.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(g, _)| g)
    }

    /// `ε ∘ d = 0` on generators of degree `n - 1` (the only ones whose
    /// differential can have a linear term of degree `n`).
    pub fn check_closed(&self) -> Result<()> {
        for g in 0..self.algebra.len() {
            if self.algebra.gen(g).degree + 1 == self.n && !self.eval(&self.algebra.d.values[g]).is_zero() {
                return Err(Error::Falsified(format!("ε(d{}) ≠ 0", self.algebra.gen(g).name)));
            }
        }
        Ok(())
    }

    pub fn to_map(&self) -> BTreeMap<String, String> {
        self.support()
            .map(|g| (self.algebra.gen(g).name.clone(), crate::rational::q_to_string(&self.values[g])))
            .collect()
    }
}

/// Builds `ε` from a class given as a functional, a bracket expression in
/// the homotopy Lie algebra, or a group word (circles, `n = 1`).
pub fn attach_trace(w: &SullivanAlgebra, n: u32, spec: &ClassSpec, max_length: Option<u32>) -> Result<AttachTrace> {
    let mut t = AttachTrace::zero(w.clone(), n);
    match spec {
        ClassSpec::Zero => {}
        ClassSpec::Functional { values } => {
            for (name, v) in values {
                let g = w.find(name).ok_or_else(|| Error::UnknownLetter(name.clone()))?;
                if w.gen(g).degree != n {
                    return Err(Error::DegreeMismatch(format!("{name} has degree {}, expected {n}", w.gen(g).degree)));
                }
                t.values[g] = parse_q(v).ok_or_else(|| Error::Input(format!("bad rational '{v}'")))?;
            }
        }
        ClassSpec::LieWord { word } => {
            let f = BracketEval::new(w).eval(&parse_lie(word)?)?;
            if !f.is_zero() && f.degree != n {
                return Err(Error::DegreeMismatch(format!("{word} lives in degree {}, expected {n}", f.degree)));
            }
            for (g, c) in f.values {
                t.values[g] = c;
            }
        }
        ClassSpec::GroupWord { word } => {
            if n != 1 {
                return Err(Error::DegreeMismatch("group words attach 2-cells (n = 1)".into()));
            }
            let circles: Vec<usize> =
                (0..w.len()).filter(|&g| w.gen(g).degree == 1 && w.d.values[g].is_zero()).collect();
            let len = max_length.ok_or_else(|| Error::CapMissing("group word".into()))?;
            let gw = parse_group_word(word, circles.len())?;
            let log = magnus_log(&gw, len)?;
            let lie = FreeLie::new(crate::lie::circle_letters(circles.len()), len);
            let ev = BracketEval::new(w);
            for (i, c) in &log.lie.coords {
                let tree = lie.basis[*i].tree.fmt_with(&lie.letters);
                let f = ev.eval(&parse_lie(&tree)?)?;
                for (g, x) in f.values {
                    t.values[g] += c * x;
                }
            }
        }
    }
    t.check_closed()?;
    Ok(t)
}

/// The expression of a trace as a bracket combination, when one was given.
pub fn describe(spec: &ClassSpec) -> String {
    match spec {
        ClassSpec::Zero => "0".into(),
        ClassSpec::Functional { values } => {
            values.iter().map(|(k, v)| format!("{v}·{k}*")).collect::<Vec<_>>().join(" + ")
        }
        ClassSpec::LieWord { word } => parse_lie(word).map(|e: LieExpr| e.to_string()).unwrap_or_else(|_| word.clone()),
        ClassSpec::GroupWord { word } => word.clone(),
    }
}
