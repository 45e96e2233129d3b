//! Bracket expressions such as `1/2 [x1,x1]` or `[a,[a,b]] - [b,[a,b]]`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;

#[derive(Debug, Clone, PartialEq)]
pub enum LieExpr {
    Letter(String),
    Bracket(Box<LieExpr>, Box<LieExpr>),
    Scale(Q, Box<LieExpr>),
    Sum(Vec<LieExpr>),
    Zero,
}

impl fmt::Display for LieExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieExpr::Letter(s) => write!(f, "{s}"),
            LieExpr::Bracket(a, b) => write!(f, "[{a},{b}]"),
            LieExpr::Scale(c, e) => write!(f, "{c} {e}"),
            LieExpr::Sum(v) => {
                let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
                write!(f, "{}", parts.join(" + "))
            }
            LieExpr::Zero => write!(f, "0"),
        }
    }
}

/// Operations needed to evaluate an expression in some Lie algebra.
pub trait LieTarget {
    type Elem: Clone;
    fn letter(&self, name: &str) -> Result<Self::Elem>;
    fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn scale(&self, c: &Q, a: &Self::Elem) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
}

impl LieExpr {
    pub fn eval<T: LieTarget>(&self, t: &T) -> Result<T::Elem> {
        match self {
            LieExpr::Letter(s) => t.letter(s),
            LieExpr::Bracket(a, b) => t.bracket(&a.eval(t)?, &b.eval(t)?),
            LieExpr::Scale(c, e) => Ok(t.scale(c, &e.eval(t)?)),
            LieExpr::Sum(v) => {
                let mut acc = t.zero();
                for e in v {
                    acc = t.add(&acc, &e.eval(t)?)?;
                }
                Ok(acc)
            }
            LieExpr::Zero => Ok(t.zero()),
        }
    }

    /// Bracket length of each summand, if homogeneous.
    pub fn length(&self) -> Option<u32> {
        match self {
            LieExpr::Letter(_) => Some(1),
            LieExpr::Bracket(a, b) => Some(a.length()? + b.length()?),
            LieExpr::Scale(_, e) => e.length(),
            LieExpr::Sum(v) => {
                let ls: Vec<Option<u32>> = v.iter().map(|e| e.length()).collect();
                let first = *ls.first()?;
                ls.iter().all(|l| *l == first).then_some(first)?
            }
            LieExpr::Zero => None,
        }
    }

    /// Letters occurring in the expression.
    pub fn letters(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect(&self, out: &mut Vec<String>) {
        match self {
            LieExpr::Letter(s) => out.push(s.clone()),
            LieExpr::Bracket(a, b) => {
                a.collect(out);
                b.collect(out);
            }
            LieExpr::Scale(_, e) => e.collect(out),
            LieExpr::Sum(v) => v.iter().for_each(|e| e.collect(out)),
            LieExpr::Zero => {}
        }
    }
}

pub fn parse_lie(s: &str) -> Result<LieExpr> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Input(format!("bracket expression: {msg} at offset {}", self.pos))
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<LieExpr> {
        let mut terms = Vec::new();
        let mut sign = Q::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -sign;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            terms.push(if sign == Q::one() { t } else { LieExpr::Scale(sign.clone(), Box::new(t)) });
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = Q::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -Q::one();
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 { terms.pop().expect("one term") } else { LieExpr::Sum(terms) })
    }

    fn term(&mut self) -> Result<LieExpr> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.rational()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                }
                match self.peek() {
                    Some(b'[') | Some(b'(') => {}
                    Some(ch) if ch.is_ascii_alphabetic() || ch == b'_' => {}
                    _ => {
                        return if c.is_zero() {
                            Ok(LieExpr::Zero)
                        } else {
                            Err(self.err("a bare number is not a Lie element"))
                        };
                    }
                }
                let a = self.atom()?;
                Ok(LieExpr::Scale(c, Box::new(a)))
            }
            _ => self.atom(),
        }
    }

    fn rational(&mut self) -> Result<Q> {
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_digit() || self.s[self.pos] == b'/') {
            self.pos += 1;
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        crate::rational::parse_q(txt).ok_or_else(|| self.err("bad coefficient"))
    }

    fn atom(&mut self) -> Result<LieExpr> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let a = self.expr()?;
                if self.peek() != Some(b',') {
                    return Err(self.err("expected ','"));
                }
                self.pos += 1;
                let b = self.expr()?;
                if self.peek() != Some(b']') {
                    return Err(self.err("expected ']'"));
                }
                self.pos += 1;
                Ok(LieExpr::Bracket(Box::new(a), Box::new(b)))
            }
            Some(b'(') => {
                self.pos += 1;
                let a = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(a)
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(LieExpr::Letter(String::from_utf8(self.s[start..self.pos].to_vec()).expect("ascii")))
            }
            _ => Err(self.err("expected a letter or a bracket")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_scaled_bracket() {
        let e = parse_lie("1/2 [x1,x1]").unwrap();
        assert_eq!(e.to_string(), "1/2 [x1,x1]");
        assert_eq!(e.length(), Some(2));
        let e = parse_lie("[a,[a,b]] - 3*[b,[a,b]]").unwrap();
        assert_eq!(e.letters(), vec!["a".to_string(), "b".to_string()]);
        assert!(parse_lie("[a,b").is_err());
        assert!(parse_lie("2").is_err());
    }
}
