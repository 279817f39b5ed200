//! Commutative polynomials in `x_1, …, x_n` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::ugl::element::CoeffRepr;

/// A sparse polynomial in `x_1, …, x_n`. Keys are exponent vectors of
/// length `n`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ShiftedPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl ShiftedPoly {
    pub fn zero(n: usize) -> Self {
        ShiftedPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rat::one())
    }

    pub fn constant(n: usize, c: Rat) -> Self {
        let mut p = Self::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    /// `x_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "x_{i} outside x_1..x_{n}");
        let mut e = vec![0; n];
        e[i - 1] = 1;
        let mut p = Self::zero(n);
        p.add_term(e, Rat::one());
        p
    }

    /// `x_i + c`.
    pub fn linear(n: usize, i: usize, c: i64) -> Self {
        Self::var(n, i).add(&Self::constant(n, Rat::from_int(c)))
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        debug_assert_eq!(e.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Rat {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        ShiftedPoly { n: self.n, terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "polynomials in different numbers of variables");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "polynomials in different numbers of variables");
        let mut out = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.n), |acc, _| acc.mul(self))
    }

    /// Value at a point.
    pub fn eval(&self, x: &[Rat]) -> Rat {
        assert_eq!(x.len(), self.n);
        self.terms
            .iter()
            .map(|(e, c)| e.iter().zip(x).fold(c.clone(), |acc, (&k, xi)| &acc * &xi.pow(k)))
            .sum()
    }

    /// Value at an integer point, e.g. a weight.
    pub fn eval_int(&self, x: &[i64]) -> Rat {
        let x: Vec<Rat> = x.iter().map(|&v| Rat::from_int(v)).collect();
        self.eval(&x)
    }

    /// `f(g_1, …, g_n)`: substitutes the polynomial `g_i` (in `m` variables)
    /// for `x_i`.
    pub fn compose(&self, g: &[ShiftedPoly]) -> ShiftedPoly {
        assert_eq!(g.len(), self.n);
        let m = g.first().map_or(0, |p| p.n);
        let mut out = Self::zero(m);
        for (e, c) in &self.terms {
            let mut t = Self::constant(m, c.clone());
            for (gi, &k) in g.iter().zip(e) {
                if k > 0 {
                    t = t.mul(&gi.pow(k));
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// The same polynomial viewed in `x_1, …, x_m`, `m ≥ n`.
    pub fn extend(&self, m: usize) -> ShiftedPoly {
        assert!(m >= self.n);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(m, 0);
                (e, c.clone())
            })
            .collect();
        ShiftedPoly { n: m, terms }
    }

    /// Parses expressions such as `(x1+1)*x2 - 3/2*x1^2`. Juxtaposition
    /// multiplies.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let toks: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { s, toks, i: 0, n };
        let out = p.expr()?;
        if p.i != p.toks.len() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }

    pub fn to_repr(&self) -> ShiftedRepr {
        ShiftedRepr {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (CoeffRepr::from(c), e.clone())).collect(),
        }
    }

    pub fn from_repr(r: &ShiftedRepr) -> Result<Self> {
        let mut p = Self::zero(r.n);
        for (c, e) in &r.terms {
            if e.len() != r.n {
                return Err(Error::Parse(format!("exponent vector {e:?} has length ≠ {}", r.n)));
            }
            p.add_term(e.clone(), c.to_rat()?);
        }
        Ok(p)
    }
}

/// JSON form: the number of variables and `(coefficient, exponents)` pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShiftedRepr {
    pub n: usize,
    pub terms: Vec<(CoeffRepr, Vec<u32>)>,
}

struct Parser<'a> {
    s: &'a str,
    toks: Vec<char>,
    i: usize,
    n: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at position {} in {:?}", self.i, self.s))
    }

    fn peek(&self) -> Option<char> {
        self.toks.get(self.i).copied()
    }

    fn number(&mut self) -> Option<u64> {
        let st = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        (self.i > st).then(|| self.toks[st..self.i].iter().collect::<String>().parse().ok()).flatten()
    }

    fn expr(&mut self) -> Result<ShiftedPoly> {
        let mut out = ShiftedPoly::zero(self.n);
        let mut first = true;
        loop {
            let mut neg = false;
            let mut signed = false;
            while let Some(c @ ('+' | '-')) = self.peek() {
                neg ^= c == '-';
                signed = true;
                self.i += 1;
            }
            if !first && !signed {
                break;
            }
            let t = self.term()?;
            out = if neg { out.sub(&t) } else { out.add(&t) };
            first = false;
            if self.peek().is_none() || self.peek() == Some(')') {
                break;
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<ShiftedPoly> {
        let mut out = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.i += 1;
                    out = out.mul(&self.power()?);
                }
                Some('(' | 'x' | '0'..='9') => out = out.mul(&self.power()?),
                _ => return Ok(out),
            }
        }
    }

    fn power(&mut self) -> Result<ShiftedPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.i += 1;
            let k = self.number().ok_or_else(|| self.err("expected an exponent"))?;
            return Ok(base.pow(k as u32));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ShiftedPoly> {
        match self.peek() {
            Some('(') => {
                self.i += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.i += 1;
                Ok(e)
            }
            Some('x') => {
                self.i += 1;
                let k = self.number().ok_or_else(|| self.err("expected a variable index"))? as usize;
                if k == 0 || k > self.n {
                    return Err(self.err(&format!("x{k} outside x1..x{}", self.n)));
                }
                Ok(ShiftedPoly::var(self.n, k))
            }
            Some('0'..='9') => {
                let num = self.number().ok_or_else(|| self.err("bad number"))?;
                let mut c = Rat::from(num as i64);
                if self.peek() == Some('/') {
                    self.i += 1;
                    let den = self.number().filter(|&d| d != 0).ok_or_else(|| self.err("bad denominator"))?;
                    c = &c / &Rat::from(den as i64);
                }
                Ok(ShiftedPoly::constant(self.n, c))
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

impl fmt::Display for ShiftedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest exponent vectors first
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let sep = match (i, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            write!(f, "{sep}")?;
            let a = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| if k == 1 { format!("x{}", j + 1) } else { format!("x{}^{k}", j + 1) })
                .collect();
            match (mono.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{a}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{a}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ShiftedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
