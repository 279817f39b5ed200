//! The supersymmetric algebra `ℂ[M_{m|n,d}]`.
//!
//! Variables `(a|j)` pair a row symbol with a column index `j ∈ 1..=d`; all
//! columns are odd, so `|(a|j)| = |a| + 1` and `(i|j)` with proper `i` is
//! even while `(α|j)` with virtual `α` is odd. Any two odd variables
//! skew-commute. Monomials are stored with their variables sorted by
//! (row kind, row index, column); the sign of the sorting permutation
//! restricted to odd variables is folded into the coefficient.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::ugl::element::CoeffRepr;
use crate::ugl::Symbol;

/// The variable `(row|col)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RepVar {
    pub row: Symbol,
    pub col: u16,
}

impl RepVar {
    pub fn new(row: Symbol, col: u16) -> Self {
        RepVar { row, col }
    }

    /// `(i|j)` with proper `i`.
    pub fn proper(i: u16, j: u16) -> Self {
        RepVar { row: Symbol::proper(i), col: j }
    }

    pub fn parity(self) -> u8 {
        (self.row.parity() + 1) % 2
    }

    pub fn is_odd(self) -> bool {
        self.parity() == 1
    }
}

impl fmt::Display for RepVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.row, self.col)
    }
}

impl fmt::Debug for RepVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sorted variables with multiplicities; odd variables occur at most once.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(RepVar, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// Normalizes a product of variables in the given order. Returns the
    /// sign of the reordering, or `None` when an odd variable repeats.
    pub fn from_vars(vars: &[RepVar]) -> Option<(i8, Monomial)> {
        let mut v = vars.to_vec();
        // insertion sort, counting swaps of two odd variables
        let mut sign = 1i8;
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                if v[j - 1].is_odd() && v[j].is_odd() {
                    sign = -sign;
                }
                v.swap(j - 1, j);
                j -= 1;
            }
        }
        let mut out: Vec<(RepVar, u32)> = Vec::with_capacity(v.len());
        for x in v {
            match out.last_mut() {
                Some((y, k)) if *y == x => {
                    if x.is_odd() {
                        return None;
                    }
                    *k += 1;
                }
                _ => out.push((x, 1)),
            }
        }
        Some((sign, Monomial(out)))
    }

    pub fn powers(&self) -> &[(RepVar, u32)] {
        &self.0
    }

    /// The variables in order, each repeated by its exponent.
    pub fn vars(&self) -> Vec<RepVar> {
        self.0.iter().flat_map(|&(x, k)| std::iter::repeat(x).take(k as usize)).collect()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|x| x.1).sum()
    }

    pub fn parity(&self) -> u8 {
        (self.0.iter().map(|&(x, k)| x.parity() as u32 * k).sum::<u32>() % 2) as u8
    }

    pub fn exponent(&self, x: RepVar) -> u32 {
        self.0.iter().find(|y| y.0 == x).map_or(0, |y| y.1)
    }

    pub fn has_odd(&self) -> bool {
        self.0.iter().any(|x| x.0.is_odd())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (x, k) in &self.0 {
            if *k == 1 {
                write!(f, "{x}")?;
            } else {
                write!(f, "{x}^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of `ℂ[M_{m|n,d}]`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SuperPolynomial {
    terms: BTreeMap<Monomial, Rat>,
}

impl SuperPolynomial {
    pub fn zero() -> Self {
        SuperPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(x: RepVar) -> Self {
        Self::from_vars(&[x], Rat::one())
    }

    /// `c · x_1 x_2 ⋯ x_k` in the given factor order.
    pub fn from_vars(vars: &[RepVar], c: Rat) -> Self {
        let mut p = Self::zero();
        if let Some((s, m)) = Monomial::from_vars(vars) {
            p.add_term(m, if s < 0 { -c } else { c });
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
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

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SuperPolynomial { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            let v1 = m1.vars();
            for (m2, c2) in &other.terms {
                let mut v = v1.clone();
                v.extend(m2.vars());
                if let Some((s, m)) = Monomial::from_vars(&v) {
                    let c = c1 * c2;
                    out.add_term(m, if s < 0 { -c } else { c });
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// True when every monomial has the same ℤ₂-degree.
    pub fn homogeneous_parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|m| m.parity());
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn has_odd(&self) -> bool {
        self.terms.keys().any(|m| m.has_odd())
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// The scalar `c` with `self = c · v`, for nonzero `v`.
    pub fn ratio_to(&self, v: &SuperPolynomial) -> Result<Rat> {
        let Some((m0, c0)) = v.terms.iter().next() else {
            return Err(Error::NotEigen("reference vector is zero".into()));
        };
        if self.is_zero() {
            return Ok(Rat::zero());
        }
        let r = &self.coeff(m0) / c0;
        if self.terms.len() != v.terms.len() || !self.sub(&v.scale(&r)).is_empty() {
            return Err(Error::NotEigen(format!("result is not a multiple of the vector ({} terms)", self.len())));
        }
        Ok(r)
    }

    /// Parses sums like `2*(1|1)(2|2) - (1|2)^2 + 1/3(a1|1)(a2|2)`. Virtual
    /// rows are written `aN` or `αN`.
    pub fn parse(s: &str) -> Result<Self> {
        parse_poly(s)
    }

    pub fn to_repr(&self) -> Vec<PolyTermRepr> {
        self.terms
            .iter()
            .map(|(m, c)| PolyTermRepr {
                coeff: CoeffRepr::from(c),
                vars: m.0.iter().map(|&(x, k)| (x.row, x.col, k)).collect(),
            })
            .collect()
    }

    pub fn from_repr(r: &[PolyTermRepr]) -> Result<Self> {
        let mut p = Self::zero();
        for t in r {
            let vars: Vec<RepVar> = t
                .vars
                .iter()
                .flat_map(|&(row, col, k)| std::iter::repeat(RepVar::new(row, col)).take(k as usize))
                .collect();
            p = p.add(&Self::from_vars(&vars, t.coeff.to_rat()?));
        }
        Ok(p)
    }
}

/// JSON form of one term: coefficient and `(row, col, exponent)` triples.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyTermRepr {
    pub coeff: CoeffRepr,
    pub vars: Vec<(Symbol, u16, u32)>,
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.0.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_poly(s: &str) -> Result<SuperPolynomial> {
    let bad = |msg: &str| Error::Parse(format!("{msg} in {s:?}"));
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0;
    let mut out = SuperPolynomial::zero();
    if chars.is_empty() {
        return Err(bad("empty polynomial"));
    }
    while i < chars.len() {
        let mut neg = false;
        while i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
            neg ^= chars[i] == '-';
            i += 1;
        }
        let start = i;
        while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
            i += 1;
        }
        let mut c = if i > start {
            let t: String = chars[start..i].iter().collect();
            t.parse::<Rat>().map_err(|_| bad("bad coefficient"))?
        } else {
            Rat::one()
        };
        if i < chars.len() && chars[i] == '*' {
            i += 1;
        }
        let mut vars = Vec::new();
        while i < chars.len() && chars[i] == '(' {
            let close = chars[i..].iter().position(|&c| c == ')').ok_or_else(|| bad("unclosed variable"))? + i;
            let body: String = chars[i + 1..close].iter().collect();
            let (row, col) = body.split_once('|').ok_or_else(|| bad("variable without '|'"))?;
            let col: u16 = col.parse().map_err(|_| bad("bad column"))?;
            let (virt, idx) = match row.strip_prefix('a').or_else(|| row.strip_prefix('α')) {
                Some(r) => (true, r),
                None => (false, row),
            };
            let idx: u16 = idx.parse().map_err(|_| bad("bad row"))?;
            if col == 0 || idx == 0 {
                return Err(bad("indices start at 1"));
            }
            let row = if virt { Symbol::virt(idx) } else { Symbol::proper(idx) };
            i = close + 1;
            let mut k = 1u32;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let st = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                k = chars[st..i].iter().collect::<String>().parse().map_err(|_| bad("bad exponent"))?;
            }
            for _ in 0..k {
                vars.push(RepVar::new(row, col));
            }
            if i < chars.len() && chars[i] == '*' {
                i += 1;
            }
        }
        if i == start {
            return Err(bad("expected a term"));
        }
        if neg {
            c = -c;
        }
        out = out.add(&SuperPolynomial::from_vars(&vars, c));
        if i < chars.len() && chars[i] != '+' && chars[i] != '-' {
            return Err(bad("unexpected character"));
        }
    }
    Ok(out)
}

/// `det[(rows_r | cols_s)]` over commuting (proper) rows.
pub fn minor_det(rows: &[Symbol], cols: &[u16]) -> SuperPolynomial {
    let k = rows.len();
    assert_eq!(k, cols.len());
    let mut out = SuperPolynomial::zero();
    for perm in (0..k).permutations(k) {
        let inv = (0..k).tuple_combinations().filter(|&(a, b)| perm[a] > perm[b]).count();
        let vars: Vec<RepVar> = (0..k).map(|r| RepVar::new(rows[r], cols[perm[r]])).collect();
        out = out.add(&SuperPolynomial::from_vars(&vars, Rat::sign(inv)));
    }
    out
}

/// The bracket `det[(i|j)]_{i,j=1..n}`.
pub fn bracket_det(n: usize) -> SuperPolynomial {
    let rows: Vec<Symbol> = (1..=n as u16).map(Symbol::proper).collect();
    let cols: Vec<u16> = (1..=n as u16).collect();
    minor_det(&rows, &cols)
}
