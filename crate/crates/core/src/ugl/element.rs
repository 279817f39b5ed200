//! Elements of `U(gl(m|n))`: finite rational combinations of words.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::pbw::{self, GeneratorOrder};
use super::symbol::{Context, Generator, Symbol};
use super::word::Word;
use crate::error::{Error, Result};
use crate::rat::Rat;

/// An element of the enveloping algebra, stored as a map from words to
/// nonzero rational coefficients. Words are free products: two elements may
/// be equal in `U(gl(m|n))` without having the same terms; use
/// [`EnvElement::equals`] or compare normal forms.
#[derive(Clone, PartialEq, Eq)]
pub struct EnvElement {
    ctx: Context,
    terms: FxHashMap<Word, Rat>,
}

impl EnvElement {
    pub fn zero(ctx: Context) -> Self {
        EnvElement { ctx, terms: FxHashMap::default() }
    }

    pub fn one(ctx: Context) -> Self {
        Self::scalar(ctx, Rat::one())
    }

    pub fn scalar(ctx: Context, c: Rat) -> Self {
        let mut x = Self::zero(ctx);
        x.add_term(Word::empty(), c);
        x
    }

    pub fn generator(ctx: Context, g: Generator) -> Result<Self> {
        ctx.check(g)?;
        Ok(Self::from_word_unchecked(ctx, Word::single(g), Rat::one()))
    }

    /// Proper generator `e_{i,j}` of `gl(n)`. Panics if out of range.
    pub fn e(ctx: Context, i: u16, j: u16) -> Self {
        Self::generator(ctx, super::symbol::e(i, j)).expect("generator out of context")
    }

    pub fn from_word(ctx: Context, gens: &[Generator], c: Rat) -> Result<Self> {
        for &g in gens {
            ctx.check(g)?;
        }
        Ok(Self::from_word_unchecked(ctx, Word::intern(gens), c))
    }

    pub(crate) fn from_word_unchecked(ctx: Context, w: Word, c: Rat) -> Self {
        let mut x = Self::zero(ctx);
        x.add_term(w, c);
        x
    }

    /// Builds an element from `(word, coefficient)` pairs, validating every
    /// generator against `ctx`.
    pub fn from_terms(ctx: Context, terms: impl IntoIterator<Item = (Vec<Generator>, Rat)>) -> Result<Self> {
        let mut x = Self::zero(ctx);
        for (gens, c) in terms {
            for &g in &gens {
                ctx.check(g)?;
            }
            x.add_term(Word::intern(&gens), c);
        }
        Ok(x)
    }

    pub fn context(&self) -> Context {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Rat {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Coefficient of the empty word.
    pub fn constant_term(&self) -> Rat {
        self.coeff(&Word::empty())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rat)> {
        self.terms.iter()
    }

    /// Terms in a deterministic order (shorter words first, then lexicographic).
    pub fn sorted_terms(&self) -> Vec<(Word, Rat)> {
        let mut v: Vec<_> = self.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    /// Length of the longest word, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    pub(crate) fn add_term(&mut self, w: Word, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    fn same_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch(self.ctx.m, self.ctx.n, other.ctx.m, other.ctx.n))
        }
    }

    /// Reinterprets the element in a larger context (for instance `gl(2) ⊂ gl(3)`
    /// as the top-left corner).
    pub fn embed(&self, ctx: Context) -> Result<Self> {
        if ctx.m < self.ctx.m || ctx.n < self.ctx.n {
            return Err(Error::Range(format!(
                "cannot embed gl({}|{}) into gl({}|{})",
                self.ctx.m, self.ctx.n, ctx.m, ctx.n
            )));
        }
        Ok(EnvElement { ctx, terms: self.terms.clone() })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        EnvElement {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Free product: bilinear extension of word concatenation. No rewriting.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let mut out = Self::zero(self.ctx);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Product reduced to normal form in the given order.
    pub fn mul_normal(&self, other: &Self, ord: GeneratorOrder) -> Result<Self> {
        self.same_ctx(other)?;
        pbw::mul_normal(self, other, ord)
    }

    /// Super-PBW normal form (see [`pbw::normal_form`]).
    pub fn normal_form(&self, ord: GeneratorOrder) -> Self {
        pbw::normal_form(self, ord).expect("PBW rewriting exceeded its budget")
    }

    /// Normal form in the standard order.
    pub fn normalized(&self) -> Self {
        self.normal_form(GeneratorOrder::Standard)
    }

    /// Exact equality in `U(gl(m|n))`: the normal form of the difference vanishes.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.try_sub(other)?.normalized().is_zero())
    }

    /// Equality decided in an explicit order; the answer never depends on it.
    pub fn equals_in(&self, other: &Self, ord: GeneratorOrder) -> Result<bool> {
        Ok(self.try_sub(other)?.normal_form(ord).is_zero())
    }

    /// True when every word has the same ℤ₂-degree.
    pub fn homogeneous_parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|w| w.parity());
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// True when some word mentions a virtual symbol.
    pub fn has_virtual(&self) -> bool {
        self.terms
            .keys()
            .any(|w| w.iter().any(|g| g.row.is_virtual() || g.col.is_virtual()))
    }

    /// Image of a symbol substitution applied letterwise to every generator.
    pub fn map_symbols(&self, ctx: Context, f: impl Fn(Symbol) -> Symbol) -> Result<Self> {
        let mut out = Self::zero(ctx);
        for (w, c) in &self.terms {
            let gens: Vec<Generator> = w.iter().map(|g| Generator::new(f(g.row), f(g.col))).collect();
            for &g in &gens {
                ctx.check(g)?;
            }
            out.add_term(Word::intern(&gens), c.clone());
        }
        Ok(out)
    }

    pub fn to_latex(&self) -> String {
        render(self, |g| g.latex(), true)
    }

    pub fn to_repr(&self) -> ElementRepr {
        ElementRepr {
            context: self.ctx,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(w, c)| TermRepr { coeff: CoeffRepr::from(&c), word: w.to_vec() })
                .collect(),
        }
    }

    pub fn from_repr(r: &ElementRepr) -> Result<Self> {
        let mut x = Self::zero(r.context);
        for t in &r.terms {
            for &g in &t.word {
                r.context.check(g)?;
            }
            x.add_term(Word::intern(&t.word), t.coeff.to_rat()?);
        }
        Ok(x)
    }
}

fn render(x: &EnvElement, gen: impl Fn(Generator) -> String, latex: bool) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (w, c)) in x.sorted_terms().into_iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let body: String = if latex {
            w.iter().map(|&g| gen(g)).collect::<Vec<_>>().join(" ")
        } else {
            w.iter().map(|&g| gen(g)).collect()
        };
        let coeff = if latex && !a.is_integer() {
            format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
        } else {
            a.to_string()
        };
        if w.is_empty() {
            out.push_str(&coeff);
        } else if a.is_one() {
            out.push_str(&body);
        } else if latex {
            out.push_str(&format!("{coeff} {body}"));
        } else {
            out.push_str(&format!("{coeff}*{body}"));
        }
    }
    out
}

impl fmt::Display for EnvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, |g| g.to_string(), false))
    }
}

impl fmt::Debug for EnvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[gl({}|{})] {}", self.ctx.m, self.ctx.n, self)
    }
}

impl Add for &EnvElement {
    type Output = EnvElement;
    /// Panics on a context mismatch; use [`EnvElement::try_add`] to handle it.
    fn add(self, rhs: &EnvElement) -> EnvElement {
        self.try_add(rhs).unwrap()
    }
}

impl Sub for &EnvElement {
    type Output = EnvElement;
    fn sub(self, rhs: &EnvElement) -> EnvElement {
        self.try_sub(rhs).unwrap()
    }
}

impl Mul for &EnvElement {
    type Output = EnvElement;
    /// Free product; panics on a context mismatch.
    fn mul(self, rhs: &EnvElement) -> EnvElement {
        self.try_mul(rhs).unwrap()
    }
}

impl Neg for &EnvElement {
    type Output = EnvElement;
    fn neg(self) -> EnvElement {
        self.scale(&Rat::from_int(-1))
    }
}

impl Add for EnvElement {
    type Output = EnvElement;
    fn add(self, rhs: EnvElement) -> EnvElement {
        &self + &rhs
    }
}

impl Sub for EnvElement {
    type Output = EnvElement;
    fn sub(self, rhs: EnvElement) -> EnvElement {
        &self - &rhs
    }
}

impl Mul for EnvElement {
    type Output = EnvElement;
    fn mul(self, rhs: EnvElement) -> EnvElement {
        &self * &rhs
    }
}

impl Neg for EnvElement {
    type Output = EnvElement;
    fn neg(self) -> EnvElement {
        -&self
    }
}

/// JSON form of an element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRepr {
    pub context: Context,
    pub terms: Vec<TermRepr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRepr {
    pub coeff: CoeffRepr,
    pub word: Vec<Generator>,
}

/// `[numerator, denominator]`; integers that overflow `i64` are written as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffRepr(pub BigIntRepr, pub BigIntRepr);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BigIntRepr {
    Small(i64),
    Big(String),
}

impl BigIntRepr {
    fn from_big(n: num_bigint::BigInt) -> Self {
        use num_traits::ToPrimitive;
        match n.to_i64() {
            Some(v) => BigIntRepr::Small(v),
            None => BigIntRepr::Big(n.to_string()),
        }
    }

    fn to_big(&self) -> Result<num_bigint::BigInt> {
        match self {
            BigIntRepr::Small(v) => Ok((*v).into()),
            BigIntRepr::Big(s) => s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}"))),
        }
    }
}

impl From<&Rat> for CoeffRepr {
    fn from(c: &Rat) -> Self {
        CoeffRepr(BigIntRepr::from_big(c.numer()), BigIntRepr::from_big(c.denom()))
    }
}

impl CoeffRepr {
    pub fn to_rat(&self) -> Result<Rat> {
        let d = self.1.to_big()?;
        if num_traits::Zero::is_zero(&d) {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Rat::from_big(self.0.to_big()?, d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ugl::symbol::e;

    fn g2() -> Context {
        Context::gl(2)
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let x = EnvElement::e(g2(), 1, 2);
        assert!((&x - &x).is_zero());
        assert_eq!(EnvElement::scalar(g2(), Rat::zero()).len(), 0);
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let x = &EnvElement::e(g2(), 1, 2) + &EnvElement::e(g2(), 2, 1);
        assert_eq!(&EnvElement::one(g2()) * &x, x);
        assert_eq!(&x * &EnvElement::one(g2()), x);
    }

    #[test]
    fn free_product_multiplies_coefficients() {
        let a = EnvElement::e(g2(), 1, 2).scale(&Rat::from_int(2));
        let b = EnvElement::e(g2(), 2, 1).scale(&Rat::from_int(3));
        let p = &a * &b;
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&Word::intern(&[e(1, 2), e(2, 1)])), Rat::from_int(6));
    }

    #[test]
    fn free_product_distributes() {
        let s = &EnvElement::e(g2(), 1, 2) + &EnvElement::e(g2(), 2, 1);
        let p = &s * &EnvElement::e(g2(), 1, 1);
        let expect = EnvElement::from_terms(
            g2(),
            [(vec![e(1, 2), e(1, 1)], Rat::one()), (vec![e(2, 1), e(1, 1)], Rat::one())],
        )
        .unwrap();
        assert_eq!(p, expect);
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = EnvElement::e(Context::gl(2), 1, 1);
        let b = EnvElement::e(Context::gl(3), 1, 1);
        assert!(matches!(a.try_mul(&b), Err(Error::ContextMismatch(..))));
        assert!(a.try_add(&b).is_err());
        assert!(EnvElement::generator(Context::gl(2), e(3, 1)).is_err());
        assert!(a.embed(Context::gl(3)).unwrap().try_add(&b).is_ok());
    }

    #[test]
    fn repr_round_trip() {
        let x = EnvElement::from_terms(
            Context::new(1, 2),
            [
                (vec![e(1, 2), Generator::new(Symbol::proper(1), Symbol::virt(1))], Rat::new(-3, 4)),
                (vec![], Rat::from_int(5)),
            ],
        )
        .unwrap();
        assert_eq!(EnvElement::from_repr(&x.to_repr()).unwrap(), x);
    }

    #[test]
    fn display_is_deterministic() {
        let x = EnvElement::from_terms(
            g2(),
            [
                (vec![e(2, 1), e(1, 2)], Rat::from_int(-1)),
                (vec![e(2, 2)], Rat::one()),
                (vec![e(1, 1), e(2, 2)], Rat::one()),
            ],
        )
        .unwrap();
        assert_eq!(x.to_string(), "e_{2,2} + e_{1,1}e_{2,2} - e_{2,1}e_{1,2}");
        assert_eq!(x.to_latex(), "e_{2,2} + e_{1,1} e_{2,2} - e_{2,1} e_{1,2}");
    }
}
