//! The superbracket and super-PBW normal forms.
//!
//! Normal forms are built by left insertion: the product `g · u` of a
//! generator with an already sorted word is computed recursively from
//! `g h = (-1)^{|g||h|} h g + [g, h]` and memoized per thread. A word is
//! normalized by inserting its factors one at a time from the right.
//!
//! The same machinery computes normal forms modulo the left ideal generated
//! by the generators with a virtual column (see [`crate::virt`]), because
//! every order here puts those generators last.

use std::cell::{Cell, RefCell};
use std::cmp::Ordering;
use std::rc::Rc;

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::element::EnvElement;
use super::symbol::Generator;
use super::word::Word;
use crate::error::{Error, Result};
use crate::rat::Rat;

/// A total order on generators used for normal forms.
///
/// Both orders rank generators by class, then by `(row, col)` with proper
/// symbols before virtual ones and smaller indices first. The classes are:
///
/// | class | `Standard`                | `RaisingFirst`          |
/// |-------|---------------------------|-------------------------|
/// | 0     | proper lowering (row > col) | proper raising (row < col) |
/// | 1     | proper Cartan (row = col) | proper Cartan           |
/// | 2     | proper raising (row < col) | proper lowering         |
/// | 3     | other, proper column      | other, proper column    |
/// | 4     | other, virtual column     | other, virtual column   |
///
/// `Standard` is the order used for printing and for the Harish-Chandra
/// projection. Equality of elements does not depend on the choice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum GeneratorOrder {
    #[default]
    Standard,
    RaisingFirst,
}

impl GeneratorOrder {
    pub const ALL: [GeneratorOrder; 2] = [GeneratorOrder::Standard, GeneratorOrder::RaisingFirst];

    #[inline]
    pub fn key(self, g: Generator) -> (u8, u16, u16) {
        let class = if g.is_proper() {
            let (r, c) = (g.row.index(), g.col.index());
            let (low, high) = match self {
                GeneratorOrder::Standard => (0, 2),
                GeneratorOrder::RaisingFirst => (2, 0),
            };
            match r.cmp(&c) {
                Ordering::Greater => low,
                Ordering::Equal => 1,
                Ordering::Less => high,
            }
        } else if g.col.is_proper() {
            3
        } else {
            4
        };
        (class, g.row.raw(), g.col.raw())
    }

    #[inline]
    pub fn cmp(self, a: Generator, b: Generator) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    /// True when the word is in normal form: weakly increasing, and no odd
    /// generator repeated.
    pub fn is_sorted(self, w: &[Generator]) -> bool {
        w.windows(2).all(|p| match self.cmp(p[0], p[1]) {
            Ordering::Less => true,
            Ordering::Equal => !p[0].is_odd(),
            Ordering::Greater => false,
        })
    }

    fn id(self) -> u8 {
        self as u8
    }
}

/// `[e_{a,b}, e_{c,d}] = δ_{bc} e_{a,d} − (−1)^{(|a|+|b|)(|c|+|d|)} δ_{ad} e_{c,b}`.
pub fn bracket(x: Generator, y: Generator) -> SmallVec<[(Generator, Rat); 2]> {
    let mut out: SmallVec<[(Generator, Rat); 2]> = SmallVec::new();
    if x.col == y.row {
        out.push((Generator::new(x.row, y.col), Rat::one()));
    }
    if x.row == y.col {
        let g = Generator::new(y.row, x.col);
        let c = if x.parity() & y.parity() == 1 { Rat::one() } else { Rat::from_int(-1) };
        if let Some(pos) = out.iter().position(|(h, _)| *h == g) {
            let s = &out[pos].1 + &c;
            if s.is_zero() {
                out.remove(pos);
            } else {
                out[pos].1 = s;
            }
        } else {
            out.push((g, c));
        }
    }
    out
}

/// The superbracket as an element of the common context.
pub fn superbracket(x: &EnvElement, y: &EnvElement) -> Result<EnvElement> {
    // bilinear extension over words of length one; longer words use the
    // graded commutator
    if x.context() != y.context() {
        return Err(Error::ContextMismatch(x.context().m, x.context().n, y.context().m, y.context().n));
    }
    let ctx = x.context();
    let mut out = EnvElement::zero(ctx);
    for (wx, cx) in x.iter() {
        for (wy, cy) in y.iter() {
            let c = cx * cy;
            if wx.len() == 1 && wy.len() == 1 {
                for (g, k) in bracket(wx[0], wy[0]) {
                    out.add_term(Word::single(g), &c * &k);
                }
            } else {
                let s = if wx.parity() & wy.parity() == 1 { Rat::one() } else { Rat::from_int(-1) };
                out.add_term(wx.concat(wy), c.clone());
                out.add_term(wy.concat(wx), &c * &s);
            }
        }
    }
    Ok(out)
}

type Terms = Rc<[(Word, Rat)]>;

#[derive(Clone, PartialEq, Eq, Hash)]
struct Key {
    ord: u8,
    modulo: bool,
    g: Generator,
    u: Word,
}

const DEPTH_LIMIT: u32 = 2_000;

thread_local! {
    static MEMO: RefCell<FxHashMap<Key, Terms>> = RefCell::new(FxHashMap::default());
    static DEPTH: Cell<u32> = const { Cell::new(0) };
}

/// Drops every memoized product held by the calling thread.
pub fn clear_memo() {
    MEMO.with(|m| m.borrow_mut().clear());
}

/// Number of memoized products held by the calling thread.
pub fn memo_len() -> usize {
    MEMO.with(|m| m.borrow().len())
}

fn accumulate(acc: &mut FxHashMap<Word, Rat>, w: &Word, c: Rat) {
    if c.is_zero() {
        return;
    }
    match acc.entry(w.clone()) {
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

/// Normal form of `g · u` for a normal word `u`. With `modulo` set, `u` must
/// contain no virtual-column generator, and the result is reduced modulo the
/// left ideal those generators span.
pub(crate) fn left_mul(ord: GeneratorOrder, modulo: bool, g: Generator, u: &Word) -> Result<Terms> {
    // products of proper-column generators never leave that subalgebra, so
    // the reduction only matters below a virtual-column factor
    let modulo = modulo && g.is_annihilator();
    if modulo && g.is_annihilator() && u.is_empty() {
        return Ok(Rc::from(Vec::new()));
    }
    if u.is_empty() {
        return Ok(Rc::from(vec![(Word::single(g), Rat::one())]));
    }
    let h = u[0];
    match ord.cmp(g, h) {
        Ordering::Less => return Ok(Rc::from(vec![(u.prepend(g), Rat::one())])),
        Ordering::Equal => {
            return Ok(if g.is_odd() {
                Rc::from(Vec::new())
            } else {
                Rc::from(vec![(u.prepend(g), Rat::one())])
            })
        }
        Ordering::Greater => {}
    }
    let key = Key { ord: ord.id(), modulo, g, u: u.clone() };
    if let Some(t) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return Ok(t);
    }
    let depth = DEPTH.with(|d| {
        let v = d.get() + 1;
        d.set(v);
        v
    });
    let result = if depth > DEPTH_LIMIT {
        Err(Error::RewriteBudget(format!("recursion depth {depth} at {g} · {u}")))
    } else {
        swap_through(ord, modulo, g, h, u)
    };
    DEPTH.with(|d| d.set(d.get() - 1));
    let terms = result?;
    MEMO.with(|m| m.borrow_mut().insert(key, terms.clone()));
    Ok(terms)
}

/// `g · (h u') = (−1)^{|g||h|} h · (g · u') + [g, h] · u'` with `g > h`.
fn swap_through(ord: GeneratorOrder, modulo: bool, g: Generator, h: Generator, u: &Word) -> Result<Terms> {
    let rest = u.tail(1);
    let mut acc: FxHashMap<Word, Rat> = FxHashMap::default();
    let sign = if g.is_odd() && h.is_odd() { Rat::from_int(-1) } else { Rat::one() };
    for (w, c) in left_mul(ord, modulo, g, &rest)?.iter() {
        let c = &sign * c;
        for (w2, c2) in left_mul(ord, modulo, h, w)?.iter() {
            accumulate(&mut acc, w2, &c * c2);
        }
    }
    for (b, cb) in bracket(g, h) {
        for (w2, c2) in left_mul(ord, modulo, b, &rest)?.iter() {
            accumulate(&mut acc, w2, &cb * c2);
        }
    }
    let mut v: Vec<(Word, Rat)> = acc.into_iter().collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Rc::from(v))
}

/// Left-inserts the generators of `prefix` (rightmost first) into every word
/// of `state`, which must already be normal.
pub(crate) fn insert_prefix(
    ord: GeneratorOrder,
    modulo: bool,
    prefix: &[Generator],
    state: FxHashMap<Word, Rat>,
) -> Result<FxHashMap<Word, Rat>> {
    let mut state = state;
    for &g in prefix.iter().rev() {
        let mut next: FxHashMap<Word, Rat> = FxHashMap::default();
        for (w, c) in &state {
            for (w2, c2) in left_mul(ord, modulo, g, w)?.iter() {
                accumulate(&mut next, w2, c * c2);
            }
        }
        state = next;
    }
    Ok(state)
}

/// Start of the longest normal suffix of `w`, or `None` when that suffix is
/// already zero (a repeated odd generator).
fn sorted_suffix_start(ord: GeneratorOrder, w: &[Generator]) -> Option<usize> {
    let mut s = w.len().saturating_sub(1);
    while s > 0 {
        match ord.cmp(w[s - 1], w[s]) {
            Ordering::Less => s -= 1,
            Ordering::Equal if !w[s].is_odd() => s -= 1,
            Ordering::Equal => return None,
            Ordering::Greater => break,
        }
    }
    Some(s)
}

pub(crate) fn normal_form_word(ord: GeneratorOrder, modulo: bool, w: &Word, c: &Rat) -> Result<FxHashMap<Word, Rat>> {
    let mut state: FxHashMap<Word, Rat> = FxHashMap::default();
    if w.is_empty() {
        state.insert(w.clone(), c.clone());
        return Ok(state);
    }
    if modulo && w[w.len() - 1].is_annihilator() {
        return Ok(state);
    }
    let Some(s) = sorted_suffix_start(ord, w) else {
        return Ok(state);
    };
    state.insert(w.tail(s), c.clone());
    insert_prefix(ord, modulo, &w[..s], state)
}

/// The super-PBW normal form of `x`: every word weakly increasing in `ord`,
/// with no repeated odd generator.
pub fn normal_form(x: &EnvElement, ord: GeneratorOrder) -> Result<EnvElement> {
    let mut out = EnvElement::zero(x.context());
    for (w, c) in x.iter() {
        for (w2, c2) in normal_form_word(ord, false, w, c)? {
            out.add_term(w2, c2);
        }
    }
    Ok(out)
}

/// Normal form of the product `x · y`.
pub fn mul_normal(x: &EnvElement, y: &EnvElement, ord: GeneratorOrder) -> Result<EnvElement> {
    let yn = normal_form(y, ord)?;
    let base: FxHashMap<Word, Rat> = yn.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
    let mut out = EnvElement::zero(x.context());
    for (wx, cx) in x.iter() {
        let scaled: FxHashMap<Word, Rat> = base.iter().map(|(w, c)| (w.clone(), c * cx)).collect();
        for (w, c) in insert_prefix(ord, false, wx, scaled)? {
            out.add_term(w, c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ugl::symbol::{e, Context, Symbol};

    fn el(ctx: Context, terms: &[(&[Generator], i64)]) -> EnvElement {
        EnvElement::from_terms(ctx, terms.iter().map(|(w, c)| (w.to_vec(), Rat::from_int(*c)))).unwrap()
    }

    #[test]
    fn bracket_examples() {
        let b = bracket(e(1, 2), e(2, 1));
        assert_eq!(b.len(), 2);
        assert!(b.contains(&(e(1, 1), Rat::one())));
        assert!(b.contains(&(e(2, 2), Rat::from_int(-1))));
        let (one, a) = (Symbol::proper(1), Symbol::virt(1));
        let b = bracket(Generator::new(one, a), Generator::new(a, Symbol::proper(2)));
        assert_eq!(b.as_slice(), &[(e(1, 2), Rat::one())]);
        assert!(bracket(e(1, 2), e(3, 4)).is_empty());
        assert!(bracket(e(1, 1), e(1, 1)).is_empty());
    }

    #[test]
    fn odd_bracket_is_symmetric_sum() {
        // [e_{1,α}, e_{α,1}] = e_{1,1} + e_{α,α}
        let (one, a) = (Symbol::proper(1), Symbol::virt(1));
        let b = bracket(Generator::new(one, a), Generator::new(a, one));
        assert!(b.contains(&(e(1, 1), Rat::one())));
        assert!(b.contains(&(Generator::new(a, a), Rat::one())));
    }

    #[test]
    fn sorted_word_is_fixed() {
        let ctx = Context::gl(2);
        let x = el(ctx, &[(&[e(2, 1), e(1, 2)], 1)]);
        assert_eq!(x.normalized(), x);
    }

    #[test]
    fn single_swap() {
        let ctx = Context::gl(2);
        let x = el(ctx, &[(&[e(1, 2), e(2, 1)], 1)]);
        let expect = el(ctx, &[(&[e(2, 1), e(1, 2)], 1), (&[e(1, 1)], 1), (&[e(2, 2)], -1)]);
        assert_eq!(x.normalized(), expect);
        assert!(x.equals(&expect).unwrap());
        assert!(!el(ctx, &[(&[e(1, 1)], 1)]).equals(&el(ctx, &[(&[e(2, 2)], 1)])).unwrap());
    }

    #[test]
    fn odd_square_vanishes() {
        let ctx = Context::new(1, 1);
        let g = Generator::new(Symbol::proper(1), Symbol::virt(1));
        let x = EnvElement::from_word(ctx, &[g, g], Rat::one()).unwrap();
        assert!(x.normalized().is_zero());
        assert!(x.normal_form(GeneratorOrder::RaisingFirst).is_zero());
    }

    #[test]
    fn normal_words_are_sorted() {
        let ctx = Context::new(1, 2);
        let gens = ctx.generators();
        let w: Vec<Generator> = vec![gens[7], gens[2], gens[5], gens[1], gens[8]];
        let x = EnvElement::from_word(ctx, &w, Rat::one()).unwrap();
        for ord in GeneratorOrder::ALL {
            let y = x.normal_form(ord);
            assert!(y.iter().all(|(w, _)| ord.is_sorted(w)));
            assert_eq!(y.normal_form(ord), y);
        }
    }

    #[test]
    fn orders_agree_on_equality() {
        let ctx = Context::gl(3);
        let a = el(ctx, &[(&[e(1, 3), e(3, 2), e(2, 1)], 1)]);
        let b = a.normal_form(GeneratorOrder::RaisingFirst);
        assert!(a.equals(&b).unwrap());
        assert!(a.equals_in(&a.normalized(), GeneratorOrder::RaisingFirst).unwrap());
    }

    #[test]
    fn mul_normal_matches_normalized_product() {
        let ctx = Context::gl(2);
        let x = el(ctx, &[(&[e(1, 2), e(2, 1)], 2), (&[e(2, 2)], -1)]);
        let y = el(ctx, &[(&[e(2, 1), e(1, 1), e(1, 2)], 1), (&[], 3)]);
        let p = x.mul_normal(&y, GeneratorOrder::Standard).unwrap();
        assert_eq!(p, (&x * &y).normalized());
    }
}
