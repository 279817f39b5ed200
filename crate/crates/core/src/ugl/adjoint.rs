//! Adjoint superderivations `T_a(N) = a N − (−1)^{|a||N|} N a`.

use super::element::EnvElement;
use super::symbol::Generator;
use super::word::Word;
use crate::error::Result;
use crate::rat::Rat;

/// `T_a(x)`, computed word by word on free words (no rewriting). Each word
/// carries its own parity, so `x` need not be homogeneous.
pub fn adjoint_t(a: Generator, x: &EnvElement) -> Result<EnvElement> {
    x.context().check(a)?;
    let aw = Word::single(a);
    let mut out = EnvElement::zero(x.context());
    for (w, c) in x.iter() {
        out.add_term(aw.concat(w), c.clone());
        let s = if a.is_odd() && w.parity() == 1 { c.clone() } else { -c };
        out.add_term(w.concat(&aw), s);
    }
    Ok(out)
}

/// `T_{a_1} T_{a_2} ⋯ T_{a_k}(x)`: the rightmost operator acts first.
pub fn adjoint_word(ops: &[Generator], x: &EnvElement) -> Result<EnvElement> {
    let mut y = x.clone();
    for &a in ops.iter().rev() {
        y = adjoint_t(a, &y)?.normalized();
    }
    Ok(y)
}

/// Koszul sign of reordering `gens` by `perm` (`perm[k]` is the old position
/// of the factor placed at `k`), counting only odd-odd transpositions.
pub fn super_sign(gens: &[Generator], perm: &[usize]) -> Rat {
    let mut inv = 0usize;
    for x in 0..perm.len() {
        for y in x + 1..perm.len() {
            if perm[x] > perm[y] && gens[perm[x]].is_odd() && gens[perm[y]].is_odd() {
                inv += 1;
            }
        }
    }
    Rat::sign(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ugl::symbol::{e, Context, Symbol};

    #[test]
    fn kills_identity() {
        let ctx = Context::gl(2);
        assert!(adjoint_t(e(1, 2), &EnvElement::one(ctx)).unwrap().is_zero());
    }

    #[test]
    fn on_a_generator_is_the_bracket() {
        let ctx = Context::gl(2);
        let t = adjoint_t(e(1, 2), &EnvElement::e(ctx, 2, 1)).unwrap();
        let expect = &EnvElement::e(ctx, 1, 1) - &EnvElement::e(ctx, 2, 2);
        assert!(t.equals(&expect).unwrap());
    }

    #[test]
    fn odd_generator_on_itself_vanishes() {
        let ctx = Context::new(1, 1);
        let a = Generator::new(Symbol::proper(1), Symbol::virt(1));
        let x = EnvElement::generator(ctx, a).unwrap();
        let t = adjoint_t(a, &x).unwrap();
        // a·a + a·a = 2a², and a² = 0
        assert_eq!(t.len(), 1);
        assert!(t.normalized().is_zero());
    }

    #[test]
    fn super_sign_counts_odd_pairs() {
        let odd = Generator::new(Symbol::proper(1), Symbol::virt(1));
        let odd2 = Generator::new(Symbol::proper(2), Symbol::virt(1));
        assert_eq!(super_sign(&[odd, odd2], &[1, 0]), Rat::from_int(-1));
        assert_eq!(super_sign(&[odd, e(1, 1)], &[1, 0]), Rat::one());
    }
}
