//! Irregular expressions and the Capelli devirtualization map `𝔭`.
//!
//! Write `P` for the span of generators with a proper column and `A` for the
//! span of those with a virtual column. Both are subalgebras, `gl(m|n) = P ⊕ A`,
//! and by PBW `U(gl(m|n)) = U(P) ⊕ U·A`. Every irregular expression lies in
//! `U·A`, and on `Virt(m,n)` the projection onto `U(P)` along `U·A` lands in
//! `U(gl(n))`: this projection is `𝔭`.
//!
//! It is computed by sorting with the annihilators `e_{a,γ}` last and
//! dropping a word as soon as one reaches the right end. Concretely the
//! rightmost annihilator is pushed right past its neighbours via
//! `e_{a,γ} e_{c,d} = ± e_{c,d} e_{a,γ} + [e_{a,γ}, e_{c,d}]`, contracting
//! into brackets along the way.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ugl::pbw::{normal_form_word, GeneratorOrder};
use crate::ugl::{Context, EnvElement, Generator, Symbol};

/// True when some right subword annihilates a virtual symbol more often
/// than it was created before. The word `e_{a_m,b_m} ⋯ e_{a_1,b_1}` is read
/// from the right, as the operators act.
pub fn is_irregular(w: &[Generator]) -> bool {
    let mut created: HashMap<Symbol, usize> = HashMap::new();
    let mut annihilated: HashMap<Symbol, usize> = HashMap::new();
    for g in w.iter().rev() {
        if g.col.is_virtual() {
            let a = annihilated.entry(g.col).or_default();
            *a += 1;
            if *a > created.get(&g.col).copied().unwrap_or(0) {
                return true;
            }
        }
        if g.row.is_virtual() {
            *created.entry(g.row).or_default() += 1;
        }
    }
    false
}

/// `𝔭(x) ∈ U(gl(n))` for `x ∈ Virt(m,n)`, in standard normal form.
///
/// Fails with [`Error::NotVirtual`] when a word survives the contraction
/// with a virtual symbol still in it, which means `x ∉ Virt(m,n)`.
pub fn devirtualize(x: &EnvElement) -> Result<EnvElement> {
    let ctx = x.context();
    let mut out = EnvElement::zero(Context::gl(ctx.n));
    for (w, c) in x.iter() {
        for (w2, c2) in normal_form_word(GeneratorOrder::Standard, true, w, c)? {
            if w2.iter().any(|g| !g.is_proper()) {
                return Err(Error::NotVirtual(w2.to_string()));
            }
            out.add_term(w2, c2);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::Rat;
    use crate::ugl::e;

    fn g(a: Symbol, b: Symbol) -> Generator {
        Generator::new(a, b)
    }

    #[test]
    fn irregular_detection() {
        let (i, j, gam) = (Symbol::proper(1), Symbol::proper(2), Symbol::virt(1));
        assert!(is_irregular(&[g(gam, j), g(i, gam), g(j, gam), g(gam, i)]));
        assert!(!is_irregular(&[e(1, 2), e(2, 1)]));
        assert!(!is_irregular(&[g(i, gam), g(gam, j)]));
        assert!(is_irregular(&[g(gam, j), g(i, gam)]));
    }

    #[test]
    fn single_contraction() {
        let (i, j, gam) = (Symbol::proper(1), Symbol::proper(2), Symbol::virt(1));
        let x = EnvElement::from_word(Context::new(1, 2), &[g(i, gam), g(gam, j)], Rat::one()).unwrap();
        assert_eq!(devirtualize(&x).unwrap(), EnvElement::e(Context::gl(2), 1, 2));
        // i = j brings in e_{γ,γ}, which is dropped at the right end
        let x = EnvElement::from_word(Context::new(1, 2), &[g(i, gam), g(gam, i)], Rat::one()).unwrap();
        assert_eq!(devirtualize(&x).unwrap(), EnvElement::e(Context::gl(2), 1, 1));
    }

    #[test]
    fn identity_on_proper_words() {
        let ctx = Context::gl(2);
        let x = EnvElement::from_word(ctx, &[e(2, 1), e(1, 2)], Rat::one()).unwrap();
        assert_eq!(devirtualize(&x).unwrap(), x);
    }

    #[test]
    fn one_row_n2() {
        let a = Symbol::virt(1);
        let (one, two) = (Symbol::proper(1), Symbol::proper(2));
        let x = EnvElement::from_word(
            Context::new(1, 2),
            &[g(two, a), g(one, a), g(a, one), g(a, two)],
            Rat::one(),
        )
        .unwrap();
        let ctx = Context::gl(2);
        let expect = &(&(&EnvElement::e(ctx, 1, 1) + &EnvElement::one(ctx)) * &EnvElement::e(ctx, 2, 2))
            - &(&EnvElement::e(ctx, 2, 1) * &EnvElement::e(ctx, 1, 2));
        assert!(devirtualize(&x).unwrap().equals(&expect).unwrap());
    }

    #[test]
    fn residual_virtual_symbol_is_reported() {
        let x = EnvElement::from_word(
            Context::new(1, 1),
            &[g(Symbol::virt(1), Symbol::proper(1))],
            Rat::one(),
        )
        .unwrap();
        assert!(matches!(devirtualize(&x), Err(Error::NotVirtual(_))));
    }
}
