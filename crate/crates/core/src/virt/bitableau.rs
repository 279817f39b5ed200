//! Bitableau monomials and Capelli bitableaux `[S|T]`.

use super::devirt::devirtualize;
use super::tableau::{coderuyts, Tableau, VirtualPool};
use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::ugl::{Context, EnvElement, Generator, Symbol};

/// `e_{S,T} = e_{S(1),T(1)} ⋯ e_{S(h),T(h)}`, reading both tableaux row by row.
pub fn bitableau_monomial(ctx: Context, s: &Tableau, t: &Tableau) -> Result<EnvElement> {
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch(s.shape().into(), t.shape().into()));
    }
    let gens: Vec<Generator> = s.reading().into_iter().zip(t.reading()).map(|(a, b)| Generator::new(a, b)).collect();
    EnvElement::from_word(ctx, &gens, Rat::one())
}

/// `[S|T] = 𝔭(e_{S,C*} · e_{C*,T}) ∈ U(gl(n))`, routed through the
/// Coderuyts tableau `C*` built from `pool`.
pub fn capelli_bitableau(n: usize, s: &Tableau, t: &Tableau, pool: &VirtualPool) -> Result<EnvElement> {
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch(s.shape().into(), t.shape().into()));
    }
    let proper_ok = |x: &Symbol| x.is_proper() && (x.index() as usize) <= n;
    if !s.reading().iter().all(proper_ok) || !t.reading().iter().all(proper_ok) {
        return Err(Error::Range(format!("Capelli bitableaux take proper symbols in 1..={n}")));
    }
    let c = coderuyts(&s.shape(), pool)?;
    let ctx = Context::new(pool.max_index(), n as u16);
    let left = bitableau_monomial(ctx, s, &c)?;
    let right = bitableau_monomial(ctx, &c, t)?;
    devirtualize(&(&left * &right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::virt::tableau::{deruyts, reverse_deruyts, Shape};

    #[test]
    fn monomial_reads_row_major() {
        let l = Shape::new(vec![2, 1]).unwrap();
        let s = reverse_deruyts(&l, 2).unwrap();
        let c = coderuyts(&l, &VirtualPool::first(2)).unwrap();
        let x = bitableau_monomial(Context::new(2, 2), &s, &c).unwrap();
        let (a1, a2) = (Symbol::virt(1), Symbol::virt(2));
        let expect = EnvElement::from_word(
            Context::new(2, 2),
            &[
                Generator::new(Symbol::proper(2), a1),
                Generator::new(Symbol::proper(1), a1),
                Generator::new(Symbol::proper(1), a2),
            ],
            Rat::one(),
        )
        .unwrap();
        assert_eq!(x, expect);
    }

    #[test]
    fn single_cell() {
        let s = Tableau::new(vec![vec![Symbol::proper(2)]]).unwrap();
        let t = Tableau::new(vec![vec![Symbol::proper(1)]]).unwrap();
        let x = bitableau_monomial(Context::gl(2), &s, &t).unwrap();
        assert_eq!(x, EnvElement::e(Context::gl(2), 2, 1));
        let y = capelli_bitableau(2, &s, &t, &VirtualPool::first(1)).unwrap();
        assert_eq!(y, EnvElement::e(Context::gl(2), 2, 1));
    }

    #[test]
    fn shape_mismatch() {
        let s = Tableau::new(vec![vec![Symbol::proper(1)]]).unwrap();
        let t = Tableau::new(vec![vec![Symbol::proper(1), Symbol::proper(2)]]).unwrap();
        assert!(matches!(bitableau_monomial(Context::gl(2), &s, &t), Err(Error::ShapeMismatch(..))));
        assert!(capelli_bitableau(2, &s, &t, &VirtualPool::first(1)).is_err());
    }

    #[test]
    fn one_row_n2_is_capelli_determinant() {
        let l = Shape::new(vec![2]).unwrap();
        let x = capelli_bitableau(2, &reverse_deruyts(&l, 2).unwrap(), &deruyts(&l, 2).unwrap(), &VirtualPool::first(1))
            .unwrap();
        let ctx = Context::gl(2);
        let expect = &(&(&EnvElement::e(ctx, 1, 1) + &EnvElement::one(ctx)) * &EnvElement::e(ctx, 2, 2))
            - &(&EnvElement::e(ctx, 2, 1) * &EnvElement::e(ctx, 1, 2));
        assert!(x.equals(&expect).unwrap());
    }
}
