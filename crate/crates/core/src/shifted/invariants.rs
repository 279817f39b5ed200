//! The invariants `h_k(n)` of `ℂ[M_{n,n}]` and the Koszul image of the
//! shaped Capelli elements.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::elements::{cdet_with, Matrix, NcRing, UniPoly};
use crate::error::{Error, Result};
use crate::rat::{binomial, Rat};
use crate::rep::{minor_det, young_bitableau, Monomial, RepVar, SuperPolynomial};
use crate::ugl::Symbol;
use crate::virt::{row_increasing, Shape};

impl NcRing for SuperPolynomial {
    fn zero_like(&self) -> Self {
        SuperPolynomial::zero()
    }
    fn one_like(&self) -> Self {
        SuperPolynomial::one()
    }
    fn add(&self, other: &Self) -> Self {
        SuperPolynomial::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        SuperPolynomial::mul(self, other)
    }
    fn scale(&self, c: &Rat) -> Self {
        SuperPolynomial::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        SuperPolynomial::is_zero(self)
    }
}

/// `h_k(n)`: the sum of the principal `k × k` minors of `[(i|j)]`.
pub fn char_h(k: usize, n: usize) -> Result<SuperPolynomial> {
    if k == 0 || k > n {
        return Err(Error::Range(format!("h_k(n) needs 1 ≤ k ≤ n, got k = {k}, n = {n}")));
    }
    let mut out = SuperPolynomial::zero();
    for idx in (1..=n as u16).combinations(k) {
        let rows: Vec<Symbol> = idx.iter().map(|&i| Symbol::proper(i)).collect();
        out = out.add(&minor_det(&rows, &idx));
    }
    Ok(out)
}

/// `det(t I − M_{n,n})` as a polynomial in `t`, computed by the column
/// determinant over commuting entries.
pub fn char_poly(n: usize) -> UniPoly<SuperPolynomial> {
    let zero = SuperPolynomial::zero();
    let m = Matrix::from_fn(n, |i, j| {
        let x = UniPoly::constant(SuperPolynomial::var(RepVar::proper(i as u16 + 1, j as u16 + 1)).scale(&-Rat::one()));
        if i == j {
            x.add(&UniPoly::var(&zero))
        } else {
            x
        }
    });
    cdet_with(&m, &UniPoly::constant(SuperPolynomial::one()))
}

/// `det(t I − M) = t^n + Σ_i (−1)^i h_i(n) t^{n−i}`, compared coefficient
/// by coefficient.
pub fn char_poly_identity(n: usize) -> Result<bool> {
    let p = char_poly(n);
    if p.coeff(n) != SuperPolynomial::one() {
        return Ok(false);
    }
    for i in 1..=n {
        if p.coeff(n - i) != char_h(i, n)?.scale(&Rat::sign(i)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `𝒦(K_λ(n)) = Σ_S (S|S)` over the row-increasing `S` of shape `λ`.
pub fn koszul_shaped(lambda: &Shape, n: usize) -> Result<SuperPolynomial> {
    if lambda.first() > n {
        return Err(Error::Range(format!("λ_1 = {} exceeds n = {n}", lambda.first())));
    }
    let mut out = SuperPolynomial::zero();
    for s in row_increasing(lambda, n) {
        let t = s.map(|x| x.index());
        out = out.add(&young_bitableau(&s, &t));
    }
    Ok(out)
}

/// `(−1)^{C(|λ|,2)} h_{λ_1}(n) ⋯ h_{λ_p}(n)`.
pub fn signed_h_product(lambda: &Shape, n: usize) -> Result<SuperPolynomial> {
    let mut out = SuperPolynomial::constant(Rat::sign(binomial(lambda.weight(), 2) as usize));
    for &l in lambda.parts() {
        out = out.mul(&char_h(l, n)?);
    }
    Ok(out)
}

/// The products `h_λ = ∏ h_{λ_i}(n)` for `|λ| = w`, `λ_1 ≤ n`, are linearly
/// independent. Decided by exact Gaussian elimination on coefficient vectors.
pub fn h_products_independent(n: usize, w: usize) -> Result<bool> {
    let shapes = Shape::all_of_weight(w, n, w);
    let mut rows: Vec<BTreeMap<Monomial, Rat>> = Vec::new();
    for l in &shapes {
        let p = signed_h_product(l, n)?;
        rows.push(p.iter().map(|(m, c)| (m.clone(), c.clone())).collect());
    }
    let mut basis: Vec<(Monomial, BTreeMap<Monomial, Rat>)> = Vec::new();
    for mut r in rows {
        for (pivot, b) in &basis {
            let c = r.get(pivot).cloned().unwrap_or_default();
            if c.is_zero() {
                continue;
            }
            for (m, v) in b {
                let e = r.entry(m.clone()).or_default();
                *e -= &(&c * v);
            }
            r.retain(|_, v| !v.is_zero());
        }
        let Some((pivot, c)) = r.iter().next().map(|(m, c)| (m.clone(), c.clone())) else {
            return Ok(false);
        };
        let inv = c.recip();
        let r = r.into_iter().map(|(m, v)| (m, &v * &inv)).collect();
        basis.push((pivot, r));
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(v: &[usize]) -> Shape {
        Shape::new(v.to_vec()).unwrap()
    }

    fn sp(s: &str) -> SuperPolynomial {
        SuperPolynomial::parse(s).unwrap()
    }

    #[test]
    fn small_invariants() {
        assert_eq!(char_h(1, 2).unwrap(), sp("(1|1) + (2|2)"));
        assert_eq!(char_h(2, 2).unwrap(), sp("(1|1)(2|2) - (1|2)(2|1)"));
        assert!(char_h(0, 2).is_err() && char_h(3, 2).is_err());
        assert!(char_poly_identity(2).unwrap());
    }

    #[test]
    fn koszul_examples() {
        assert_eq!(koszul_shaped(&sh(&[1]), 3).unwrap(), char_h(1, 3).unwrap());
        assert_eq!(koszul_shaped(&sh(&[2]), 2).unwrap(), char_h(2, 2).unwrap().scale(&-Rat::one()));
        let h = char_h(2, 2).unwrap().mul(&char_h(1, 2).unwrap());
        assert_eq!(koszul_shaped(&sh(&[2, 1]), 2).unwrap(), h.scale(&-Rat::one()));
        assert!(koszul_shaped(&sh(&[3]), 2).is_err());
    }

    #[test]
    fn independence() {
        assert!(h_products_independent(2, 3).unwrap());
        assert!(h_products_independent(3, 3).unwrap());
    }
}
