//! The named elements: Capelli generators, Capelli determinants, and the
//! Capelli–Deruyts bitableaux.

use itertools::Itertools;

use super::cdet::{cdet_with, check_limit, EnvPoly, Matrix, NcRing, UniPoly};
use crate::error::{Error, Result};
use crate::rat::{falling, Rat};
use crate::ugl::{Context, EnvElement, Symbol};
use crate::virt::{capelli_bitableau, deruyts, reverse_deruyts, row_increasing, Shape, Tableau, VirtualPool};

fn ctx(n: usize) -> Context {
    Context::gl(n as u16)
}

fn eij(n: usize, i: usize, j: usize) -> EnvElement {
    EnvElement::e(ctx(n), i as u16, j as u16)
}

/// `cdet[e_{r_a, r_b} + δ_{ab} shift(a)]` over the index list `rows` (1-based
/// symbols, `a, b` running over positions).
fn shifted_minor(n: usize, rows: &[usize], shift: impl Fn(usize) -> Rat) -> EnvElement {
    let c = ctx(n);
    let m = Matrix::from_fn(rows.len(), |a, b| {
        let x = eij(n, rows[a], rows[b]);
        if a == b {
            &x + &EnvElement::scalar(c, shift(a))
        } else {
            x
        }
    });
    cdet_with(&m, &EnvElement::one(c))
}

/// `H_n^{(k)} = Σ_{i_1<⋯<i_k} cdet[e_{i_r,i_s} + δ_{rs}(k − r)]`, with `H_n^{(0)} = 1`.
pub fn capelli_h(n: usize, k: usize) -> Result<EnvElement> {
    check_limit(n)?;
    if k > n {
        return Err(Error::Range(format!("H_n^(k) needs k ≤ n, got k = {k}, n = {n}")));
    }
    let mut out = EnvElement::zero(ctx(n));
    for rows in (1..=n).combinations(k) {
        let minor = shifted_minor(n, &rows, |a| Rat::from_int(k as i64 - 1 - a as i64));
        out = &out + &minor;
    }
    Ok(out)
}

/// `H_n(p) = cdet[e_{h,k} + δ_{hk}(−p + n − h)]`.
pub fn capelli_h_shift(n: usize, p: i64) -> Result<EnvElement> {
    check_limit(n)?;
    let rows: Vec<usize> = (1..=n).collect();
    Ok(shifted_minor(n, &rows, |a| Rat::from_int(-p + n as i64 - 1 - a as i64)))
}

/// `C_n(p) = Σ_{j=0}^n (−1)^{n−j} (p)_{n−j} H_n^{(j)}`.
pub fn capelli_c(n: usize, p: i64) -> Result<EnvElement> {
    let mut out = EnvElement::zero(ctx(n));
    for j in 0..=n {
        let c = &Rat::sign(n - j) * &falling(p, n - j);
        if c.is_zero() {
            continue;
        }
        out = &out + &capelli_h(n, j)?.scale(&c);
    }
    Ok(out)
}

/// The pool `α_1, …, α_p` used by default for shapes with `p` rows.
pub fn default_pool(rows: usize) -> VirtualPool {
    VirtualPool::first(rows.max(1) as u16)
}

/// `K^λ = [Der*_λ | Der_λ] ∈ U(gl(n))`.
pub fn capelli_deruyts(lambda: &Shape, n: usize) -> Result<EnvElement> {
    let s = reverse_deruyts(lambda, n)?;
    let t = deruyts(lambda, n)?;
    capelli_bitableau(n, &s, &t, &default_pool(lambda.rows()))
}

/// `K_n^p = K^{n^p}`, with `K_n^0 = 1`.
pub fn rectangular_k(n: usize, p: usize) -> Result<EnvElement> {
    if p == 0 {
        return Ok(EnvElement::one(ctx(n)));
    }
    capelli_deruyts(&Shape::rectangle(n, p), n)
}

/// `K_λ(n) = Σ_S [S|S]` over tableaux of shape `λ` with increasing rows.
pub fn shaped_k(lambda: &Shape, n: usize) -> Result<EnvElement> {
    if lambda.first() > n {
        return Err(Error::Shape(format!("first row {} exceeds n = {n}", lambda.first())));
    }
    let pool = default_pool(lambda.rows());
    let mut out = EnvElement::zero(ctx(n));
    for s in row_increasing(lambda, n) {
        out = &out + &capelli_bitableau(n, &s, &s, &pool)?;
    }
    Ok(out)
}

fn symbols(v: &[usize]) -> Vec<Symbol> {
    v.iter().map(|&i| Symbol::proper(i as u16)).collect()
}

fn check_subset(lambda: &Shape, j: &[usize]) -> Result<()> {
    let lp = lambda.last();
    if j.windows(2).any(|w| w[0] >= w[1]) || j.iter().any(|&x| x == 0 || x > lp) {
        return Err(Error::Range(format!("{j:?} is not an increasing subset of 1..={lp}")));
    }
    Ok(())
}

/// The one-row Capelli bitableau `[J*|J]` (`J` increasing, `J*` its
/// reverse). The empty row gives 1.
pub fn row_bitableau(j: &[usize], n: usize) -> Result<EnvElement> {
    if j.is_empty() {
        return Ok(EnvElement::one(ctx(n)));
    }
    let rev: Vec<usize> = j.iter().rev().copied().collect();
    let s = Tableau::new(vec![symbols(&rev)])?;
    let t = Tableau::new(vec![symbols(j)])?;
    capelli_bitableau(n, &s, &t, &default_pool(1))
}

/// `[K^λ; J]`: `K^λ` with the extra bottom row `J*` on the left and `J` on
/// the right.
pub fn append_rows(lambda: &Shape, j: &[usize], n: usize) -> Result<EnvElement> {
    check_subset(lambda, j)?;
    if j.is_empty() {
        return capelli_deruyts(lambda, n);
    }
    let rev: Vec<usize> = j.iter().rev().copied().collect();
    let s = reverse_deruyts(lambda, n)?.with_row(symbols(&rev))?;
    let t = deruyts(lambda, n)?.with_row(symbols(j))?;
    capelli_bitableau(n, &s, &t, &default_pool(lambda.rows() + 1))
}

/// `H_n(t) = cdet[e_{i,j} + δ_{ij}(−t + n − i)]` as a polynomial in the
/// central variable `t`.
pub fn capelli_det_poly(n: usize) -> Result<EnvPoly> {
    check_limit(n)?;
    let c = ctx(n);
    let proto = EnvElement::zero(c);
    let m = Matrix::from_fn(n, |a, b| {
        let x = UniPoly::constant(eij(n, a + 1, b + 1));
        if a == b {
            let shift = EnvElement::scalar(c, Rat::from_int((n - 1 - a) as i64));
            x.add(&UniPoly::constant(shift)).sub(&UniPoly::var(&proto))
        } else {
            x
        }
    });
    Ok(cdet_with(&m, &UniPoly::constant(EnvElement::one(c))))
}

/// `𝒞_n(s) = cdet[e_{i,j} + δ_{ij}(s − i + 1)]` as a polynomial in `s`.
pub fn capelli_script_poly(n: usize) -> Result<EnvPoly> {
    check_limit(n)?;
    let c = ctx(n);
    let proto = EnvElement::zero(c);
    let m = Matrix::from_fn(n, |a, b| {
        let x = UniPoly::constant(eij(n, a + 1, b + 1));
        if a == b {
            let shift = EnvElement::scalar(c, Rat::from_int(-(a as i64)));
            x.add(&UniPoly::constant(shift)).add(&UniPoly::var(&proto))
        } else {
            x
        }
    });
    Ok(cdet_with(&m, &UniPoly::constant(EnvElement::one(c))))
}

/// `𝒞_n^{(h)}`: the sum of the principal `h × h` column-determinant minors
/// of `𝒞_n(0)`, whose diagonal keeps the shifts `1 − i` of the full matrix.
pub fn capelli_script_coeff(n: usize, h: usize) -> Result<EnvElement> {
    check_limit(n)?;
    if h > n {
        return Err(Error::Range(format!("𝒞_n^(h) needs h ≤ n, got h = {h}, n = {n}")));
    }
    let mut out = EnvElement::zero(ctx(n));
    for rows in (1..=n).combinations(h) {
        let r = rows.clone();
        out = &out + &shifted_minor(n, &rows, move |a| Rat::from_int(1 - r[a] as i64));
    }
    Ok(out)
}
