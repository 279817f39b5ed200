//! The Harish-Chandra map `χ_n : ζ(n) → Λ*(n)` and the standard shifted
//! symmetric polynomials.

use itertools::Itertools;

use super::poly::ShiftedPoly;
use crate::elements::is_central;
use crate::error::{Error, Result};
use crate::rat::{binomial, Rat};
use crate::ugl::{Context, EnvElement, GeneratorOrder};

/// `χ_n(x)`. Fails unless `x` is a central element of `U(gl(n))`.
pub fn hc_image(x: &EnvElement, n: usize) -> Result<ShiftedPoly> {
    let want = Context::gl(n as u16);
    let ctx = x.context();
    if ctx != want {
        return Err(Error::ContextMismatch(ctx.m, ctx.n, want.m, want.n));
    }
    if !is_central(x)? {
        return Err(Error::NotCentral(format!("{} terms, gl({n})", x.len())));
    }
    Ok(hc_projection(x, n))
}

/// The projection behind [`hc_image`] without the centrality check: order
/// lowering < Cartan < raising, keep the purely diagonal words, and send
/// `e_{i,i}` to `x_i`. Meaningful only for central `x`.
pub fn hc_projection(x: &EnvElement, n: usize) -> ShiftedPoly {
    let x = x.normal_form(GeneratorOrder::Standard);
    let mut out = ShiftedPoly::zero(n);
    for (w, c) in x.iter() {
        if !w.iter().all(|g| g.is_diagonal() && g.row.is_proper()) {
            continue;
        }
        let mut e = vec![0u32; n];
        for g in w.iter() {
            e[g.row.index() as usize - 1] += 1;
        }
        out.add_term(e, c.clone());
    }
    out
}

/// `e_k^*(x_1, …, x_n) = Σ_{i_1<⋯<i_k} (x_{i_1} + k − 1)(x_{i_2} + k − 2) ⋯ x_{i_k}`.
pub fn shifted_elementary(k: usize, n: usize) -> Result<ShiftedPoly> {
    if k > n {
        return Err(Error::Range(format!("e_k^* needs k ≤ n, got k = {k}, n = {n}")));
    }
    let mut out = ShiftedPoly::zero(n);
    for idx in (1..=n).combinations(k) {
        let t = idx
            .iter()
            .enumerate()
            .fold(ShiftedPoly::one(n), |acc, (r, &i)| acc.mul(&ShiftedPoly::linear(n, i, (k - 1 - r) as i64)));
        out = out.add(&t);
    }
    Ok(out)
}

/// The ordinary elementary symmetric polynomial `e_k(y_1, …, y_n)` of the
/// given polynomials.
pub fn elementary_of(k: usize, ys: &[ShiftedPoly], nvars: usize) -> ShiftedPoly {
    ys.iter()
        .combinations(k)
        .map(|c| c.into_iter().fold(ShiftedPoly::one(nvars), |acc, y| acc.mul(y)))
        .fold(ShiftedPoly::zero(nvars), |acc, t| acc.add(&t))
}

/// `ē_h = e_h(x_1, x_2 − 1, …, x_n − (n − 1))`.
pub fn shifted_bar_elementary(h: usize, n: usize) -> Result<ShiftedPoly> {
    if h > n {
        return Err(Error::Range(format!("ē_h needs h ≤ n, got h = {h}, n = {n}")));
    }
    let ys: Vec<ShiftedPoly> = (1..=n).map(|i| ShiftedPoly::linear(n, i, 1 - i as i64)).collect();
    Ok(elementary_of(h, &ys, n))
}

/// True iff `f(…, x_i, x_{i+1}, …) = f(…, x_{i+1} − 1, x_i + 1, …)` for
/// every `i`, i.e. `f` is symmetric in the `x_i − i`.
pub fn is_shifted_symmetric(f: &ShiftedPoly) -> bool {
    let n = f.nvars();
    (1..n).all(|i| {
        let g: Vec<ShiftedPoly> = (1..=n)
            .map(|j| match j {
                _ if j == i => ShiftedPoly::linear(n, i + 1, -1),
                _ if j == i + 1 => ShiftedPoly::linear(n, i, 1),
                _ => ShiftedPoly::var(n, j),
            })
            .collect();
        f.compose(&g) == *f
    })
}

/// `∏_{i=1}^n (x_i − p + n − i)`, the image of `C_n(p)`.
pub fn c_image_poly(n: usize, p: i64) -> ShiftedPoly {
    (1..=n).fold(ShiftedPoly::one(n), |acc, i| acc.mul(&ShiftedPoly::linear(n, i, n as i64 - i as i64 - p)))
}

/// `(−1)^{C(p,2) n} ∏_{j=1}^p ∏_{i=1}^n (x_i − j + n − i + 1)`, the image of
/// `K_n^p`.
pub fn hook_product_poly(n: usize, p: usize) -> ShiftedPoly {
    let sign = Rat::sign(binomial(p, 2) as usize * n);
    (1..=p as i64)
        .fold(ShiftedPoly::one(n), |acc, j| acc.mul(&c_image_poly(n, j - 1)))
        .scale(&sign)
}

/// `(t)_k = t (t − 1) ⋯ (t − k + 1)` in the variable `x_v` of an `nvars`
/// variable ring.
pub fn falling_poly(nvars: usize, v: usize, k: usize) -> ShiftedPoly {
    (0..k as i64).fold(ShiftedPoly::one(nvars), |acc, s| acc.mul(&ShiftedPoly::linear(nvars, v, -s)))
}
