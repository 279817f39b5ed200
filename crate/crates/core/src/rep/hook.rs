//! Eigenvalues of Capelli–Deruyts bitableaux on highest weight vectors, and
//! the classical Capelli identities.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::action::{act, capelli_identity_sides};
use super::biproduct::highest_weight_vector;
use super::poly::{RepVar, SuperPolynomial};
use crate::elements::{capelli_deruyts, capelli_h, rectangular_k};
use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::report::Record;
use crate::ugl::{Context, EnvElement};
use crate::virt::Shape;

/// `(−1)^{e_2(λ)} ∏_i ∏_{k=1}^{λ_i} (μ_k − i + λ_i − k + 1)`: the eigenvalue
/// of `K^λ` on `v_μ`. For `λ = n^p` this is the signed product of hook numbers.
pub fn hook_eigenvalue(lambda: &Shape, mu: &[usize]) -> Result<Rat> {
    if lambda.first() > mu.len() {
        return Err(Error::Range(format!("λ_1 = {} exceeds n = {}", lambda.first(), mu.len())));
    }
    let mut acc = Rat::sign(lambda.e2());
    for (i, &li) in lambda.parts().iter().enumerate() {
        let i = i as i64 + 1;
        for k in 1..=li {
            acc *= &Rat::from_int(mu[k - 1] as i64 - i + li as i64 - k as i64 + 1);
        }
    }
    Ok(acc)
}

/// All dominant weights `μ_1 ≥ ⋯ ≥ μ_n ≥ 0` with `μ_1 ≤ max`.
pub fn dominant_weights(n: usize, max: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|_| 0..=max)
        .multi_cartesian_product()
        .filter(|v| v.windows(2).all(|w| w[0] >= w[1]))
        .collect()
}

/// The scalar by which `x` acts on `v_μ` (`d = n`). Fails with
/// [`Error::NotEigen`] when the result is not a multiple of `v_μ`.
pub fn eigen_scalar(x: &EnvElement, mu: &[usize]) -> Result<Rat> {
    let v = highest_weight_vector(mu, mu.len())?;
    act(x, &v).ratio_to(&v)
}

/// `v_μ` is killed by every `e_{i,j}`, `i < j`, and `e_{i,i}` acts by `μ_i`.
pub fn is_highest_weight(mu: &[usize]) -> Result<bool> {
    let n = mu.len();
    let ctx = Context::gl(n as u16);
    let v = highest_weight_vector(mu, n)?;
    for i in 1..=n {
        for j in i..=n {
            let r = act(&EnvElement::e(ctx, i as u16, j as u16), &v);
            let want = if i == j { v.scale(&Rat::from_int(mu[i - 1] as i64)) } else { SuperPolynomial::zero() };
            if r != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Compares the action of `K^λ` on `v_μ` with [`hook_eigenvalue`], one record
/// per weight. `K^λ` is built once.
pub fn verify_hook_shape(lambda: &Shape, n: usize, weights: &[Vec<usize>]) -> Vec<Record> {
    let k = capelli_deruyts(lambda, n);
    weights
        .iter()
        .map(|mu| {
            Record::new("hook eigenvalue", "hook eigenvalue theorem")
                .param("shape", lambda)
                .param("n", n)
                .param("mu", format!("({})", mu.iter().join(",")))
                .run(|r| {
                    let k = k.clone()?;
                    let got = eigen_scalar(&k, mu)?;
                    let want = hook_eigenvalue(lambda, mu)?;
                    r.terms("K", k.len());
                    r.note(format!("eigenvalue {got}"));
                    Ok(got == want)
                })
        })
        .collect()
}

/// The vanishing rule for `K_n^p`: the action scalar on `v_μ` is zero
/// exactly when `μ_n < p`.
pub fn verify_hook_vanishing(n: usize, p: usize, weights: &[Vec<usize>]) -> Record {
    Record::new("hook vanishing", "K_n^p kills v_μ iff μ_n < p").param("n", n).param("p", p).run(|r| {
        let k = rectangular_k(n, p)?;
        let mut zeros = 0;
        for mu in weights {
            let zero = eigen_scalar(&k, mu)?.is_zero();
            zeros += zero as usize;
            if zero != (mu.get(n.wrapping_sub(1)).copied().unwrap_or(0) < p) {
                r.note(format!("fails at ({})", mu.iter().join(",")));
                return Ok(false);
            }
        }
        r.note(format!("{zeros} of {} weights killed", weights.len()));
        Ok(true)
    })
}

/// `H_n^{(n)}(f) = 0` for `n > d` and `[x_1, …, x_n] Ω_n(f)` for `n = d`.
pub fn verify_capelli_identity(n: usize, d: usize, f: &SuperPolynomial) -> Record {
    Record::new("capelli identity", "classical Capelli identities")
        .param("n", n)
        .param("d", d)
        .param("f", f)
        .run(|r| {
            let h = capelli_h(n, n)?;
            let (lhs, rhs) = capelli_identity_sides(&h, n, d, f)?;
            r.terms("lhs", lhs.len());
            Ok(lhs == rhs)
        })
}

/// A random polynomial in the commuting variables `(i|j)`, `i ≤ n`, `j ≤ d`,
/// of degree at most `max_degree`, with up to four terms and small integer
/// coefficients.
pub fn random_polynomial(rng: &mut impl Rng, n: usize, d: usize, max_degree: usize) -> SuperPolynomial {
    let mut f = SuperPolynomial::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let deg = rng.gen_range(0..=max_degree);
        let vars: Vec<RepVar> = (0..deg)
            .map(|_| RepVar::proper(rng.gen_range(1..=n as u16), rng.gen_range(1..=d as u16)))
            .collect();
        let c = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
        f = f.add(&SuperPolynomial::from_vars(&vars, Rat::from_int(c)));
    }
    f
}

/// [`verify_capelli_identity`] on `count` random polynomials of degree ≤ 3.
pub fn verify_capelli_identities(n: usize, d: usize, seed: u64, count: usize) -> Vec<Record> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32) ^ ((d as u64) << 40));
    (0..count)
        .map(|i| verify_capelli_identity(n, d, &random_polynomial(&mut rng, n, d, 3)).param("case", i))
        .collect()
}
