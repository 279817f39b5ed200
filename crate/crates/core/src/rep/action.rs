//! Superpolarizations and the `U(gl(m|n))`-action on `ℂ[M_{m|n,d}]`.

use std::collections::HashMap;

use itertools::Itertools;

use super::poly::{bracket_det, Monomial, RepVar, SuperPolynomial};
use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::ugl::{EnvElement, Generator, Symbol, Word};

/// `D_{a,b}(P)`: the left superderivation of degree `|a| + |b|` sending
/// `(c|j)` to `δ_{bc} (a|j)`.
pub fn superpolarize(a: Symbol, b: Symbol, p: &SuperPolynomial) -> SuperPolynomial {
    let deg = (a.parity() + b.parity()) % 2;
    let mut out = SuperPolynomial::zero();
    for (m, c) in p.iter() {
        let vars = m.vars();
        let mut before = 0u8;
        for (i, x) in vars.iter().enumerate() {
            if x.row == b {
                let mut v = vars.clone();
                v[i] = RepVar::new(a, x.col);
                if let Some((s, m2)) = Monomial::from_vars(&v) {
                    let flip = (s < 0) ^ (deg == 1 && before == 1);
                    out.add_term(m2, if flip { -c } else { c.clone() });
                }
            }
            before ^= x.parity();
        }
    }
    out
}

/// `e_{a,b} · P = D_{a,b}(P)`.
pub fn act_generator(g: Generator, p: &SuperPolynomial) -> SuperPolynomial {
    superpolarize(g.row, g.col, p)
}

/// `x · P`, each word acting rightmost factor first. Results for shared
/// word suffixes are computed once.
pub fn act(x: &EnvElement, p: &SuperPolynomial) -> SuperPolynomial {
    let mut cache: HashMap<Word, SuperPolynomial> = HashMap::new();
    cache.insert(Word::empty(), p.clone());
    let mut out = SuperPolynomial::zero();
    for (w, c) in x.iter() {
        let r = act_word(w, &mut cache);
        out = out.add(&r.scale(c));
    }
    out
}

fn act_word(w: &Word, cache: &mut HashMap<Word, SuperPolynomial>) -> SuperPolynomial {
    if let Some(r) = cache.get(w) {
        return r.clone();
    }
    let tail = w.tail(1);
    let inner = act_word(&tail, cache);
    let r = if inner.is_zero() { inner } else { act_generator(w[0], &inner) };
    cache.insert(w.clone(), r.clone());
    r
}

/// `∂P/∂x` for an even variable `x`.
pub fn partial(p: &SuperPolynomial, x: RepVar) -> Result<SuperPolynomial> {
    if x.is_odd() {
        return Err(Error::Unsupported(format!("derivative in the odd variable {x}")));
    }
    let mut out = SuperPolynomial::zero();
    for (m, c) in p.iter() {
        let k = m.exponent(x);
        if k == 0 {
            continue;
        }
        let mut vars = m.vars();
        let pos = vars.iter().position(|&y| y == x).expect("exponent is positive");
        vars.remove(pos);
        out = out.add(&SuperPolynomial::from_vars(&vars, c * &Rat::from_int(k as i64)));
    }
    Ok(out)
}

/// The Cayley process `Ω_n = det[∂/∂(i|j)]` on the commutative subalgebra.
pub fn cayley_omega(f: &SuperPolynomial, n: usize) -> Result<SuperPolynomial> {
    if f.has_odd() {
        return Err(Error::Unsupported("Ω_n acts on polynomials in commuting variables only".into()));
    }
    let mut out = SuperPolynomial::zero();
    for perm in (0..n).permutations(n) {
        let inv = (0..n).tuple_combinations().filter(|&(a, b)| perm[a] > perm[b]).count();
        let mut g = f.clone();
        for (j, &i) in perm.iter().enumerate() {
            g = partial(&g, RepVar::proper(i as u16 + 1, j as u16 + 1))?;
            if g.is_zero() {
                break;
            }
        }
        out = out.add(&g.scale(&Rat::sign(inv)));
    }
    Ok(out)
}

/// Both sides of the Capelli identity for `H_n^{(n)}` acting on `f ∈ ℂ[M_{n,d}]`:
/// `0` when `n > d`, `[x_1, …, x_n] Ω_n(f)` when `n = d`.
pub fn capelli_identity_sides(
    h: &EnvElement,
    n: usize,
    d: usize,
    f: &SuperPolynomial,
) -> Result<(SuperPolynomial, SuperPolynomial)> {
    let lhs = act(h, f);
    let rhs = match n.cmp(&d) {
        std::cmp::Ordering::Greater => SuperPolynomial::zero(),
        std::cmp::Ordering::Equal => bracket_det(n).mul(&cayley_omega(f, n)?),
        std::cmp::Ordering::Less => {
            return Err(Error::Unsupported(format!("no Capelli identity is claimed for n = {n} < d = {d}")))
        }
    };
    Ok((lhs, rhs))
}
