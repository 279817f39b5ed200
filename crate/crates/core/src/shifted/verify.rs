//! Verifiers for the Harish-Chandra images and the Koszul identities.

use super::hc::{
    c_image_poly, falling_poly, hc_image, hook_product_poly, is_shifted_symmetric, shifted_bar_elementary,
    shifted_elementary,
};
use super::invariants::{char_poly_identity, h_products_independent, koszul_shaped, signed_h_product};
use super::poly::ShiftedPoly;
use crate::elements::{capelli_c, capelli_h, capelli_script_coeff, rectangular_k, shaped_k};
use crate::error::Result;
use crate::rat::Rat;
use crate::report::Record;
use crate::rep::{dominant_weights, eigen_scalar, is_highest_weight};
use crate::ugl::EnvElement;
use crate::virt::Shape;

/// The smallest family of dominant weights of `gl(n)` with entries `≤ max`
/// holding at least `count` weights.
pub fn weights_at_least(n: usize, count: usize) -> Vec<Vec<usize>> {
    (1..)
        .map(|max| dominant_weights(n, max))
        .find(|w| w.len() >= count || n == 0)
        .unwrap_or_default()
}

struct Central {
    name: String,
    x: Result<EnvElement>,
    expect: Option<(&'static str, ShiftedPoly)>,
}

fn central_elements(n: usize) -> Result<Vec<Central>> {
    let mut out = Vec::new();
    for r in 1..=n {
        out.push(Central {
            name: format!("H_{n}^({r})"),
            x: capelli_h(n, r),
            expect: Some(("image of H_n^(r) is e_r^*", shifted_elementary(r, n)?)),
        });
    }
    for p in 0..=2 {
        out.push(Central {
            name: format!("C_{n}({p})"),
            x: capelli_c(n, p),
            expect: Some(("image of C_n(p) is a product of shifted linear factors", c_image_poly(n, p))),
        });
    }
    for h in 1..=n {
        out.push(Central {
            name: format!("𝒞_{n}^({h})"),
            x: capelli_script_coeff(n, h),
            expect: Some(("image of 𝒞_n^(h) is the elementary function of x_i − i + 1", shifted_bar_elementary(h, n)?)),
        });
    }
    for p in 1..=2 {
        out.push(Central {
            name: format!("K_{n}^{p}"),
            x: rectangular_k(n, p),
            expect: Some(("image of K_n^p is the signed hook product", hook_product_poly(n, p))),
        });
    }
    for w in 1..=3 {
        for l in Shape::all_of_weight(w, n, w) {
            out.push(Central { name: format!("K_{l}({n})"), x: shaped_k(&l, n), expect: None });
        }
    }
    Ok(out)
}

/// `(x_1 − t + n − 1) ⋯ (x_n − t) = Σ_j (−1)^{n−j} e_j^*(x) (t)_{n−j}` as a
/// polynomial identity in `x_1, …, x_n, t`.
pub fn falling_factorial_identity(n: usize) -> Result<bool> {
    let m = n + 1;
    let lhs = (1..=n).fold(ShiftedPoly::one(m), |acc, i| {
        acc.mul(&ShiftedPoly::linear(m, i, (n - i) as i64).sub(&ShiftedPoly::var(m, m)))
    });
    let mut rhs = ShiftedPoly::zero(m);
    for j in 0..=n {
        let t = shifted_elementary(j, n)?.extend(m).mul(&falling_poly(m, m, n - j));
        rhs = rhs.add(&t.scale(&Rat::sign(n - j)));
    }
    Ok(lhs == rhs)
}

/// The Harish-Chandra suite at rank `n`: closed forms for the images of
/// `H_n^{(r)}`, `C_n(p)`, `𝒞_n^{(h)}`, `K_n^p`, shifted symmetry of every
/// image (shaped `K_λ(n)` included), the `Λ*(n)[t]` identity, agreement
/// with the eigenvalue on at least ten highest weight vectors, and
/// multiplicativity.
pub fn verify_hc_suite(n: usize) -> Vec<Record> {
    let mut out = Vec::new();
    let weights = weights_at_least(n, 10);
    out.push(Record::new("highest weight vectors", "raising operators annihilate v_μ").param("n", n).run(|r| {
        r.note(format!("{} weights", weights.len()));
        for mu in &weights {
            if !is_highest_weight(mu)? {
                r.note(format!("fails at {mu:?}"));
                return Ok(false);
            }
        }
        Ok(true)
    }));
    out.push(
        Record::new("falling factorial identity", "shifted elementary expansion in Λ*(n)[t]")
            .param("n", n)
            .run(|_| falling_factorial_identity(n)),
    );
    let elems = match central_elements(n) {
        Ok(e) => e,
        Err(e) => {
            out.push(Record::new("central elements", "Harish-Chandra images").param("n", n).run(|_| Err(e)));
            return out;
        }
    };
    let mut images: Vec<(String, Option<ShiftedPoly>)> = Vec::new();
    for c in &elems {
        let image = c.x.clone().and_then(|x| hc_image(&x, n));
        if let Some((anchor, want)) = &c.expect {
            out.push(Record::new("image closed form", *anchor).param("element", &c.name).run(|r| {
                let got = image.clone()?;
                r.terms("image", got.len());
                r.note(format!("{got}"));
                Ok(got == *want)
            }));
        }
        out.push(
            Record::new("image shifted symmetric", "images lie in Λ*(n)")
                .param("element", &c.name)
                .run(|_| Ok(is_shifted_symmetric(&image.clone()?))),
        );
        out.push(
            Record::new("eigenvalue consistency", "image evaluated at μ is the eigenvalue on v_μ")
                .param("element", &c.name)
                .run(|r| {
                    let (x, f) = (c.x.clone()?, image.clone()?);
                    r.note(format!("{} weights", weights.len()));
                    for mu in &weights {
                        let at: Vec<i64> = mu.iter().map(|&v| v as i64).collect();
                        if eigen_scalar(&x, mu)? != f.eval_int(&at) {
                            r.note(format!("mismatch at {mu:?}"));
                            return Ok(false);
                        }
                    }
                    Ok(true)
                }),
        );
        images.push((c.name.clone(), image.ok()));
    }
    let find = |name: &str| images.iter().find(|(k, _)| k == name).and_then(|(_, v)| v.clone());
    let k = |p: usize| if p == 0 { Some(ShiftedPoly::one(n)) } else { find(&format!("K_{n}^{p}")) };
    for p in 0..=1 {
        out.push(
            Record::new("image of K recursion", "χ(K_n^{p+1}) = (−1)^{np} χ(C_n(p)) χ(K_n^p)")
                .param("n", n)
                .param("p", p)
                .run(|_| match (k(p + 1), find(&format!("C_{n}({p})")), k(p)) {
                    (Some(a), Some(c), Some(b)) => Ok(a == c.mul(&b).scale(&Rat::sign(n * p))),
                    _ => Ok(false),
                }),
        );
    }
    let pairs = [(format!("H_{n}^(1)"), format!("H_{n}^({n})")), (format!("C_{n}(0)"), format!("C_{n}(1)"))];
    for (a, b) in pairs {
        let xa = elems.iter().find(|c| c.name == a).map(|c| c.x.clone());
        let xb = elems.iter().find(|c| c.name == b).map(|c| c.x.clone());
        out.push(
            Record::new("multiplicativity", "χ is an algebra map")
                .param("x", &a)
                .param("y", &b)
                .run(|_| {
                    let (Some(xa), Some(xb)) = (xa, xb) else { return Ok(false) };
                    let prod = xa?.try_mul(&xb?)?;
                    let (Some(fa), Some(fb)) = (find(&a), find(&b)) else { return Ok(false) };
                    Ok(hc_image(&prod, n)? == fa.mul(&fb))
                }),
        );
    }
    out
}

/// The Koszul suite at rank `n`: `𝒦(K_λ(n))` against the signed product of
/// invariants for `|λ| ≤ 5`, the characteristic polynomial, and linear
/// independence of the invariant products.
pub fn verify_koszul(n: usize) -> Vec<Record> {
    let mut out = Vec::new();
    for w in 1..=5 {
        for l in Shape::all_of_weight(w, n, w) {
            out.push(
                Record::new("Koszul image", "𝒦(K_λ(n)) is the signed product of invariants")
                    .param("shape", &l)
                    .param("n", n)
                    .run(|r| {
                        let k = koszul_shaped(&l, n)?;
                        r.terms("image", k.len());
                        Ok(k == signed_h_product(&l, n)?)
                    }),
            );
        }
        out.push(
            Record::new("invariant products independent", "first fundamental theorem, adjoint action")
                .param("n", n)
                .param("weight", w)
                .run(|_| h_products_independent(n, w)),
        );
    }
    out.push(
        Record::new("characteristic polynomial", "invariants are the characteristic coefficients")
            .param("n", n)
            .run(|_| char_poly_identity(n)),
    );
    out
}
