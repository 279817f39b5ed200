//! Verifiers for the row-insertion, expansion, and factorization theorems
//! and for centrality. Each returns a [`Record`] whose `pass` field is the
//! verdict of an exact PBW comparison.

use itertools::Itertools;

use super::cdet::{EnvPoly, NcRing, UniPoly};
use super::named::{
    append_rows, capelli_c, capelli_det_poly, capelli_deruyts, capelli_h, capelli_h_shift, capelli_script_coeff,
    capelli_script_poly, rectangular_k, row_bitableau, shaped_k,
};
use crate::error::{Error, Result};
use crate::rat::{binomial, falling, raising, Rat};
use crate::report::Record;
use crate::ugl::{Context, EnvElement, GeneratorOrder};
use crate::virt::Shape;

fn mul(x: &EnvElement, y: &EnvElement) -> Result<EnvElement> {
    x.mul_normal(y, GeneratorOrder::Standard)
}

fn fmt_set(m: &[usize]) -> String {
    if m.is_empty() {
        "∅".into()
    } else {
        m.iter().join(",")
    }
}

fn check_m(lambda: &Shape, m: &[usize]) -> Result<()> {
    let lp = lambda.last();
    if m.windows(2).any(|w| w[0] >= w[1]) || m.iter().any(|&x| x == 0 || x > lp) {
        return Err(Error::Range(format!("M = {m:?} is not an increasing subset of 1..={lp}")));
    }
    Ok(())
}

/// The coefficients `⟨p⟩_{m−k} (−1)^{|λ|k}` of `[K^λ; J]` on the right side
/// of the row-insertion theorem, one per subset `J ⊆ M`, in order of `|J|`.
pub fn row_insertion_coefficients(lambda: &Shape, m: &[usize]) -> Vec<(Vec<usize>, Rat)> {
    let p = lambda.rows() as i64;
    let mm = m.len();
    (0..=mm)
        .flat_map(|k| {
            let c = &raising(p, mm - k) * &Rat::sign(lambda.weight() * k);
            m.iter().copied().combinations(k).map(move |j| (j, c.clone()))
        })
        .collect()
}

/// The coefficients `(−1)^{m−k} (p)_{m−k}` of `[J*|J] K^λ` in the expansion
/// theorem.
pub fn expansion_coefficients(lambda: &Shape, m: &[usize]) -> Vec<(Vec<usize>, Rat)> {
    let p = lambda.rows() as i64;
    let mm = m.len();
    (0..=mm)
        .flat_map(|k| {
            let c = &Rat::sign(mm - k) * &falling(p, mm - k);
            m.iter().copied().combinations(k).map(move |j| (j, c.clone()))
        })
        .collect()
}

/// `[M*|M] K^λ = Σ_k ⟨p⟩_{m−k} Σ_{J⊆M, |J|=k} (−1)^{|λ|k} [K^λ; J]`.
pub fn verify_row_insertion(lambda: &Shape, m: &[usize], n: usize) -> Record {
    Record::new("row-insertion", "row insertion theorem")
        .param("shape", lambda)
        .param("M", fmt_set(m))
        .param("n", n)
        .run(|r| {
            check_m(lambda, m)?;
            let k = capelli_deruyts(lambda, n)?;
            let lhs = mul(&row_bitableau(m, n)?, &k)?;
            let mut rhs = EnvElement::zero(lhs.context());
            let coeffs = row_insertion_coefficients(lambda, m);
            for (j, c) in &coeffs {
                rhs = &rhs + &append_rows(lambda, j, n)?.scale(c);
            }
            r.terms("K", k.len());
            r.terms("lhs", lhs.len());
            r.note(format!("coefficients {}", coeffs.iter().map(|(_, c)| c).join(", ")));
            lhs.equals(&rhs)
        })
}

/// `(−1)^{|λ|m} [K^λ; M] = Σ_k (−1)^{m−k} (p)_{m−k} Σ_{J⊆M, |J|=k} [J*|J] K^λ`.
pub fn verify_expansion(lambda: &Shape, m: &[usize], n: usize) -> Record {
    Record::new("expansion", "expansion theorem")
        .param("shape", lambda)
        .param("M", fmt_set(m))
        .param("n", n)
        .run(|r| {
            check_m(lambda, m)?;
            let k = capelli_deruyts(lambda, n)?;
            let lhs = append_rows(lambda, m, n)?.scale(&Rat::sign(lambda.weight() * m.len()));
            let mut rhs = EnvElement::zero(lhs.context());
            let coeffs = expansion_coefficients(lambda, m);
            for (j, c) in &coeffs {
                rhs = &rhs + &mul(&row_bitableau(j, n)?, &k)?.scale(c);
            }
            r.terms("K", k.len());
            r.terms("lhs", lhs.len());
            r.note(format!("coefficients {}", coeffs.iter().map(|(_, c)| c).join(", ")));
            lhs.equals(&rhs)
        })
}

/// The binomial-inversion step behind the expansion theorem, on scalars:
/// `Σ_{k=i}^m (−1)^{m−k} (p)_{m−k} ⟨p⟩_{k−i} C(m−i, k−i) = δ_{m,i}`.
pub fn inversion_kernel(p: i64, m: usize, i: usize) -> Rat {
    (i..=m)
        .map(|k| {
            &(&(&Rat::sign(m - k) * &falling(p, m - k)) * &raising(p, k - i))
                * &Rat::from_int(binomial(m - i, k - i) as i64)
        })
        .sum()
}

fn product(factors: &[EnvElement], ctx: Context) -> Result<EnvElement> {
    let mut acc = EnvElement::one(ctx);
    for f in factors {
        acc = mul(&acc, f)?;
    }
    Ok(acc)
}

/// The rectangular factorizations of `K_n^p` (for `p ≥ 1`):
/// the one-step recursion through `C_n(p−1)`, and the full products of the
/// `C_n(j)` and of the `H_n(j)`, `j = p−1, …, 0`.
pub fn verify_factorization(n: usize, p: usize) -> Vec<Record> {
    let params = |name: &str, anchor: &str| Record::new(name, anchor).param("n", n).param("p", p);
    let ctx = Context::gl(n as u16);
    let mut out = Vec::new();
    let kp = rectangular_k(n, p);
    out.push(params("K_n^p recursion", "rectangular expansion corollary").run(|r| {
        if p == 0 {
            return Err(Error::Range("p ≥ 1 required".into()));
        }
        let kp = kp.clone()?;
        let rhs = mul(&capelli_c(n, p as i64 - 1)?, &rectangular_k(n, p - 1)?)?;
        r.terms("K", kp.len());
        kp.equals(&rhs.scale(&Rat::sign(n * (p - 1))))
    }));
    let sign = Rat::sign(n * binomial(p, 2) as usize);
    out.push(params("K_n^p product of C", "commutative polynomial in the Capelli generators").run(|r| {
        let kp = kp.clone()?;
        let cs: Vec<EnvElement> = (0..p).rev().map(|j| capelli_c(n, j as i64)).collect::<Result<_>>()?;
        let rhs = product(&cs, ctx)?;
        r.terms("rhs", rhs.len());
        kp.equals(&rhs.scale(&sign))
    }));
    out.push(params("K_n^p product of H", "product of column determinants").run(|r| {
        let kp = kp.clone()?;
        let hs: Vec<EnvElement> = (0..p).rev().map(|j| capelli_h_shift(n, j as i64)).collect::<Result<_>>()?;
        let rhs = product(&hs, ctx)?;
        r.terms("rhs", rhs.len());
        kp.equals(&rhs.scale(&sign))
    }));
    out
}

/// Sign `(−1)^{λ_p(λ_{p−1}+⋯+λ_1) + ⋯ + λ_2 λ_1}` of the general-shape
/// factorizations, which is `(−1)^{e_2(λ)}`.
pub fn shape_sign(lambda: &Shape) -> Rat {
    Rat::sign(lambda.e2())
}

/// The general-shape factorizations of `K^λ` (`λ_1 ≤ n`), with the factors
/// `C_{λ_i}(i−1)` and `H_{λ_i}(i−1)` living in the top-left `gl(λ_i) ⊂ gl(n)`.
pub fn verify_factorization_shape(lambda: &Shape, n: usize) -> Vec<Record> {
    let params = |name: &str, anchor: &str| Record::new(name, anchor).param("shape", lambda).param("n", n);
    let ctx = Context::gl(n as u16);
    let parts = lambda.parts().to_vec();
    let p = parts.len();
    let k = capelli_deruyts(lambda, n);
    let embed = |x: EnvElement| x.embed(ctx);
    let mut out = Vec::new();
    out.push(params("K^λ recursion", "general shape expansion").run(|r| {
        if p == 0 {
            return Err(Error::Range("nonempty shape required".into()));
        }
        let k = k.clone()?;
        let prev = capelli_deruyts(&lambda.without_last(), n)?;
        let c = embed(capelli_c(parts[p - 1], p as i64 - 1)?)?;
        let head: usize = parts[..p - 1].iter().sum();
        r.terms("K", k.len());
        k.equals(&mul(&c, &prev)?.scale(&Rat::sign(parts[p - 1] * head)))
    }));
    out.push(params("K^λ product of C", "expansion in the Capelli generators").run(|r| {
        let k = k.clone()?;
        let cs: Vec<EnvElement> =
            (0..p).rev().map(|i| embed(capelli_c(parts[i], i as i64)?)).collect::<Result<_>>()?;
        let rhs = product(&cs, ctx)?;
        r.terms("rhs", rhs.len());
        k.equals(&rhs.scale(&shape_sign(lambda)))
    }));
    out.push(params("K^λ product of H", "product of column determinants").run(|r| {
        let k = k.clone()?;
        let hs: Vec<EnvElement> =
            (0..p).rev().map(|i| embed(capelli_h_shift(parts[i], i as i64)?)).collect::<Result<_>>()?;
        let rhs = product(&hs, ctx)?;
        r.terms("rhs", rhs.len());
        k.equals(&rhs.scale(&shape_sign(lambda)))
    }));
    out
}

/// The worked displays: `K_3^2 = (H_3^(2) − H_3^(3)) H_3^(3) = −C_3(1)C_3(0)
/// = −H_3(1)H_3(0)` and `K^(3,2) = (H_2^(2) − H_2^(1)) H_3^(3) = C_2(1)C_3(0)
/// = H_2(1)H_3(0)`.
pub fn verify_factorization_examples() -> Vec<Record> {
    let c3 = Context::gl(3);
    let e3 = |x: Result<EnvElement>| x.and_then(|x| x.embed(c3));
    let mut out = Vec::new();
    out.push(Record::new("K_3^2 displays", "rectangular worked example").param("n", 3).param("p", 2).run(|r| {
        let k = rectangular_k(3, 2)?;
        let h33 = capelli_h(3, 3)?;
        let a = mul(&(&capelli_h(3, 2)? - &h33), &h33)?;
        let b = mul(&capelli_c(3, 1)?, &capelli_c(3, 0)?)?.scale(&-Rat::one());
        let c = mul(&capelli_h_shift(3, 1)?, &capelli_h_shift(3, 0)?)?.scale(&-Rat::one());
        r.terms("K", k.len());
        Ok(k.equals(&a)? && k.equals(&b)? && k.equals(&c)?)
    }));
    out.push(Record::new("K^(3,2) displays", "general shape worked example").param("shape", "3,2").run(|r| {
        let k = capelli_deruyts(&Shape::new(vec![3, 2])?, 3)?;
        let h33 = capelli_h(3, 3)?;
        let a = mul(&e3(Ok(&capelli_h(2, 2)? - &capelli_h(2, 1)?))?, &h33)?;
        let b = mul(&e3(capelli_c(2, 1))?, &capelli_c(3, 0)?)?;
        let c = mul(&e3(capelli_h_shift(2, 1))?, &capelli_h_shift(3, 0)?)?;
        r.terms("K", k.len());
        Ok(k.equals(&a)? && k.equals(&b)? && k.equals(&c)?)
    }));
    out
}

/// True iff `x` commutes with every `e_{i,j}` of `gl(n)`, `n` read off the
/// context of `x`.
pub fn is_central(x: &EnvElement) -> Result<bool> {
    let ctx = x.context();
    for g in ctx.generators() {
        let e = EnvElement::generator(ctx, g)?;
        if !mul(x, &e)?.equals(&mul(&e, x)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Centrality check as a report record.
pub fn verify_centrality(name: &str, x: &EnvElement) -> Record {
    let ctx = x.context();
    Record::new(format!("central {name}"), "centrality").param("n", ctx.n).run(|r| {
        r.terms("x", x.len());
        is_central(x)
    })
}

/// The one-row case: `[n ⋯ 2 1 | 1 2 ⋯ n]` built through devirtualization
/// equals the column determinant `H_n^{(n)}`.
pub fn verify_one_row(n: usize) -> Record {
    Record::new("one-row identity", "Capelli–Deruyts one-row case").param("n", n).run(|r| {
        let k = capelli_deruyts(&Shape::new(vec![n])?, n)?;
        let h = capelli_h(n, n)?;
        r.terms("K", k.len());
        k.equals(&h)
    })
}

/// `H_n(p) = C_n(p)`: the column determinant with shifted diagonal against
/// its expansion in the `H_n^{(j)}`.
pub fn verify_h_equals_c(n: usize, p: i64) -> Record {
    Record::new("H_n(p) = C_n(p)", "column determinant expansion").param("n", n).param("p", p).run(|r| {
        let h = capelli_h_shift(n, p)?;
        r.terms("H", h.len());
        h.equals(&capelli_c(n, p)?)
    })
}

/// Change of basis `C_n(p) = Σ_j T_{p,j} H_n^{(j)}` for `p = 0, …, n`:
/// `T_{p,j} = 0` for `j < n − p`, and `T_{p,n−p} = (−1)^p p!` is a unit.
/// The rows are read off the PBW expansion by peeling the `H_n^{(j)}`
/// from the top degree down.
pub fn verify_triangularity(n: usize) -> Record {
    Record::new("triangular change of basis", "C_n(p) against H_n^(j)").param("n", n).run(|r| {
        let hs: Vec<EnvElement> = (0..=n).map(|j| capelli_h(n, j)).collect::<Result<_>>()?;
        let mut leads = Vec::new();
        for p in 0..=n {
            let mut rest = capelli_c(n, p as i64)?.normalized();
            let mut row = vec![Rat::zero(); n + 1];
            for j in (0..=n).rev() {
                // H_n^(j) has degree j and leading coefficient 1 on e_11 ⋯ e_jj
                let top = hs[j].normalized();
                let word = top.sorted_terms().into_iter().find(|(w, _)| w.len() == j).map(|x| x.0);
                let Some(word) = word else { return Ok(false) };
                let c = &rest.coeff(&word) / &top.coeff(&word);
                rest = rest.try_sub(&top.scale(&c))?.normalized();
                row[j] = c;
            }
            if !rest.is_zero() {
                r.note(format!("C_{n}({p}) not in the span"));
                return Ok(false);
            }
            if row[..n - p].iter().any(|c| !c.is_zero()) {
                return Ok(false);
            }
            let lead = row[n - p].clone();
            if lead.is_zero() || lead != &Rat::sign(p) * &falling(p as i64, p) {
                return Ok(false);
            }
            leads.push(lead);
        }
        r.note(format!("leading entries {}", leads.iter().join(", ")));
        Ok(true)
    })
}

fn falling_rat(k: usize, offset: i64, slope: i64) -> UniPoly<Rat> {
    // ∏_{r<k} (slope·t + offset − r)
    (0..k as i64).fold(UniPoly::constant(Rat::one()), |acc, r| {
        acc.mul(&UniPoly::from_coeffs(&Rat::zero(), vec![Rat::from_int(offset - r), Rat::from_int(slope)]))
    })
}

fn times(x: &EnvElement, f: &UniPoly<Rat>) -> EnvPoly {
    let coeffs = f.coeffs().iter().map(|c| x.scale(c)).collect();
    UniPoly::from_coeffs(x, coeffs)
}

/// `H_n(t) = Σ_j (−1)^{n−j} H_n^{(j)} (t)_{n−j}` in `U(gl(n))[t]`.
pub fn verify_det_poly_expansion(n: usize) -> Record {
    Record::new("H_n(t) expansion", "falling factorial expansion of the Capelli determinant").param("n", n).run(|r| {
        let lhs = capelli_det_poly(n)?;
        let mut rhs = UniPoly::zero(&EnvElement::zero(lhs.context()));
        for j in 0..=n {
            let f = falling_rat(n - j, 0, 1).scale(&Rat::sign(n - j));
            rhs = rhs.add(&times(&capelli_h(n, j)?, &f));
        }
        r.terms("degree", lhs.degree().map_or(0, |d| d + 1));
        lhs.equals(&rhs)
    })
}

/// `𝒞_n(s) = Σ_j (−1)^{n−j} H_n^{(j)} (−s + n − 1)_{n−j}`, and the
/// coefficient of `s^{n−h}` is `𝒞_n^{(h)}`.
pub fn verify_script_expansion(n: usize) -> Record {
    Record::new("𝒞_n(s) expansion", "Capelli determinant in the variable s").param("n", n).run(|r| {
        let lhs = capelli_script_poly(n)?;
        let zero = EnvElement::zero(lhs.context());
        let mut rhs = UniPoly::zero(&zero);
        for j in 0..=n {
            let f = falling_rat(n - j, n as i64 - 1, -1).scale(&Rat::sign(n - j));
            rhs = rhs.add(&times(&capelli_h(n, j)?, &f));
        }
        if !lhs.equals(&rhs)? {
            r.note("expansion differs");
            return Ok(false);
        }
        for h in 0..=n {
            if !lhs.coeff(n - h).equals(&capelli_script_coeff(n, h)?)? {
                r.note(format!("coefficient of s^{}", n - h));
                return Ok(false);
            }
        }
        Ok(true)
    })
}

fn top_component(x: &EnvElement, d: usize) -> Result<EnvElement> {
    let x = x.normalized();
    EnvElement::from_terms(x.context(), x.iter().filter(|(w, _)| w.len() == d).map(|(w, c)| (w.to_vec(), c.clone())))
}

/// `K_λ(n)` and `H_λ(n) = H_n^{(λ_1)} ⋯ H_n^{(λ_p)}` have degree `|λ|` and
/// the same top component up to the sign `(−1)^{C(|λ|,2)}`.
pub fn verify_filtration(lambda: &Shape, n: usize) -> Record {
    Record::new("filtration separation", "leading forms of K_λ(n) and H_λ(n)")
        .param("shape", lambda)
        .param("n", n)
        .run(|r| {
            let d = lambda.weight();
            let k = shaped_k(lambda, n)?;
            let hs: Vec<EnvElement> = lambda.parts().iter().map(|&l| capelli_h(n, l)).collect::<Result<_>>()?;
            let h = product(&hs, Context::gl(n as u16))?;
            if k.normalized().degree() != Some(d) || h.degree() != Some(d) {
                r.note("degree is not |λ|");
                return Ok(false);
            }
            let (tk, th) = (top_component(&k, d)?, top_component(&h, d)?);
            r.terms("top", tk.len());
            tk.equals(&th.scale(&Rat::sign(binomial(d, 2) as usize)))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(v: &[usize]) -> Shape {
        Shape::new(v.to_vec()).unwrap()
    }

    #[test]
    fn example_coefficients() {
        let l = sh(&[3, 2]);
        let ins: Vec<Rat> = row_insertion_coefficients(&l, &[1, 2]).into_iter().map(|x| x.1).collect();
        assert_eq!(ins, [6, -2, -2, 1].map(Rat::from_int));
        let exp: Vec<Rat> = expansion_coefficients(&l, &[1, 2]).into_iter().map(|x| x.1).collect();
        assert_eq!(exp, [2, -2, -2, 1].map(Rat::from_int));
    }

    #[test]
    fn inversion_is_delta() {
        for p in 0..5 {
            for m in 0..5 {
                for i in 0..=m {
                    let expect = if i == m { Rat::one() } else { Rat::zero() };
                    assert_eq!(inversion_kernel(p, m, i), expect, "p={p} m={m} i={i}");
                }
            }
        }
    }

    #[test]
    fn small_theorems() {
        assert!(verify_row_insertion(&sh(&[2, 1]), &[1], 2).pass);
        assert!(verify_row_insertion(&sh(&[2, 1]), &[], 2).pass);
        assert!(verify_expansion(&sh(&[2, 2]), &[1], 2).pass);
        assert!(verify_expansion(&sh(&[2, 2]), &[], 2).pass);
        assert!(!verify_row_insertion(&sh(&[2, 1]), &[2], 2).pass);
    }

    #[test]
    fn factorization_small() {
        for r in verify_factorization(1, 1).into_iter().chain(verify_factorization(2, 2)) {
            assert!(r.pass, "{r}");
        }
    }

    #[test]
    fn centrality_small() {
        assert!(is_central(&capelli_h(2, 2).unwrap()).unwrap());
        assert!(!is_central(&EnvElement::e(Context::gl(2), 1, 2)).unwrap());
    }

    #[test]
    fn invariant_verifiers() {
        for n in 1..=3 {
            assert!(verify_one_row(n).pass, "{}", verify_one_row(n));
            assert!(verify_triangularity(n).pass, "{}", verify_triangularity(n));
            assert!(verify_det_poly_expansion(n).pass);
            assert!(verify_script_expansion(n).pass);
            for p in 0..=3 {
                assert!(verify_h_equals_c(n, p).pass);
            }
        }
        for l in [sh(&[1]), sh(&[2]), sh(&[2, 1]), sh(&[1, 1])] {
            let r = verify_filtration(&l, 2);
            assert!(r.pass, "{r}");
        }
    }
}
