//! Biproducts `(ω|ϖ)`, Young bitableaux `(S|T)`, and highest weight vectors.

use super::action::superpolarize;
use super::poly::{RepVar, SuperPolynomial};
use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::ugl::Symbol;
use crate::virt::{Shape, Tableau};

/// `|ω|`: the parity of a word of symbols.
pub fn word_parity(w: &[Symbol]) -> u8 {
    w.iter().fold(0, |p, s| p ^ s.parity())
}

/// `(ω|ϖ) = D_{z_1,γ} ⋯ D_{z_p,γ}((γ|j_1) ⋯ (γ|j_q))`, zero when `p ≠ q`.
/// The auxiliary odd row `γ` is consumed entirely and never escapes.
pub fn biproduct(omega: &[Symbol], varpi: &[u16]) -> SuperPolynomial {
    if omega.len() != varpi.len() {
        return SuperPolynomial::zero();
    }
    let gamma = Symbol::auxiliary();
    let vars: Vec<RepVar> = varpi.iter().map(|&j| RepVar::new(gamma, j)).collect();
    let mut p = SuperPolynomial::from_vars(&vars, Rat::one());
    for &z in omega.iter().rev() {
        if p.is_zero() {
            break;
        }
        p = superpolarize(z, gamma, &p);
    }
    p
}

/// `(S|T) = ± (ω_1|ϖ_1) ⋯ (ω_p|ϖ_p)` with
/// `± = (−1)^{Σ_s |ω_s| (|ϖ_1| + ⋯ + |ϖ_{s−1}|)}`; zero for different shapes.
pub fn young_bitableau(s: &Tableau, t: &Tableau<u16>) -> SuperPolynomial {
    if s.shape() != t.shape() {
        return SuperPolynomial::zero();
    }
    let mut out = SuperPolynomial::one();
    let mut right_len = 0usize;
    let mut exp = 0usize;
    for (w, v) in s.rows().iter().zip(t.rows()) {
        exp += word_parity(w) as usize * right_len;
        right_len += v.len();
        out = out.mul(&biproduct(w, v));
        if out.is_zero() {
            return out;
        }
    }
    out.scale(&Rat::sign(exp))
}

/// `d_{z,z'}(ω)` on the supersymmetric algebra of symbols: each occurrence
/// of `z'` is replaced by `z`, with the Leibniz sign
/// `(−1)^{(|z|+|z'|)·|prefix|}`.
pub fn polarize_word(z: Symbol, zp: Symbol, w: &[Symbol]) -> Vec<(Rat, Vec<Symbol>)> {
    let deg = (z.parity() + zp.parity()) % 2;
    let mut before = 0u8;
    let mut out = Vec::new();
    for (i, &x) in w.iter().enumerate() {
        if x == zp {
            let mut v = w.to_vec();
            v[i] = z;
            out.push((Rat::sign((deg & before) as usize), v));
        }
        before ^= x.parity();
    }
    out
}

/// The right side of the action formula on bitableaux:
/// `Σ_s (−1)^{(|z|+|z'|) ε_s} (ω_1, …, d_{z,z'}(ω_s), …, ω_p | T)` with
/// `ε_s = |ω_1| + ⋯ + |ω_{s−1}|` (so `ε_1 = 0`).
pub fn act_on_bitableau_rowwise(z: Symbol, zp: Symbol, s: &Tableau, t: &Tableau<u16>) -> Result<SuperPolynomial> {
    let deg = ((z.parity() + zp.parity()) % 2) as usize;
    let mut out = SuperPolynomial::zero();
    let mut eps = 0usize;
    for (row, w) in s.rows().iter().enumerate() {
        for (c, w2) in polarize_word(z, zp, w) {
            let mut rows = s.rows().to_vec();
            rows[row] = w2;
            let s2 = Tableau::new(rows)?;
            let sign = Rat::sign(deg * eps);
            out = out.add(&young_bitableau(&s2, t).scale(&(&c * &sign)));
        }
        eps += word_parity(w) as usize;
    }
    Ok(out)
}

/// `v_μ = (Der_μ̃ | Der_μ̃)`, the rows of the conjugate shape filled with
/// `1 2 ⋯ μ̃_k` on both sides. Needs `d ≥ μ̃_1`, the number of nonzero parts.
pub fn highest_weight_vector(mu: &[usize], d: usize) -> Result<SuperPolynomial> {
    if mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Shape(format!("weight {mu:?} is not dominant")));
    }
    let conj = Shape::from_weight(mu)?.conjugate();
    if conj.first() > d {
        return Err(Error::Range(format!("v_μ for μ = {mu:?} needs d ≥ {}, got {d}", conj.first())));
    }
    let left: Vec<Vec<Symbol>> = conj.parts().iter().map(|&l| (1..=l as u16).map(Symbol::proper).collect()).collect();
    let right: Vec<Vec<u16>> = conj.parts().iter().map(|&l| (1..=l as u16).collect()).collect();
    Ok(young_bitableau(&Tableau::new(left)?, &Tableau::new(right)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::poly::minor_det;

    fn p(v: &[u16]) -> Vec<Symbol> {
        v.iter().map(|&i| Symbol::proper(i)).collect()
    }

    #[test]
    fn one_cell_and_mismatch() {
        assert_eq!(biproduct(&p(&[1]), &[1]), SuperPolynomial::var(RepVar::proper(1, 1)));
        assert!(biproduct(&p(&[1]), &[1, 2]).is_zero());
    }

    #[test]
    fn proper_biproduct_is_signed_minor() {
        let b = biproduct(&p(&[1, 2]), &[1, 2]);
        assert_eq!(b, minor_det(&p(&[1, 2]), &[1, 2]).scale(&-Rat::one()));
        let b = biproduct(&p(&[3, 1, 2]), &[2, 3, 1]);
        assert_eq!(b, minor_det(&p(&[3, 1, 2]), &[2, 3, 1]).scale(&-Rat::one()));
    }

    #[test]
    fn bitableau_sign_and_shapes() {
        let s = Tableau::new(vec![p(&[1, 2])]).unwrap();
        let t = Tableau::new(vec![vec![1u16, 2]]).unwrap();
        assert_eq!(young_bitableau(&s, &t), biproduct(&p(&[1, 2]), &[1, 2]));
        let t2 = Tableau::new(vec![vec![1u16], vec![2]]).unwrap();
        assert!(young_bitableau(&s, &t2).is_zero());
        // rows (1 | 1), (2 | 2): sign (−1)^{|ω_2||ϖ_1|} = −1
        let s3 = Tableau::new(vec![p(&[1]), p(&[2])]).unwrap();
        let expect = SuperPolynomial::from_vars(&[RepVar::proper(1, 1), RepVar::proper(2, 2)], -Rat::one());
        assert_eq!(young_bitableau(&s3, &t2), expect);
    }

    #[test]
    fn highest_weight_vectors() {
        assert_eq!(highest_weight_vector(&[1, 0, 0], 3).unwrap(), SuperPolynomial::var(RepVar::proper(1, 1)));
        assert_eq!(highest_weight_vector(&[1, 1], 2).unwrap(), biproduct(&p(&[1, 2]), &[1, 2]));
        assert!(highest_weight_vector(&[1, 1, 1], 2).is_err());
        assert!(highest_weight_vector(&[0, 1], 2).is_err());
    }

    #[test]
    fn displayed_action_example() {
        // e_{α,2} on (132, 23, 42 | 123, 23, 31) gives + − + on rows 1, 2, 3
        let a = Symbol::virt(1);
        let two = Symbol::proper(2);
        let s = Tableau::new(vec![p(&[1, 3, 2]), p(&[2, 3]), p(&[4, 2])]).unwrap();
        let t = Tableau::new(vec![vec![1u16, 2, 3], vec![2, 3], vec![3, 1]]).unwrap();
        let direct = superpolarize(a, two, &young_bitableau(&s, &t));
        let bt = |rows: Vec<Vec<Symbol>>| young_bitableau(&Tableau::new(rows).unwrap(), &t);
        let expect = bt(vec![vec![Symbol::proper(1), Symbol::proper(3), a], p(&[2, 3]), p(&[4, 2])])
            .sub(&bt(vec![p(&[1, 3, 2]), vec![a, Symbol::proper(3)], p(&[4, 2])]))
            .add(&bt(vec![p(&[1, 3, 2]), p(&[2, 3]), vec![Symbol::proper(4), a]]));
        assert!(!direct.is_zero());
        assert_eq!(direct, expect);
        assert_eq!(act_on_bitableau_rowwise(a, two, &s, &t).unwrap(), direct);
    }
}
