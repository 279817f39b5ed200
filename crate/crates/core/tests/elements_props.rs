//! The Capelli element identities and their invariants.

use capelli::elements::{
    capelli_c, capelli_deruyts, capelli_h, capelli_h_shift, cdet, is_central, rectangular_k,
    row_insertion_coefficients, verify_det_poly_expansion, verify_expansion, verify_filtration, verify_h_equals_c,
    verify_one_row, verify_row_insertion, verify_script_expansion, verify_triangularity, EnvMatrix,
};
use capelli::rat::{falling, Rat};
use capelli::rep::{eigen_scalar, hook_eigenvalue};
use capelli::ugl::{Context, EnvElement};
use capelli::virt::Shape;
use proptest::prelude::*;

fn shape(max_part: usize, max_rows: usize) -> impl Strategy<Value = Shape> {
    prop::collection::vec(1..=max_part, 1..=max_rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Shape::new(v).unwrap()
    })
}

fn weight(n: usize, max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..=max, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

#[test]
fn one_row_identity() {
    for n in 1..=4 {
        let r = verify_one_row(n);
        assert!(r.pass, "{r}");
    }
}

#[test]
fn triangular_change_of_basis() {
    for n in 1..=3 {
        let r = verify_triangularity(n);
        assert!(r.pass, "{r}");
    }
    // leading entries are (-1)^p p!, so only n ≤ 1 gives ±1 throughout
    let d = verify_triangularity(3).detail.unwrap();
    assert!(d.contains("leading entries 1, -1, 2, -6"), "{d}");
}

#[test]
fn capelli_determinant_expansions() {
    for n in 1..=3 {
        assert!(verify_det_poly_expansion(n).pass);
        assert!(verify_script_expansion(n).pass);
    }
}

#[test]
fn filtration_separates_leading_forms() {
    for n in 1..=3 {
        for w in 1..=3 {
            for l in Shape::all_of_weight(w, n, w) {
                let r = verify_filtration(&l, n);
                assert!(r.pass, "{r}");
            }
        }
    }
}

#[test]
fn scalar_column_determinant() {
    // diagonal scalars: cdet is the product
    let ctx = Context::gl(2);
    let m = EnvMatrix::new(vec![
        vec![EnvElement::scalar(ctx, Rat::from_int(3)), EnvElement::zero(ctx)],
        vec![EnvElement::zero(ctx), EnvElement::scalar(ctx, Rat::from_int(-2))],
    ])
    .unwrap();
    assert_eq!(cdet(&m).unwrap().constant_term(), Rat::from_int(-6));
}

#[test]
fn c_at_small_shifts() {
    // C_n(0) = H_n^(n); C_n(1) = H_n^(n) - H_n^(n-1)
    for n in 1..=3 {
        let h = capelli_h(n, n).unwrap();
        assert!(capelli_c(n, 0).unwrap().equals(&h).unwrap());
        let d = &h - &capelli_h(n, n - 1).unwrap();
        assert!(capelli_c(n, 1).unwrap().equals(&d).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn h_equals_c(n in 1usize..=3, p in 0i64..=3) {
        prop_assert!(verify_h_equals_c(n, p).pass);
    }

    #[test]
    fn c_is_central(n in 1usize..=3, p in -2i64..=4) {
        prop_assert!(is_central(&capelli_c(n, p).unwrap()).unwrap());
        prop_assert!(is_central(&capelli_h_shift(n, p).unwrap()).unwrap());
    }

    #[test]
    fn rectangular_k_is_central(n in 1usize..=3, p in 1usize..=2) {
        prop_assert!(is_central(&rectangular_k(n, p).unwrap()).unwrap());
    }

    #[test]
    fn hook_eigenvalue_matches_action(l in shape(3, 3), mu in weight(3, 3)) {
        let k = capelli_deruyts(&l, 3).unwrap();
        prop_assert_eq!(eigen_scalar(&k, &mu).unwrap(), hook_eigenvalue(&l, &mu).unwrap());
    }

    #[test]
    fn row_insertion_and_expansion(l in shape(3, 3), mask in 0u32..8) {
        let m: Vec<usize> = (1..=l.last()).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        let n = l.first();
        prop_assert!(verify_row_insertion(&l, &m, n).pass);
        prop_assert!(verify_expansion(&l, &m, n).pass);
    }

    #[test]
    fn row_insertion_end_coefficients(l in shape(3, 3), mask in 0u32..8) {
        // J = ∅ first with <p>_m, J = M last with (-1)^{|λ||M|}
        let m: Vec<usize> = (1..=l.last()).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        let c = row_insertion_coefficients(&l, &m);
        prop_assert_eq!(c.len(), 1 << m.len());
        let (bottom, cb) = c.first().unwrap();
        prop_assert!(bottom.is_empty());
        let raising: Rat = (0..m.len()).map(|t| Rat::from_int((l.rows() + t) as i64)).product();
        prop_assert_eq!(cb, &raising);
        let (top, ct) = c.last().unwrap();
        prop_assert_eq!(top, &m);
        prop_assert_eq!(ct, &Rat::sign(l.weight() * m.len()));
    }

    #[test]
    fn falling_factorial_recursion(p in -5i64..=5, j in 0usize..=5) {
        prop_assert_eq!(falling(p, j + 1), &falling(p, j) * &Rat::from_int(p - j as i64));
    }
}
