//! Shifted symmetric polynomials, the Harish-Chandra map and the Koszul
//! identities.

use capelli::elements::{capelli_c, capelli_h, rectangular_k};
use capelli::rat::Rat;
use capelli::rep::{eigen_scalar, hook_eigenvalue};
use capelli::shifted::{
    c_image_poly, char_poly_identity, falling_factorial_identity, hc_image, hook_product_poly,
    is_shifted_symmetric, koszul_shaped, shifted_bar_elementary, shifted_elementary, signed_h_product, ShiftedPoly,
};
use capelli::virt::Shape;
use proptest::prelude::*;

fn poly(n: usize) -> impl Strategy<Value = ShiftedPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=2, n), -4i64..=4), 0..5).prop_map(move |terms| {
        let mut f = ShiftedPoly::zero(n);
        for (e, c) in terms {
            f.add_term(e, Rat::from_int(c));
        }
        f
    })
}

fn point(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, n)
}

fn weight(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..=4, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

#[test]
fn falling_factorial_identity_small_ranks() {
    for n in 1..=4 {
        assert!(falling_factorial_identity(n).unwrap());
    }
}

#[test]
fn characteristic_polynomial() {
    for n in 1..=3 {
        assert!(char_poly_identity(n).unwrap());
    }
}

#[test]
fn koszul_images() {
    for n in 1..=3 {
        for w in 1..=4 {
            for l in Shape::all_of_weight(w, n, w) {
                assert_eq!(koszul_shaped(&l, n).unwrap(), signed_h_product(&l, n).unwrap(), "{l} n={n}");
            }
        }
    }
}

#[test]
fn closed_form_images() {
    for n in 1..=3 {
        for r in 1..=n {
            assert_eq!(hc_image(&capelli_h(n, r).unwrap(), n).unwrap(), shifted_elementary(r, n).unwrap());
        }
        for p in 0..=2 {
            assert_eq!(hc_image(&capelli_c(n, p).unwrap(), n).unwrap(), c_image_poly(n, p));
        }
    }
}

#[test]
fn images_are_shifted_symmetric() {
    for n in 1..=4 {
        for k in 0..=n {
            assert!(is_shifted_symmetric(&shifted_elementary(k, n).unwrap()));
            assert!(is_shifted_symmetric(&shifted_bar_elementary(k, n).unwrap()));
        }
        for p in 0..=3 {
            assert!(is_shifted_symmetric(&hook_product_poly(n, p)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_is_a_ring_map(f in poly(3), g in poly(3), x in point(3)) {
        prop_assert_eq!(f.mul(&g).eval_int(&x), &f.eval_int(&x) * &g.eval_int(&x));
        prop_assert_eq!(f.add(&g).eval_int(&x), &f.eval_int(&x) + &g.eval_int(&x));
    }

    #[test]
    fn multiplication_commutes(f in poly(3), g in poly(3)) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
    }

    #[test]
    fn parse_display_round_trip(f in poly(3)) {
        prop_assert_eq!(ShiftedPoly::parse(&f.to_string(), 3).unwrap(), f.clone());
        prop_assert_eq!(ShiftedPoly::from_repr(&f.to_repr()).unwrap(), f);
    }

    #[test]
    fn shifted_symmetric_functions_form_an_algebra(a in 0usize..=3, b in 0usize..=3, c in -3i64..=3) {
        let f = shifted_elementary(a, 3).unwrap().mul(&shifted_elementary(b, 3).unwrap());
        let g = f.add(&c_image_poly(3, c));
        prop_assert!(is_shifted_symmetric(&g));
    }

    #[test]
    fn hook_product_is_the_eigenvalue(n in 1usize..=3, p in 1usize..=2, mu in weight(3)) {
        let mu: Vec<usize> = mu[..n].to_vec();
        let at: Vec<i64> = mu.iter().map(|&m| m as i64).collect();
        let want = hook_eigenvalue(&Shape::rectangle(n, p), &mu).unwrap();
        prop_assert_eq!(hook_product_poly(n, p).eval_int(&at), want.clone());
        prop_assert_eq!(eigen_scalar(&rectangular_k(n, p).unwrap(), &mu).unwrap(), want);
    }

    #[test]
    fn image_evaluates_to_eigenvalue(n in 1usize..=3, r in 1usize..=3, mu in weight(3)) {
        prop_assume!(r <= n);
        let mu: Vec<usize> = mu[..n].to_vec();
        let at: Vec<i64> = mu.iter().map(|&m| m as i64).collect();
        let h = capelli_h(n, r).unwrap();
        prop_assert_eq!(shifted_elementary(r, n).unwrap().eval_int(&at), eigen_scalar(&h, &mu).unwrap());
    }
}
