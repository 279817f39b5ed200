//! The polarization representation: polynomials in `(i|j)`, Capelli
//! identities and highest weight vectors.

use capelli::elements::capelli_h;
use capelli::rat::Rat;
use capelli::rep::{
    act, act_generator, bracket_det, capelli_identity_sides, highest_weight_vector, is_highest_weight,
    random_polynomial, superpolarize, RepVar, SuperPolynomial,
};
use capelli::ugl::{Generator, Symbol};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn row() -> impl Strategy<Value = Symbol> {
    prop_oneof![Just(Symbol::proper(1)), Just(Symbol::proper(2)), Just(Symbol::virt(1)), Just(Symbol::virt(2))]
}

fn var() -> impl Strategy<Value = RepVar> {
    (row(), 1u16..=2).prop_map(|(r, c)| RepVar::new(r, c))
}

fn poly() -> impl Strategy<Value = SuperPolynomial> {
    prop::collection::vec((prop::collection::vec(var(), 0..4), -3i64..=3), 1..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(SuperPolynomial::zero(), |acc, (v, c)| acc.add(&SuperPolynomial::from_vars(&v, Rat::from_int(c))))
    })
}

fn weight(n: usize, max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..=max, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_display_round_trip(p in poly()) {
        prop_assert_eq!(SuperPolynomial::parse(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(SuperPolynomial::from_repr(&p.to_repr()).unwrap(), p);
    }

    #[test]
    fn multiplication_is_associative(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
    }

    #[test]
    fn polarization_is_linear(a in row(), b in row(), p in poly(), q in poly()) {
        prop_assert_eq!(superpolarize(a, b, &p.add(&q)), superpolarize(a, b, &p).add(&superpolarize(a, b, &q)));
    }

    #[test]
    fn generators_act_by_polarization(a in row(), b in row(), p in poly()) {
        prop_assert_eq!(act_generator(Generator::new(a, b), &p), superpolarize(a, b, &p));
    }

    #[test]
    fn capelli_identities_hold(seed in any::<u64>(), case in 0usize..4) {
        let (n, d) = [(2, 1), (3, 2), (2, 2), (3, 3)][case];
        let f = random_polynomial(&mut ChaCha8Rng::seed_from_u64(seed), n, d, 3);
        let (lhs, rhs) = capelli_identity_sides(&capelli_h(n, n).unwrap(), n, d, &f).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn highest_weight_vectors(mu in weight(3, 3)) {
        prop_assert!(is_highest_weight(&mu).unwrap());
    }

    #[test]
    fn cartan_acts_by_weight(mu in weight(3, 3), i in 1u16..=3) {
        let v = highest_weight_vector(&mu, 3).unwrap();
        let hv = act_generator(Generator::new(Symbol::proper(i), Symbol::proper(i)), &v);
        prop_assert_eq!(hv, v.scale(&Rat::from_int(mu[i as usize - 1] as i64)));
    }
}

#[test]
fn bracket_is_the_top_minor() {
    // H_2^(2) acting on the bracket itself: [x_1,x_2] Ω_2([x_1,x_2]) = 2 [x_1,x_2]
    let b = bracket_det(2);
    let h = capelli_h(2, 2).unwrap();
    assert_eq!(act(&h, &b), b.scale(&Rat::from_int(2)));
}
