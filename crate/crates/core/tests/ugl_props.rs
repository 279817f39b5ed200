//! Properties of the enveloping algebra and of `𝔭`, driven by proptest
//! strategies over small contexts.

use capelli::rat::Rat;
use capelli::ugl::{superbracket, Context, EnvElement, Generator, GeneratorOrder, Symbol};
use capelli::virt::{devirtualize, is_irregular};
use proptest::prelude::*;

// gl(1|2): proper 1, 2 and one virtual symbol
const CTX: Context = Context { m: 1, n: 2 };

fn symbol() -> impl Strategy<Value = Symbol> {
    prop_oneof![Just(Symbol::proper(1)), Just(Symbol::proper(2)), Just(Symbol::virt(1))]
}

fn generator() -> impl Strategy<Value = Generator> {
    (symbol(), symbol()).prop_map(|(a, b)| Generator::new(a, b))
}

fn element() -> impl Strategy<Value = EnvElement> {
    prop::collection::vec((prop::collection::vec(generator(), 0..4), -3i64..=3), 1..4).prop_map(|terms| {
        EnvElement::from_terms(CTX, terms.into_iter().map(|(w, c)| (w, Rat::from_int(c)))).unwrap()
    })
}

fn gen_element(g: Generator) -> EnvElement {
    EnvElement::generator(CTX, g).unwrap()
}

fn sign(odd: bool) -> Rat {
    if odd {
        -Rat::one()
    } else {
        Rat::one()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_sorted_and_idempotent(x in element()) {
        for ord in GeneratorOrder::ALL {
            let nx = x.normal_form(ord);
            prop_assert!(nx.iter().all(|(w, _)| ord.is_sorted(w)));
            prop_assert_eq!(nx.normal_form(ord), nx.clone());
            prop_assert!(nx.equals(&x).unwrap());
        }
    }

    #[test]
    fn both_orders_agree(x in element(), y in element()) {
        let a = (&x * &y).normal_form(GeneratorOrder::RaisingFirst);
        let b = (&x * &y).normal_form(GeneratorOrder::Standard);
        prop_assert!(a.equals_in(&b, GeneratorOrder::Standard).unwrap());
    }

    #[test]
    fn multiplication_is_associative(x in element(), y in element(), z in element()) {
        prop_assert!((&(&x * &y) * &z).equals(&(&x * &(&y * &z))).unwrap());
    }

    #[test]
    fn product_distributes(x in element(), y in element(), z in element()) {
        prop_assert!((&x * &(&y + &z)).equals(&(&(&x * &y) + &(&x * &z))).unwrap());
    }

    #[test]
    fn superbracket_antisymmetric(a in generator(), b in generator()) {
        let (x, y) = (gen_element(a), gen_element(b));
        let s = sign(a.is_odd() && b.is_odd());
        let sum = &superbracket(&x, &y).unwrap() + &superbracket(&y, &x).unwrap().scale(&s);
        prop_assert!(sum.normalized().is_zero());
    }

    #[test]
    fn superbracket_jacobi(a in generator(), b in generator(), c in generator()) {
        let (x, y, z) = (gen_element(a), gen_element(b), gen_element(c));
        let s = sign(a.is_odd() && b.is_odd());
        let lhs = superbracket(&x, &superbracket(&y, &z).unwrap()).unwrap();
        let rhs = &superbracket(&superbracket(&x, &y).unwrap(), &z).unwrap()
            + &superbracket(&y, &superbracket(&x, &z).unwrap()).unwrap().scale(&s);
        prop_assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn bracket_of_generators_is_commutator(a in generator(), b in generator()) {
        let (x, y) = (gen_element(a), gen_element(b));
        let s = sign(a.is_odd() && b.is_odd());
        let comm = &(&x * &y) - &(&y * &x).scale(&s);
        prop_assert!(superbracket(&x, &y).unwrap().equals(&comm).unwrap());
    }

    #[test]
    fn irregular_words_devirtualize_to_zero(w in prop::collection::vec(generator(), 1..5)) {
        prop_assume!(is_irregular(&w));
        let x = EnvElement::from_word(CTX, &w, Rat::one()).unwrap();
        prop_assert!(devirtualize(&x).unwrap().is_zero());
    }

    #[test]
    fn proper_words_devirtualize_to_themselves(w in prop::collection::vec((1u16..=2, 1u16..=2), 0..4)) {
        let gens: Vec<Generator> = w.iter().map(|&(i, j)| Generator::new(Symbol::proper(i), Symbol::proper(j))).collect();
        let x = EnvElement::from_word(CTX, &gens, Rat::one()).unwrap();
        let y = EnvElement::from_word(Context::gl(2), &gens, Rat::one()).unwrap();
        prop_assert!(devirtualize(&x).unwrap().equals(&y).unwrap());
    }

    #[test]
    fn repr_round_trips(x in element()) {
        let back = EnvElement::from_repr(&x.to_repr()).unwrap();
        prop_assert_eq!(back.sorted_terms(), x.sorted_terms());
    }
}
