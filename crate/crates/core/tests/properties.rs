use lndfact::groebner::QuotientContext;
use lndfact::lnd::Derivation;
use lndfact::poly::{parse_polynomial, Polynomial, Ring};
use proptest::prelude::*;

fn ring() -> Ring {
    Ring::new(&["x", "y", "z"])
}

fn build(terms: &[(i64, Vec<usize>)]) -> Polynomial {
    let r = ring();
    let mut acc = Polynomial::zero(&r);
    for (c, vars) in terms {
        let mut t = Polynomial::from_int(&r, *c);
        for &v in vars {
            t = &t * &Polynomial::var(&r, v);
        }
        acc = &acc + &t;
    }
    acc
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-5i64..=5, prop::collection::vec(0usize..3, 0..4)), 0..5)
        .prop_map(|t| build(&t))
}

fn p(s: &str) -> Polynomial {
    parse_polynomial(&ring(), s).unwrap()
}

fn derivation() -> Derivation {
    let r = ring();
    Derivation::new(&r, vec![Polynomial::zero(&r), p("x"), p("2*y")]).unwrap()
}

fn quotient() -> QuotientContext {
    QuotientContext::new(&ring(), vec![p("x^2*y + z^2 + x")]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn round_trip(a in poly()) {
        prop_assert_eq!(p(&a.to_string()), a);
    }

    #[test]
    fn leibniz(a in poly(), b in poly()) {
        let d = derivation();
        let lhs = d.apply(&(&a * &b));
        let rhs = &(&d.apply(&a) * &b) + &(&a * &d.apply(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_is_a_projection(a in poly(), b in poly()) {
        let q = quotient();
        let na = q.normal_form(&a);
        prop_assert_eq!(q.normal_form(&na), na.clone());
        prop_assert_eq!(q.normal_form(&(&a + &b)), &na + &q.normal_form(&b));
        prop_assert!(q.is_zero(&(&a - &na)));
    }
}
