//! Exact arithmetic: rationals, monomials, multivariate polynomials over Q and
//! monomial orders for rings and free modules.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use order::{ModuleOrder, MonomialOrder};
pub use parse::{format_polynomial, parse_polynomial, PolyParser};
pub(crate) use polynomial::canonical_cmp;
pub use polynomial::Polynomial;
pub use ring::Ring;

/// Arbitrary-precision rational number; always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Compare two monomials under `order`.
pub fn compare(a: &Monomial, b: &Monomial, order: &MonomialOrder) -> std::cmp::Ordering {
    order.compare(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn ring3() -> Ring {
        Ring::new(&["x", "y", "z"])
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = Ring::new(&["x", "y"]);
        let a = p(&r, "x + y");
        let b = p(&r, "x - y");
        assert_eq!(&a * &b, p(&r, "x^2 - y^2"));
    }

    #[test]
    fn product_with_zero() {
        let r = ring3();
        let a = p(&r, "x^3 - 2*y*z + 7");
        assert!((&a * &Polynomial::zero(&r)).is_zero());
    }

    #[test]
    fn two_five_relations_expand() {
        let r = ring3();
        let f = p(&r, "x*z - y^2");
        let g = &(&p(&r, "z") * &f.pow(2)) + &(&(&p(&r, "2*x^2*y") * &f) + &p(&r, "x^5"));
        let rr = &p(&r, "x^3") + &(&p(&r, "y") * &f);
        let s = &p(&r, "x^2*y") + &(&p(&r, "z") * &f);
        let x = p(&r, "x");
        let y = p(&r, "y");
        // F^3 + R^2 = xG, x^2 R + F S = G, x S - y R = F^2
        assert_eq!(&f.pow(3) + &rr.pow(2), &x * &g);
        assert_eq!(&(&x.pow(2) * &rr) + &(&f * &s), g);
        assert_eq!(&(&x * &s) - &(&y * &rr), f.pow(2));
        assert_eq!(g.total_degree(), Some(5));
        assert_eq!((&f * &g).total_degree(), Some(7));
    }

    #[test]
    fn exact_division() {
        let r = ring3();
        let q = p(&r, "x^2*z - x*y^2").divide_exact(&p(&r, "x")).unwrap();
        assert_eq!(q, Some(p(&r, "x*z - y^2")));
        let f = p(&r, "x*z - y^2");
        let g = p(&r, "z*(x*z-y^2)^2 + 2*x^2*y*(x*z-y^2) + x^5");
        let rr = p(&r, "x^3 + y*(x*z-y^2)");
        // F^3 + R^2 = xG, so G divides it; F^3 alone is not a multiple of G.
        assert_eq!(
            (&f.pow(3) + &rr.pow(2)).divide_exact(&g).unwrap(),
            Some(p(&r, "x"))
        );
        assert_eq!(f.pow(3).divide_exact(&g).unwrap(), None);
        let xg = &p(&r, "x") * &g;
        assert_eq!(xg.divide_exact(&g).unwrap(), Some(p(&r, "x")));
        assert!(matches!(
            xg.divide_exact(&Polynomial::zero(&r)),
            Err(crate::Error::DivisionByZero)
        ));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = p(&Ring::new(&["x", "y"]), "x");
        let b = p(&Ring::new(&["u", "v"]), "u");
        assert!(matches!(
            a.try_add(&b),
            Err(crate::Error::AmbientMismatch { .. })
        ));
        assert!(matches!(
            a.try_mul(&b),
            Err(crate::Error::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn lex_x_beats_y_squared() {
        let x = Monomial::from_exponents(&[1, 0]);
        let y2 = Monomial::from_exponents(&[0, 2]);
        assert_eq!(compare(&x, &y2, &MonomialOrder::Lex), Ordering::Greater);
        assert_eq!(
            compare(&x, &y2, &MonomialOrder::GradedRevLex),
            Ordering::Less
        );
    }

    #[test]
    fn grevlex_on_xyz() {
        let o = MonomialOrder::GradedRevLex;
        let xz = Monomial::from_exponents(&[1, 0, 1]);
        let y2 = Monomial::from_exponents(&[0, 2, 0]);
        let xy = Monomial::from_exponents(&[1, 1, 0]);
        let z2 = Monomial::from_exponents(&[0, 0, 2]);
        assert_eq!(o.compare(&xz, &y2), Ordering::Less);
        assert_eq!(o.compare(&xy, &z2), Ordering::Greater);
    }

    #[test]
    fn weighted_order_ties_on_homogeneous_form() {
        // F = xz - y^2 is homogeneous for unit weights: both terms share a
        // weighted degree and the reverse-lex tie-break picks the leader.
        let w = MonomialOrder::Weighted(vec![1, 1, 1]);
        let xz = Monomial::from_exponents(&[1, 0, 1]);
        let y2 = Monomial::from_exponents(&[0, 2, 0]);
        assert_eq!(
            xz.weighted_degree(&[1, 1, 1]),
            y2.weighted_degree(&[1, 1, 1])
        );
        assert_eq!(w.compare(&y2, &xz), Ordering::Greater);
        let w25 = MonomialOrder::Weighted(vec![2, 5]);
        let f = Monomial::from_exponents(&[1, 0]);
        let g = Monomial::from_exponents(&[0, 1]);
        assert_eq!(w25.compare(&g, &f), Ordering::Greater);
        assert_eq!(w25.compare(&f.pow(5), &g.pow(2)), Ordering::Greater);
    }

    #[test]
    fn print_and_parse() {
        let r = ring3();
        let s = "2*x^2*y - 3/4*z + 1";
        let q = p(&r, s);
        assert_eq!(q.to_string(), s);
        assert_eq!(p(&r, "-x").to_string(), "-x");
        assert_eq!(p(&r, "0").to_string(), "0");
        assert_eq!(p(&r, "(x+1)^2 - 1").to_string(), "x^2 + 2*x");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let r = ring3();
        match parse_polynomial(&r, "x + w") {
            Err(crate::Error::Parse { line, column, .. }) => {
                assert_eq!(line, 1);
                assert_eq!(column, 5);
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial(&r, "x / y").is_err());
        assert!(parse_polynomial(&r, "x^").is_err());
        assert!(parse_polynomial(&r, "(x").is_err());
    }

    #[test]
    fn factorial_binomial_stress() {
        // sum_k C(n,k) = 2^n and (1+x)^n has central coefficient C(n, n/2),
        // both far beyond 64-bit range for n = 200.
        let r = Ring::new(&["x"]);
        let n = 200u32;
        let q = p(&r, "1 + x").pow(n);
        let total: Rational = q.terms().iter().map(|(_, c)| c.clone()).sum();
        let two = num_bigint::BigInt::from(2);
        assert_eq!(
            total,
            Rational::from_integer(num_traits::pow(two, n as usize))
        );
        let mut fact = num_bigint::BigInt::from(1);
        for i in 1..=n {
            fact *= i;
        }
        let mut half = num_bigint::BigInt::from(1);
        for i in 1..=n / 2 {
            half *= i;
        }
        let central = Rational::from_integer(fact / (&half * &half));
        let m = Monomial::from_exponents(&[(n / 2) as u16]);
        assert_eq!(q.coefficient(&m), central);
    }

    #[test]
    fn partial_derivative() {
        let r = ring3();
        assert_eq!(p(&r, "x^3*y + 2*y*z").partial(1), p(&r, "x^3 + 2*z"));
    }
}
