//! Gröbner bases for ideals and submodules of free modules over `Q[x]`,
//! elimination, ideal intersection, colon and saturation, syzygies, and
//! arithmetic in quotient rings.

mod engine;
mod ideal;
mod module;
mod quotient;

pub use ideal::{GroebnerBasis, Ideal};
pub use module::{
    polynomial_syzygies, syzygies, FreeModuleElement, ModuleGroebnerBasis, Submodule,
};
pub use quotient::{Divider, QuotientContext};

pub(crate) use engine::{sort_vector, Engine, Grading, Term, Vector};

use crate::poly::{MonomialOrder, Polynomial, Ring};

pub fn groebner_basis(
    ring: &Ring,
    generators: &[Polynomial],
    order: &MonomialOrder,
) -> GroebnerBasis {
    GroebnerBasis::compute(ring, generators, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    const F: &str = "(x*z - y^2)";

    fn g25() -> String {
        format!("(z*{F}^2 + 2*x^2*y*{F} + x^5)")
    }

    fn r25() -> String {
        format!("(x^3 + y*{F})")
    }

    fn s25() -> String {
        format!("(x^2*y + z*{F})")
    }

    #[test]
    fn principal_monomial_ideal() {
        let r = Ring::new(&["x", "y"]);
        let i = Ideal::new(&r, vec![p(&r, "x")]).unwrap();
        assert_eq!(i.basis().elements(), &[p(&r, "x")]);
        assert_eq!(
            i.normal_form(&p(&r, "y^2"), &MonomialOrder::GradedRevLex),
            p(&r, "y^2")
        );
    }

    #[test]
    fn reduced_basis_is_monic_and_verified() {
        let r = Ring::new(&["x", "y", "z"]);
        let i = Ideal::new(
            &r,
            vec![
                p(&r, "2*x^2 + y*z"),
                p(&r, "x*y - z^2 + 1"),
                p(&r, "x + y + z"),
            ],
        )
        .unwrap();
        for o in [
            MonomialOrder::Lex,
            MonomialOrder::GradedRevLex,
            MonomialOrder::GradedLex,
        ] {
            let gb = i.groebner_basis(&o);
            assert!(gb.verify());
            for g in gb.elements() {
                assert!(gb.normal_form(g).is_zero());
                let lead = g
                    .terms()
                    .iter()
                    .max_by(|a, b| o.compare(&a.0, &b.0))
                    .unwrap();
                assert!(num_traits::One::is_one(&lead.1));
            }
            for g in i.generators() {
                assert!(gb.contains(g));
            }
        }
    }

    #[test]
    fn relations_of_kernel_are_zero() {
        let r = Ring::new(&["x", "y", "z", "Y1", "Y2"]);
        let i = Ideal::new(
            &r,
            vec![
                p(&r, &format!("Y1 - {F}")),
                p(&r, &format!("Y2 - {}", g25())),
            ],
        )
        .unwrap();
        let el = i.eliminate(&[3, 4]);
        assert!(el.generators().is_empty());
    }

    #[test]
    fn winkelmann_relation() {
        let base = Ring::new(&["x", "y", "z", "u", "Y1", "Y2", "Y3", "Y4"]);
        let f = "(2*x*z - y^2)";
        let gg = format!("(u*x - y*({f} + 1))");
        let t = format!("(y*u - 2*z*({f} + 1))");
        // H = u·DT − T·Du with Du = F + 1 and DT = G
        let h = format!("(u*{gg} - {t}*({f} + 1))");
        let gens = vec![
            p(&base, "Y1 - x"),
            p(&base, &format!("Y2 - {f}")),
            p(&base, &format!("Y3 - {gg}")),
            p(&base, &format!("Y4 - {h}")),
        ];
        let el = Ideal::new(&base, gens).unwrap().eliminate(&[4, 5, 6, 7]);
        assert_eq!(el.generators().len(), 1);
        let expected = p(&base, "Y1*Y4 - Y3^2 - Y2*(Y2 + 1)^2");
        assert_eq!(el.generators()[0].monic(), expected.monic());
    }

    #[test]
    fn b5_and_b6_relations() {
        let ring = Ring::new(&["x", "y", "z", "Y1", "Y2", "Y3", "Y4"]);
        let (rr, ss) = (r25(), s25());
        let b5 = vec![
            p(&ring, &format!("Y1 - {F}")),
            p(&ring, &format!("Y2 - {rr}")),
            p(&ring, "Y3 - x"),
            p(&ring, &format!("Y4 - {ss}")),
        ];
        let el = Ideal::new(&ring, b5).unwrap().eliminate(&[3, 4, 5, 6]);
        assert_eq!(el.generators().len(), 1);
        let rel = p(&ring, "Y1*(Y3*Y4 - Y1^2) - Y2*(Y2 - Y3^3)");
        assert_eq!(el.generators()[0].monic(), rel.monic());

        let b6 = vec![
            p(&ring, &format!("Y1 - {F}")),
            p(&ring, "Y2 - x"),
            p(&ring, &format!("Y3 - {ss}")),
            p(&ring, "Y4 - y"),
        ];
        let el = Ideal::new(&ring, b6).unwrap().eliminate(&[3, 4, 5, 6]);
        assert_eq!(el.generators().len(), 1);
        let rel = p(&ring, "Y2*(Y3 - Y2^2*Y4) - Y1*(Y1 + Y4^2)");
        assert_eq!(el.generators()[0].monic(), rel.monic());
    }

    #[test]
    fn relation_normal_form() {
        let r = Ring::new(&["x", "y", "z"]);
        let rel = p(&r, &format!("x*{} - {F}^3 - {}^2", g25(), r25()));
        assert!(rel.is_zero());
        let gi = Ideal::new(&r, vec![p(&r, &g25())]).unwrap();
        assert!(gi.contains(&p(&r, &format!("x*{}", g25()))));
        assert!(gi.contains(&p(&r, &format!("{F}^3 + {}^2", r25()))));
    }

    #[test]
    fn elimination_of_transcendental() {
        let r = Ring::new(&["x", "Y"]);
        let i = Ideal::new(&r, vec![p(&r, "Y - x^2")]).unwrap();
        assert!(i.eliminate(&[1]).generators().is_empty());
    }

    #[test]
    fn colon_and_saturation() {
        let r = Ring::new(&["x", "y", "z"]);
        let i = Ideal::new(&r, vec![p(&r, "x^2")]).unwrap();
        let c = i.colon(&p(&r, "x")).unwrap();
        assert!(c.equals(&Ideal::new(&r, vec![p(&r, "x")]).unwrap()));

        let xf = Ideal::new(&r, vec![p(&r, &format!("x*{F}"))]).unwrap();
        let c = xf.colon(&p(&r, "x")).unwrap();
        assert!(c.equals(&Ideal::new(&r, vec![p(&r, F)]).unwrap()));

        let s = xf.saturate(&p(&r, F)).unwrap();
        let x = Ideal::new(&r, vec![p(&r, "x")]).unwrap();
        assert!(s.is_subset_of(&x) && x.is_subset_of(&s));

        assert!(i.colon(&Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn intersection() {
        let r = Ring::new(&["x", "y"]);
        let a = Ideal::new(&r, vec![p(&r, "x")]).unwrap();
        let b = Ideal::new(&r, vec![p(&r, "y")]).unwrap();
        let c = a.intersect(&b);
        assert!(c.equals(&Ideal::new(&r, vec![p(&r, "x*y")]).unwrap()));
    }

    #[test]
    fn radical_membership() {
        let r = Ring::new(&["x", "y"]);
        let i = Ideal::new(&r, vec![p(&r, "x^2"), p(&r, "x*y^3")]).unwrap();
        assert!(!i.contains(&p(&r, "x")));
        assert!(i.radical_contains(&p(&r, "x")));
        assert!(!i.radical_contains(&p(&r, "y")));
        let j = Ideal::new(&r, vec![p(&r, "x")]).unwrap();
        assert!(i.same_radical(&j));
    }

    #[test]
    fn koszul_syzygy() {
        let r = Ring::new(&["x", "y"]);
        let syz = polynomial_syzygies(&r, &[p(&r, "x"), p(&r, "y")]).unwrap();
        assert_eq!(syz.generators().len(), 1);
        let g = &syz.generators()[0];
        let v = FreeModuleElement::new(vec![p(&r, "y"), p(&r, "-x")]);
        assert!(syz.contains(&v).unwrap());
        assert_eq!(g.dot(&[p(&r, "x"), p(&r, "y")]), Polynomial::zero(&r));
        assert!(syz.contains(&FreeModuleElement::zero(&r, 2)).unwrap());
        assert!(syz.contains(&FreeModuleElement::zero(&r, 3)).is_err());
    }

    #[test]
    fn syzygies_sum_to_zero() {
        let r = Ring::new(&["x", "y", "z"]);
        let gens = [
            p(&r, "x*y - z"),
            p(&r, "y^2 - x*z"),
            p(&r, "x^2 + y*z"),
            p(&r, "z^3"),
        ];
        let syz = polynomial_syzygies(&r, &gens).unwrap();
        assert!(!syz.generators().is_empty());
        for s in syz.generators() {
            assert!(s.dot(&gens).is_zero());
        }
        let gb = syz.groebner_basis(&Submodule::default_order());
        assert!(gb.verify());
    }

    #[test]
    fn quotient_normal_forms() {
        let r = Ring::new(&["x", "y", "z"]);
        let q = QuotientContext::new(&r, vec![p(&r, F)]).unwrap();
        assert!(q.normal_form(&p(&r, F)).is_zero());
        // modulo F, y² ≡ xz, so G ≡ x⁵ and R ≡ x³
        assert!(q.equal(&p(&r, &g25()), &p(&r, "x^5")));
        assert!(q.equal(&p(&r, &r25()), &p(&r, "x^3")));
    }

    #[test]
    fn quotient_division() {
        let r = Ring::new(&["x", "y", "z", "t"]);
        let q = QuotientContext::new(&r, vec![p(&r, "x + x^2*y + z^2 + t^3")]).unwrap();
        // z² + t³ = −x(1 + xy) in the quotient
        let quo = q.divide(&p(&r, "z^2 + t^3"), &p(&r, "x")).unwrap().unwrap();
        assert!(q.equal(&(&quo * &p(&r, "x")), &p(&r, "z^2 + t^3")));
        assert!(q.divide(&p(&r, "z"), &p(&r, "x")).unwrap().is_none());
    }
}
