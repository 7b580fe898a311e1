use std::sync::Arc;

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

fn d25() -> Derivation {
    let r = Ring::new(&["x", "y", "z"]);
    let (g, rr) = (g25(), r25());
    let mut d = Derivation::new(
        &r,
        vec![
            p(&r, &format!("-2*{F}*{rr}")),
            p(&r, &format!("6*x^2*{rr} - {g}")),
            p(&r, &format!("2*x*(5*y*{rr} + {F}^2)")),
        ],
    )
    .unwrap();
    d.verify_locally_nilpotent(DEFAULT_NILPOTENCY_CAP).unwrap();
    d
}

#[test]
fn images_25() {
    let d = d25();
    let r = d.ring().clone();
    assert_eq!(d.apply(&p(&r, &r25())), p(&r, &format!("-{F}*{}", g25())));
    assert_eq!(
        d.apply(&p(&r, &s25())),
        p(&r, &format!("x*(5*x*{} - 4*{F}^3)", g25()))
    );
    assert_eq!(
        d.apply_power(&p(&r, "x"), 2),
        p(&r, &format!("2*{F}^2*{}", g25()))
    );
    assert!(d.apply(&p(&r, F)).is_zero());
    assert!(d.apply(&p(&r, &g25())).is_zero());
}

#[test]
fn witnesses() {
    assert_eq!(d25().witnesses().unwrap(), &[3, 7, 11]);
    let r = Ring::new(&["x", "y"]);
    let mut d = Derivation::new(&r, vec![Polynomial::zero(&r), p(&r, "x")]).unwrap();
    assert_eq!(d.verify_locally_nilpotent(16).unwrap(), vec![1, 2]);
    assert!(d.apply(&p(&r, "x")).is_zero());
    let mut e = Derivation::new(&r, vec![Polynomial::zero(&r), p(&r, "y")]).unwrap();
    assert!(matches!(
        e.verify_locally_nilpotent(64),
        Err(Error::CapExceeded { .. })
    ));
}

#[test]
fn degrees_25() {
    let d = d25();
    let r = d.ring().clone();
    assert_eq!(d.degree(&p(&r, &s25())), Some(5));
    assert_eq!(d.degree(&p(&r, &r25())), Some(1));
    assert_eq!(d.degree(&p(&r, "x")), Some(2));
    assert_eq!(d.degree(&p(&r, "y")), Some(6));
    assert_eq!(d.degree(&p(&r, "z")), Some(10));
    assert_eq!(d.degree(&p(&r, &format!("x*{}", r25()))), Some(3));
    assert_eq!(d.degree(&p(&r, F)), Some(0));
    assert_eq!(d.degree(&Polynomial::zero(&r)), None);
}

#[test]
fn local_slices() {
    let r = Ring::new(&["x", "y"]);
    let d = Derivation::new(&r, vec![Polynomial::zero(&r), p(&r, "x")]).unwrap();
    let s = d.find_local_slice(None, &[]).unwrap();
    assert_eq!(s.r, p(&r, "y"));
    assert_eq!(s.f, p(&r, "x"));

    let d = d25();
    let r = d.ring().clone();
    let s = d.find_local_slice(None, &[]).unwrap();
    assert_eq!(d.degree(&s.r), Some(1));
    let a = SubalgebraPresentation::new(&r, vec![p(&r, F), p(&r, &g25())]).unwrap();
    let s = d.find_local_slice(Some(&a), &[]).unwrap();
    assert_eq!(s.r, p(&r, &r25()));
    assert_eq!(s.f, p(&r, &format!("-{F}*{}", g25())));

    let zero = Derivation::new(&r, vec![Polynomial::zero(&r); 3]).unwrap();
    assert!(matches!(
        zero.find_local_slice(None, &[]),
        Err(Error::NoLocalSlice)
    ));
}

#[test]
fn dixmier() {
    let r = Ring::new(&["x", "y"]);
    let d = Derivation::new(&r, vec![Polynomial::zero(&r), Polynomial::one(&r)]).unwrap();
    let y = p(&r, "y");
    assert!(d.dixmier_map(&y, &y).unwrap().is_zero());
    assert_eq!(d.dixmier_map(&y, &p(&r, "x")).unwrap(), p(&r, "x"));
    let a = p(&r, "x*y + y^3");
    let b = p(&r, "x^2 - y");
    let pa = d.dixmier_map(&y, &a).unwrap();
    let pb = d.dixmier_map(&y, &b).unwrap();
    assert_eq!(d.dixmier_map(&y, &(&a * &b)).unwrap(), &pa * &pb);
    assert!(matches!(
        d.dixmier_map(&p(&r, "x"), &a),
        Err(Error::NotASlice { .. })
    ));
}

#[test]
fn kernel_12() {
    let r = Ring::new(&["x", "y", "u"]);
    let mut d = Derivation::new(&r, vec![Polynomial::zero(&r), p(&r, "x"), p(&r, "2*y")]).unwrap();
    d.verify_locally_nilpotent(64).unwrap();
    let k = kernel_generators(&d, 16).unwrap();
    assert!(k.certified);
    let expect = SubalgebraPresentation::new(&r, vec![p(&r, "x"), p(&r, "x*u - y^2")]).unwrap();
    assert!(k.algebra.algebra_equal(&expect));
}

#[test]
fn kernel_dim3() {
    let r = Ring::new(&["x", "y", "z"]);
    let q = "(x*z + y^2)";
    let mut d = Derivation::new(
        &r,
        vec![
            Polynomial::zero(&r),
            p(&r, &format!("2*x*{q}")),
            p(&r, &format!("-(1 + 4*y*{q})")),
        ],
    )
    .unwrap();
    d.verify_locally_nilpotent(64).unwrap();
    let k = kernel_generators(&d, 16).unwrap();
    assert!(k.certified);
    let expect =
        SubalgebraPresentation::new(&r, vec![p(&r, "x"), p(&r, &format!("y + {q}^2"))]).unwrap();
    assert!(k.algebra.algebra_equal(&expect));
}

#[test]
fn kernel_dim4() {
    let r = Ring::new(&["x1", "x2", "y1", "y2"]);
    let mut d = Derivation::new(
        &r,
        vec![
            Polynomial::zero(&r),
            Polynomial::zero(&r),
            p(&r, "x1"),
            p(&r, "x2"),
        ],
    )
    .unwrap();
    d.verify_locally_nilpotent(64).unwrap();
    let k = kernel_generators(&d, 16).unwrap();
    assert!(k.certified);
    let expect =
        SubalgebraPresentation::new(&r, vec![p(&r, "x1"), p(&r, "x2"), p(&r, "x1*y2 - x2*y1")])
            .unwrap();
    assert!(k.algebra.algebra_equal(&expect));
}

#[test]
fn kernel_25_certificate() {
    let d = d25();
    let r = d.ring().clone();
    let a = Arc::new(SubalgebraPresentation::new(&r, vec![p(&r, F), p(&r, &g25())]).unwrap());
    let s = d.find_local_slice(Some(&a), &[]).unwrap();
    let c = certify_kernel(&d, &a, &s, false).unwrap();
    assert!(c.annihilated && c.saturated);
}

#[test]
fn fixed_points() {
    let r = Ring::new(&["x", "y", "z", "u"]);
    let f = "(2*x*z - y^2)";
    let d = Derivation::new(
        &r,
        vec![
            Polynomial::zero(&r),
            p(&r, "x"),
            p(&r, "y"),
            p(&r, &format!("{f} + 1")),
        ],
    )
    .unwrap();
    assert!(d.fixed_point_ideal().is_unit());

    let r2 = Ring::new(&["x", "y"]);
    let d2 = Derivation::new(&r2, vec![Polynomial::zero(&r2), p(&r2, "x")]).unwrap();
    let fx = d2.fixed_point_ideal();
    assert!(fx.equals(&Ideal::new(&r2, vec![p(&r2, "x")]).unwrap()));
    let zero = Derivation::new(&r2, vec![Polynomial::zero(&r2); 2]).unwrap();
    assert!(zero.fixed_point_ideal().generators().is_empty());
}

#[test]
fn quotient_well_definedness() {
    let r = Ring::new(&["x", "y", "z", "t"]);
    let q = QuotientContext::new(&r, vec![p(&r, "x + x^2*y + z^2 + t^3")]).unwrap();
    let d = Derivation::on_quotient(
        &q,
        vec![
            Polynomial::zero(&r),
            p(&r, "-2*z"),
            p(&r, "x^2"),
            Polynomial::zero(&r),
        ],
    );
    assert!(d.is_ok());
    let bad = Derivation::on_quotient(
        &q,
        vec![
            Polynomial::zero(&r),
            Polynomial::zero(&r),
            p(&r, "1"),
            Polynomial::zero(&r),
        ],
    );
    assert!(matches!(bad, Err(Error::IllDefined { .. })));
}

#[test]
fn plinth_dim4_and_membership() {
    let r = Ring::new(&["x1", "x2", "y1", "y2"]);
    let d = Derivation::new(
        &r,
        vec![
            Polynomial::zero(&r),
            Polynomial::zero(&r),
            p(&r, "x1"),
            p(&r, "x2"),
        ],
    )
    .unwrap();
    let a = Arc::new(
        SubalgebraPresentation::new(&r, vec![p(&r, "x1"), p(&r, "x2"), p(&r, "x1*y2 - x2*y1")])
            .unwrap(),
    );
    let f1 = SubmoduleOverA::new(
        a.clone(),
        vec![Polynomial::one(&r), p(&r, "y1"), p(&r, "y2")],
    );
    let pl = plinth_ideal(&d, &f1);
    assert_eq!(pl.len(), 2);
    assert!(ideal_membership_in_a(&p(&r, "x1"), &pl, &a).unwrap());
    assert!(ideal_membership_in_a(&p(&r, "x2"), &pl, &a).unwrap());
    assert!(!ideal_membership_in_a(&Polynomial::one(&r), &pl, &a).unwrap());
    assert!(ideal_membership_in_a(&Polynomial::zero(&r), &pl, &a).unwrap());
    assert!(ideal_membership_in_a(&p(&r, "y1"), &pl, &a).is_err());
}
