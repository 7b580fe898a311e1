use std::collections::HashMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use lndfact::degmod::{visible_factors, DegreeFiltration};
use lndfact::factor::{
    canonical_factorization, canonical_factorization_of, compose_modifications, modification_ring,
    CanonicalFactorization, FactorOptions, DEFAULT_EXPONENT_CAP,
};
use lndfact::lnd::{
    certify_kernel, ideal_membership_in_a, kernel_generators, Derivation, DEFAULT_NILPOTENCY_CAP,
};
use lndfact::oracle::{truncated_kernel_power, truncated_membership};
use lndfact::poly::{PolyParser, Polynomial, Ring};
use lndfact::problem::Problem;
use lndfact::subalg::{SubalgebraPresentation, SubmoduleOverA};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;

const FIXTURES: &[(&str, &str)] = &[
    (
        "homogeneous_2_5",
        include_str!("../fixtures/homogeneous_2_5.lnd"),
    ),
    ("basic_1_2", include_str!("../fixtures/basic_1_2.lnd")),
    ("dim3", include_str!("../fixtures/dim3.lnd")),
    ("dim4", include_str!("../fixtures/dim4.lnd")),
    ("russell", include_str!("../fixtures/russell.lnd")),
    ("winkelmann", include_str!("../fixtures/winkelmann.lnd")),
    ("triangular", include_str!("../fixtures/triangular.lnd")),
    (
        "triangular_extended",
        include_str!("../fixtures/triangular_extended.lnd"),
    ),
];

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: std::result::Result<T, E>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

struct Fixture {
    problem: Problem,
    d: Derivation,
    a: Option<Arc<SubalgebraPresentation>>,
    defs: HashMap<String, Polynomial>,
}

impl Fixture {
    fn load(name: &str) -> std::result::Result<Fixture, String> {
        let src = FIXTURES
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, s)| *s)
            .ok_or_else(|| format!("unknown fixture {name}"))?;
        let problem = ok(Problem::parse(src))?;
        let mut d = ok(problem.derivation())?;
        ok(d.verify_locally_nilpotent(DEFAULT_NILPOTENCY_CAP))?;
        let a = ok(problem.kernel_presentation())?.map(Arc::new);
        let defs = problem.definitions.iter().cloned().collect();
        Ok(Fixture {
            problem,
            d,
            a,
            defs,
        })
    }

    fn ring(&self) -> &Ring {
        self.d.ring()
    }

    fn kernel(&self) -> std::result::Result<Arc<SubalgebraPresentation>, String> {
        self.a
            .clone()
            .ok_or_else(|| "fixture has no kernel".to_string())
    }

    fn p(&self, s: &str) -> Polynomial {
        PolyParser::with_definitions(self.ring(), &self.defs)
            .parse(s)
            .unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    fn ps(&self, list: &[&str]) -> Vec<Polynomial> {
        list.iter().map(|s| self.p(s)).collect()
    }

    fn algebra(&self, gens: &[&str]) -> std::result::Result<SubalgebraPresentation, String> {
        ok(SubalgebraPresentation::in_quotient(
            self.d.quotient(),
            self.ps(gens),
            None,
        ))
    }

    fn module(&self, gens: &[&str]) -> std::result::Result<SubmoduleOverA, String> {
        Ok(SubmoduleOverA::new(self.kernel()?, self.ps(gens)))
    }

    fn filtration(&self) -> std::result::Result<DegreeFiltration, String> {
        let a = self.kernel()?;
        let slice = ok(self.d.find_local_slice(Some(&a), &[]))?;
        ok(DegreeFiltration::new(
            self.d.clone(),
            a,
            slice,
            self.problem.options.degmod(),
        ))
    }

    fn factorization(&self, max: usize) -> std::result::Result<CanonicalFactorization, String> {
        ok(canonical_factorization(
            self.d.clone(),
            self.kernel()?,
            max,
            &FactorOptions::default(),
        ))
    }

    /// The kernel given in the fixture agrees with one computed from scratch.
    fn recomputed_kernel_agrees(&self) -> Check {
        let given = self.kernel()?;
        let computed = ok(kernel_generators(
            &self.d,
            self.problem.options.kernel_rounds,
        ))?;
        ensure!(computed.certified, "kernel computation not certified");
        ensure!(
            computed.algebra.algebra_equal(&given),
            "computed kernel differs from the given one"
        );
        let cert = ok(certify_kernel(&self.d, &given, &computed.slice, true))?;
        ensure!(
            cert.is_complete(),
            "kernel certificate incomplete: {cert:?}"
        );
        Ok(())
    }

    fn ideal_equal(&self, gens: &[Polynomial], expected: &[&str]) -> Check {
        let a = self.kernel()?;
        let exp = self.ps(expected);
        for h in &exp {
            ensure!(
                ok(ideal_membership_in_a(h, gens, &a))?,
                "{h} not in the computed ideal"
            );
        }
        for h in gens {
            ensure!(
                ok(ideal_membership_in_a(h, &exp, &a))?,
                "{h} not in the expected ideal"
            );
        }
        Ok(())
    }
}

fn same_module(m: &SubmoduleOverA, e: &SubmoduleOverA, what: &str) -> Check {
    ensure!(
        ok(m.module_equal(e))?,
        "{what} differs: got {:?}",
        m.generators()
    );
    Ok(())
}

fn criterion_1() -> Check {
    let fx = Fixture::load("homogeneous_2_5")?;
    fx.recomputed_kernel_agrees()?;
    let mut fil = fx.filtration()?;
    let cf = ok(canonical_factorization_of(
        &mut fil,
        16,
        DEFAULT_EXPONENT_CAP,
    ))?;
    ensure!(
        cf.resolution.jumps == vec![0, 1, 2, 5, 6, 10],
        "jumps {:?}",
        cf.resolution.jumps
    );
    ensure!(cf.index() == 5, "index {}", cf.index());
    ensure!(cf.is_certified(), "factorization not certified");

    let f10 = ok(fil.degree_module(10))?.clone();
    let expected = fx.module(&[
        "1", "R", "x", "x*R", "x^2", "S", "y", "x*S", "x*y", "x^2*S", "z",
    ])?;
    same_module(&f10.module, &expected, "F_10")?;
    let mut degrees = f10.degrees.clone();
    degrees.sort_unstable();
    ensure!(
        degrees == (0..=10).collect::<Vec<u32>>(),
        "F_10 degrees {degrees:?}"
    );

    let pl = ok(fil.plinth_ideal())?;
    fx.ideal_equal(&pl, &["F*G"])?;

    let gr = ok(fil.graded_ring_truncation(10))?;
    let expected: Vec<(Polynomial, usize)> = [
        ("F*G", 1),
        ("F^2*G", 2),
        ("F^4*G^3", 5),
        ("F^5*G^3", 6),
        ("F^8*G^5", 10),
    ]
    .iter()
    .map(|(s, n)| (fx.p(s).primitive(), *n))
    .collect();
    let got: Vec<(Polynomial, usize)> = gr
        .generators
        .iter()
        .map(|(a, n)| (a.primitive(), *n))
        .collect();
    ensure!(got == expected, "Gr_D truncation {got:?}");

    let triples = [
        ("G", ["G", "F^3 + R^2"]),
        ("F", ["F", "G - x^2*R"]),
        ("F", ["F", "R - x^3"]),
        ("F", ["F", "S - x^2*y"]),
    ];
    ensure!(cf.steps.len() == 4, "{} modification steps", cf.steps.len());
    for (k, (step, (f, center))) in cf.steps.iter().zip(&triples).enumerate() {
        ensure!(
            step.triple.divisor().primitive() == fx.p(f).primitive(),
            "step {k} divisor {}",
            step.triple.divisor()
        );
        ensure!(
            ok(step.triple.center_equals(&fx.ps(center)))?,
            "step {k} center {:?}",
            step.triple.center()
        );
        ensure!(step.equivariant == Some(true), "step {k} not equivariant");
        ensure!(
            step.extends == Some(true),
            "step {k} does not extend the action"
        );
    }

    let fixed: [&[&str]; 5] = [&["F*G"], &["F"], &["F", "R"], &["F", "x"], &["x", "y"]];
    for (k, elems) in fixed.iter().enumerate() {
        let level = &cf.levels[k + 1];
        ensure!(
            level.fixed_locus_is(&fx.ps(elems)) == Some(true),
            "fixed points of X_{}",
            k + 1
        );
    }

    let composite = ok(compose_modifications(
        &cf.steps[0].triple,
        &cf.steps[1].triple,
    ))?;
    ensure!(composite.commutes, "composition square does not commute");
    let direct = ok(modification_ring(&composite.triple))?;
    let b5 = ok(direct.localization.lift_algebra(&cf.levels[3].algebra))?;
    ensure!(
        direct.algebra.algebra_equal(&b5),
        "composite modification differs from B_5"
    );
    Ok(())
}

fn criterion_2() -> Check {
    let fx = Fixture::load("basic_1_2")?;
    fx.recomputed_kernel_agrees()?;
    let expected = fx.algebra(&["x", "x*u - y^2"])?;
    ensure!(
        fx.kernel()?.algebra_equal(&expected),
        "kernel differs from k[x, xu - y^2]"
    );
    let cf = fx.factorization(8)?;
    ensure!(cf.index() == 2, "index {}", cf.index());
    ensure!(cf.is_certified(), "factorization not certified");
    let step = cf.steps.first().ok_or("no modification step")?;
    ensure!(
        step.triple.divisor() == &fx.p("x"),
        "divisor {}",
        step.triple.divisor()
    );
    ensure!(
        ok(step.triple.center_equals(&fx.ps(&["x", "Z + y^2"])))?,
        "center {:?}",
        step.triple.center()
    );
    ensure!(step.equivariant == Some(true), "step not equivariant");
    ensure!(
        step.new_generators == vec![fx.p("u")],
        "new generators {:?}",
        step.new_generators
    );
    let b2 = &cf.levels[2];
    ensure!(b2.restricts(), "D does not restrict to B_2");
    ensure!(fx.d.apply(&fx.p("u")) == fx.p("2*y"), "D_2 u != 2y");
    Ok(())
}

fn criterion_3() -> Check {
    let fx = Fixture::load("dim3")?;
    fx.recomputed_kernel_agrees()?;
    let expected = fx.algebra(&["x", "P"])?;
    ensure!(
        fx.kernel()?.algebra_equal(&expected),
        "kernel differs from k[x, P]"
    );
    let mut fil = fx.filtration()?;
    let res = ok(fil.degree_resolution(8))?;
    ensure!(res.complete, "resolution incomplete");
    ensure!(res.jumps == vec![0, 1, 4], "jumps {:?}", res.jumps);
    for n in 0..=6usize {
        let mut gens = Vec::new();
        for i in 0..=3usize {
            for j in 0..=n / 4 {
                if i + 4 * j <= n {
                    gens.push(format!("Q^{i}*z^{j}"));
                }
            }
        }
        let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
        let m = ok(fil.degree_module(n))?.module.clone();
        same_module(&m, &fx.module(&refs)?, &format!("F_{n}"))?;
    }
    Ok(())
}

fn criterion_4() -> Check {
    let fx = Fixture::load("dim4")?;
    let mut fil = fx.filtration()?;
    let f1 = ok(fil.degree_module(1))?.clone();
    same_module(&f1.module, &fx.module(&["1", "y1", "y2"])?, "F_1")?;
    let pl = ok(fil.plinth_ideal())?;
    fx.ideal_equal(&pl, &["x1", "x2"])?;
    ensure!(!f1.d_basis_check(), "F_1 generators form a D-basis");
    let res = ok(fil.degree_resolution(8))?;
    ensure!(
        res.complete && res.index() == 1,
        "index {} complete {}",
        res.index(),
        res.complete
    );
    Ok(())
}

fn criterion_5() -> Check {
    let fx = Fixture::load("russell")?;
    let mut fil = fx.filtration()?;
    let pl = ok(fil.plinth_ideal())?;
    fx.ideal_equal(&pl, &["x^2"])?;
    let cf = fx.factorization(8)?;
    let b1 = &cf.levels.get(1).ok_or("no first level")?.algebra;
    ensure!(
        b1.algebra_equal(&fx.algebra(&["x", "z", "t"])?),
        "B_1 differs from k[x,z,t]"
    );
    let step = cf.steps.first().ok_or("no modification step")?;
    ensure!(
        step.triple.divisor() == &fx.p("x^2"),
        "divisor {}",
        step.triple.divisor()
    );
    ensure!(
        ok(step.triple.center_equals(&fx.ps(&["x^2", "x + z^2 + t^3"])))?,
        "center {:?}",
        step.triple.center()
    );
    ensure!(step.equivariant == Some(true), "step not equivariant");
    ensure!(cf.is_certified(), "factorization not certified");
    Ok(())
}

fn criterion_6() -> Check {
    let fx = Fixture::load("winkelmann")?;
    ensure!(
        fx.d.fixed_point_ideal().is_unit(),
        "fixed-point ideal is proper"
    );
    let mut fil = fx.filtration()?;
    let f1 = ok(fil.degree_module(1))?.clone();
    same_module(&f1.module, &fx.module(&["1", "y", "u", "T"])?, "F_1")?;
    let a = fx.kernel()?;
    let syzygies: [[&str; 4]; 3] = [
        ["-F*(F + 1)", "G", "0", "-x"],
        ["-G", "-(F + 1)", "x", "0"],
        ["-H", "0", "G", "-(F + 1)"],
    ];
    for row in &syzygies {
        let coeffs = fx.ps(row);
        ensure!(
            coeffs.iter().all(|c| a.contains(c)),
            "syzygy coefficients outside A"
        );
        let mut acc = Polynomial::zero(fx.ring());
        for (c, g) in coeffs.iter().zip(fx.ps(&["1", "y", "u", "T"])) {
            acc = &acc + &(c * &g);
        }
        ensure!(acc.is_zero(), "relation {row:?} fails");
    }
    let pl = ok(fil.plinth_ideal())?;
    fx.ideal_equal(&pl, &["x", "F + 1", "G"])?;
    let cf = fx.factorization(8)?;
    ensure!(cf.index() == 2, "index {}", cf.index());
    Ok(())
}

fn criterion_7() -> Check {
    let fx = Fixture::load("triangular")?;
    let mut fil = fx.filtration()?;
    let f1 = ok(fil.degree_module(1))?.clone();
    same_module(&f1.module, &fx.module(&["1", "z", "p", "q"])?, "F_1")?;
    let a = fx.kernel()?;
    for (rel, coeffs) in [
        ("x*z + y*p - v", ["-v", "x", "y", "0"]),
        ("v*z - x*p + y*q", ["0", "v", "-x", "y"]),
    ] {
        ensure!(fx.p(rel).is_zero(), "{rel} is not an identity");
        let cs = fx.ps(&coeffs);
        ensure!(
            cs.iter().all(|c| a.contains(c)),
            "coefficients of {rel} outside A"
        );
    }
    let pl = ok(fil.plinth_ideal())?;
    fx.ideal_equal(&pl, &["y^2", "x*y", "x^2 + y*v"])?;
    ensure!(
        ok(ideal_membership_in_a(&fx.p("f^3"), &pl, &a))?,
        "f^3 not in the plinth ideal"
    );
    ensure!(
        !ok(ideal_membership_in_a(&fx.p("f^2"), &pl, &a))?,
        "f^2 in the plinth ideal"
    );
    ensure!(fx.d.apply(&fx.p("r")) == fx.p("f^3"), "delta r != f^3");

    let ext = Fixture::load("triangular_extended")?;
    let s = ext.p("s");
    ensure!(ext.d.apply(&s).is_one(), "Delta s != 1");
    let expected = ext.ps(&[
        "z - y^2*s",
        "u + (x + 2*y*z)*s - y^3*s^2",
        "f^3*t - (1 + f + f^2)*r",
    ]);
    for (var, e) in ["z", "u", "t"].iter().zip(&expected) {
        let image = ok(ext.d.dixmier_map(&s, &ext.p(var)))?;
        ensure!(&image == e, "pi_s({var}) = {image}");
        ensure!(ext.d.apply(&image).is_zero(), "pi_s({var}) not annihilated");
    }
    Ok(())
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &Ring, terms: usize, degree: u32) -> Polynomial {
    let mut acc = Polynomial::zero(ring);
    for _ in 0..terms {
        let mut t = Polynomial::from_int(ring, rng.gen_range(-4..=4));
        for _ in 0..rng.gen_range(0..=degree) {
            t = &t * &Polynomial::var(ring, rng.gen_range(0..ring.nvars()));
        }
        acc = &acc + &t;
    }
    acc
}

fn random_invariant(rng: &mut ChaCha8Rng, ring: &Ring, gens: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::from_int(ring, rng.gen_range(1..=3));
    for _ in 0..2 {
        let mut t = Polynomial::from_int(ring, rng.gen_range(-3..=3));
        for _ in 0..rng.gen_range(1..=2) {
            t = &t * &gens[rng.gen_range(0..gens.len())];
        }
        acc = &acc + &t;
    }
    acc
}

fn derivation_laws(name: &str, fx: &Fixture, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = fx.d.quotient();
    let ring = fx.ring().clone();
    let invariants: Vec<Polynomial> = match &fx.a {
        Some(a) => a.generators().to_vec(),
        None => fx.ps(&["x", "y", "v"]),
    };
    for _ in 0..12 {
        let pick = |rng: &mut ChaCha8Rng| {
            if rng.gen_bool(0.3) {
                random_invariant(rng, &ring, &invariants)
            } else {
                random_poly(rng, &ring, 3, 2)
            }
        };
        let a = pick(&mut rng);
        let b = pick(&mut rng);
        if q.is_zero(&a) || q.is_zero(&b) {
            continue;
        }
        let ab = q.mul(&a, &b);
        let lhs = fx.d.apply(&ab);
        let rhs = &q.mul(&fx.d.apply(&a), &b) + &q.mul(&a, &fx.d.apply(&b));
        ensure!(q.equal(&lhs, &rhs), "{name}: Leibniz fails for {a}, {b}");
        let (da, db, dab) = (fx.d.degree(&a), fx.d.degree(&b), fx.d.degree(&ab));
        ensure!(
            dab == Some(da.unwrap_or(0) + db.unwrap_or(0)),
            "{name}: degree not additive for {a}, {b}"
        );
        let closed = (dab == Some(0)) == (da == Some(0) && db == Some(0));
        ensure!(closed, "{name}: kernel not factorially closed at {a}, {b}");
    }
    Ok(())
}

fn criterion_8() -> Check {
    let mut seed = 1u64;
    for (name, _) in FIXTURES {
        let fx = Fixture::load(name)?;
        ensure!(
            fx.d.quotient().basis().verify(),
            "{name}: relation basis fails S-pair check"
        );
        derivation_laws(name, &fx, seed)?;
        seed += 1;
        let Some(a) = fx.a.clone() else { continue };
        ensure!(a.verify_basis(), "{name}: kernel basis fails S-pair check");
        let mut fil = fx.filtration()?;
        let factors = visible_factors(&a, &fil.slice().f);
        for n in 0..=4usize {
            let m = ok(fil.degree_module(n))?.clone();
            ensure!(m.certified, "{name}: F_{n} not certified");
            ensure!(
                m.module.verify_basis(),
                "{name}: F_{n} basis fails S-pair check"
            );
            for f in &factors {
                let again = ok(m.module.saturation_step(f))?;
                same_module(&again, &m.module, &format!("{name}: re-saturated F_{n}"))?;
            }
            let oracle = truncated_kernel_power(&fx.d, n, 10);
            for h in &oracle {
                ensure!(
                    m.module.contains(h),
                    "{name}: oracle element {h} outside F_{n}"
                );
            }
            for g in m
                .generators()
                .iter()
                .filter(|g| g.total_degree().unwrap_or(0) <= 10)
            {
                ensure!(
                    truncated_membership(fx.d.quotient(), g, &oracle, &[], 10),
                    "{name}: generator {g} of F_{n} outside the oracle span"
                );
            }
        }
        let res = ok(fil.degree_resolution(16))?;
        for (n, alg) in &res.algebras {
            ensure!(alg.verify_basis(), "{name}: B_{n} basis fails S-pair check");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Check); 8] = [
        ("(2,5) end-to-end", 600, criterion_1),
        ("(1,2) example", 30, criterion_2),
        ("dim-3 example", 120, criterion_3),
        ("dim-4 example", 60, criterion_4),
        ("Russell cubic", 120, criterion_5),
        ("Winkelmann example", 300, criterion_6),
        ("triangular derivation", 300, criterion_7),
        ("property suites", 120, criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed > Duration::from_secs(*budget) {
                Err(format!("exceeded budget of {budget} s"))
            } else {
                Ok(())
            }
        });
        match outcome {
            Ok(()) => println!(
                "criterion {} {name}: PASS ({:.1} s)",
                k + 1,
                elapsed.as_secs_f64()
            ),
            Err(e) => {
                failed += 1;
                println!(
                    "criterion {} {name}: FAIL ({:.1} s): {e}",
                    k + 1,
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
