//! Affine modifications `B[f⁻¹I]`, equivariance of centers, and the canonical
//! factorization of the quotient morphism along the degree resolution.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::degmod::{visible_factors, DegmodOptions, DegreeFiltration, DegreeResolution};
use crate::groebner::{Ideal, QuotientContext};
use crate::lnd::{ideal_membership_in_a, minimize_ideal, Derivation, LocalSlice};
use crate::poly::{Polynomial, Ring};
use crate::subalg::{SubalgebraPresentation, SubmoduleOverA};
use crate::{Error, Result};

/// Default cap on `m` in `f^m·w ∈ B''`.
pub const DEFAULT_EXPONENT_CAP: u32 = 16;

/// `(B, I, f)` with `f ∈ I ⊂ B`, `f ≠ 0`.
#[derive(Clone, Debug)]
pub struct AffineTriple {
    base: Arc<SubalgebraPresentation>,
    center: Vec<Polynomial>,
    divisor: Polynomial,
}

impl AffineTriple {
    pub fn new(
        base: Arc<SubalgebraPresentation>,
        center: Vec<Polynomial>,
        divisor: Polynomial,
    ) -> Result<Self> {
        let q = base.quotient();
        let divisor = q.normal_form(&divisor);
        if divisor.is_zero() {
            return Err(Error::InvalidTriple("divisor is zero".into()));
        }
        let center: Vec<Polynomial> = center
            .iter()
            .map(|c| q.normal_form(c))
            .filter(|c| !c.is_zero())
            .collect();
        if center.is_empty() {
            return Err(Error::InvalidTriple("center is the zero ideal".into()));
        }
        for c in center.iter().chain(std::iter::once(&divisor)) {
            if !base.contains(c) {
                return Err(Error::InvalidTriple(format!(
                    "{c} does not lie in the base algebra"
                )));
            }
        }
        if !ideal_membership_in_a(&divisor, &center, &base)? {
            return Err(Error::InvalidTriple(format!(
                "divisor {divisor} does not lie in the center"
            )));
        }
        Ok(AffineTriple {
            base,
            center,
            divisor,
        })
    }

    pub fn base(&self) -> &Arc<SubalgebraPresentation> {
        &self.base
    }

    pub fn center(&self) -> &[Polynomial] {
        &self.center
    }

    pub fn divisor(&self) -> &Polynomial {
        &self.divisor
    }

    /// Whether `(gens)` and the center generate the same ideal of the base.
    pub fn center_equals(&self, gens: &[Polynomial]) -> Result<bool> {
        for g in gens {
            if !ideal_membership_in_a(g, &self.center, &self.base)? {
                return Ok(false);
            }
        }
        for c in &self.center {
            if !ideal_membership_in_a(c, gens, &self.base)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `B_h = B[T]/(hT − 1)`, or `B` itself when `h` is a unit.
#[derive(Clone, Debug)]
pub struct Localization {
    base: QuotientContext,
    quotient: QuotientContext,
    element: Polynomial,
}

const INVERSE_NAME: &str = "_inv";

impl Localization {
    pub fn trivial(base: &QuotientContext) -> Self {
        Localization {
            base: base.clone(),
            quotient: base.clone(),
            element: Polynomial::one(base.ring()),
        }
    }

    pub fn new(base: &QuotientContext, h: &Polynomial) -> Result<Self> {
        let h = base.normal_form(h);
        if h.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if h.is_constant() {
            return Ok(Self::trivial(base));
        }
        let ring = base.ring().extend(&[INVERSE_NAME]);
        let t = Polynomial::var(&ring, base.ring().nvars());
        let mut rels: Vec<Polynomial> = base
            .relations()
            .generators()
            .iter()
            .map(|g| g.extend_to(&ring))
            .collect();
        rels.push(&(&h.extend_to(&ring) * &t) - &Polynomial::one(&ring));
        Ok(Localization {
            base: base.clone(),
            quotient: QuotientContext::new(&ring, rels)?,
            element: h,
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.element.is_constant()
    }

    pub fn element(&self) -> &Polynomial {
        &self.element
    }

    pub fn quotient(&self) -> &QuotientContext {
        &self.quotient
    }

    pub fn ring(&self) -> &Ring {
        self.quotient.ring()
    }

    /// Image of an element of `B` (or of `B_h`) in `B_h`.
    pub fn lift(&self, p: &Polynomial) -> Polynomial {
        if p.ring().same(self.ring()) {
            self.quotient.normal_form(p)
        } else {
            self.quotient.normal_form(&p.extend_to(self.ring()))
        }
    }

    /// `num/den` in `B_h` for `den ∈ B`, when `den` divides a power of `h`.
    pub fn fraction(
        &self,
        num: &Polynomial,
        den: &Polynomial,
        cap: u32,
    ) -> Result<Option<Polynomial>> {
        if !num.ring().same(self.ring()) || self.is_trivial() {
            let num_b = if num.ring().same(self.base.ring()) {
                Some(num.clone())
            } else {
                None
            };
            if let Some(nb) = num_b {
                if let Some(q) = self.base.divide(&nb, den)? {
                    return Ok(Some(self.lift(&q)));
                }
            }
        }
        if self.is_trivial() {
            return Ok(None);
        }
        let n = self.base.ring().nvars();
        let t = Polynomial::var(self.ring(), n);
        let divider = self.base.divider(den)?;
        let mut hk = Polynomial::one(self.base.ring());
        for k in 0..=cap {
            if let Some(c) = divider.divide(&hk)? {
                let v = &(&self.lift(num) * &self.lift(&c)) * &t.pow(k);
                return Ok(Some(self.quotient.normal_form(&v)));
            }
            hk = self.base.mul(&hk, &self.element);
        }
        Ok(None)
    }

    /// A subalgebra of `B` (or `B_h`) as a subalgebra of `B_h`.
    pub fn lift_algebra(&self, a: &SubalgebraPresentation) -> Result<SubalgebraPresentation> {
        if a.base_ring().same(self.ring()) {
            return Ok(a.clone());
        }
        let gens = a.generators().iter().map(|g| self.lift(g)).collect();
        SubalgebraPresentation::in_quotient(&self.quotient, gens, Some(a.names().to_vec()))
    }
}

/// `B' = B[b_1/f, …, b_s/f]` realized inside a localization of the ambient ring.
#[derive(Clone, Debug)]
pub struct ModifiedRing {
    pub localization: Localization,
    pub algebra: SubalgebraPresentation,
    /// `b_j/f` for the center generators `b_j`.
    pub adjoined: Vec<Polynomial>,
}

impl ModifiedRing {
    /// Minimal generators of `I·B'`.
    pub fn exceptional_ideal(&self, t: &AffineTriple) -> Vec<Polynomial> {
        let gens = t
            .center()
            .iter()
            .map(|c| self.localization.lift(c))
            .collect();
        minimize_ideal(&Arc::new(self.algebra.clone()), gens)
    }
}

fn adjoined_names(base: &SubalgebraPresentation, k: usize) -> Vec<String> {
    let mut names = base.names().to_vec();
    let mut j = 1;
    while names.len() < base.len() + k {
        let cand = format!("W{j}");
        if !names.contains(&cand) {
            names.push(cand);
        }
        j += 1;
    }
    names
}

/// `B[f⁻¹I]` inside `loc`, which must invert the divisor.
pub fn modification_ring_in(t: &AffineTriple, loc: &Localization) -> Result<ModifiedRing> {
    let f = t.divisor();
    let f_base = if f.ring().same(loc.ring()) {
        let back: Vec<Option<usize>> = (0..f.ring().nvars())
            .map(|i| {
                if i < loc.base.ring().nvars() {
                    Some(i)
                } else {
                    None
                }
            })
            .collect();
        if !f.is_free_of(loc.base.ring().nvars()..f.ring().nvars()) {
            return Err(Error::InvalidTriple(format!(
                "divisor {f} involves the inverse"
            )));
        }
        f.restrict(loc.base.ring(), &back)
    } else {
        f.clone()
    };
    let mut adjoined = Vec::new();
    for b in t.center() {
        match loc.fraction(b, &f_base, DEFAULT_EXPONENT_CAP)? {
            Some(w) => adjoined.push(w),
            None => {
                return Err(Error::InvalidTriple(format!(
                    "the localization does not invert {f}"
                )))
            }
        }
    }
    let base = loc.lift_algebra(t.base())?;
    let mut gens = base.generators().to_vec();
    gens.extend(adjoined.iter().cloned());
    let names = adjoined_names(&base, adjoined.len());
    let algebra = SubalgebraPresentation::in_quotient(loc.quotient(), gens, Some(names))?;
    Ok(ModifiedRing {
        localization: loc.clone(),
        algebra,
        adjoined,
    })
}

/// `B[f⁻¹I]`, inside the ambient ring when `f` divides every center
/// generator there and inside the localization at `f` otherwise.
pub fn modification_ring(t: &AffineTriple) -> Result<ModifiedRing> {
    let q = t.base().quotient();
    let divider = q.divider(t.divisor())?;
    let mut exact = Vec::new();
    for b in t.center() {
        match divider.divide(b)? {
            Some(w) => exact.push(w),
            None => break,
        }
    }
    let loc = if exact.len() == t.center().len() {
        Localization::trivial(q)
    } else {
        Localization::new(q, t.divisor())?
    };
    modification_ring_in(t, &loc)
}

/// `D(I) ⊂ I` for the center of `t`; requires `Df = 0`.
pub fn equivariance_check(d: &Derivation, t: &AffineTriple) -> Result<bool> {
    if !d.apply(t.divisor()).is_zero() {
        return Err(Error::Precondition(format!(
            "divisor {} is not annihilated by the derivation",
            t.divisor()
        )));
    }
    for c in t.center() {
        let dc = d.apply(c);
        if !t.base().contains(&dc) {
            return Ok(false);
        }
        if !ideal_membership_in_a(&dc, t.center(), t.base())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One step `B'' ⊂ B' = B''[f⁻¹I]` of a factorization.
#[derive(Clone, Debug)]
pub struct ModificationStep {
    pub triple: AffineTriple,
    /// Generators of `B'` not in `B''`.
    pub new_generators: Vec<Polynomial>,
    /// Pool element `g` with `f = g^m`.
    pub pool_element: Polynomial,
    /// Least `m_j` with `g^{m_j}·w_j ∈ B''`, per new generator.
    pub exponents: Vec<u32>,
    /// `DI ⊂ I`, when a derivation was supplied.
    pub equivariant: Option<bool>,
    /// `D` maps the new generators into `B'`.
    pub extends: Option<bool>,
    /// Minimal generators of `I·B'`.
    pub exceptional: Vec<Polynomial>,
    /// A single new generator.
    pub principal: bool,
}

impl ModificationStep {
    pub fn check_equivariance(
        &mut self,
        d: &Derivation,
        upper: &SubalgebraPresentation,
    ) -> Result<()> {
        let eq = equivariance_check(d, &self.triple)?;
        self.equivariant = Some(eq);
        self.extends = Some(
            self.new_generators
                .iter()
                .all(|w| upper.contains(&d.apply(w))),
        );
        Ok(())
    }
}

/// Present `B'` as a modification of `B''` with divisor a power of the first
/// usable element of `pool`.
pub fn find_modification(
    lower: &Arc<SubalgebraPresentation>,
    upper: &SubalgebraPresentation,
    pool: &[Polynomial],
    cap: u32,
) -> Result<ModificationStep> {
    if !upper.contains_all(lower.generators()) {
        return Err(Error::Precondition(
            "lower algebra is not contained in the upper one".into(),
        ));
    }
    let q = lower.quotient();
    let fresh: Vec<Polynomial> = upper
        .generators()
        .iter()
        .filter(|g| !lower.contains(g))
        .cloned()
        .collect();
    let one = Polynomial::one(lower.base_ring());
    if fresh.is_empty() {
        let triple = AffineTriple::new(lower.clone(), vec![one.clone()], one.clone())?;
        return Ok(ModificationStep {
            triple,
            new_generators: Vec::new(),
            pool_element: one.clone(),
            exponents: Vec::new(),
            equivariant: None,
            extends: None,
            exceptional: vec![one],
            principal: true,
        });
    }
    'pool: for g in pool {
        if g.is_constant() || !lower.contains(g) {
            continue;
        }
        let mut exps = Vec::with_capacity(fresh.len());
        for w in &fresh {
            let mut acc = w.clone();
            let mut found = None;
            for m in 1..=cap {
                acc = q.mul(&acc, g);
                if lower.contains(&acc) {
                    found = Some(m);
                    break;
                }
            }
            match found {
                Some(m) => exps.push(m),
                None => continue 'pool,
            }
        }
        let top = *exps.iter().max().unwrap();
        let f = q.normal_form(&g.pow(top));
        let mut center = vec![f.clone()];
        center.extend(fresh.iter().map(|w| q.mul(&f, w)));
        let triple = AffineTriple::new(lower.clone(), center, f)?;
        let modified = modification_ring(&triple)?;
        if !modified.localization.is_trivial() || !modified.algebra.algebra_equal(upper) {
            continue;
        }
        let exceptional = modified.exceptional_ideal(&triple);
        return Ok(ModificationStep {
            triple,
            principal: fresh.len() == 1,
            new_generators: fresh,
            pool_element: g.clone(),
            exponents: exps,
            equivariant: None,
            extends: None,
            exceptional,
        });
    }
    let pool_s: Vec<String> = pool.iter().map(|p| p.to_string()).collect();
    let fresh_s: Vec<String> = fresh.iter().map(|p| p.to_string()).collect();
    Err(Error::ModificationNotFound(format!(
        "no element of [{}] clears the denominators of [{}] with exponent at most {cap}",
        pool_s.join(", "),
        fresh_s.join(", ")
    )))
}

/// A composite triple and whether both iterated paths agree with it.
#[derive(Clone, Debug)]
pub struct Composite {
    pub triple: AffineTriple,
    pub commutes: bool,
}

/// Compose `t1 = (B, I, f)` with `t2 = (B, J, g)` into `(B, IJ, fg)`, or with
/// `t2 = (B[f⁻¹I], J, g)` into a triple over `B` with divisor `f^m g`.
pub fn compose_modifications(t1: &AffineTriple, t2: &AffineTriple) -> Result<Composite> {
    let (f, g) = (t1.divisor(), t2.divisor());
    if t1.base().algebra_equal(t2.base()) {
        let q = t1.base().quotient();
        let mut center = Vec::new();
        for i in t1.center() {
            for j in t2.center() {
                center.push(q.mul(i, j));
            }
        }
        let triple = AffineTriple::new(t1.base().clone(), center, q.mul(f, g))?;
        let loc = Localization::new(q, triple.divisor())?;
        let direct = modification_ring_in(&triple, &loc)?.algebra;
        let b1 = Arc::new(modification_ring_in(t1, &loc)?.algebra);
        let b2 = Arc::new(modification_ring_in(t2, &loc)?.algebra);
        let lift = |c: &[Polynomial]| c.iter().map(|x| loc.lift(x)).collect::<Vec<_>>();
        let path1 = AffineTriple::new(b1, lift(t2.center()), loc.lift(g))?;
        let path2 = AffineTriple::new(b2, lift(t1.center()), loc.lift(f))?;
        let p1 = modification_ring_in(&path1, &loc)?.algebra;
        let p2 = modification_ring_in(&path2, &loc)?.algebra;
        let commutes = direct.algebra_equal(&p1) && direct.algebra_equal(&p2);
        return Ok(Composite { triple, commutes });
    }
    let m1 = modification_ring(t1)?;
    if !m1.localization.is_trivial() || !m1.algebra.algebra_equal(t2.base()) {
        return Err(Error::InvalidTriple(
            "the second base is neither the first base nor its modification".into(),
        ));
    }
    let base = t1.base();
    let q = base.quotient();
    if !base.contains(g) {
        return Err(Error::InvalidTriple(format!(
            "{g} does not lie in the first base"
        )));
    }
    let mut m = 1u32;
    let mut fm = f.clone();
    loop {
        if t2.center().iter().all(|j| base.contains(&q.mul(&fm, j))) {
            break;
        }
        m += 1;
        if m > DEFAULT_EXPONENT_CAP {
            return Err(Error::ModificationNotFound(format!(
                "no power of {f} up to {DEFAULT_EXPONENT_CAP} pulls the second center back"
            )));
        }
        fm = q.mul(&fm, f);
    }
    let fm1 = q.normal_form(&f.pow(m - 1));
    let fmg = q.mul(&fm, g);
    let mut center = vec![fmg.clone()];
    center.extend(t1.center().iter().map(|i| q.mul(&q.mul(&fm1, g), i)));
    center.extend(t2.center().iter().map(|j| q.mul(&fm, j)));
    let triple = AffineTriple::new(base.clone(), center, fmg)?;
    let direct = modification_ring(&triple)?;
    let iterated = modification_ring(t2)?;
    let commutes = direct.localization.is_trivial() == iterated.localization.is_trivial()
        && direct.algebra.algebra_equal(&iterated.algebra);
    Ok(Composite { triple, commutes })
}

/// One level `B_{n_i}` of the degree resolution.
#[derive(Clone, Debug)]
pub struct Level {
    pub n: usize,
    pub algebra: SubalgebraPresentation,
    /// Relations among the generators, in `k[Y]`.
    pub relations: Vec<Polynomial>,
    /// `D` restricted to the generators, in `k[Y]`; `None` where the image leaves the level.
    pub restricted: Vec<Option<Polynomial>>,
    /// Ideal of `k[Y]` cutting out the fixed points of the restricted action.
    pub fixed_points: Ideal,
}

impl Level {
    pub fn restricts(&self) -> bool {
        self.restricted.iter().all(Option::is_some)
    }

    /// The fixed-point set is the zero set of `elems` (elements of the level).
    pub fn fixed_locus_is(&self, elems: &[Polynomial]) -> Option<bool> {
        let mut gens: Vec<Polynomial> = self.relations.clone();
        for e in elems {
            gens.push(self.algebra.membership(e)?);
        }
        let other = Ideal::new(self.algebra.algebra_ring(), gens).expect("same ring");
        Some(self.fixed_points.same_radical(&other))
    }
}

/// `f^m·x = Σ c_i r^i` with `Dc_i = 0`, exhibiting `x ∈ A[r][1/f] ⊂ B_1[1/f]`.
#[derive(Clone, Debug)]
pub struct BirationalityCertificate {
    pub variable: usize,
    pub exponent: u32,
    pub coefficients: Vec<Polynomial>,
    pub verified: bool,
}

/// Data of `X_1 → X_0`.
#[derive(Clone, Debug)]
pub struct FirstLevel {
    pub slice: LocalSlice,
    /// `F_1 = A ⊕ A·r`, so `B_1 = A[r]`.
    pub cylinder: bool,
}

#[derive(Clone, Debug)]
pub struct CanonicalFactorization {
    pub resolution: DegreeResolution,
    pub levels: Vec<Level>,
    pub first_level: Option<FirstLevel>,
    /// `steps[k]` presents `levels[k + 2]` as a modification of `levels[k + 1]`.
    pub steps: Vec<ModificationStep>,
    pub birationality: Vec<BirationalityCertificate>,
    pub pool: Vec<Polynomial>,
}

impl CanonicalFactorization {
    pub fn index(&self) -> usize {
        self.resolution.index()
    }

    /// Every step is equivariant and every certificate verified.
    pub fn is_certified(&self) -> bool {
        self.resolution.complete
            && self.levels.iter().all(Level::restricts)
            && self
                .steps
                .iter()
                .all(|s| s.equivariant == Some(true) && s.extends == Some(true))
            && self.birationality.iter().all(|c| c.verified)
    }
}

#[derive(Clone, Debug)]
pub struct FactorOptions {
    pub degmod: DegmodOptions,
    pub exponent_cap: u32,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions {
            degmod: DegmodOptions::default(),
            exponent_cap: DEFAULT_EXPONENT_CAP,
        }
    }
}

fn level_of(d: &Derivation, n: usize, algebra: SubalgebraPresentation) -> Level {
    let relations = algebra.relation_ideal().generators().to_vec();
    let restricted: Vec<Option<Polynomial>> = algebra
        .generators()
        .iter()
        .map(|g| algebra.membership(&d.apply(g)))
        .collect();
    let mut gens = relations.clone();
    gens.extend(
        restricted
            .iter()
            .flatten()
            .filter(|p| !p.is_zero())
            .cloned(),
    );
    let fixed_points = Ideal::new(algebra.algebra_ring(), gens).expect("same ring");
    Level {
        n,
        algebra,
        relations,
        restricted,
        fixed_points,
    }
}

/// Distinct non-constant visible factors of the plinth and image-ideal
/// generators, by total degree.
pub fn factor_pool(a: &SubalgebraPresentation, ideals: &[Vec<Polynomial>]) -> Vec<Polynomial> {
    let mut pool: Vec<Polynomial> = Vec::new();
    for ideal in ideals {
        for g in ideal {
            for f in visible_factors(a, g) {
                let f = f.primitive();
                if !f.is_constant() && !pool.contains(&f) {
                    pool.push(f);
                }
            }
        }
    }
    pool.sort_by_key(|p| p.total_degree().unwrap_or(0));
    pool
}

fn certify_variable(d: &Derivation, slice: &LocalSlice, var: usize) -> BirationalityCertificate {
    let q = d.quotient();
    let x = q.normal_form(&Polynomial::var(d.ring(), var));
    let m = d.degree(&x).unwrap_or(0);
    let mut coefficients = Vec::with_capacity(m as usize + 1);
    let mut dix = x.clone();
    let mut fact = BigInt::from(1);
    for i in 0..=m {
        if i > 0 {
            fact *= BigInt::from(i);
        }
        let c = d
            .local_dixmier(&slice.r, &slice.f, &dix, m - i)
            .scale(&BigRational::new(BigInt::from(1), fact.clone()));
        coefficients.push(c);
        dix = d.apply(&dix);
    }
    let mut sum = Polynomial::zero(d.ring());
    let mut rp = Polynomial::one(d.ring());
    for c in &coefficients {
        sum = &sum + &q.mul(c, &rp);
        rp = q.mul(&rp, &slice.r);
    }
    let verified = q.equal(&sum, &q.mul(&slice.f.pow(m), &x))
        && coefficients.iter().all(|c| d.apply(c).is_zero());
    BirationalityCertificate {
        variable: var,
        exponent: m,
        coefficients,
        verified,
    }
}

/// Factorization from an existing filtration.
pub fn canonical_factorization_of(
    fil: &mut DegreeFiltration,
    max_n: usize,
    exponent_cap: u32,
) -> Result<CanonicalFactorization> {
    let resolution = fil.degree_resolution(max_n)?;
    let d = fil.derivation().clone();
    let a = fil.kernel().clone();
    let slice = fil.slice().clone();
    let mut ideals = Vec::new();
    for &n in resolution.jumps.iter().skip(1) {
        ideals.push(fil.image_ideal(n)?);
    }
    let pool = factor_pool(&a, &ideals);
    let levels: Vec<Level> = resolution
        .algebras
        .iter()
        .map(|(n, alg)| level_of(&d, *n, alg.clone()))
        .collect();
    let f1 = fil.degree_module(1)?.module.clone();
    let cyl = SubmoduleOverA::new(a.clone(), vec![Polynomial::one(d.ring()), slice.r.clone()]);
    let cylinder = f1.module_equal(&cyl)?;
    let mut steps = Vec::new();
    for k in 2..levels.len() {
        let lower = Arc::new(levels[k - 1].algebra.clone());
        let upper = &levels[k].algebra;
        let mut step = find_modification(&lower, upper, &pool, exponent_cap)?;
        step.check_equivariance(&d, upper)?;
        steps.push(step);
    }
    let mut birationality = Vec::new();
    if levels.len() > 1 && levels[1].algebra.contains(&slice.r) {
        for v in 0..d.ring().nvars() {
            birationality.push(certify_variable(&d, &slice, v));
        }
    }
    Ok(CanonicalFactorization {
        resolution,
        levels,
        first_level: Some(FirstLevel { slice, cylinder }),
        steps,
        birationality,
        pool,
    })
}

/// The canonical factorization of the quotient morphism of `D` with kernel `A`.
pub fn canonical_factorization(
    d: Derivation,
    a: Arc<SubalgebraPresentation>,
    max_n: usize,
    options: &FactorOptions,
) -> Result<CanonicalFactorization> {
    if d.is_zero() {
        let level = level_of(&d, 0, a.as_ref().clone());
        return Ok(CanonicalFactorization {
            resolution: DegreeResolution {
                jumps: vec![0],
                algebras: vec![(0, a.as_ref().clone())],
                complete: a.is_everything(),
            },
            levels: vec![level],
            first_level: None,
            steps: Vec::new(),
            birationality: Vec::new(),
            pool: Vec::new(),
        });
    }
    let slice = d.find_local_slice(Some(&a), &[])?;
    let mut fil = DegreeFiltration::new(d, a, slice, options.degmod.clone())?;
    canonical_factorization_of(&mut fil, max_n, options.exponent_cap)
}
