use std::sync::{Arc, OnceLock};

use super::SubalgebraPresentation;
use crate::groebner::{Engine, Term, Vector};
use crate::poly::{canonical_cmp, ModuleOrder, Monomial, Polynomial, Rational};
use crate::{Error, Result};

/// Incremental module Gröbner basis for membership in `Σ A·m_j`.
///
/// Position 0 carries the ambient element; position `j ≥ 1` the coefficient of
/// the `j`-th generator. Generators enter as `m_j·e_0 + e_j`, the tag ideal as
/// `T·e_0`, and optional divisors as `f·e_0`.
#[derive(Clone)]
pub(crate) struct ModuleCtx {
    alg: Arc<SubalgebraPresentation>,
    engine: Engine,
    next: u32,
}

impl ModuleCtx {
    pub fn new(alg: Arc<SubalgebraPresentation>) -> Self {
        let order = ModuleOrder::Elimination {
            head: 1,
            head_order: alg.order().clone(),
            tail: alg.order().clone(),
            shifts: vec![0],
        };
        let mut grading = alg.grading().clone();
        grading.shifts = vec![0];
        let mut engine = Engine::new(order, grading, false);
        let known: Vec<Vector> = alg
            .tag_basis()
            .elements()
            .iter()
            .map(|g| crate::groebner::sort_vector(engine.order(), to_terms(g, 0)))
            .collect();
        engine.add_known_basis(known);
        ModuleCtx {
            alg,
            engine,
            next: 1,
        }
    }

    fn xweights(&self) -> &[u32] {
        let n = self.alg.base_ring().nvars();
        &self.alg.grading().var_weights[..n]
    }

    /// Add a generator `m`, returning its position.
    pub fn add_element(&mut self, m: &Polynomial) -> u32 {
        let pos = self.next;
        self.next += 1;
        let shift = m.weighted_degree(self.xweights()).unwrap_or(0) as u32;
        self.engine.set_shift(pos, shift);
        let tm = m.extend_to(self.alg.tag_ring());
        let mut terms = to_terms(&tm, 0);
        terms.push(Term {
            m: Monomial::one(self.alg.tag_ring().nvars()),
            pos,
            c: Rational::from_integer(1.into()),
        });
        let v = crate::groebner::sort_vector(self.engine.order(), terms);
        self.engine.add_generator(v);
        self.engine.complete();
        pos
    }

    pub fn add_divisor(&mut self, f: &Polynomial) {
        let tf = f.extend_to(self.alg.tag_ring());
        let v = crate::groebner::sort_vector(self.engine.order(), to_terms(&tf, 0));
        self.engine.add_generator(v);
        self.engine.complete();
    }

    fn is_x_free(&self, m: &Monomial) -> bool {
        m.is_free_of(0..self.alg.base_ring().nvars())
    }

    fn split(&self, v: &[Term]) -> Vec<(u32, Polynomial)> {
        let mut by_pos: std::collections::BTreeMap<u32, Vec<(Monomial, Rational)>> =
            Default::default();
        for t in v {
            by_pos
                .entry(t.pos)
                .or_default()
                .push((t.m.clone(), t.c.clone()));
        }
        by_pos
            .into_iter()
            .map(|(pos, mut terms)| {
                terms.sort_by(|a, b| canonical_cmp(&b.0, &a.0));
                let p = Polynomial::from_sorted_terms(self.alg.tag_ring(), terms);
                (pos, self.alg.from_tags(&p))
            })
            .collect()
    }

    /// Coefficients `(pos, c)` in `k[Y]` with `h = Σ c(g)·m_pos`, if `h` lies in the module.
    pub fn coefficients(&self, h: &Polynomial) -> Option<Vec<(u32, Polynomial)>> {
        if h.is_zero() {
            return Some(Vec::new());
        }
        let th = h.extend_to(self.alg.tag_ring());
        let v = crate::groebner::sort_vector(self.engine.order(), to_terms(&th, 0));
        let r = self.engine.reduce(v);
        if r.iter().any(|t| t.pos == 0 || !self.is_x_free(&t.m)) {
            return None;
        }
        Some(self.split(&r).into_iter().map(|(p, c)| (p, -c)).collect())
    }

    pub fn contains(&self, h: &Polynomial) -> bool {
        if h.is_zero() {
            return true;
        }
        let th = h.extend_to(self.alg.tag_ring());
        let v = crate::groebner::sort_vector(self.engine.order(), to_terms(&th, 0));
        let r = self.engine.reduce(v);
        !r.iter().any(|t| t.pos == 0 || !self.is_x_free(&t.m))
    }

    /// Basis elements supported in positions `≥ 1` and free of `x`: these
    /// generate the `k[Y]`-rows `c` with `Σ c(g)·m_j ∈ (divisors)`.
    pub fn eliminated_rows(&self) -> Vec<Vec<(u32, Polynomial)>> {
        self.engine
            .minimal_basis()
            .into_iter()
            .filter(|v| v[0].pos >= 1 && self.is_x_free(&v[0].m))
            .map(|v| self.split(v))
            .collect()
    }
}

fn to_terms(p: &Polynomial, pos: u32) -> Vec<Term> {
    p.terms()
        .iter()
        .map(|(m, c)| Term {
            m: m.clone(),
            pos,
            c: c.clone(),
        })
        .collect()
}

/// The `A`-module `Σ A·m_j ⊂ B`.
pub struct SubmoduleOverA {
    algebra: Arc<SubalgebraPresentation>,
    generators: Vec<Polynomial>,
    ctx: OnceLock<ModuleCtx>,
}

impl Clone for SubmoduleOverA {
    fn clone(&self) -> Self {
        SubmoduleOverA {
            algebra: self.algebra.clone(),
            generators: self.generators.clone(),
            ctx: self.ctx.clone(),
        }
    }
}

impl std::fmt::Debug for SubmoduleOverA {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_tuple("SubmoduleOverA")
            .field(&self.generators)
            .finish()
    }
}

/// Result of iterating [`SubmoduleOverA::saturation_step`].
#[derive(Clone, Debug)]
pub struct ChainOutcome {
    pub module: SubmoduleOverA,
    /// Number of strict enlargements performed.
    pub steps: usize,
    /// Whether `M_s = M_{s+1}` was reached within the cap.
    pub certified: bool,
}

impl SubmoduleOverA {
    pub fn new(algebra: Arc<SubalgebraPresentation>, generators: Vec<Polynomial>) -> Self {
        let q = algebra.quotient().clone();
        let generators = generators
            .iter()
            .map(|g| q.normal_form(g))
            .filter(|g| !g.is_zero())
            .collect();
        SubmoduleOverA {
            algebra,
            generators,
            ctx: OnceLock::new(),
        }
    }

    /// The rank-one module `A·1`.
    pub fn unit(algebra: Arc<SubalgebraPresentation>) -> Self {
        let one = Polynomial::one(algebra.base_ring());
        Self::new(algebra, vec![one])
    }

    pub fn algebra(&self) -> &Arc<SubalgebraPresentation> {
        &self.algebra
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    fn ctx(&self) -> &ModuleCtx {
        self.ctx.get_or_init(|| {
            let mut c = ModuleCtx::new(self.algebra.clone());
            for g in &self.generators {
                c.add_element(g);
            }
            c
        })
    }

    /// Re-check the membership basis by reducing every S-pair.
    pub fn verify_basis(&self) -> bool {
        self.ctx().engine.verify()
    }

    /// Coefficients `c_j ∈ k[Y]` with `h = Σ c_j(g)·m_j`.
    pub fn membership(&self, h: &Polynomial) -> Option<Vec<Polynomial>> {
        let h = self.algebra.quotient().normal_form(h);
        let coeffs = self.ctx().coefficients(&h)?;
        let mut out = vec![Polynomial::zero(self.algebra.algebra_ring()); self.generators.len()];
        for (pos, c) in coeffs {
            out[pos as usize - 1] = c;
        }
        debug_assert!(self.algebra.quotient().equal(&self.combine(&out), &h));
        Some(out)
    }

    pub fn contains(&self, h: &Polynomial) -> bool {
        self.ctx().contains(&self.algebra.quotient().normal_form(h))
    }

    /// `Σ c_j(g)·m_j` for coefficients in `k[Y]`.
    pub fn combine(&self, coeffs: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero(self.algebra.base_ring());
        for (c, m) in coeffs.iter().zip(&self.generators) {
            if !c.is_zero() {
                acc = &acc + &(&self.algebra.evaluate(c) * m);
            }
        }
        self.algebra.quotient().normal_form(&acc)
    }

    fn same_ambient(&self, other: &SubmoduleOverA) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra)
            || self.algebra.generators() == other.algebra.generators()
        {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: format!("{:?}", self.algebra.generators()),
                right: format!("{:?}", other.algebra.generators()),
            })
        }
    }

    pub fn is_submodule_of(&self, other: &SubmoduleOverA) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.generators.iter().all(|g| other.contains(g)))
    }

    pub fn module_equal(&self, other: &SubmoduleOverA) -> Result<bool> {
        Ok(self.is_submodule_of(other)? && other.is_submodule_of(self)?)
    }

    /// Add generators not already contained.
    pub fn extended(&self, more: &[Polynomial]) -> SubmoduleOverA {
        let mut ctx = self.ctx().clone();
        let mut gens = self.generators.clone();
        for m in more {
            let m = self.algebra.quotient().normal_form(m);
            if !ctx.contains(&m) {
                ctx.add_element(&m);
                gens.push(m);
            }
        }
        let out = SubmoduleOverA {
            algebra: self.algebra.clone(),
            generators: gens,
            ctx: OnceLock::new(),
        };
        let _ = out.ctx.set(ctx);
        out
    }

    /// Drop generators contained in the span of the preceding ones.
    pub fn prune(&self) -> SubmoduleOverA {
        let empty = SubmoduleOverA::new(self.algebra.clone(), Vec::new());
        empty.extended(&self.generators)
    }

    /// A generating set in which no generator lies in the span of the others.
    pub fn minimize(&self) -> SubmoduleOverA {
        let mut gens = self.prune().generators;
        let mut i = gens.len();
        while i > 0 {
            i -= 1;
            if gens.len() <= 1 {
                break;
            }
            let others: Vec<Polynomial> = gens
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, g)| g.clone())
                .collect();
            let sub = SubmoduleOverA::new(self.algebra.clone(), others.clone());
            if sub.contains(&gens[i]) {
                gens = others;
            }
        }
        SubmoduleOverA::new(self.algebra.clone(), gens)
    }

    /// Generators of the `A`-module of relations `Σ c_j m_j = 0`, as rows in `k[Y]`,
    /// omitting rows whose entries all vanish in `B`.
    pub fn relations(&self) -> Vec<Vec<Polynomial>> {
        let k = self.generators.len();
        let zero = Polynomial::zero(self.algebra.algebra_ring());
        let mut out = Vec::new();
        for row in self.ctx().eliminated_rows() {
            let mut r = vec![zero.clone(); k];
            for (pos, c) in row {
                r[pos as usize - 1] = c;
            }
            if r.iter().all(|c| self.algebra.evaluate(c).is_zero()) {
                continue;
            }
            debug_assert!(self.combine(&r).is_zero());
            out.push(r);
        }
        out
    }

    fn check_divisor(&self, f: &Polynomial) -> Result<()> {
        if f.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !self.algebra.contains(f) {
            return Err(Error::Precondition(format!(
                "{f} does not lie in the subalgebra"
            )));
        }
        Ok(())
    }

    /// Candidates `Σ c_j(g) m_j / f` for the rows `c` of `ρ⁻¹(fB ∩ M)`.
    fn quotients(
        &self,
        ctx_f: &ModuleCtx,
        gens: &[Polynomial],
        divider: &crate::groebner::Divider,
    ) -> Result<Vec<Polynomial>> {
        let mut out = Vec::new();
        for row in ctx_f.eliminated_rows() {
            let mut acc = Polynomial::zero(self.algebra.base_ring());
            for (pos, c) in row {
                acc = &acc + &(&self.algebra.evaluate(&c) * &gens[pos as usize - 1]);
            }
            let acc = self.algebra.quotient().normal_form(&acc);
            let s = divider.divide(&acc)?.ok_or_else(|| {
                Error::Precondition(format!(
                    "row value {acc} not divisible by {}",
                    divider.divisor()
                ))
            })?;
            out.push(s);
        }
        out.sort_by(|a, b| {
            let da = a.total_degree().unwrap_or(0);
            let db = b.total_degree().unwrap_or(0);
            da.cmp(&db).then_with(|| a.len().cmp(&b.len()))
        });
        Ok(out)
    }

    /// `{h ∈ B : f·h ∈ M}` for `f` in the subalgebra.
    pub fn saturation_step(&self, f: &Polynomial) -> Result<SubmoduleOverA> {
        self.check_divisor(f)?;
        if f.is_constant() {
            return Ok(self.clone());
        }
        let mut ctx_f = self.ctx().clone();
        ctx_f.add_divisor(f);
        let divider = self.algebra.quotient().divider(f)?;
        let s = self.quotients(&ctx_f, &self.generators, &divider)?;
        Ok(self.extended(&s))
    }

    /// Iterate [`Self::saturation_step`] until the module stabilizes or `cap` steps.
    pub fn saturate(&self, f: &Polynomial, cap: usize) -> Result<ChainOutcome> {
        self.check_divisor(f)?;
        if f.is_constant() {
            return Ok(ChainOutcome {
                module: self.clone(),
                steps: 0,
                certified: true,
            });
        }
        let divider = self.algebra.quotient().divider(f)?;
        let mut ctx_m = self.ctx().clone();
        let mut ctx_f = ctx_m.clone();
        ctx_f.add_divisor(f);
        let mut gens = self.generators.clone();
        let mut steps = 0;
        loop {
            let cands = self.quotients(&ctx_f, &gens, &divider)?;
            let mut grew = false;
            for s in cands {
                if !ctx_m.contains(&s) {
                    if steps >= cap {
                        let module = SubmoduleOverA::new(self.algebra.clone(), gens);
                        return Ok(ChainOutcome {
                            module,
                            steps,
                            certified: false,
                        });
                    }
                    ctx_m.add_element(&s);
                    ctx_f.add_element(&s);
                    gens.push(s);
                    grew = true;
                }
            }
            if !grew {
                let module = SubmoduleOverA {
                    algebra: self.algebra.clone(),
                    generators: gens,
                    ctx: OnceLock::new(),
                };
                let _ = module.ctx.set(ctx_m);
                return Ok(ChainOutcome {
                    module,
                    steps,
                    certified: true,
                });
            }
            steps += 1;
        }
    }

    /// Whether `fB ∩ M = fM`.
    pub fn is_saturated(&self, f: &Polynomial) -> Result<bool> {
        let next = self.saturation_step(f)?;
        Ok(next.generators.len() == self.generators.len())
    }
}
