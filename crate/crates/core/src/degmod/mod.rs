//! Degree modules `F_n = ker D^{n+1}`, computed as the stable term of the
//! chain `M_{i+1} = {h : f·h ∈ M_i}` started from an initial module inside
//! `F_n`; degree resolutions, image ideals, graded-ring truncations and
//! freeness diagnostics.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::groebner::Ideal;
use crate::lnd::{image_ideal, Derivation, LocalSlice};
use crate::poly::Polynomial;
use crate::subalg::{SubalgebraPresentation, SubmoduleOverA};
use crate::{Error, Result};

/// Default cap on the length of a saturation chain.
pub const DEFAULT_CHAIN_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InitialPolicy {
    /// `G_n(r) = {1, r, …, r^n}`.
    SlicePowers,
    /// Products of generators of `F_i` and `F_{n−i}`.
    Products,
    /// Products when lower modules are available and `n ≥ 2`, else slice powers.
    Auto,
}

#[derive(Clone, Debug)]
pub struct DegmodOptions {
    pub policy: InitialPolicy,
    pub chain_cap: usize,
    /// Saturate by the visible factors of `f` in turn instead of by `f`.
    pub interleave_factors: bool,
}

impl Default for DegmodOptions {
    fn default() -> Self {
        DegmodOptions {
            policy: InitialPolicy::Auto,
            chain_cap: DEFAULT_CHAIN_CAP,
            interleave_factors: false,
        }
    }
}

/// `F_n` with generator degrees.
#[derive(Clone, Debug)]
pub struct DegreeModule {
    pub n: usize,
    pub module: SubmoduleOverA,
    pub degrees: Vec<u32>,
    pub certified: bool,
    /// Strict enlargements performed by the chain.
    pub steps: usize,
}

impl DegreeModule {
    pub fn generators(&self) -> &[Polynomial] {
        self.module.generators()
    }

    /// Generator degrees are pairwise distinct, so the generators form a `D`-basis.
    pub fn d_basis_check(&self) -> bool {
        let set: BTreeSet<u32> = self.degrees.iter().copied().collect();
        set.len() == self.degrees.len()
    }

    /// Generator degrees are exactly `{0, …, n}`.
    pub fn degrees_complete(&self) -> bool {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d == (0..=self.n as u32).collect::<Vec<_>>()
    }
}

/// Degree modules of `D` over a kernel `A`, computed on demand.
pub struct DegreeFiltration {
    d: Derivation,
    a: Arc<SubalgebraPresentation>,
    slice: LocalSlice,
    options: DegmodOptions,
    factors: Vec<Polynomial>,
    modules: Vec<DegreeModule>,
}

/// The generators of `A` appearing in `f` when `f` is a monomial in them.
pub fn visible_factors(a: &SubalgebraPresentation, f: &Polynomial) -> Vec<Polynomial> {
    let Some(rw) = a.membership(f) else {
        return vec![f.clone()];
    };
    if rw.len() != 1 {
        return vec![f.clone()];
    }
    let (m, _) = &rw.terms()[0];
    let out: Vec<Polynomial> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(j, _)| a.generators()[j].clone())
        .collect();
    if out.is_empty() {
        vec![f.clone()]
    } else {
        out
    }
}

fn sort_key(d: &Derivation, p: &Polynomial) -> (u32, u32, usize) {
    (
        d.degree(p).unwrap_or(0),
        p.total_degree().unwrap_or(0),
        p.len(),
    )
}

impl DegreeFiltration {
    pub fn new(
        d: Derivation,
        a: Arc<SubalgebraPresentation>,
        slice: LocalSlice,
        options: DegmodOptions,
    ) -> Result<Self> {
        if !d.is_verified() {
            return Err(Error::Precondition(
                "derivation not verified locally nilpotent".into(),
            ));
        }
        if !d.is_local_slice(&slice.r) {
            return Err(Error::Precondition(format!(
                "{} is not a local slice",
                slice.r
            )));
        }
        if !a.contains(&slice.f) {
            return Err(Error::Precondition(format!("{} is not in A", slice.f)));
        }
        let factors = if options.interleave_factors {
            visible_factors(&a, &slice.f)
        } else {
            vec![slice.f.clone()]
        };
        Ok(DegreeFiltration {
            d,
            a,
            slice,
            options,
            factors,
            modules: Vec::new(),
        })
    }

    pub fn derivation(&self) -> &Derivation {
        &self.d
    }

    pub fn kernel(&self) -> &Arc<SubalgebraPresentation> {
        &self.a
    }

    pub fn slice(&self) -> &LocalSlice {
        &self.slice
    }

    pub fn computed(&self) -> &[DegreeModule] {
        &self.modules
    }

    /// Generators of the initial module `M_0 ⊂ F_n` for the given policy.
    pub fn initial_module(&self, n: usize, policy: InitialPolicy) -> Vec<Polynomial> {
        let one = Polynomial::one(self.d.ring());
        let use_products = match policy {
            InitialPolicy::SlicePowers => false,
            InitialPolicy::Products => n >= 2 && self.modules.len() >= n,
            InitialPolicy::Auto => n >= 2 && self.modules.len() >= n,
        };
        let q = self.d.quotient();
        if !use_products {
            let mut out = vec![one];
            for i in 1..=n {
                out.push(q.normal_form(&self.slice.r.pow(i as u32)));
            }
            return out;
        }
        let mut out: Vec<Polynomial> = self.modules[n - 1].generators().to_vec();
        for i in 1..=n / 2 {
            for a in self.modules[i].generators() {
                for b in self.modules[n - i].generators() {
                    if a.is_constant() || b.is_constant() {
                        continue;
                    }
                    out.push(q.normal_form(&(a * b)));
                }
            }
        }
        let mut seen = std::collections::HashSet::new();
        out.retain(|p| seen.insert(p.clone()));
        out.sort_by_key(|p| sort_key(&self.d, p));
        out
    }

    fn compute(&self, n: usize) -> Result<DegreeModule> {
        if n == 0 {
            let module = SubmoduleOverA::unit(self.a.clone());
            return Ok(DegreeModule {
                n,
                module,
                degrees: vec![0],
                certified: true,
                steps: 0,
            });
        }
        let init = self.initial_module(n, self.options.policy);
        let mut m = SubmoduleOverA::new(self.a.clone(), init).prune();
        let mut steps = 0;
        let certified = loop {
            let mut grew = false;
            let mut capped = false;
            for f in &self.factors {
                let out = m.saturate(f, self.options.chain_cap.saturating_sub(steps))?;
                steps += out.steps;
                grew |= out.steps > 0;
                m = out.module;
                if !out.certified {
                    capped = true;
                    break;
                }
            }
            if capped {
                break false;
            }
            if !grew || self.factors.len() == 1 {
                break true;
            }
        };
        let mut gens = m.generators().to_vec();
        gens.sort_by_key(|p| sort_key(&self.d, p));
        let gens: Vec<Polynomial> = gens.into_iter().map(|g| g.primitive()).collect();
        let module = SubmoduleOverA::new(self.a.clone(), gens).minimize();
        let degrees = module
            .generators()
            .iter()
            .map(|g| self.d.degree(g).unwrap_or(0))
            .collect();
        Ok(DegreeModule {
            n,
            module,
            degrees,
            certified,
            steps,
        })
    }

    /// `F_n`, computing all lower levels first.
    pub fn degree_module(&mut self, n: usize) -> Result<&DegreeModule> {
        while self.modules.len() <= n {
            let k = self.modules.len();
            let m = self.compute(k)?;
            if !m.certified {
                return Err(Error::CapExceeded {
                    what: format!("saturation chain for F_{k}"),
                    cap: self.options.chain_cap,
                });
            }
            self.modules.push(m);
        }
        Ok(&self.modules[n])
    }

    /// `I_n = D^n F_n` as minimal generators in `A`.
    pub fn image_ideal(&mut self, n: usize) -> Result<Vec<Polynomial>> {
        let m = self.degree_module(n)?.module.clone();
        Ok(image_ideal(&self.d, &m, n))
    }

    pub fn plinth_ideal(&mut self) -> Result<Vec<Polynomial>> {
        self.image_ideal(1)
    }

    /// `B_n = k[F_n]` for each `n` until every variable is reached.
    pub fn degree_resolution(&mut self, max_n: usize) -> Result<DegreeResolution> {
        let q = self.d.quotient().clone();
        let mut chain: Vec<(usize, SubalgebraPresentation)> = vec![(0, self.a.as_ref().clone())];
        let mut jumps = vec![0];
        if self.d.is_zero() {
            return Ok(DegreeResolution {
                jumps,
                algebras: chain,
                complete: true,
            });
        }
        for n in 1..=max_n {
            let gens = self.degree_module(n)?.generators().to_vec();
            let prev = &chain.last().unwrap().1;
            let fresh: Vec<Polynomial> = gens.into_iter().filter(|g| !prev.contains(g)).collect();
            if fresh.is_empty() {
                continue;
            }
            let mut cands = prev.generators().to_vec();
            cands.extend(fresh);
            let next = SubalgebraPresentation::minimized(&q, cands)?;
            let next = inherit_names(next, prev);
            jumps.push(n);
            let done = next.is_everything();
            chain.push((n, next));
            if done {
                return Ok(DegreeResolution {
                    jumps,
                    algebras: chain,
                    complete: true,
                });
            }
        }
        Ok(DegreeResolution {
            jumps,
            algebras: chain,
            complete: false,
        })
    }

    /// Image ideals up to `max_n` and minimal generators of `⊕ I_n t^n`.
    pub fn graded_ring_truncation(&mut self, max_n: usize) -> Result<GradedRingTruncation> {
        let mut ideals = Vec::new();
        for n in 0..=max_n {
            ideals.push(self.image_ideal(n)?);
        }
        let mut generators: Vec<(Polynomial, usize)> = Vec::new();
        for n in 1..=max_n {
            let mut span = weight_products(self.d.ring(), &generators, n);
            for a in &ideals[n] {
                let sub = SubmoduleOverA::new(self.a.clone(), span.clone());
                if !sub.contains(a) {
                    generators.push((a.clone(), n));
                    span.push(a.clone());
                }
            }
        }
        Ok(GradedRingTruncation { ideals, generators })
    }

    /// Per level: whether generator degrees are `{0..n}` and whether `I_n` is principal.
    pub fn freeness_diagnostics(&mut self, max_n: usize) -> Result<Vec<FreenessReport>> {
        let mut out = Vec::new();
        let poly_ring = self.a.is_polynomial_ring();
        for n in 0..=max_n {
            let m = self.degree_module(n)?.clone();
            let ideal = self.image_ideal(n)?;
            let principal = if poly_ring {
                Some(is_principal_in_polynomial_algebra(&self.a, &ideal))
            } else {
                None
            };
            out.push(FreenessReport {
                n,
                degrees: m.degrees.clone(),
                degrees_complete: m.degrees_complete(),
                d_basis: m.d_basis_check(),
                image_principal: principal,
            });
        }
        Ok(out)
    }

    /// `D` maps the generators of `F_{n+1}` into `F_n`.
    pub fn exact_sequence_check(&mut self, n: usize) -> Result<bool> {
        let upper = self.degree_module(n + 1)?.generators().to_vec();
        let lower = self.degree_module(n)?.module.clone();
        Ok(upper.iter().all(|g| lower.contains(&self.d.apply(g))))
    }
}

/// Keep the names of generators already present in `prev`, name variables
/// after themselves and number the rest.
fn inherit_names(
    next: SubalgebraPresentation,
    prev: &SubalgebraPresentation,
) -> SubalgebraPresentation {
    let ring = next.base_ring().clone();
    let mut names: Vec<Option<String>> = next
        .generators()
        .iter()
        .map(|g| {
            if let Some(j) = prev.generators().iter().position(|h| h == g) {
                return Some(prev.names()[j].clone());
            }
            (0..ring.nvars())
                .find(|&i| *g == Polynomial::var(&ring, i))
                .map(|i| ring.name(i).to_string())
        })
        .collect();
    let mut taken: std::collections::HashSet<String> = prev.names().iter().cloned().collect();
    taken.extend(names.iter().flatten().cloned());
    taken.extend(ring.names().iter().cloned());
    let mut k = 1;
    for slot in names.iter_mut() {
        if slot.is_none() {
            let mut cand = format!("Y{k}");
            while taken.contains(&cand) {
                k += 1;
                cand = format!("Y{k}");
            }
            taken.insert(cand.clone());
            *slot = Some(cand);
        }
    }
    let names: Vec<String> = names.into_iter().map(Option::unwrap).collect();
    next.with_names(names)
}

/// Products of weighted generators with total weight `n`.
fn weight_products(
    ring: &crate::poly::Ring,
    gens: &[(Polynomial, usize)],
    n: usize,
) -> Vec<Polynomial> {
    fn rec(
        gens: &[(Polynomial, usize)],
        start: usize,
        left: usize,
        acc: Polynomial,
        out: &mut Vec<Polynomial>,
    ) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..gens.len() {
            let (g, w) = &gens[i];
            if *w <= left {
                rec(gens, i, left - w, &acc * g, out);
            }
        }
    }
    let mut out = Vec::new();
    rec(gens, 0, n, Polynomial::one(ring), &mut out);
    out
}

fn is_principal_in_polynomial_algebra(a: &SubalgebraPresentation, ideal: &[Polynomial]) -> bool {
    let rewritten: Vec<Polynomial> = ideal.iter().filter_map(|g| a.membership(g)).collect();
    if rewritten.len() != ideal.len() {
        return false;
    }
    let i = Ideal::new(a.algebra_ring(), rewritten).expect("same ring");
    i.basis().elements().len() <= 1
}

/// `A = B_0 ⊂ B_1 ⊂ B_{n_2} ⊂ ⋯`, recorded at the strict jumps.
#[derive(Clone, Debug)]
pub struct DegreeResolution {
    /// The jump set `N_B(A)`.
    pub jumps: Vec<usize>,
    /// `(n_i, B_{n_i})` for each jump.
    pub algebras: Vec<(usize, SubalgebraPresentation)>,
    /// The last algebra is all of `B`.
    pub complete: bool,
}

impl DegreeResolution {
    pub fn index(&self) -> usize {
        self.jumps.len() - 1
    }
}

#[derive(Clone, Debug)]
pub struct GradedRingTruncation {
    /// Generators of `I_n` for `n = 0..=N`.
    pub ideals: Vec<Vec<Polynomial>>,
    /// Minimal algebra generators `(a, n)` standing for `a·t^n`.
    pub generators: Vec<(Polynomial, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessReport {
    pub n: usize,
    pub degrees: Vec<u32>,
    pub degrees_complete: bool,
    pub d_basis: bool,
    /// `None` when `A` is not a polynomial ring in its generators.
    pub image_principal: Option<bool>,
}
