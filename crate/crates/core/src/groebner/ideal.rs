use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::engine::{component, is_groebner_basis, Engine, Grading, Vector};
use crate::poly::{ModuleOrder, MonomialOrder, Polynomial, Ring};
use crate::{Error, Result};

/// A reduced Gröbner basis of an ideal together with its reduction engine.
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    engine: Engine,
    elements: Vec<Polynomial>,
}

impl std::fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroebnerBasis")
            .field("order", &self.order)
            .field("elements", &self.elements)
            .finish()
    }
}

pub(crate) fn grading_for(ring: &Ring, order: &MonomialOrder) -> Grading {
    let n = ring.nvars();
    let w = match order {
        MonomialOrder::Weighted(w) if w.len() == n => w.clone(),
        _ => ring
            .weights()
            .map(|w| w.to_vec())
            .unwrap_or_else(|| vec![1; n]),
    };
    Grading {
        var_weights: w,
        shifts: Vec::new(),
    }
}

impl GroebnerBasis {
    pub fn compute(ring: &Ring, generators: &[Polynomial], order: &MonomialOrder) -> Self {
        Self::compute_with(ring, generators, order, grading_for(ring, order))
    }

    pub(crate) fn compute_with(
        ring: &Ring,
        generators: &[Polynomial],
        order: &MonomialOrder,
        grading: Grading,
    ) -> Self {
        let morder = ModuleOrder::PositionOverTerm(order.clone());
        let mut engine = Engine::new(morder, grading, true);
        let mut gens: Vec<Vector> = generators
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| super::engine::vector_from_poly(engine.order(), g, 0))
            .collect();
        gens.sort_by_key(|v| v.len());
        for g in gens {
            engine.add_generator(g);
            engine.complete();
        }
        Self::from_engine(ring, order, engine)
    }

    fn from_engine(ring: &Ring, order: &MonomialOrder, engine: Engine) -> Self {
        let reduced = engine.reduced_basis();
        let elements: Vec<Polynomial> = reduced.iter().map(|v| component(ring, v, 0)).collect();
        let morder = ModuleOrder::PositionOverTerm(order.clone());
        let mut slim = Engine::new(morder, grading_for(ring, order), true);
        slim.add_known_basis(reduced);
        GroebnerBasis {
            ring: ring.clone(),
            order: order.clone(),
            engine: slim,
            elements,
        }
    }

    /// Extend a basis by further generators.
    pub fn extend(&self, more: &[Polynomial]) -> Self {
        let mut engine = self.engine.clone();
        for g in more.iter().filter(|g| !g.is_zero()) {
            engine.add_generator(super::engine::vector_from_poly(engine.order(), g, 0));
            engine.complete();
        }
        Self::from_engine(&self.ring, &self.order, engine)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Reduced basis elements, monic, ascending by leading term.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        if p.is_zero() {
            return p.clone();
        }
        let v = super::engine::vector_from_poly(self.engine.order(), p, 0);
        component(&self.ring, &self.engine.reduce(v), 0)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    /// Buchberger's criterion: every S-polynomial of the basis reduces to zero.
    pub fn verify(&self) -> bool {
        let morder = ModuleOrder::PositionOverTerm(self.order.clone());
        let vs: Vec<Vector> = self
            .elements
            .iter()
            .map(|g| super::engine::vector_from_poly(&morder, g, 0))
            .collect();
        is_groebner_basis(&morder, &vs, true)
    }
}

/// An ideal of a polynomial ring, with Gröbner bases cached per order.
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_tuple("Ideal").field(&self.generators).finish()
    }
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !g.ring().same(ring) {
                return Err(Error::AmbientMismatch {
                    left: ring.names().join(","),
                    right: g.ring().names().join(","),
                });
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner_basis(&self, order: &MonomialOrder) -> Arc<GroebnerBasis> {
        if let Some(gb) = self.cache.lock().unwrap().get(order) {
            return gb.clone();
        }
        let gb = Arc::new(GroebnerBasis::compute(&self.ring, &self.generators, order));
        self.cache.lock().unwrap().insert(order.clone(), gb.clone());
        gb
    }

    /// The reduced basis under graded reverse lex.
    pub fn basis(&self) -> Arc<GroebnerBasis> {
        self.groebner_basis(&MonomialOrder::GradedRevLex)
    }

    pub fn normal_form(&self, p: &Polynomial, order: &MonomialOrder) -> Polynomial {
        self.groebner_basis(order).normal_form(p)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.basis().contains(p)
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        let gb = other.basis();
        self.generators.iter().all(|g| gb.contains(g))
    }

    pub fn equals(&self, other: &Ideal) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }

    pub fn is_unit(&self) -> bool {
        self.basis().is_unit_ideal()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, g).expect("same ring")
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut g = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                g.push(a * b);
            }
        }
        Ideal::new(&self.ring, g).expect("same ring")
    }

    /// `I ∩ k[keep]`, returned as an ideal of the same ring.
    pub fn eliminate(&self, keep: &[usize]) -> Ideal {
        let n = self.ring.nvars();
        let drop: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
        let mut keep_sorted: Vec<usize> = keep.to_vec();
        keep_sorted.sort_unstable();
        keep_sorted.dedup();
        // permuted ring: eliminated variables first
        let perm: Vec<usize> = drop.iter().chain(keep_sorted.iter()).copied().collect();
        let names: Vec<&str> = perm.iter().map(|&i| self.ring.name(i)).collect();
        let pr = Ring::new(&names);
        let mut to_perm = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            to_perm[old] = new;
        }
        let gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|g| g.embed(&pr, &to_perm))
            .collect();
        let order = MonomialOrder::elimination(drop.len(), n);
        let gb = GroebnerBasis::compute(&pr, &gens, &order);
        let k = drop.len();
        let back: Vec<Option<usize>> = perm.iter().map(|&old| Some(old)).collect();
        let out: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|g| g.is_free_of(0..k))
            .map(|g| g.restrict(&self.ring, &back))
            .collect();
        Ideal::new(&self.ring, out).expect("same ring")
    }

    pub fn intersect(&self, other: &Ideal) -> Ideal {
        if self.generators.is_empty() || other.generators.is_empty() {
            return Ideal::zero(&self.ring);
        }
        let n = self.ring.nvars();
        let ext = self.ring.extend(&["_t"]);
        let t = Polynomial::var(&ext, n);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(&t * &g.extend_to(&ext));
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.extend_to(&ext));
        }
        let big = Ideal::new(&ext, gens).expect("same ring");
        let keep: Vec<usize> = (0..n).collect();
        let el = big.eliminate(&keep);
        let back: Vec<Option<usize>> = (0..n).map(Some).chain(std::iter::once(None)).collect();
        let out = el
            .generators()
            .iter()
            .map(|g| g.restrict(&self.ring, &back))
            .collect();
        Ideal::new(&self.ring, out).expect("same ring")
    }

    /// `f ∈ √I`, decided by `1 ∈ I + (1 − t·f)`.
    pub fn radical_contains(&self, f: &Polynomial) -> bool {
        if f.is_zero() || self.contains(f) {
            return true;
        }
        let n = self.ring.nvars();
        let ext = self.ring.extend(&["_t"]);
        let t = Polynomial::var(&ext, n);
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| g.extend_to(&ext)).collect();
        gens.push(&Polynomial::one(&ext) - &(&t * &f.extend_to(&ext)));
        Ideal::new(&ext, gens).expect("same ring").is_unit()
    }

    /// `√I = √J`.
    pub fn same_radical(&self, other: &Ideal) -> bool {
        self.generators.iter().all(|g| other.radical_contains(g))
            && other.generators.iter().all(|g| self.radical_contains(g))
    }

    /// `(I : f) = {b : f·b ∈ I}`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let fi = Ideal::new(&self.ring, vec![f.clone()])?;
        let inter = self.intersect(&fi);
        let mut out = Vec::new();
        for g in inter.generators() {
            out.push(
                g.divide_exact(f)?
                    .expect("intersection with (f) is divisible by f"),
            );
        }
        Ideal::new(&self.ring, out)
    }

    /// `(I : f^∞)`.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.ring.nvars();
        let ext = self.ring.extend(&["_t"]);
        let t = Polynomial::var(&ext, n);
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| g.extend_to(&ext)).collect();
        gens.push(&Polynomial::one(&ext) - &(&t * &f.extend_to(&ext)));
        let big = Ideal::new(&ext, gens)?;
        let keep: Vec<usize> = (0..n).collect();
        let el = big.eliminate(&keep);
        let back: Vec<Option<usize>> = (0..n).map(Some).chain(std::iter::once(None)).collect();
        let out = el
            .generators()
            .iter()
            .map(|g| g.restrict(&self.ring, &back))
            .collect();
        Ideal::new(&self.ring, out)
    }
}
