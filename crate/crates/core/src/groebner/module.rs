use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::engine::{component, is_groebner_basis, terms_of, Engine, Grading, Term, Vector};
use crate::poly::{ModuleOrder, MonomialOrder, Polynomial, Ring};
use crate::{Error, Result};

/// An element of the free module `B^m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeModuleElement {
    components: Vec<Polynomial>,
}

impl FreeModuleElement {
    pub fn new(components: Vec<Polynomial>) -> Self {
        FreeModuleElement { components }
    }

    pub fn zero(ring: &Ring, rank: usize) -> Self {
        FreeModuleElement {
            components: vec![Polynomial::zero(ring); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub(crate) fn to_vector(&self, order: &ModuleOrder) -> Vector {
        let terms: Vec<Term> = self
            .components
            .iter()
            .enumerate()
            .flat_map(|(i, p)| terms_of(p, i as u32))
            .collect();
        super::engine::sort_vector(order, terms)
    }

    pub(crate) fn from_vector(ring: &Ring, rank: usize, v: &[Term]) -> Self {
        FreeModuleElement {
            components: (0..rank).map(|i| component(ring, v, i as u32)).collect(),
        }
    }

    /// `Σ c_i · self_i`
    pub fn dot(&self, coeffs: &[Polynomial]) -> Polynomial {
        let ring = self.components[0].ring();
        let mut acc = Polynomial::zero(ring);
        for (a, b) in self.components.iter().zip(coeffs) {
            acc = &acc + &(a * b);
        }
        acc
    }
}

/// A Gröbner basis of a submodule of `B^m`.
#[derive(Clone)]
pub struct ModuleGroebnerBasis {
    ring: Ring,
    rank: usize,
    engine: Engine,
    elements: Vec<FreeModuleElement>,
}

impl ModuleGroebnerBasis {
    pub fn elements(&self) -> &[FreeModuleElement] {
        &self.elements
    }

    pub fn normal_form(&self, v: &FreeModuleElement) -> FreeModuleElement {
        let r = self.engine.reduce(v.to_vector(self.engine.order()));
        FreeModuleElement::from_vector(&self.ring, self.rank, &r)
    }

    pub fn contains(&self, v: &FreeModuleElement) -> bool {
        self.engine
            .reduce(v.to_vector(self.engine.order()))
            .is_empty()
    }

    pub fn verify(&self) -> bool {
        let vs: Vec<Vector> = self
            .elements
            .iter()
            .map(|e| e.to_vector(self.engine.order()))
            .collect();
        is_groebner_basis(self.engine.order(), &vs, false)
    }
}

/// A submodule of `B^m` given by generators.
pub struct Submodule {
    ring: Ring,
    rank: usize,
    generators: Vec<FreeModuleElement>,
    cache: Mutex<HashMap<ModuleOrder, Arc<ModuleGroebnerBasis>>>,
}

impl std::fmt::Debug for Submodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Submodule")
            .field("rank", &self.rank)
            .field("generators", &self.generators)
            .finish()
    }
}

impl Submodule {
    pub fn new(ring: &Ring, rank: usize, generators: Vec<FreeModuleElement>) -> Result<Self> {
        for g in &generators {
            if g.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: g.rank(),
                });
            }
            for c in g.components() {
                if !c.ring().same(ring) {
                    return Err(Error::AmbientMismatch {
                        left: ring.names().join(","),
                        right: c.ring().names().join(","),
                    });
                }
            }
        }
        Ok(Submodule {
            ring: ring.clone(),
            rank,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[FreeModuleElement] {
        &self.generators
    }

    /// Default order: term over position refined by graded reverse lex.
    pub fn default_order() -> ModuleOrder {
        ModuleOrder::TermOverPosition(MonomialOrder::GradedRevLex)
    }

    pub fn groebner_basis(&self, order: &ModuleOrder) -> Arc<ModuleGroebnerBasis> {
        if let Some(gb) = self.cache.lock().unwrap().get(order) {
            return gb.clone();
        }
        let gb = Arc::new(module_groebner_basis(
            &self.ring,
            self.rank,
            &self.generators,
            order,
            Grading::standard(self.ring.nvars()),
        ));
        self.cache.lock().unwrap().insert(order.clone(), gb.clone());
        gb
    }

    pub fn normal_form(&self, v: &FreeModuleElement) -> Result<FreeModuleElement> {
        self.check_rank(v)?;
        Ok(self.groebner_basis(&Self::default_order()).normal_form(v))
    }

    pub fn contains(&self, v: &FreeModuleElement) -> Result<bool> {
        self.check_rank(v)?;
        Ok(self.groebner_basis(&Self::default_order()).contains(v))
    }

    fn check_rank(&self, v: &FreeModuleElement) -> Result<()> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: v.rank(),
            });
        }
        Ok(())
    }
}

pub(crate) fn module_groebner_basis(
    ring: &Ring,
    rank: usize,
    generators: &[FreeModuleElement],
    order: &ModuleOrder,
    grading: Grading,
) -> ModuleGroebnerBasis {
    let mut engine = Engine::new(order.clone(), grading, rank <= 1);
    for g in generators {
        engine.add_generator(g.to_vector(order));
        engine.complete();
    }
    let reduced = engine.reduced_basis();
    let elements = reduced
        .iter()
        .map(|v| FreeModuleElement::from_vector(ring, rank, v))
        .collect();
    let mut slim = Engine::new(order.clone(), Grading::standard(ring.nvars()), rank <= 1);
    slim.add_known_basis(reduced);
    ModuleGroebnerBasis {
        ring: ring.clone(),
        rank,
        engine: slim,
        elements,
    }
}

/// All `(c_1, …, c_s)` with `Σ c_i g_i = 0`.
pub fn syzygies(ring: &Ring, generators: &[FreeModuleElement]) -> Result<Submodule> {
    let s = generators.len();
    let r = generators.first().map(|g| g.rank()).unwrap_or(0);
    for g in generators {
        if g.rank() != r {
            return Err(Error::RankMismatch {
                expected: r,
                got: g.rank(),
            });
        }
    }
    if s == 0 {
        return Submodule::new(ring, 0, Vec::new());
    }
    let order = ModuleOrder::Elimination {
        head: r as u32,
        head_order: MonomialOrder::GradedRevLex,
        tail: MonomialOrder::GradedRevLex,
        shifts: Vec::new(),
    };
    let mut tagged = Vec::with_capacity(s);
    for (i, g) in generators.iter().enumerate() {
        let mut comps = g.components().to_vec();
        comps.extend((0..s).map(|j| {
            if i == j {
                Polynomial::one(ring)
            } else {
                Polynomial::zero(ring)
            }
        }));
        tagged.push(FreeModuleElement::new(comps));
    }
    let gb = module_groebner_basis(
        ring,
        r + s,
        &tagged,
        &order,
        Grading::standard(ring.nvars()),
    );
    let syz = gb
        .elements()
        .iter()
        .filter(|e| e.components()[..r].iter().all(Polynomial::is_zero))
        .map(|e| FreeModuleElement::new(e.components()[r..].to_vec()))
        .collect();
    Submodule::new(ring, s, syz)
}

/// Syzygies of a list of polynomials.
pub fn polynomial_syzygies(ring: &Ring, generators: &[Polynomial]) -> Result<Submodule> {
    let gens: Vec<FreeModuleElement> = generators
        .iter()
        .map(|g| FreeModuleElement::new(vec![g.clone()]))
        .collect();
    syzygies(ring, &gens)
}
