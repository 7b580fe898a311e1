use std::sync::Arc;

use super::engine::Grading;
use super::ideal::{GroebnerBasis, Ideal};
use super::module::{module_groebner_basis, FreeModuleElement, ModuleGroebnerBasis};
use crate::poly::{ModuleOrder, MonomialOrder, Polynomial, Ring};
use crate::{Error, Result};

/// Arithmetic in `B/J` by normal forms against a Gröbner basis of `J`.
#[derive(Clone, Debug)]
pub struct QuotientContext {
    ring: Ring,
    relations: Ideal,
    gb: Arc<GroebnerBasis>,
}

impl QuotientContext {
    pub fn new(ring: &Ring, relations: Vec<Polynomial>) -> Result<Self> {
        let relations = Ideal::new(ring, relations)?;
        let gb = relations.basis();
        Ok(QuotientContext {
            ring: ring.clone(),
            relations,
            gb,
        })
    }

    pub fn trivial(ring: &Ring) -> Self {
        Self::new(ring, Vec::new()).expect("no relations")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn is_trivial(&self) -> bool {
        self.gb.is_zero_ideal()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        if self.is_trivial() {
            p.clone()
        } else {
            self.gb.normal_form(p)
        }
    }

    pub fn is_zero(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn equal(&self, a: &Polynomial, b: &Polynomial) -> bool {
        self.is_zero(&(a - b))
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.normal_form(&(a * b))
    }

    /// Some `q` in normal form with `p ≡ f·q` modulo the relations.
    pub fn divide(&self, p: &Polynomial, f: &Polynomial) -> Result<Option<Polynomial>> {
        self.divider(f)?.divide(p)
    }

    /// Precomputed division by a fixed `f`.
    pub fn divider(&self, f: &Polynomial) -> Result<Divider> {
        if self.is_zero(f) {
            return Err(Error::DivisionByZero);
        }
        if self.is_trivial() {
            return Ok(Divider {
                ctx: self.clone(),
                f: f.clone(),
                gb: None,
            });
        }
        let zero = Polynomial::zero(&self.ring);
        let mut gens = vec![FreeModuleElement::new(vec![
            f.clone(),
            Polynomial::one(&self.ring),
        ])];
        for g in self.gb.elements() {
            gens.push(FreeModuleElement::new(vec![g.clone(), zero.clone()]));
        }
        let order = ModuleOrder::PositionOverTerm(MonomialOrder::GradedRevLex);
        let gb = module_groebner_basis(
            &self.ring,
            2,
            &gens,
            &order,
            Grading::standard(self.ring.nvars()),
        );
        Ok(Divider {
            ctx: self.clone(),
            f: f.clone(),
            gb: Some(gb),
        })
    }
}

/// Exact division by a fixed element of a quotient ring.
#[derive(Clone)]
pub struct Divider {
    ctx: QuotientContext,
    f: Polynomial,
    gb: Option<ModuleGroebnerBasis>,
}

impl Divider {
    pub fn divisor(&self) -> &Polynomial {
        &self.f
    }

    pub fn divide(&self, p: &Polynomial) -> Result<Option<Polynomial>> {
        let Some(gb) = &self.gb else {
            return p.divide_exact(&self.f);
        };
        let zero = Polynomial::zero(self.ctx.ring());
        let nf = gb.normal_form(&FreeModuleElement::new(vec![p.clone(), zero]));
        if !nf.component(0).is_zero() {
            return Ok(None);
        }
        Ok(Some(self.ctx.normal_form(&-nf.component(1))))
    }
}
