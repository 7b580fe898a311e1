//! Subalgebras `A = k[g_1, …, g_p]` of an affine domain and finitely
//! generated `A`-submodules of it.
//!
//! Everything is decided with tag variables: the ring `k[x, Y]` carries the
//! ideal `(Y_j − g_j) + J` (with `J` the relations of the ambient ring) and a
//! block order with the `x` block dominant.

mod module;

use std::sync::Arc;

pub use module::{ChainOutcome, SubmoduleOverA};

use crate::groebner::{Grading, GroebnerBasis, Ideal, QuotientContext};
use crate::poly::{MonomialOrder, Polynomial, Ring};
use crate::{Error, Result};

/// A subalgebra of `B = k[x]/J` given by generators.
#[derive(Clone, Debug)]
pub struct SubalgebraPresentation {
    quotient: QuotientContext,
    generators: Vec<Polynomial>,
    names: Vec<String>,
    algebra_ring: Ring,
    tag_ring: Ring,
    order: MonomialOrder,
    grading: Grading,
    tag_gb: Arc<GroebnerBasis>,
}

pub(crate) fn x_weights(base: &Ring) -> Vec<u32> {
    base.weights()
        .map(|w| w.to_vec())
        .unwrap_or_else(|| vec![1; base.nvars()])
}

fn x_order(base: &Ring) -> MonomialOrder {
    match base.weights() {
        Some(w) => MonomialOrder::Weighted(w.to_vec()),
        None => MonomialOrder::GradedRevLex,
    }
}

struct TagLayout {
    tag_ring: Ring,
    order: MonomialOrder,
    grading: Grading,
}

fn layout(base: &Ring, generators: &[Polynomial]) -> TagLayout {
    let n = base.nvars();
    let p = generators.len();
    let xw = x_weights(base);
    let yw: Vec<u32> = generators
        .iter()
        .map(|g| g.weighted_degree(&xw).unwrap_or(0).max(1) as u32)
        .collect();
    let tags: Vec<String> = (1..=p).map(|j| format!("_Y{j}")).collect();
    let tag_ring = base.extend(&tags);
    let order = MonomialOrder::Block(vec![
        (n, x_order(base)),
        (p, MonomialOrder::Weighted(yw.clone())),
    ]);
    let mut var_weights = xw;
    var_weights.extend(yw);
    TagLayout {
        tag_ring,
        order,
        grading: Grading {
            var_weights,
            shifts: Vec::new(),
        },
    }
}

fn tag_generators(
    q: &QuotientContext,
    tag_ring: &Ring,
    generators: &[Polynomial],
) -> Vec<Polynomial> {
    let n = q.ring().nvars();
    let mut out: Vec<Polynomial> = q
        .basis()
        .elements()
        .iter()
        .map(|g| g.extend_to(tag_ring))
        .collect();
    for (j, g) in generators.iter().enumerate() {
        out.push(&Polynomial::var(tag_ring, n + j) - &g.extend_to(tag_ring));
    }
    out
}

impl SubalgebraPresentation {
    /// Subalgebra of the polynomial ring `ring`.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self> {
        Self::in_quotient(&QuotientContext::trivial(ring), generators, None)
    }

    /// Subalgebra of `ring/relations`, optionally with display names for the generators.
    pub fn in_quotient(
        quotient: &QuotientContext,
        generators: Vec<Polynomial>,
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        let base = quotient.ring();
        let mut gens = Vec::new();
        let mut kept_names = Vec::new();
        for (j, g) in generators.into_iter().enumerate() {
            if !g.ring().same(base) {
                return Err(Error::AmbientMismatch {
                    left: base.names().join(","),
                    right: g.ring().names().join(","),
                });
            }
            let g = quotient.normal_form(&g);
            if g.is_constant() {
                continue;
            }
            kept_names.push(
                names
                    .as_ref()
                    .and_then(|n| n.get(j).cloned())
                    .unwrap_or_else(|| format!("Y{}", j + 1)),
            );
            gens.push(g);
        }
        let lay = layout(base, &gens);
        let tg = tag_generators(quotient, &lay.tag_ring, &gens);
        let tag_gb = Arc::new(GroebnerBasis::compute_with(
            &lay.tag_ring,
            &tg,
            &lay.order,
            lay.grading.clone(),
        ));
        let names = kept_names;
        let algebra_ring = Ring::new(&names);
        Ok(SubalgebraPresentation {
            quotient: quotient.clone(),
            generators: gens,
            names,
            algebra_ring,
            tag_ring: lay.tag_ring,
            order: lay.order,
            grading: lay.grading,
            tag_gb,
        })
    }

    /// Greedy minimal generating set drawn from `candidates` in order: a
    /// candidate is kept iff it is not in the algebra generated by the kept
    /// ones, then kept generators lying in the algebra of the others are
    /// dropped.
    pub fn minimized(quotient: &QuotientContext, candidates: Vec<Polynomial>) -> Result<Self> {
        let base = quotient.ring();
        let cands: Vec<Polynomial> = candidates
            .iter()
            .map(|g| quotient.normal_form(g))
            .filter(|g| !g.is_constant())
            .collect();
        let lay = layout(base, &cands);
        let n = base.nvars();
        let mut gb = GroebnerBasis::compute_with(
            &lay.tag_ring,
            &tag_generators(quotient, &lay.tag_ring, &[]),
            &lay.order,
            lay.grading.clone(),
        );
        let mut kept: Vec<usize> = Vec::new();
        for (j, g) in cands.iter().enumerate() {
            let nf = gb.normal_form(&g.extend_to(&lay.tag_ring));
            if nf.is_free_of(0..n) {
                continue;
            }
            gb = gb.extend(&[&Polynomial::var(&lay.tag_ring, n + j) - &g.extend_to(&lay.tag_ring)]);
            kept.push(j);
        }
        let mut gens: Vec<Polynomial> = kept.iter().map(|&j| cands[j].clone()).collect();
        // backward pass
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
            let sub = Self::in_quotient(quotient, others.clone(), None)?;
            if sub.contains(&gens[i]) {
                gens = others;
            }
        }
        Self::in_quotient(quotient, gens, None)
    }

    pub fn quotient(&self) -> &QuotientContext {
        &self.quotient
    }

    /// The ambient polynomial ring `k[x]`.
    pub fn base_ring(&self) -> &Ring {
        self.quotient.ring()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `k[Y_1, …, Y_p]`, the ring in which rewritings are expressed.
    pub fn algebra_ring(&self) -> &Ring {
        &self.algebra_ring
    }

    pub(crate) fn tag_ring(&self) -> &Ring {
        &self.tag_ring
    }

    pub(crate) fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub(crate) fn grading(&self) -> &Grading {
        &self.grading
    }

    pub(crate) fn tag_basis(&self) -> &GroebnerBasis {
        &self.tag_gb
    }

    /// Re-check the tag basis by reducing every S-pair.
    pub fn verify_basis(&self) -> bool {
        self.tag_gb.verify()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Normal form of `h` in `k[x, Y]` modulo the tag ideal.
    pub fn tag_normal_form(&self, h: &Polynomial) -> Polynomial {
        self.tag_gb.normal_form(&h.extend_to(&self.tag_ring))
    }

    /// Express `h` as a polynomial in the generators, if possible.
    pub fn membership(&self, h: &Polynomial) -> Option<Polynomial> {
        let n = self.base_ring().nvars();
        let nf = self.tag_normal_form(h);
        if !nf.is_free_of(0..n) {
            return None;
        }
        let rw = self.from_tags(&nf);
        debug_assert!(self.quotient.equal(&self.evaluate(&rw), h));
        Some(rw)
    }

    pub fn contains(&self, h: &Polynomial) -> bool {
        let n = self.base_ring().nvars();
        self.tag_normal_form(h).is_free_of(0..n)
    }

    pub fn contains_all(&self, hs: &[Polynomial]) -> bool {
        hs.iter().all(|h| self.contains(h))
    }

    /// `k[x, Y]` element free of `x` to `k[Y]`.
    pub(crate) fn from_tags(&self, p: &Polynomial) -> Polynomial {
        let n = self.base_ring().nvars();
        let map: Vec<Option<usize>> = (0..n)
            .map(|_| None)
            .chain((0..self.generators.len()).map(Some))
            .collect();
        p.restrict(&self.algebra_ring, &map)
    }

    /// Substitute the generators into a tag polynomial.
    pub fn evaluate(&self, a: &Polynomial) -> Polynomial {
        let v = a.substitute(self.base_ring(), &self.generators);
        self.quotient.normal_form(&v)
    }

    /// The ideal of relations among the generators, in `k[Y]`.
    pub fn relation_ideal(&self) -> Ideal {
        let n = self.base_ring().nvars();
        let rels: Vec<Polynomial> = self
            .tag_gb
            .elements()
            .iter()
            .filter(|g| g.is_free_of(0..n))
            .map(|g| self.from_tags(g))
            .collect();
        Ideal::new(&self.algebra_ring, rels).expect("same ring")
    }

    /// True when the generators are algebraically independent.
    pub fn is_polynomial_ring(&self) -> bool {
        self.relation_ideal().generators().is_empty()
    }

    pub fn algebra_equal(&self, other: &SubalgebraPresentation) -> bool {
        self.contains_all(&other.generators) && other.contains_all(&self.generators)
    }

    pub fn adjoin(&self, more: &[Polynomial]) -> Result<Self> {
        let mut g = self.generators.clone();
        g.extend(more.iter().cloned());
        let mut names = self.names.clone();
        names.extend((names.len()..g.len()).map(|j| format!("Y{}", j + 1)));
        Self::in_quotient(&self.quotient, g, Some(names))
    }

    /// Whether every variable of the ambient ring lies in the subalgebra.
    pub fn is_everything(&self) -> bool {
        let r = self.base_ring();
        (0..r.nvars()).all(|i| self.contains(&Polynomial::var(r, i)))
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        if names.len() == self.generators.len() {
            self.algebra_ring = Ring::new(&names);
            self.names = names;
        }
        self
    }
}
