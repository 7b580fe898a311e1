//! Locally nilpotent derivations: application, nilpotency witnesses, the
//! degree function, local slices, Dixmier maps, kernels, image ideals and
//! fixed-point ideals.

mod kernel;

use std::sync::Arc;

pub use kernel::{certify_kernel, kernel_generators, KernelCertificate, KernelResult};

use crate::groebner::{Ideal, QuotientContext};
use crate::poly::{Monomial, Polynomial, Rational, Ring};
use crate::subalg::{SubalgebraPresentation, SubmoduleOverA};
use crate::{Error, Result};

/// Default cap on iterated applications when verifying nilpotency.
pub const DEFAULT_NILPOTENCY_CAP: usize = 512;

/// A derivation of `B = k[x]/J`, given by the images of the variables.
#[derive(Clone, Debug)]
pub struct Derivation {
    quotient: QuotientContext,
    images: Vec<Polynomial>,
    witnesses: Option<Vec<u32>>,
}

/// `r` with `D²r = 0 ≠ Dr`, and `f = Dr`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalSlice {
    pub r: Polynomial,
    pub f: Polynomial,
}

impl Derivation {
    pub fn new(ring: &Ring, images: Vec<Polynomial>) -> Result<Self> {
        Self::on_quotient(&QuotientContext::trivial(ring), images)
    }

    /// Derivation of `ring/relations`; fails unless every relation maps into the relation ideal.
    pub fn on_quotient(quotient: &QuotientContext, images: Vec<Polynomial>) -> Result<Self> {
        let ring = quotient.ring();
        if images.len() != ring.nvars() {
            return Err(Error::RankMismatch {
                expected: ring.nvars(),
                got: images.len(),
            });
        }
        for g in &images {
            if !g.ring().same(ring) {
                return Err(Error::AmbientMismatch {
                    left: ring.names().join(","),
                    right: g.ring().names().join(","),
                });
            }
        }
        let images = images.iter().map(|g| quotient.normal_form(g)).collect();
        let d = Derivation {
            quotient: quotient.clone(),
            images,
            witnesses: None,
        };
        for rel in quotient.relations().generators() {
            if !d.quotient.is_zero(&d.apply_raw(rel)) {
                return Err(Error::IllDefined {
                    relation: rel.to_string(),
                });
            }
        }
        Ok(d)
    }

    pub fn ring(&self) -> &Ring {
        self.quotient.ring()
    }

    pub fn quotient(&self) -> &QuotientContext {
        &self.quotient
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Polynomial::is_zero)
    }

    /// Leibniz extension without reduction modulo the relations.
    fn apply_raw(&self, p: &Polynomial) -> Polynomial {
        let mut terms: Vec<(Monomial, Rational)> = Vec::new();
        for (m, c) in p.terms() {
            for (i, img) in self.images.iter().enumerate() {
                let e = m.exponent(i);
                if e == 0 || img.is_zero() {
                    continue;
                }
                let mut mm = m.clone();
                mm.set_exponent(i, e - 1);
                let ce = c * Rational::from_integer(e.into());
                for (im, ic) in img.terms() {
                    terms.push((mm.mul(im), &ce * ic));
                }
            }
        }
        Polynomial::from_terms(self.ring(), terms)
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        self.quotient.normal_form(&self.apply_raw(p))
    }

    pub fn apply_power(&self, p: &Polynomial, n: usize) -> Polynomial {
        let mut q = self.quotient.normal_form(p);
        for _ in 0..n {
            if q.is_zero() {
                break;
            }
            q = self.apply(&q);
        }
        q
    }

    /// Minimal `e_i ≤ cap` with `D^{e_i} x_i = 0`, for every variable.
    pub fn verify_locally_nilpotent(&mut self, cap: usize) -> Result<Vec<u32>> {
        if let Some(w) = &self.witnesses {
            return Ok(w.clone());
        }
        let ring = self.ring().clone();
        let mut out = Vec::with_capacity(ring.nvars());
        for i in 0..ring.nvars() {
            let mut q = self.quotient.normal_form(&Polynomial::var(&ring, i));
            let mut e = 0u32;
            while !q.is_zero() {
                if e as usize >= cap {
                    return Err(Error::CapExceeded {
                        what: format!("local nilpotency of D on {}", ring.name(i)),
                        cap,
                    });
                }
                q = self.apply(&q);
                e += 1;
            }
            out.push(e);
        }
        self.witnesses = Some(out.clone());
        Ok(out)
    }

    pub fn witnesses(&self) -> Option<&[u32]> {
        self.witnesses.as_deref()
    }

    pub fn is_verified(&self) -> bool {
        self.witnesses.is_some()
    }

    /// `deg_D p`, or `None` for `p = 0`.
    pub fn degree(&self, p: &Polynomial) -> Option<u32> {
        let mut q = self.quotient.normal_form(p);
        if q.is_zero() {
            return None;
        }
        let bound = self.degree_bound(&q);
        let mut n = 0u32;
        loop {
            let next = self.apply(&q);
            if next.is_zero() {
                return Some(n);
            }
            n += 1;
            assert!(
                (n as u64) <= bound,
                "deg_D exceeded its bound; derivation not locally nilpotent"
            );
            q = next;
        }
    }

    /// Upper bound for `deg_D p` from the witnesses.
    fn degree_bound(&self, p: &Polynomial) -> u64 {
        match &self.witnesses {
            Some(w) => p
                .terms()
                .iter()
                .map(|(m, _)| {
                    m.exponents()
                        .iter()
                        .zip(w)
                        .map(|(&a, &e)| a as u64 * (e.max(1) as u64 - 1))
                        .sum::<u64>()
                })
                .max()
                .unwrap_or(0),
            None => (DEFAULT_NILPOTENCY_CAP * DEFAULT_NILPOTENCY_CAP) as u64,
        }
    }

    pub fn is_local_slice(&self, r: &Polynomial) -> bool {
        let dr = self.apply(r);
        !dr.is_zero() && self.apply(&dr).is_zero()
    }

    /// The first local slice in the search order: variables, then `D^j x_i`
    /// by variable and decreasing `j`, then `extra`. Factors of the slice that
    /// lie in `kernel` (when given) are divided out.
    pub fn find_local_slice(
        &self,
        kernel: Option<&SubalgebraPresentation>,
        extra: &[Polynomial],
    ) -> Result<LocalSlice> {
        if self.is_zero() {
            return Err(Error::NoLocalSlice);
        }
        let ring = self.ring().clone();
        let mut pool: Vec<Polynomial> = (0..ring.nvars())
            .map(|i| Polynomial::var(&ring, i))
            .collect();
        for i in 0..ring.nvars() {
            let mut chain = vec![self.quotient.normal_form(&Polynomial::var(&ring, i))];
            loop {
                let next = self.apply(chain.last().unwrap());
                if next.is_zero() || chain.len() > DEFAULT_NILPOTENCY_CAP {
                    break;
                }
                chain.push(next);
            }
            // chain[j] = D^j x_i; skip j = 0 (already a candidate)
            pool.extend(chain.into_iter().skip(1).rev());
        }
        pool.extend(extra.iter().cloned());
        for r in pool {
            if self.is_local_slice(&r) {
                let r = match kernel {
                    Some(a) => strip_kernel_factors(&r, a),
                    None => r,
                };
                let f = self.apply(&r);
                return Ok(LocalSlice { r, f });
            }
        }
        Err(Error::NoLocalSlice)
    }

    /// `π_s(b) = Σ (−1)^i/i! · D^i b · s^i` for a slice `s`.
    pub fn dixmier_map(&self, s: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        let ds = self.apply(s);
        if !ds.is_one() {
            return Err(Error::NotASlice {
                element: s.to_string(),
                image: ds.to_string(),
            });
        }
        Ok(self.local_dixmier(s, &Polynomial::one(self.ring()), b, 0))
    }

    /// `f^d · π_r(b)` for a local slice `r` with `Dr = f` and `d ≥ deg_D b`:
    /// `Σ (−1)^i/i! · D^i b · r^i · f^{d−i}`.
    pub(crate) fn local_dixmier(
        &self,
        r: &Polynomial,
        f: &Polynomial,
        b: &Polynomial,
        d: u32,
    ) -> Polynomial {
        let mut acc = Polynomial::zero(self.ring());
        let mut dib = self.quotient.normal_form(b);
        let mut i = 0u32;
        let mut fact = Rational::from_integer(1.into());
        while !dib.is_zero() {
            let sign = if i % 2 == 0 {
                fact.recip()
            } else {
                -fact.recip()
            };
            let fpow = if d >= i {
                f.pow(d - i)
            } else {
                Polynomial::one(self.ring())
            };
            let term = &(&dib * &r.pow(i)) * &fpow;
            acc = &acc + &term.scale(&sign);
            dib = self.apply(&dib);
            i += 1;
            fact *= Rational::from_integer(i.into());
        }
        self.quotient.normal_form(&acc)
    }

    /// The ideal `(DB)` of `B`, generated by the images of the variables.
    pub fn fixed_point_ideal(&self) -> Ideal {
        let mut gens: Vec<Polynomial> = self
            .images
            .iter()
            .filter(|g| !g.is_zero())
            .cloned()
            .collect();
        gens.extend(self.quotient.relations().generators().iter().cloned());
        Ideal::new(self.ring(), gens).expect("same ring")
    }

    /// Whether `D` maps every generator of `alg` back into `alg`.
    pub fn restricts_to(&self, alg: &SubalgebraPresentation) -> bool {
        alg.generators()
            .iter()
            .all(|g| alg.contains(&self.apply(g)))
    }
}

fn strip_kernel_factors(r: &Polynomial, a: &SubalgebraPresentation) -> Polynomial {
    let mut r = r.clone();
    loop {
        let mut changed = false;
        for g in a.generators() {
            if g.is_constant() {
                continue;
            }
            if let Ok(Some(q)) = r.divide_exact(g) {
                if !q.is_constant() {
                    r = q;
                    changed = true;
                }
            }
        }
        if !changed {
            return r.primitive();
        }
    }
}

/// Image ideals `I_n = D^n F_n`, as ideals of `A` given by generators.
#[derive(Clone, Debug)]
pub struct ImageIdealFamily {
    pub levels: Vec<Vec<Polynomial>>,
}

impl ImageIdealFamily {
    pub fn level(&self, n: usize) -> Option<&[Polynomial]> {
        self.levels.get(n).map(Vec::as_slice)
    }

    /// `I_{n+1} ⊆ I_n` for every computed `n`.
    pub fn is_descending(&self, a: &Arc<SubalgebraPresentation>) -> bool {
        self.levels.windows(2).all(|w| {
            let upper = SubmoduleOverA::new(a.clone(), w[0].clone());
            w[1].iter().all(|g| upper.contains(g))
        })
    }
}

/// `I_n = D^n F_n` given generators of `F_n`, minimized as an ideal of `A`.
pub fn image_ideal(d: &Derivation, fnm: &SubmoduleOverA, n: usize) -> Vec<Polynomial> {
    let gens: Vec<Polynomial> = fnm
        .generators()
        .iter()
        .map(|m| d.apply_power(m, n))
        .filter(|g| !g.is_zero())
        .collect();
    minimize_ideal(fnm.algebra(), gens)
}

/// The plinth ideal `I_1 = D F_1`.
pub fn plinth_ideal(d: &Derivation, f1: &SubmoduleOverA) -> Vec<Polynomial> {
    image_ideal(d, f1, 1)
}

/// Minimal generators of the ideal of `A` generated by `gens`, lowest degree first.
pub fn minimize_ideal(
    a: &Arc<SubalgebraPresentation>,
    mut gens: Vec<Polynomial>,
) -> Vec<Polynomial> {
    gens.sort_by(|x, y| {
        x.total_degree()
            .cmp(&y.total_degree())
            .then_with(|| x.len().cmp(&y.len()))
    });
    let gens: Vec<Polynomial> = gens.into_iter().map(|g| normalize_sign(&g)).collect();
    SubmoduleOverA::new(a.clone(), gens)
        .minimize()
        .generators()
        .to_vec()
}

fn normalize_sign(g: &Polynomial) -> Polynomial {
    g.primitive()
}

/// Whether `h ∈ Σ a_j A` for `h ∈ A`.
pub fn ideal_membership_in_a(
    h: &Polynomial,
    ideal: &[Polynomial],
    a: &Arc<SubalgebraPresentation>,
) -> Result<bool> {
    if !a.contains(h) {
        return Err(Error::Precondition(format!("{h} does not lie in A")));
    }
    if h.is_zero() {
        return Ok(true);
    }
    Ok(SubmoduleOverA::new(a.clone(), ideal.to_vec()).contains(h))
}

#[cfg(test)]
mod tests;
