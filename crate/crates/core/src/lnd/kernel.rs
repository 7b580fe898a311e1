use std::sync::Arc;

use super::{Derivation, LocalSlice};
use crate::poly::Polynomial;
use crate::subalg::{SubalgebraPresentation, SubmoduleOverA};
use crate::{Error, Result};

/// Generators of `ker D` and how they were obtained.
#[derive(Clone, Debug)]
pub struct KernelResult {
    pub algebra: SubalgebraPresentation,
    pub slice: LocalSlice,
    /// `fB ∩ A = fA` was reached within the cap.
    pub certified: bool,
    pub rounds: usize,
}

/// Checks performed on a claimed kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelCertificate {
    /// Every generator is annihilated by `D`.
    pub annihilated: bool,
    /// `f ∈ A` and `fB ∩ A = fA` for `f = Dr`.
    pub saturated: bool,
    /// `f^{d_i}·π_r(x_i) ∈ A` for every variable, when requested.
    pub contains_dixmier_images: Option<bool>,
}

impl KernelCertificate {
    /// Together with the Dixmier images, saturation proves `A = ker D`.
    pub fn is_complete(&self) -> bool {
        self.annihilated && self.saturated && self.contains_dixmier_images == Some(true)
    }
}

fn dixmier_seeds(d: &Derivation, slice: &LocalSlice) -> Result<Vec<Polynomial>> {
    let w = d
        .witnesses()
        .ok_or_else(|| Error::Precondition("derivation not verified locally nilpotent".into()))?
        .to_vec();
    let ring = d.ring().clone();
    let mut out = Vec::new();
    for (i, &e) in w.iter().enumerate() {
        let x = Polynomial::var(&ring, i);
        let s = if e <= 1 {
            d.quotient().normal_form(&x)
        } else {
            d.local_dixmier(&slice.r, &slice.f, &x, e - 1)
        };
        if !s.is_constant() {
            out.push(s);
        }
    }
    Ok(out)
}

/// Generators of `ker D`: seed with `f = Dr` and the cleared Dixmier images
/// `f^{d_i}·π_r(x_i)`, then adjoin `{h : f·h ∈ A_i}` until `fB ∩ A_i = fA_i`.
pub fn kernel_generators(d: &Derivation, cap: usize) -> Result<KernelResult> {
    if !d.is_verified() {
        return Err(Error::Precondition(
            "derivation not verified locally nilpotent".into(),
        ));
    }
    if d.is_zero() {
        return Err(Error::NoLocalSlice);
    }
    let slice = d.find_local_slice(None, &[])?;
    let q = d.quotient().clone();
    let mut seeds = vec![slice.f.clone()];
    let mut dix = dixmier_seeds(d, &slice)?;
    dix.sort_by(|a, b| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| a.len().cmp(&b.len()))
    });
    seeds.extend(dix);
    let mut alg = SubalgebraPresentation::minimized(&q, seeds)?;
    let mut rounds = 0;
    loop {
        let a = Arc::new(alg.clone());
        let m = SubmoduleOverA::unit(a);
        let next = m.saturation_step(&slice.f)?;
        let fresh: Vec<Polynomial> = next.generators()[m.len()..].to_vec();
        if fresh.is_empty() {
            return Ok(KernelResult {
                algebra: alg,
                slice,
                certified: true,
                rounds,
            });
        }
        if rounds >= cap {
            return Ok(KernelResult {
                algebra: alg,
                slice,
                certified: false,
                rounds,
            });
        }
        rounds += 1;
        let mut cands: Vec<Polynomial> = fresh.into_iter().map(|g| g.primitive()).collect();
        cands.extend(alg.generators().iter().cloned());
        cands.sort_by(|a, b| {
            a.total_degree()
                .cmp(&b.total_degree())
                .then_with(|| a.len().cmp(&b.len()))
        });
        alg = SubalgebraPresentation::minimized(&q, cands)?;
    }
}

/// Check a claimed kernel `A` against `D` and a local slice.
pub fn certify_kernel(
    d: &Derivation,
    a: &Arc<SubalgebraPresentation>,
    slice: &LocalSlice,
    with_dixmier: bool,
) -> Result<KernelCertificate> {
    let annihilated = a.generators().iter().all(|g| d.apply(g).is_zero());
    let saturated = annihilated
        && a.contains(&slice.f)
        && SubmoduleOverA::unit(a.clone()).is_saturated(&slice.f)?;
    let contains_dixmier_images = if with_dixmier {
        Some(dixmier_seeds(d, slice)?.iter().all(|s| a.contains(s)))
    } else {
        None
    };
    Ok(KernelCertificate {
        annihilated,
        saturated,
        contains_dixmier_images,
    })
}
