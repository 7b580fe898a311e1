use std::sync::Arc;

use lndfact::lnd::{certify_kernel, kernel_generators, Derivation, KernelCertificate, LocalSlice};
use lndfact::problem::Problem;
use lndfact::subalg::SubalgebraPresentation;
use lndfact::{Error, Result};

/// A verified derivation with its kernel and a local slice.
pub struct Prepared {
    pub problem: Problem,
    pub derivation: Derivation,
    pub kernel: Arc<SubalgebraPresentation>,
    pub slice: Option<LocalSlice>,
    pub kernel_source: &'static str,
    pub kernel_certified: bool,
}

pub fn verified(problem: &Problem) -> Result<Derivation> {
    let mut d = problem.derivation()?;
    d.verify_locally_nilpotent(problem.options.nilpotency_cap)?;
    Ok(d)
}

pub fn prepare(problem: Problem) -> Result<Prepared> {
    let d = verified(&problem)?;
    if d.is_zero() {
        let q = d.quotient().clone();
        let ring = d.ring().clone();
        let gens = (0..ring.nvars())
            .map(|i| lndfact::poly::Polynomial::var(&ring, i))
            .collect();
        let a = SubalgebraPresentation::in_quotient(&q, gens, None)?;
        return Ok(Prepared {
            problem,
            derivation: d,
            kernel: Arc::new(a),
            slice: None,
            kernel_source: "ambient",
            kernel_certified: true,
        });
    }
    let (kernel, source, certified) = match problem.kernel_presentation()? {
        Some(a) => {
            if let Some(g) = a.generators().iter().find(|g| !d.apply(g).is_zero()) {
                return Err(Error::Precondition(format!(
                    "kernel generator {g} is not annihilated by the derivation"
                )));
            }
            let a = Arc::new(a);
            let slice = d.find_local_slice(Some(&a), &[])?;
            let cert = certify_kernel(&d, &a, &slice, false)?;
            (a, "given", cert.saturated)
        }
        None => {
            let k = kernel_generators(&d, problem.options.kernel_rounds)?;
            (Arc::new(k.algebra), "computed", k.certified)
        }
    };
    let slice = d.find_local_slice(Some(&kernel), &[])?;
    Ok(Prepared {
        problem,
        derivation: d,
        kernel,
        slice: Some(slice),
        kernel_source: source,
        kernel_certified: certified,
    })
}

/// Full check of a kernel, including the cleared Dixmier images.
pub fn kernel_certificate(p: &Prepared) -> Result<Option<KernelCertificate>> {
    match &p.slice {
        Some(s) => Ok(Some(certify_kernel(&p.derivation, &p.kernel, s, true)?)),
        None => Ok(None),
    }
}
