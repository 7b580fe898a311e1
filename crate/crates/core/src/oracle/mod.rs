//! Degree-truncated linear algebra over `Q`, independent of Gröbner bases.
//!
//! Every question is reduced to a finite matrix with integer entries and
//! solved by fraction-free elimination.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::groebner::QuotientContext;
use crate::lnd::Derivation;
use crate::poly::{Monomial, Polynomial};

/// Standard monomials of total degree at most `degree`.
#[derive(Clone, Debug)]
pub struct TruncatedSpace {
    quotient: QuotientContext,
    degree: u32,
    basis: Vec<Polynomial>,
}

fn exponent_vectors(nvars: usize, degree: u32) -> Vec<Vec<u16>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, degree, &mut vec![0; nvars], &mut out);
    out.sort_by_key(|e| e.iter().map(|&x| x as u32).sum::<u32>());
    out
}

impl TruncatedSpace {
    pub fn new(quotient: &QuotientContext, degree: u32) -> Self {
        let ring = quotient.ring();
        let basis = exponent_vectors(ring.nvars(), degree)
            .into_iter()
            .map(|e| Polynomial::monomial(ring, Monomial::from_exponents(&e), BigRational::one()))
            .filter(|m| quotient.normal_form(m) == *m)
            .collect();
        TruncatedSpace {
            quotient: quotient.clone(),
            degree,
            basis,
        }
    }

    pub fn quotient(&self) -> &QuotientContext {
        &self.quotient
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

type SparseVec = BTreeMap<usize, BigInt>;

/// Coordinates of polynomials in a growing monomial index.
#[derive(Default)]
struct Coordinates {
    index: HashMap<Monomial, usize>,
}

impl Coordinates {
    /// Integer coordinate vector of a nonzero rational multiple of `p`.
    fn vector(&mut self, p: &Polynomial) -> SparseVec {
        let mut den = BigInt::one();
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
        let mut v = SparseVec::new();
        for (m, c) in p.terms() {
            let next = self.index.len();
            let i = *self.index.entry(m.clone()).or_insert(next);
            v.insert(i, c.numer() * (&den / c.denom()));
        }
        v
    }
}

fn combine(a: &BigInt, u: &SparseVec, b: &BigInt, v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (i, x) in u {
        out.insert(*i, a * x);
    }
    for (i, y) in v {
        let e = out.entry(*i).or_insert_with(BigInt::zero);
        *e -= b * y;
        if e.is_zero() {
            out.remove(i);
        }
    }
    out
}

fn normalize(v: &mut SparseVec, w: &mut SparseVec) {
    let mut g = BigInt::zero();
    for x in v.values().chain(w.values()) {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.values_mut().chain(w.values_mut()) {
        *x /= &g;
    }
}

/// Fraction-free column elimination tracking combinations of the inputs.
#[derive(Default)]
struct Eliminator {
    pivots: BTreeMap<usize, (SparseVec, SparseVec)>,
}

impl Eliminator {
    /// Reduce `v` (with history `w`); returns the reduced pair.
    fn reduce(&self, mut v: SparseVec, mut w: SparseVec) -> (SparseVec, SparseVec) {
        loop {
            let lead = match v.iter().next_back() {
                Some((&i, _)) => i,
                None => return (v, w),
            };
            let Some((pv, pw)) = self.pivots.get(&lead) else {
                return (v, w);
            };
            let a = v[&lead].clone();
            let b = pv[&lead].clone();
            let g = a.gcd(&b);
            let (a, b) = (&a / &g, &b / &g);
            v = combine(&b, &v, &a, pv);
            w = combine(&b, &w, &a, pw);
            normalize(&mut v, &mut w);
        }
    }

    /// Insert `v`; returns the history when `v` reduces to zero.
    fn insert(&mut self, v: SparseVec, w: SparseVec) -> Option<SparseVec> {
        let (v, w) = self.reduce(v, w);
        match v.iter().next_back() {
            Some((&lead, _)) => {
                self.pivots.insert(lead, (v, w));
                None
            }
            None => Some(w),
        }
    }
}

fn unit(j: usize) -> SparseVec {
    let mut w = SparseVec::new();
    w.insert(j, BigInt::one());
    w
}

fn from_combination(basis: &[Polynomial], w: &SparseVec) -> Polynomial {
    let mut acc = Polynomial::zero(basis[0].ring());
    for (j, c) in w {
        acc = &acc + &basis[*j].scale(&BigRational::from_integer(c.clone()));
    }
    let acc = acc.primitive();
    if acc.leading_coefficient().is_some_and(|c| c.is_negative()) {
        -acc
    } else {
        acc
    }
}

/// Basis of `{p : deg p ≤ d, D^{n+1} p = 0}`.
pub fn truncated_kernel_power(d: &Derivation, n: usize, degree: u32) -> Vec<Polynomial> {
    let space = TruncatedSpace::new(d.quotient(), degree);
    let mut coords = Coordinates::default();
    let mut elim = Eliminator::default();
    let mut out = Vec::new();
    for (j, m) in space.basis().iter().enumerate() {
        let img = d.apply_power(m, n + 1);
        if let Some(w) = elim.insert(coords.vector(&img), unit(j)) {
            out.push(from_combination(space.basis(), &w));
        }
    }
    out
}

/// Whether `h` lies in the span of `c^α·g` over monomials `c^α` in
/// `coefficients` and `g ∈ generators` with degree bound `deg c^α + deg g ≤ d`.
/// A `true` answer is always correct; `false` may be a truncation artefact.
pub fn truncated_membership(
    quotient: &QuotientContext,
    h: &Polynomial,
    generators: &[Polynomial],
    coefficients: &[Polynomial],
    degree: u32,
) -> bool {
    let h = quotient.normal_form(h);
    if h.is_zero() {
        return true;
    }
    let cdeg: Vec<u32> = coefficients
        .iter()
        .map(|c| c.total_degree().unwrap_or(0))
        .collect();
    let mut products: Vec<Polynomial> = Vec::new();
    // monomials in the coefficients, bounded by degree
    let mut frontier: Vec<(Polynomial, u32, usize)> =
        vec![(Polynomial::one(quotient.ring()), 0, 0)];
    while let Some((p, dg, start)) = frontier.pop() {
        products.push(p.clone());
        for k in start..coefficients.len() {
            if cdeg[k] == 0 {
                continue;
            }
            let nd = dg + cdeg[k];
            if nd <= degree {
                frontier.push((quotient.mul(&p, &coefficients[k]), nd, k));
            }
        }
    }
    let mut coords = Coordinates::default();
    let mut elim = Eliminator::default();
    let mut count = 0;
    for g in generators {
        let gd = g.total_degree().unwrap_or(0);
        for p in &products {
            if p.total_degree().unwrap_or(0) + gd > degree {
                continue;
            }
            let v = quotient.mul(p, g);
            if v.is_zero() {
                continue;
            }
            elim.insert(coords.vector(&v), unit(count));
            count += 1;
        }
    }
    let (rest, _) = elim.reduce(coords.vector(&h), SparseVec::new());
    rest.is_empty()
}

/// Mutual containment of spans, each checked up to `degree`.
pub fn same_span(
    quotient: &QuotientContext,
    a: &[Polynomial],
    b: &[Polynomial],
    degree: u32,
) -> bool {
    a.iter()
        .all(|p| truncated_membership(quotient, p, b, &[], degree))
        && b.iter()
            .all(|p| truncated_membership(quotient, p, a, &[], degree))
}
