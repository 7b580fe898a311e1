//! Buchberger's algorithm over free modules `Q[x]^r`.
//!
//! Ideals are the rank-one case. Pairs are pruned with the Gebauer–Möller
//! criteria (the coprime-leading-term criterion only in the ideal case) and
//! selected by sugar degree, so weighted-homogeneous input is processed degree
//! by degree.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::poly::{canonical_cmp, ModuleOrder, Monomial, Polynomial, Rational, Ring};

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Term {
    pub m: Monomial,
    pub pos: u32,
    pub c: Rational,
}

/// Module element as terms sorted descending under the engine's order.
pub(crate) type Vector = Vec<Term>;

pub(crate) fn sort_vector(order: &ModuleOrder, mut terms: Vec<Term>) -> Vector {
    terms.sort_by(|a, b| order.compare(&b.m, b.pos, &a.m, a.pos));
    let mut out: Vector = Vec::with_capacity(terms.len());
    for t in terms {
        if let Some(last) = out.last_mut() {
            if last.pos == t.pos && last.m == t.m {
                last.c += t.c;
                if last.c.is_zero() {
                    out.pop();
                }
                continue;
            }
        }
        if !t.c.is_zero() {
            out.push(t);
        }
    }
    out
}

/// Terms of `p` (all in ring `p.ring()` with the same variable count) placed at `pos`.
pub(crate) fn terms_of(p: &Polynomial, pos: u32) -> impl Iterator<Item = Term> + '_ {
    p.terms().iter().map(move |(m, c)| Term {
        m: m.clone(),
        pos,
        c: c.clone(),
    })
}

pub(crate) fn vector_from_poly(order: &ModuleOrder, p: &Polynomial, pos: u32) -> Vector {
    sort_vector(order, terms_of(p, pos).collect())
}

/// Component of `v` at `pos` as a polynomial of `ring`.
pub(crate) fn component(ring: &Ring, v: &[Term], pos: u32) -> Polynomial {
    let mut terms: Vec<(Monomial, Rational)> = v
        .iter()
        .filter(|t| t.pos == pos)
        .map(|t| (t.m.clone(), t.c.clone()))
        .collect();
    terms.sort_by(|a, b| canonical_cmp(&b.0, &a.0));
    Polynomial::from_sorted_terms(ring, terms)
}

pub(crate) fn scale_vector(v: &mut Vector, c: &Rational) {
    for t in v.iter_mut() {
        t.c *= c;
    }
}

#[derive(Clone)]
struct Elem {
    v: Vector,
    mask: u64,
    sugar: u64,
    active: bool,
}

impl Elem {
    fn lm(&self) -> &Monomial {
        &self.v[0].m
    }
    fn pos(&self) -> u32 {
        self.v[0].pos
    }
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: u32,
    sugar: u64,
}

/// Sugar weights: a weight per ring variable and a shift per module position.
#[derive(Clone, Debug)]
pub(crate) struct Grading {
    pub var_weights: Vec<u32>,
    pub shifts: Vec<u32>,
}

impl Grading {
    pub fn standard(nvars: usize) -> Self {
        Grading {
            var_weights: vec![1; nvars],
            shifts: Vec::new(),
        }
    }

    fn mono(&self, m: &Monomial) -> u64 {
        m.weighted_degree(&self.var_weights)
    }

    fn term(&self, m: &Monomial, pos: u32) -> u64 {
        self.mono(m) + self.shifts.get(pos as usize).copied().unwrap_or(0) as u64
    }

    fn vector(&self, v: &[Term]) -> u64 {
        v.iter().map(|t| self.term(&t.m, t.pos)).max().unwrap_or(0)
    }
}

#[derive(Clone)]
pub(crate) struct Engine {
    order: ModuleOrder,
    grading: Grading,
    ideal_mode: bool,
    basis: Vec<Elem>,
    pairs: Vec<Pair>,
}

impl Engine {
    /// `ideal_mode` enables the coprime criterion, valid only when every
    /// element lives in a single position.
    pub fn new(order: ModuleOrder, grading: Grading, ideal_mode: bool) -> Self {
        Engine {
            order,
            grading,
            ideal_mode,
            basis: Vec::new(),
            pairs: Vec::new(),
        }
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    /// Set the degree shift of a position not yet used by any element.
    pub fn set_shift(&mut self, pos: u32, shift: u32) {
        let p = pos as usize;
        if self.grading.shifts.len() <= p {
            self.grading.shifts.resize(p + 1, 0);
        }
        self.grading.shifts[p] = shift;
        if let ModuleOrder::Elimination { shifts, .. } = &mut self.order {
            if shifts.len() <= p {
                shifts.resize(p + 1, 0);
            }
            shifts[p] = shift;
        }
    }

    fn make_monic(v: &mut Vector) {
        let lc = v[0].c.clone();
        if !lc.is_one() {
            let inv = lc.recip();
            scale_vector(v, &inv);
        }
    }

    /// Insert elements already known to form a Gröbner basis among themselves
    /// (under this order): no pairs between them are generated.
    pub fn add_known_basis(&mut self, vs: Vec<Vector>) {
        for mut v in vs {
            if v.is_empty() {
                continue;
            }
            Self::make_monic(&mut v);
            let sugar = self.grading.vector(&v);
            let mask = v[0].m.divmask();
            self.basis.push(Elem {
                v,
                mask,
                sugar,
                active: true,
            });
        }
        // drop duplicates with divisible leading terms
        let n = self.basis.len();
        for i in 0..n {
            for j in 0..n {
                if i != j
                    && self.basis[i].active
                    && self.basis[j].active
                    && self.basis[i].pos() == self.basis[j].pos()
                    && self.basis[i].lm().divides(self.basis[j].lm())
                    && (self.basis[i].lm() != self.basis[j].lm() || i < j)
                {
                    self.basis[j].active = false;
                }
            }
        }
    }

    /// Add a generator; call [`Engine::complete`] afterwards.
    pub fn add_generator(&mut self, v: Vector) {
        let sugar = self.grading.vector(&v);
        let r = self.reduce(v);
        if !r.is_empty() {
            self.insert(r, sugar);
        }
    }

    fn insert(&mut self, mut v: Vector, sugar: u64) {
        Self::make_monic(&mut v);
        let sugar = sugar.max(self.grading.vector(&v));
        let mask = v[0].m.divmask();
        let idx = self.basis.len();
        self.basis.push(Elem {
            v,
            mask,
            sugar,
            active: true,
        });
        self.update(idx);
    }

    fn update(&mut self, h: usize) {
        let hlm = self.basis[h].lm().clone();
        let hpos = self.basis[h].pos();
        let hsugar = self.basis[h].sugar;
        let hdeg = self.grading.mono(&hlm);

        let mut c: Vec<(usize, Monomial)> = Vec::new();
        for (g, e) in self.basis.iter().enumerate() {
            if g != h && e.active && e.pos() == hpos {
                c.push((g, hlm.lcm(e.lm())));
            }
        }
        let mut d: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g1, l1)) = c.pop() {
            let coprime = self.ideal_mode && hlm.is_coprime(self.basis[g1].lm());
            if coprime
                || (!c.iter().any(|(_, l2)| l2.divides(&l1))
                    && !d.iter().any(|(_, l2)| l2.divides(&l1)))
            {
                d.push((g1, l1));
            }
        }
        let ideal_mode = self.ideal_mode;
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if p.pos != hpos || !hlm.divides(&p.lcm) {
                return true;
            }
            let li = hlm.lcm(basis[p.i].lm());
            let lj = hlm.lcm(basis[p.j].lm());
            li == p.lcm || lj == p.lcm
        });
        for (g, l) in d {
            if ideal_mode && hlm.is_coprime(self.basis[g].lm()) {
                continue;
            }
            let lg = self.grading.mono(&l);
            let ge = &self.basis[g];
            let sugar = (hsugar + lg - hdeg).max(ge.sugar + lg - self.grading.mono(ge.lm()));
            self.pairs.push(Pair {
                i: g,
                j: h,
                lcm: l,
                pos: hpos,
                sugar,
            });
        }
        for g in 0..self.basis.len() {
            if g != h
                && self.basis[g].active
                && self.basis[g].pos() == hpos
                && hlm.divides(self.basis[g].lm())
            {
                self.basis[g].active = false;
            }
        }
    }

    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = &self.order;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let a = &self.pairs[k];
            let b = &self.pairs[best];
            let cmp = a
                .sugar
                .cmp(&b.sugar)
                .then_with(|| order.compare(&a.lcm, a.pos, &b.lcm, b.pos));
            if cmp == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Vector {
        let a = &self.basis[p.i];
        let b = &self.basis[p.j];
        let ua = a.lm().quotient_of(&p.lcm).unwrap();
        let ub = b.lm().quotient_of(&p.lcm).unwrap();
        let left = mul_tail(&a.v[1..], &ua, &Rational::one());
        self.sub_mul(&left, &b.v[1..], &ub, &Rational::one())
    }

    /// `p - c · m · g`
    fn sub_mul(&self, p: &[Term], g: &[Term], m: &Monomial, c: &Rational) -> Vector {
        let mut out = Vec::with_capacity(p.len() + g.len());
        let mut i = 0;
        let mut gi = g.iter().map(|t| (t.m.mul(m), t.pos, &t.c)).peekable();
        while i < p.len() {
            let Some((gm, gpos, _)) = gi.peek() else {
                break;
            };
            match self.order.compare(&p[i].m, p[i].pos, gm, *gpos) {
                Ordering::Greater => {
                    out.push(p[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (gm, gpos, gc) = gi.next().unwrap();
                    out.push(Term {
                        m: gm,
                        pos: gpos,
                        c: -(gc * c),
                    });
                }
                Ordering::Equal => {
                    let (_, _, gc) = gi.next().unwrap();
                    let nc = &p[i].c - gc * c;
                    if !nc.is_zero() {
                        out.push(Term {
                            m: p[i].m.clone(),
                            pos: p[i].pos,
                            c: nc,
                        });
                    }
                    i += 1;
                }
            }
        }
        out.extend(p[i..].iter().cloned());
        for (gm, gpos, gc) in gi {
            out.push(Term {
                m: gm,
                pos: gpos,
                c: -(gc * c),
            });
        }
        out
    }

    fn find_reducer(&self, m: &Monomial, pos: u32) -> Option<usize> {
        let mask = m.divmask();
        let mut best: Option<usize> = None;
        for (k, e) in self.basis.iter().enumerate() {
            if !e.active || e.pos() != pos || e.mask & !mask != 0 || !e.lm().divides(m) {
                continue;
            }
            match best {
                Some(b) if self.basis[b].v.len() <= e.v.len() => {}
                _ => best = Some(k),
            }
        }
        best
    }

    /// Full reduction of `v` against the current basis.
    pub fn reduce(&self, v: Vector) -> Vector {
        let mut p = v;
        let mut head = 0;
        let mut out: Vector = Vec::new();
        while head < p.len() {
            let t = &p[head];
            match self.find_reducer(&t.m, t.pos) {
                Some(k) => {
                    let g = &self.basis[k];
                    let q = g.lm().quotient_of(&t.m).unwrap();
                    let c = t.c.clone();
                    p = self.sub_mul(&p[head + 1..], &g.v[1..], &q, &c);
                    head = 0;
                }
                None => {
                    out.push(p[head].clone());
                    head += 1;
                }
            }
        }
        out
    }

    /// Run Buchberger until all pairs are processed.
    pub fn complete(&mut self) {
        while let Some(pair) = self.select_pair() {
            let s = self.spoly(&pair);
            if s.is_empty() {
                continue;
            }
            let r = self.reduce(s);
            if !r.is_empty() {
                self.insert(r, pair.sugar);
            }
        }
    }

    /// Leading-term-minimal elements of the basis (a Gröbner basis, not interreduced).
    pub fn minimal_basis(&self) -> Vec<&Vector> {
        self.basis
            .iter()
            .filter(|e| e.active)
            .map(|e| &e.v)
            .collect()
    }

    /// The unique reduced Gröbner basis, sorted ascending by leading term.
    pub fn reduced_basis(&self) -> Vec<Vector> {
        let mut tmp = Engine::new(self.order.clone(), self.grading.clone(), self.ideal_mode);
        let mut act: Vec<Vector> = self.minimal_basis().into_iter().cloned().collect();
        act.sort_by(|a, b| self.order.compare(&a[0].m, a[0].pos, &b[0].m, b[0].pos));
        act.dedup_by(|a, b| a[0].m == b[0].m && a[0].pos == b[0].pos);
        tmp.add_known_basis(act.clone());
        let mut out = Vec::with_capacity(act.len());
        for (k, v) in act.iter().enumerate() {
            tmp.basis[k].active = false;
            let mut r = vec![v[0].clone()];
            r.extend(tmp.reduce(v[1..].to_vec()));
            tmp.basis[k].active = true;
            out.push(r);
        }
        out
    }

    /// Check that every S-vector of the basis reduces to zero.
    pub fn verify(&self) -> bool {
        let act: Vec<usize> = (0..self.basis.len())
            .filter(|&k| self.basis[k].active)
            .collect();
        for (a, &i) in act.iter().enumerate() {
            for &j in &act[a + 1..] {
                let (ei, ej) = (&self.basis[i], &self.basis[j]);
                if ei.pos() != ej.pos() {
                    continue;
                }
                let pair = Pair {
                    i,
                    j,
                    lcm: ei.lm().lcm(ej.lm()),
                    pos: ei.pos(),
                    sugar: 0,
                };
                if !self.reduce(self.spoly(&pair)).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

fn mul_tail(v: &[Term], m: &Monomial, c: &Rational) -> Vector {
    v.iter()
        .map(|t| Term {
            m: t.m.mul(m),
            pos: t.pos,
            c: &t.c * c,
        })
        .collect()
}

/// Check that `basis` (sorted vectors) is a Gröbner basis under `order`.
pub(crate) fn is_groebner_basis(order: &ModuleOrder, basis: &[Vector], ideal_mode: bool) -> bool {
    let nvars = basis
        .iter()
        .find_map(|v| v.first().map(|t| t.m.nvars()))
        .unwrap_or(0);
    let mut e = Engine::new(order.clone(), Grading::standard(nvars), ideal_mode);
    e.add_known_basis(basis.to_vec());
    for el in e.basis.iter_mut() {
        el.active = true;
    }
    e.verify()
}
