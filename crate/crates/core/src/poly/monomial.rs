use std::fmt;

use smallvec::SmallVec;

/// Dense exponent vector, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[u16; 16]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[var] = 1;
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u16 {
        self.0[var]
    }

    pub fn set_exponent(&mut self, var: usize, e: u16) {
        self.0[var] = e;
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a <= b)
    }

    /// `other / self`, if it exists.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for (&a, &b) in self.0.iter().zip(other.0.iter()) {
            if a > b {
                return None;
            }
            out.push(b - a);
        }
        Some(Monomial(out))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|&a| u16::try_from(a as u32 * e).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Bit `i` is set when variable `i mod 64` occurs; used to reject divisibility quickly.
    pub fn divmask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                mask |= 1 << (i % 64);
            }
        }
        mask
    }

    /// Re-embed into a ring with `nvars` variables, mapping variable `i` to `map[i]`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Monomial {
        let mut m = Monomial::one(nvars);
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                m.0[map[i]] += e;
            }
        }
        m
    }

    /// Pad with zero exponents (or truncate trailing zero exponents) to `nvars`.
    pub fn resize(&self, nvars: usize) -> Monomial {
        let mut v = self.0.clone();
        if nvars < v.len() {
            debug_assert!(v[nvars..].iter().all(|&e| e == 0));
        }
        v.resize(nvars, 0);
        Monomial(v)
    }

    /// True if all exponents in `range` are zero.
    pub fn is_free_of(&self, range: std::ops::Range<usize>) -> bool {
        self.0[range].iter().all(|&e| e == 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}
