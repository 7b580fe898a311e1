use std::cmp::Ordering;

use super::Monomial;

/// A monomial order on exponent vectors.
///
/// All variants are total, multiplicative, and have `1` as the minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GradedLex,
    GradedRevLex,
    /// Weighted degree first, ties broken by reverse lexicographic order.
    /// Weights must be positive.
    Weighted(Vec<u32>),
    /// Consecutive blocks of variables `(size, order)`, compared left to right.
    Block(Vec<(usize, MonomialOrder)>),
}

#[inline]
fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

#[inline]
fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for i in 0..a.len() {
        if a[i] != b[i] {
            return a[i].cmp(&b[i]);
        }
    }
    Ordering::Equal
}

#[inline]
fn degree(a: &[u16]) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}

#[inline]
fn wdegree(a: &[u16], w: &[u32]) -> u64 {
    a.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum()
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.compare_slices(a.exponents(), b.exponents(), 0, 0)
    }

    /// Block order eliminating the first `k` variables of an `n`-variable ring,
    /// graded reverse lex inside each block.
    pub fn elimination(k: usize, n: usize) -> MonomialOrder {
        MonomialOrder::Block(vec![
            (k, MonomialOrder::GradedRevLex),
            (n - k, MonomialOrder::GradedRevLex),
        ])
    }

    /// Compare with an extra degree `sa`/`sb` added to the graded part that is
    /// examined last (the final block for block orders). Used for shifted
    /// module orders.
    pub fn compare_slices(&self, a: &[u16], b: &[u16], sa: u64, sb: u64) -> Ordering {
        match self {
            MonomialOrder::Lex => sa.cmp(&sb).then_with(|| lex(a, b)),
            MonomialOrder::GradedLex => (degree(a) + sa)
                .cmp(&(degree(b) + sb))
                .then_with(|| lex(a, b)),
            MonomialOrder::GradedRevLex => (degree(a) + sa)
                .cmp(&(degree(b) + sb))
                .then_with(|| revlex(a, b)),
            MonomialOrder::Weighted(w) => (wdegree(a, w) + sa)
                .cmp(&(wdegree(b, w) + sb))
                .then_with(|| revlex(a, b)),
            MonomialOrder::Block(blocks) => {
                let mut start = 0;
                let last = blocks.len().saturating_sub(1);
                for (i, (size, inner)) in blocks.iter().enumerate() {
                    let end = start + size;
                    let (xa, xb) = if i == last { (sa, sb) } else { (0, 0) };
                    let c = inner.compare_slices(&a[start..end], &b[start..end], xa, xb);
                    if c != Ordering::Equal {
                        return c;
                    }
                    start = end;
                }
                Ordering::Equal
            }
        }
    }

    /// Number of variables the order is defined for, when fixed by the order itself.
    pub fn arity(&self) -> Option<usize> {
        match self {
            MonomialOrder::Weighted(w) => Some(w.len()),
            MonomialOrder::Block(b) => Some(b.iter().map(|(s, _)| *s).sum()),
            _ => None,
        }
    }
}

/// Orders on the terms `m·e_pos` of a free module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    /// Position first (lower index is larger), then the ring order.
    PositionOverTerm(MonomialOrder),
    /// Ring order first, then position (lower index is larger).
    TermOverPosition(MonomialOrder),
    /// Positions `< head` dominate everything else and are compared
    /// position-over-term with `head_order`. The remaining positions are
    /// compared with `tail` where `shifts[pos]` is added to the degree of the
    /// final graded block, and finally by position.
    Elimination {
        head: u32,
        head_order: MonomialOrder,
        tail: MonomialOrder,
        shifts: Vec<u32>,
    },
}

impl ModuleOrder {
    #[inline]
    pub fn compare(&self, a: &Monomial, pa: u32, b: &Monomial, pb: u32) -> Ordering {
        match self {
            ModuleOrder::PositionOverTerm(o) => pb.cmp(&pa).then_with(|| o.compare(a, b)),
            ModuleOrder::TermOverPosition(o) => o.compare(a, b).then_with(|| pb.cmp(&pa)),
            ModuleOrder::Elimination {
                head,
                head_order,
                tail,
                shifts,
            } => {
                let ha = pa < *head;
                let hb = pb < *head;
                match (ha, hb) {
                    (true, true) => pb.cmp(&pa).then_with(|| head_order.compare(a, b)),
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                    (false, false) => {
                        let sa = shifts.get(pa as usize).copied().unwrap_or(0) as u64;
                        let sb = shifts.get(pb as usize).copied().unwrap_or(0) as u64;
                        tail.compare_slices(a.exponents(), b.exponents(), sa, sb)
                            .then_with(|| pb.cmp(&pa))
                    }
                }
            }
        }
    }

    /// The order induced on the ring itself (position 0).
    pub fn ring_order(&self) -> &MonomialOrder {
        match self {
            ModuleOrder::PositionOverTerm(o) | ModuleOrder::TermOverPosition(o) => o,
            ModuleOrder::Elimination { head_order, .. } => head_order,
        }
    }
}

impl From<MonomialOrder> for ModuleOrder {
    fn from(o: MonomialOrder) -> Self {
        ModuleOrder::PositionOverTerm(o)
    }
}
