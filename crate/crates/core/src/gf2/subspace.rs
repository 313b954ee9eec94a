use std::fmt;

use serde::Serialize;

use super::{check_rank, check_vector, space_size, PointSet, Vec2};
use crate::error::Result;

/// A linear subspace of F₂ʳ held in canonical reduced echelon form.
///
/// The pivot of a basis row is its highest set bit. Every pivot bit is
/// clear in every other row, and rows are stored in ascending order, so two
/// subspaces are equal exactly when their bases are.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subspace {
    ambient_rank: u32,
    basis: Vec<Vec2>,
}

#[inline]
fn top_bit(x: Vec2) -> u32 {
    31 - x.leading_zeros()
}

impl Subspace {
    /// The zero subspace `{0}`.
    pub fn zero(ambient_rank: u32) -> Self {
        Self { ambient_rank, basis: Vec::new() }
    }

    /// All of F₂ʳ.
    pub fn full(ambient_rank: u32) -> Self {
        Self { ambient_rank, basis: (0..ambient_rank).map(|i| 1 << i).collect() }
    }

    /// The canonical subspace spanned by `vectors`.
    pub fn span(vectors: &[Vec2], ambient_rank: u32) -> Result<Self> {
        check_rank(ambient_rank)?;
        let mut table = PivotTable::default();
        for &v in vectors {
            check_vector(v, ambient_rank)?;
            table.insert(v);
        }
        Ok(table.into_subspace(ambient_rank))
    }

    /// Builds a subspace from rows already known to be canonical.
    pub(crate) fn from_canonical(ambient_rank: u32, basis: Vec<Vec2>) -> Self {
        debug_assert!(basis.windows(2).all(|w| w[0] < w[1]));
        Self { ambient_rank, basis }
    }

    pub fn ambient_rank(&self) -> u32 {
        self.ambient_rank
    }

    pub fn dim(&self) -> u32 {
        self.basis.len() as u32
    }

    pub fn codim(&self) -> u32 {
        self.ambient_rank - self.dim()
    }

    /// Canonical basis rows, ascending.
    pub fn basis(&self) -> &[Vec2] {
        &self.basis
    }

    /// Number of elements, `2^dim`.
    pub fn size(&self) -> u64 {
        space_size(self.dim())
    }

    /// Bitmask of the pivot coordinates.
    pub fn pivot_mask(&self) -> Vec2 {
        self.basis.iter().fold(0, |m, &b| m | (1 << top_bit(b)))
    }

    /// The least element of the coset `x + S`.
    #[inline]
    pub fn reduce(&self, mut x: Vec2) -> Vec2 {
        for &b in self.basis.iter().rev() {
            if x >> top_bit(b) & 1 == 1 {
                x ^= b;
            }
        }
        x
    }

    #[inline]
    pub fn contains(&self, x: Vec2) -> bool {
        self.reduce(x) == 0
    }

    /// Coordinates of a member with respect to the canonical basis: bit `i`
    /// of the result is the coefficient of `basis()[i]`.
    pub fn coordinates(&self, x: Vec2) -> Option<u32> {
        if !self.contains(x) {
            return None;
        }
        Some(
            self.basis
                .iter()
                .enumerate()
                .filter(|(_, &b)| x >> top_bit(b) & 1 == 1)
                .fold(0, |c, (i, _)| c | (1 << i)),
        )
    }

    /// Inverse of [`Subspace::coordinates`].
    pub fn embed(&self, coords: u32) -> Vec2 {
        self.basis
            .iter()
            .enumerate()
            .filter(|(i, _)| coords >> i & 1 == 1)
            .fold(0, |x, (_, &b)| x ^ b)
    }

    /// Iterates all `2^dim` elements in Gray-code order starting at 0.
    pub fn elements(&self) -> impl Iterator<Item = Vec2> + '_ {
        let mut current = 0;
        (0..self.size()).map(move |step| {
            if step > 0 {
                current ^= self.basis[step.trailing_zeros() as usize];
            }
            current
        })
    }

    pub fn to_point_set(&self) -> PointSet {
        let mut set = PointSet::empty(self.ambient_rank);
        for x in self.elements() {
            set.insert(x);
        }
        set
    }

    /// `S^⊥ = { y : ⟨x, y⟩ = 0 for all x ∈ S }`.
    pub fn orthogonal_complement(&self) -> Self {
        let pivots = self.pivot_mask();
        let mut rows = Vec::with_capacity(self.codim() as usize);
        for j in 0..self.ambient_rank {
            if pivots >> j & 1 == 1 {
                continue;
            }
            let mut w: Vec2 = 1 << j;
            for &b in &self.basis {
                if b >> j & 1 == 1 {
                    w |= 1 << top_bit(b);
                }
            }
            rows.push(w);
        }
        let mut table = PivotTable::default();
        for w in rows {
            table.insert(w);
        }
        table.into_subspace(self.ambient_rank)
    }

    /// Adds `v` to the span.
    pub fn with_vector(&self, v: Vec2) -> Self {
        let mut table = PivotTable::from_subspace(self);
        table.insert(v);
        table.into_subspace(self.ambient_rank)
    }

    /// `S + T`, the smallest subspace containing both.
    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient_rank, other.ambient_rank, "ambient rank mismatch");
        let mut table = PivotTable::from_subspace(self);
        for &b in &other.basis {
            table.insert(b);
        }
        table.into_subspace(self.ambient_rank)
    }

    /// `S ∩ T`, computed as `(S^⊥ + T^⊥)^⊥`.
    pub fn intersection(&self, other: &Self) -> Self {
        self.orthogonal_complement()
            .sum(&other.orthogonal_complement())
            .orthogonal_complement()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis.iter().all(|&b| other.contains(b))
    }

    /// The `2^codim` cosets of `S`, starting with `S` itself.
    pub fn cosets(&self) -> impl Iterator<Item = Coset<'_>> + '_ {
        let full = (space_size(self.ambient_rank) - 1) as Vec2;
        let free = full & !self.pivot_mask();
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let rep = next?;
            // ascending submasks of `free`
            let succ = rep.wrapping_sub(free) & free;
            next = (succ != 0).then_some(succ);
            Some(Coset { representative: rep, subspace: self })
        })
    }

    /// The coset of `S` containing `v`.
    pub fn coset_of(&self, v: Vec2) -> Coset<'_> {
        Coset { representative: self.reduce(v), subspace: self }
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(r={}, basis={:?})", self.ambient_rank, self.basis)
    }
}

/// `S + v` for a subspace `S`, identified by its least element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Coset<'a> {
    pub representative: Vec2,
    pub subspace: &'a Subspace,
}

impl Coset<'_> {
    pub fn contains(&self, x: Vec2) -> bool {
        self.subspace.reduce(x) == self.representative
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec2> + '_ {
        let rep = self.representative;
        self.subspace.elements().map(move |s| s ^ rep)
    }

    pub fn to_point_set(&self) -> PointSet {
        let mut set = PointSet::empty(self.subspace.ambient_rank());
        for x in self.elements() {
            set.insert(x);
        }
        set
    }
}

/// Incremental reduced echelon basis indexed by pivot bit.
#[derive(Default, Clone)]
pub(crate) struct PivotTable {
    rows: [Vec2; 32],
    mask: Vec2,
}

impl PivotTable {
    pub(crate) fn from_subspace(s: &Subspace) -> Self {
        let mut t = Self::default();
        for &b in &s.basis {
            let p = top_bit(b);
            t.rows[p as usize] = b;
            t.mask |= 1 << p;
        }
        t
    }

    #[inline]
    pub(crate) fn reduce(&self, mut x: Vec2) -> Vec2 {
        let mut hits = x & self.mask;
        while hits != 0 {
            let p = top_bit(hits);
            x ^= self.rows[p as usize];
            hits = x & self.mask & ((1 << p) - 1);
        }
        x
    }

    /// Inserts `v`; returns false if it was already in the span.
    pub(crate) fn insert(&mut self, v: Vec2) -> bool {
        let x = self.reduce(v);
        if x == 0 {
            return false;
        }
        let p = top_bit(x);
        let mut others = self.mask;
        while others != 0 {
            let q = others.trailing_zeros();
            others &= others - 1;
            if self.rows[q as usize] >> p & 1 == 1 {
                self.rows[q as usize] ^= x;
            }
        }
        self.rows[p as usize] = x;
        self.mask |= 1 << p;
        true
    }

    pub(crate) fn dim(&self) -> u32 {
        self.mask.count_ones()
    }

    pub(crate) fn into_subspace(self, ambient_rank: u32) -> Subspace {
        let mut basis = Vec::with_capacity(self.dim() as usize);
        let mut m = self.mask;
        while m != 0 {
            let p = m.trailing_zeros();
            m &= m - 1;
            basis.push(self.rows[p as usize]);
        }
        Subspace { ambient_rank, basis }
    }
}

/// Dimension of the span of `vectors`, stopping early at `stop_at`.
pub(crate) fn span_dim<I: IntoIterator<Item = Vec2>>(vectors: I, stop_at: u32) -> u32 {
    let mut table = PivotTable::default();
    for v in vectors {
        table.insert(v);
        if table.dim() >= stop_at {
            break;
        }
    }
    table.dim()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn members(s: &Subspace) -> Vec<Vec2> {
        let mut v: Vec<_> = s.elements().collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn empty_span_is_zero() {
        let s = Subspace::span(&[], 4).unwrap();
        assert_eq!(s.dim(), 0);
        assert_eq!(members(&s), vec![0]);
    }

    #[test]
    fn dependent_span() {
        let s = Subspace::span(&[4, 8, 12], 4).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(members(&s), vec![0, 4, 8, 12]);
        assert_eq!(s.basis(), &[4, 8]);
    }

    #[test]
    fn spanning_set_gives_full_space() {
        let s = Subspace::span(&[1, 2, 4, 8, 15], 4).unwrap();
        assert_eq!(s, Subspace::full(4));
    }

    #[test]
    fn span_rejects_out_of_range() {
        assert!(Subspace::span(&[16], 4).is_err());
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = Subspace::span(&[3, 5], 3).unwrap();
        let b = Subspace::span(&[6, 3], 3).unwrap();
        let c = Subspace::span(&[5, 6, 3], 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(a.basis(), &[3, 5]);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Subspace::zero(4).orthogonal_complement(), Subspace::full(4));
        let s = Subspace::span(&[4, 8], 4).unwrap();
        let perp = s.orthogonal_complement();
        assert_eq!(perp, Subspace::span(&[1, 2], 4).unwrap());
        for x in s.elements() {
            for y in perp.elements() {
                assert!(!super::super::inner(x, y));
            }
        }
    }

    #[test]
    fn coset_of_five() {
        let s = Subspace::span(&[1, 2], 4).unwrap();
        let c = s.coset_of(5);
        let mut e: Vec<_> = c.elements().collect();
        e.sort_unstable();
        assert_eq!(e, vec![4, 5, 6, 7]);
    }

    #[test]
    fn cosets_partition_space() {
        let s = Subspace::span(&[4, 8], 4).unwrap();
        let cosets: Vec<_> = s.cosets().collect();
        assert_eq!(cosets.len(), 4);
        assert_eq!(cosets[0].representative, 0);
        let mut seen = [0u8; 16];
        for c in &cosets {
            assert_eq!(c.elements().count(), 4);
            for x in c.elements() {
                seen[x as usize] += 1;
            }
        }
        assert!(seen.iter().all(|&n| n == 1));
        assert_eq!(Subspace::full(4).cosets().count(), 1);
    }

    #[test]
    fn coordinates_round_trip() {
        let s = Subspace::span(&[5, 10, 3], 4).unwrap();
        for x in s.elements() {
            let c = s.coordinates(x).unwrap();
            assert_eq!(s.embed(c), x);
        }
        assert_eq!(s.coordinates(1).map(|_| ()), if s.contains(1) { Some(()) } else { None });
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(&[1, 2], 3).unwrap();
        let b = Subspace::span(&[2, 4], 3).unwrap();
        assert_eq!(a.intersection(&b), Subspace::span(&[2], 3).unwrap());
        assert_eq!(a.sum(&b), Subspace::full(3));
    }
}
