use std::fmt;

use super::{check_rank, check_vector, space_size, LinearMap, Subspace, Vec2};
use crate::error::{input, Result};

/// A subset of F₂ʳ as a dense membership bitmap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    rank: u32,
    words: Vec<u64>,
}

impl PointSet {
    pub fn empty(rank: u32) -> Self {
        let n = space_size(rank).div_ceil(64) as usize;
        Self { rank, words: vec![0; n] }
    }

    pub fn full(rank: u32) -> Self {
        let mut s = Self::empty(rank);
        s.words.iter_mut().for_each(|w| *w = !0);
        s.trim();
        s
    }

    /// Builds a set, rejecting out-of-range vectors.
    pub fn from_vectors<I: IntoIterator<Item = Vec2>>(rank: u32, vectors: I) -> Result<Self> {
        check_rank(rank)?;
        let mut s = Self::empty(rank);
        for v in vectors {
            check_vector(v, rank)?;
            s.insert(v);
        }
        Ok(s)
    }

    /// Builds a set of rank at most 6 from a 64-bit membership word.
    pub fn from_word(rank: u32, word: u64) -> Result<Self> {
        if rank > 6 {
            return input(format!("rank {rank} does not fit in one word"));
        }
        let mut s = Self { rank, words: vec![word] };
        s.trim();
        Ok(s)
    }

    fn trim(&mut self) {
        if self.rank < 6 {
            self.words[0] &= (1u64 << space_size(self.rank)) - 1;
        }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Raw membership words; bit `x % 64` of word `x / 64` is `x`.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, x: Vec2) -> bool {
        let x = x as usize;
        self.words[x >> 6] >> (x & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: Vec2) {
        let x = x as usize;
        self.words[x >> 6] |= 1 << (x & 63);
    }

    #[inline]
    pub fn remove(&mut self, x: Vec2) {
        let x = x as usize;
        self.words[x >> 6] &= !(1 << (x & 63));
    }

    pub fn len(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Vec2> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let base = (i as Vec2) << 6;
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros();
                bits &= bits - 1;
                Some(base | b)
            })
        })
    }

    pub fn complement(&self) -> Self {
        let mut s = Self { rank: self.rank, words: self.words.iter().map(|w| !w).collect() };
        s.trim();
        s
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.rank, other.rank, "ambient rank mismatch");
        Self {
            rank: self.rank,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn intersection_len(&self, other: &Self) -> u64 {
        assert_eq!(self.rank, other.rank, "ambient rank mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| u64::from((a & b).count_ones()))
            .sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & !b == 0)
    }

    /// `S + v = { s + v : s ∈ S }`.
    pub fn translate(&self, v: Vec2) -> Self {
        if v == 0 {
            return self.clone();
        }
        let mut out = Self::empty(self.rank);
        for x in self.iter() {
            out.insert(x ^ v);
        }
        out
    }

    /// `|S ∩ (S + v)|`, counted without materializing the translate.
    pub fn translate_overlap(&self, v: Vec2) -> u64 {
        self.iter().filter(|&x| self.contains(x ^ v)).count() as u64
    }

    /// `|S ∩ H|` by direct membership tests over the members of `S`.
    pub fn count_in(&self, h: &Subspace) -> u64 {
        self.iter().filter(|&x| h.contains(x)).count() as u64
    }

    /// Image under an invertible linear map.
    pub fn map_linear(&self, map: &LinearMap) -> Self {
        assert_eq!(map.rank(), self.rank, "ambient rank mismatch");
        let mut out = Self::empty(self.rank);
        for x in self.iter() {
            out.insert(map.apply(x));
        }
        out
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointSet(r={}, ", self.rank)?;
        f.debug_set().entries(self.iter()).finish()?;
        write!(f, ")")
    }
}
