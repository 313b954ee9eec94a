//! Linear algebra over F₂ʳ with vectors coded as integers.
//!
//! Bit `i` of a [`Vec2`] is coordinate `i`. Addition is XOR and the inner
//! product is the parity of the bitwise AND.

mod enumerate;
mod pointset;
pub(crate) mod subspace;

pub use enumerate::{
    enumerate_subspaces, gaussian_binomial, subspaces_of_dim, EchelonForms,
    DEFAULT_SUBSPACE_CAP,
};
pub use pointset::PointSet;
pub use subspace::{Coset, Subspace};

use rand::Rng;

use crate::error::{input, Result};

/// A vector of F₂ʳ, bit `i` holding coordinate `i`.
pub type Vec2 = u32;

/// Largest supported ambient rank; a dense point table at this rank is 32 MiB.
pub const MAX_RANK: u32 = 28;

/// `⟨x, y⟩` over F₂.
#[inline]
pub fn inner(x: Vec2, y: Vec2) -> bool {
    (x & y).count_ones() & 1 == 1
}

/// Number of vectors in F₂ʳ.
#[inline]
pub fn space_size(rank: u32) -> u64 {
    1u64 << rank
}

pub(crate) fn check_rank(rank: u32) -> Result<()> {
    if rank > MAX_RANK {
        return input(format!("rank {rank} exceeds the supported maximum {MAX_RANK}"));
    }
    Ok(())
}

pub(crate) fn check_vector(v: Vec2, rank: u32) -> Result<()> {
    if u64::from(v) >= space_size(rank) {
        return input(format!("vector {v} is out of range for rank {rank}"));
    }
    Ok(())
}

/// An invertible linear map of F₂ʳ given by the images of the unit vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    columns: Vec<Vec2>,
}

impl LinearMap {
    pub fn new(rank: u32, columns: Vec<Vec2>) -> Result<Self> {
        check_rank(rank)?;
        if columns.len() != rank as usize {
            return input(format!("expected {rank} columns, got {}", columns.len()));
        }
        for &c in &columns {
            check_vector(c, rank)?;
        }
        if Subspace::span(&columns, rank)?.dim() != rank {
            return input("linear map is not invertible");
        }
        Ok(Self { columns })
    }

    /// Samples a uniformly random element of GL(r, 2) by rejection.
    pub fn random<R: Rng + ?Sized>(rank: u32, rng: &mut R) -> Self {
        let mask = (space_size(rank) - 1) as Vec2;
        loop {
            let columns: Vec<Vec2> = (0..rank).map(|_| rng.random::<Vec2>() & mask).collect();
            if let Ok(map) = Self::new(rank, columns) {
                return map;
            }
        }
    }

    pub fn rank(&self) -> u32 {
        self.columns.len() as u32
    }

    #[inline]
    pub fn apply(&self, x: Vec2) -> Vec2 {
        let mut out = 0;
        let mut bits = x;
        while bits != 0 {
            let i = bits.trailing_zeros();
            out ^= self.columns[i as usize];
            bits &= bits - 1;
        }
        out
    }
}
