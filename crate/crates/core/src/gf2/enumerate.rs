use super::{check_rank, Subspace, Vec2};
use crate::error::{input, Error, Result};

/// Default limit on the number of subspaces a single enumeration may yield.
pub const DEFAULT_SUBSPACE_CAP: u128 = 100_000_000;

/// The Gaussian binomial coefficient `[n choose k]₂`, the number of
/// `k`-dimensional subspaces of F₂ⁿ.
pub fn gaussian_binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (1u128 << (n - i)) - 1;
        den *= (1u128 << (i + 1)) - 1;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Streams every `k`-dimensional subspace of F₂ʳ exactly once.
///
/// Order: pivot sets in lexicographic order, then the free entries of the
/// reduced echelon form as a binary counter.
#[derive(Clone, Debug)]
pub struct EchelonForms {
    rank: u32,
    pivots: Vec<u32>,
    free: Vec<(usize, u32)>,
    counter: Vec<bool>,
    done: bool,
}

impl EchelonForms {
    fn new(rank: u32, dim: u32) -> Self {
        let mut it = Self {
            rank,
            pivots: (0..dim).collect(),
            free: Vec::new(),
            counter: Vec::new(),
            done: dim > rank,
        };
        it.reset_free();
        it
    }

    fn reset_free(&mut self) {
        self.free.clear();
        let mask: u32 = self.pivots.iter().fold(0, |m, &p| m | 1 << p);
        for (row, &p) in self.pivots.iter().enumerate() {
            for bit in 0..p {
                if mask >> bit & 1 == 0 {
                    self.free.push((row, bit));
                }
            }
        }
        self.counter = vec![false; self.free.len()];
    }

    fn current(&self) -> Subspace {
        let mut rows: Vec<Vec2> = self.pivots.iter().map(|&p| 1 << p).collect();
        for (&(row, bit), &on) in self.free.iter().zip(&self.counter) {
            if on {
                rows[row] |= 1 << bit;
            }
        }
        Subspace::from_canonical(self.rank, rows)
    }

    fn advance(&mut self) {
        for c in self.counter.iter_mut() {
            *c = !*c;
            if *c {
                return;
            }
        }
        // counter wrapped: next pivot combination
        let k = self.pivots.len();
        let n = self.rank;
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.pivots[i] < n - (k - i) as u32 {
                self.pivots[i] += 1;
                for j in i + 1..k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                self.reset_free();
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for EchelonForms {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let s = self.current();
        self.advance();
        Some(s)
    }
}

fn check_cap(rank: u32, dim: u32, cap: u128) -> Result<()> {
    let count = gaussian_binomial(rank, dim);
    if count > cap {
        return Err(Error::Resource {
            what: format!("subspaces of dimension {dim} in rank {rank}"),
            count,
            cap,
        });
    }
    Ok(())
}

/// All subspaces of dimension `dim`, failing if there are more than `cap`.
pub fn subspaces_of_dim(rank: u32, dim: u32, cap: u128) -> Result<EchelonForms> {
    check_rank(rank)?;
    if dim > rank {
        return input(format!("dimension {dim} exceeds rank {rank}"));
    }
    check_cap(rank, dim, cap)?;
    Ok(EchelonForms::new(rank, dim))
}

/// All subspaces of codimension `codim`, produced as orthogonal complements of
/// the `codim`-dimensional subspaces so each appears exactly once.
pub fn enumerate_subspaces(
    rank: u32,
    codim: u32,
    cap: u128,
) -> Result<impl Iterator<Item = Subspace>> {
    Ok(subspaces_of_dim(rank, codim, cap)?.map(|dual| dual.orthogonal_complement()))
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    /// Counts subspaces by closing every subset of nonzero vectors under XOR.
    fn brute_force_count(rank: u32, dim: u32) -> usize {
        let mut seen = HashSet::new();
        let n = 1u32 << rank;
        let mut stack = vec![(Subspace::zero(rank), 1u32)];
        while let Some((s, from)) = stack.pop() {
            if s.dim() == dim {
                seen.insert(s);
                continue;
            }
            for v in from..n {
                if !s.contains(v) {
                    stack.push((s.with_vector(v), v + 1));
                }
            }
        }
        seen.len()
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(3, 2), 7);
        assert_eq!(gaussian_binomial(4, 2), 35);
        assert_eq!(gaussian_binomial(5, 0), 1);
        assert_eq!(gaussian_binomial(6, 3), 1395);
        for r in 1..=4 {
            for d in 0..=r {
                assert_eq!(gaussian_binomial(r, d) as usize, brute_force_count(r, d), "r={r} d={d}");
            }
        }
    }

    #[test]
    fn enumeration_matches_counts_and_is_distinct() {
        for r in 0..=6 {
            for codim in 0..=r {
                let all: Vec<_> = enumerate_subspaces(r, codim, DEFAULT_SUBSPACE_CAP).unwrap().collect();
                assert_eq!(all.len() as u128, gaussian_binomial(r, codim));
                assert!(all.iter().all(|s| s.codim() == codim));
                let distinct: HashSet<_> = all.iter().collect();
                assert_eq!(distinct.len(), all.len());
            }
        }
    }

    #[test]
    fn hyperplanes_of_rank_three() {
        assert_eq!(enumerate_subspaces(3, 1, DEFAULT_SUBSPACE_CAP).unwrap().count(), 7);
        let full: Vec<_> = enumerate_subspaces(4, 0, DEFAULT_SUBSPACE_CAP).unwrap().collect();
        assert_eq!(full, vec![Subspace::full(4)]);
    }

    #[test]
    fn cap_reports_exact_count() {
        match subspaces_of_dim(6, 3, 1000) {
            Err(Error::Resource { count, cap, .. }) => {
                assert_eq!(count, 1395);
                assert_eq!(cap, 1000);
            }
            other => panic!("expected resource error, got {other:?}"),
        }
    }
}
