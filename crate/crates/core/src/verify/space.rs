use rand::seq::index;
use rand::Rng;
use rayon::prelude::*;

use super::{shard_ranges, shard_rng, Outcome, Tally};
use crate::error::{Error, Result};
use crate::gf2::{space_size, PointSet};

const RANDOM_SHARD: u64 = 1024;

/// Complements `Y = {0} ∪ Y'` with `Y' ⊆ F₂ʳ∖{0}` and `|Y'| ≤ max_extra`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplementSpace {
    pub rank: u32,
    pub max_extra: u64,
}

fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        c = c.checked_mul(u128::from(n - i))? / u128::from(i + 1);
    }
    Some(c)
}

impl ComplementSpace {
    /// The space of complements with `|Y| < bound`.
    pub fn below(rank: u32, bound: u64) -> Self {
        Self { rank, max_extra: bound.saturating_sub(2) }
    }

    fn points(&self) -> u64 {
        space_size(self.rank) - 1
    }

    /// `Σ_{k ≤ max_extra} C(2^r − 1, k)`, or `None` if it overflows.
    pub fn count(&self) -> Option<u128> {
        let n = self.points();
        (0..=self.max_extra.min(n)).try_fold(0u128, |acc, k| acc.checked_add(binomial(n, k)?))
    }

    pub fn describe(&self) -> String {
        format!(
            "Y = {{0}} + Y', Y' in F2^{}\\{{0}}, |Y'| <= {} ({} candidates)",
            self.rank,
            self.max_extra,
            self.count().map_or_else(|| "> 2^128".to_string(), |c| c.to_string())
        )
    }

    fn build(&self, extra: &[u64]) -> PointSet {
        let mut y = PointSet::empty(self.rank);
        y.insert(0);
        for &i in extra {
            y.insert(i as u32);
        }
        y
    }

    /// Visits every complement once.
    pub(crate) fn exhaustive<F>(&self, cap: u128, check: F) -> Result<Tally>
    where
        F: Fn(&PointSet) -> Outcome + Sync,
    {
        let count = self.count().unwrap_or(u128::MAX);
        if count > cap {
            return Err(Error::Resource {
                what: format!("complement space {}", self.describe()),
                count,
                cap,
            });
        }
        let n = self.points();
        // shard = (size k, least element); k = 0 is its own shard
        let mut shards = vec![(0u64, 0u64)];
        for k in 1..=self.max_extra.min(n) {
            for first in 1..=n - k + 1 {
                shards.push((k, first));
            }
        }
        let tallies: Vec<Tally> = shards
            .par_iter()
            .map(|&(k, first)| {
                let mut tally = Tally::default();
                if k == 0 {
                    tally.record(check(&self.build(&[])));
                    return tally;
                }
                // remaining k − 1 elements drawn from first+1..=n
                let rest = (k - 1) as usize;
                let mut combo: Vec<u64> = (first..first + k).collect();
                loop {
                    tally.record(check(&self.build(&combo)));
                    // advance combo[1..] lexicographically
                    let mut i = rest;
                    while i >= 1 && combo[i] == n - (rest - i) as u64 {
                        i -= 1;
                    }
                    if i == 0 {
                        break;
                    }
                    combo[i] += 1;
                    for j in i + 1..=rest {
                        combo[j] = combo[j - 1] + 1;
                    }
                }
                tally
            })
            .collect();
        Ok(tallies.into_iter().fold(Tally::default(), Tally::merge))
    }

    /// Draws `samples` complements uniformly from the space.
    pub(crate) fn random<F>(&self, samples: u64, seed: u64, check: F) -> Tally
    where
        F: Fn(&PointSet) -> Outcome + Sync,
    {
        let n = self.points();
        let top = self.max_extra.min(n);
        // relative weights C(n,k)/C(n,top), only used to pick a size
        let mut weights = vec![0f64; top as usize + 1];
        weights[top as usize] = 1.0;
        for k in (1..=top).rev() {
            weights[k as usize - 1] = weights[k as usize] * k as f64 / (n - k + 1) as f64;
        }
        let sizes = rand::distr::weighted::WeightedIndex::new(&weights).expect("positive weights");
        let tallies: Vec<Tally> = shard_ranges(samples, RANDOM_SHARD)
            .into_par_iter()
            .enumerate()
            .map(|(shard, (lo, hi))| {
                let mut rng = shard_rng(seed, shard as u64);
                let mut tally = Tally::default();
                for _ in lo..hi {
                    let k = rng.sample(&sizes);
                    let extra: Vec<u64> = index::sample(&mut rng, n as usize, k)
                        .into_iter()
                        .map(|i| i as u64 + 1)
                        .collect();
                    tally.record(check(&self.build(&extra)));
                }
                tally
            })
            .collect();
        tallies.into_iter().fold(Tally::default(), Tally::merge)
    }
}
