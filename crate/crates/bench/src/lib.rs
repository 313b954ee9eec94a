//! Benchmark inputs shared by the criterion targets.

use binmat_core::{Matroid, PointSet};

/// Edge set with `x` present when `x·multiplier mod 2^r` lands in the top
/// `keep` fraction, giving a dense irregular set without an RNG.
pub fn scrambled_matroid(rank: u32, keep: f64) -> Matroid {
    let n = 1u64 << rank;
    let cut = ((1.0 - keep) * n as f64) as u64;
    let mut edges = PointSet::empty(rank);
    for x in 1..n {
        if x.wrapping_mul(0x9e37_79b9) % n >= cut {
            edges.insert(x as u32);
        }
    }
    Matroid::with_edges(edges).expect("0 excluded")
}
