use std::time::Instant;

use serde::Serialize;

use super::{Mode, VerifyReport, Violation};
use crate::error::{input, Result};
use crate::gf2::{PointSet, Subspace, Vec2};

/// Number of cosets of `{0, v₁, v₂, v₁+v₂}` holding exactly `i` points of `Y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CosetProfile {
    pub c0: u64,
    pub c1: u64,
    pub c2: u64,
    pub c3: u64,
    pub c4: u64,
}

impl CosetProfile {
    pub fn total(&self) -> u64 {
        self.c0 + self.c1 + self.c2 + self.c3 + self.c4
    }

    /// `c₁ + 2c₂ + 3c₃ + 4c₄`.
    pub fn weight(&self) -> u64 {
        self.c1 + 2 * self.c2 + 3 * self.c3 + 4 * self.c4
    }

    /// `c₂ + 2c₃ + 3c₄`.
    pub fn excess(&self) -> u64 {
        self.c2 + 2 * self.c3 + 3 * self.c4
    }
}

pub fn coset_profile(y: &PointSet, v1: Vec2, v2: Vec2) -> Result<CosetProfile> {
    let g = Subspace::span(&[v1, v2], y.rank())?;
    if g.dim() != 2 {
        return input(format!("{v1} and {v2} do not span a 2-dimensional subspace"));
    }
    let mut p = CosetProfile::default();
    for coset in g.cosets() {
        match coset.elements().filter(|&x| y.contains(x)).count() {
            0 => p.c0 += 1,
            1 => p.c1 += 1,
            2 => p.c2 += 1,
            3 => p.c3 += 1,
            _ => p.c4 += 1,
        }
    }
    Ok(p)
}

/// One subset `Y_G` of the coset `G = F₂²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetRow {
    pub subset: Vec<Vec2>,
    /// `|Y_G ∩ (Y_G+v₁)| + |Y_G ∩ (Y_G+v₂)|`.
    pub overlap: u64,
    /// Contribution of this coset to `c₂ + 2c₃ + 3c₄`.
    pub excess: u64,
    /// Overlap value(s) allowed for this `|Y_G|`.
    pub expected: Vec<u64>,
    pub case_ok: bool,
    /// `3L ≤ 8R`.
    pub bound_ok: bool,
    /// `3L = 8R` with `R > 0`.
    pub tight: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetCheck {
    pub rows: Vec<CosetRow>,
    pub report: VerifyReport,
}

fn expected_overlaps(size: u64) -> Vec<u64> {
    match size {
        0 | 1 => vec![0],
        2 => vec![0, 2],
        3 => vec![4],
        _ => vec![8],
    }
}

/// All 16 subsets of a four-element coset against the per-case overlap
/// values and `L ≤ (8/3)R`.
pub fn coset_contribution_check() -> CosetCheck {
    let start = Instant::now();
    let (v1, v2) = (1, 2);
    let mut rows = Vec::with_capacity(16);
    let mut violations = Vec::new();
    for word in 0u64..16 {
        let y = PointSet::from_word(2, word).expect("rank 2");
        let overlap = y.translate_overlap(v1) + y.translate_overlap(v2);
        let size = y.len();
        let excess = size.saturating_sub(1);
        let expected = expected_overlaps(size);
        let case_ok = expected.contains(&overlap);
        let bound_ok = 3 * overlap <= 8 * excess;
        let tight = excess > 0 && 3 * overlap == 8 * excess;
        let subset: Vec<Vec2> = y.iter().collect();
        if !case_ok || !bound_ok || (tight && size != 4) {
            violations.push(Violation {
                rank: 2,
                edges: subset.clone(),
                vector: None,
                detail: format!("L = {overlap}, R = {excess}, expected L in {expected:?}"),
            });
        }
        rows.push(CosetRow { subset, overlap, excess, expected, case_ok, bound_ok, tight });
    }
    let report = VerifyReport {
        check: "coset".to_string(),
        mode: Mode::Exhaustive,
        space: "subsets Y_G of G = F2^2, v1 = 1, v2 = 2 (16 candidates)".to_string(),
        candidates_examined: 16,
        skipped_nonspanning: 0,
        qualifying: 16,
        resource_skipped: 0,
        violations,
        seed: 0,
        elapsed: start.elapsed(),
    };
    CosetCheck { rows, report }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(check: &CosetCheck, subset: &[Vec2]) -> CosetRow {
        check.rows.iter().find(|r| r.subset == subset).unwrap().clone()
    }

    #[test]
    fn table_matches() {
        let c = coset_contribution_check();
        assert_eq!(c.rows.len(), 16);
        assert!(c.report.violations.is_empty());
        let r = row(&c, &[0, 1, 2]);
        assert_eq!((r.overlap, r.excess), (4, 2));
        let r = row(&c, &[0, 1]);
        assert_eq!((r.overlap, r.excess), (2, 1));
        let r = row(&c, &[0, 1, 2, 3]);
        assert_eq!((r.overlap, r.excess, r.tight), (8, 3, true));
        assert_eq!(c.rows.iter().filter(|r| r.tight).count(), 1);
    }

    #[test]
    fn profile_invariants() {
        let y = PointSet::from_vectors(4, [0, 1, 2, 3, 5, 9, 12]).unwrap();
        let p = coset_profile(&y, 1, 2).unwrap();
        assert_eq!(p.total(), 4);
        assert_eq!(p.weight(), 7);
        assert_eq!(p.c4, 1);
        assert!(coset_profile(&y, 3, 3).is_err());
    }
}
