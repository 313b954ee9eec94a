//! Exact density thresholds. All comparisons are made over rationals so the
//! strict inequalities in the density hypotheses are decided exactly.

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::matroid::Matroid;

pub type Rational = Ratio<i128>;

pub fn pow2(e: u32) -> Rational {
    Rational::from_integer(1i128 << e)
}

/// `2^e` for a possibly negative exponent.
pub fn pow2i(e: i64) -> Rational {
    if e >= 0 {
        pow2(e as u32)
    } else {
        pow2((-e) as u32).recip()
    }
}

/// `1 − 3·2^{−t}`: above this, a PG(t−1,2)-free matroid has χ ∈ {t−1, t}.
pub fn main_threshold(t: u32) -> Rational {
    Rational::one() - Rational::from_integer(3) / pow2(t)
}

/// `1 − 2·2^{−t}`: above this, every matroid contains PG(t−1,2).
pub fn bose_burton_threshold(t: u32) -> Rational {
    Rational::one() - Rational::from_integer(2) / pow2(t)
}

/// `1 − (11/4)·2^{−t}`: above this, a PG(t−1,2)-free matroid has χ = t−1.
pub fn govaerts_storme_threshold(t: u32) -> Rational {
    Rational::one() - Rational::new(11, 4) / pow2(t)
}

/// `size > threshold · 2^rank`.
pub fn exceeds(size: u64, rank: u32, threshold: Rational) -> bool {
    Rational::from_integer(i128::from(size)) > threshold * pow2(rank)
}

/// `|M| ≤ (1 − 2^{−k})·2^r`, which every matroid with χ = k satisfies.
pub fn critical_density_bound_holds(size: u64, rank: u32, chi: u32) -> bool {
    let bound = (Rational::one() - pow2i(-i64::from(chi))) * pow2(rank);
    Rational::from_integer(i128::from(size)) <= bound
}

/// Density data of a matroid relative to a target `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityParams {
    pub t: u32,
    /// `|Y| / 2^r` where `Y` is the complement of the edge set.
    #[serde(serialize_with = "serialize_rational")]
    pub alpha: Rational,
}

impl DensityParams {
    pub fn new(m: &Matroid, t: u32) -> Self {
        let y = (1u64 << m.rank()) - m.size();
        Self { t, alpha: Rational::new(i128::from(y), 1i128 << m.rank()) }
    }

    pub fn density(&self) -> Rational {
        Rational::one() - self.alpha
    }

    pub fn above_main_threshold(&self) -> bool {
        self.density() > main_threshold(self.t)
    }

    pub fn above_bose_burton_threshold(&self) -> bool {
        self.density() > bose_burton_threshold(self.t)
    }

    pub fn above_govaerts_storme_threshold(&self) -> bool {
        self.density() > govaerts_storme_threshold(self.t)
    }
}

/// Text form `p/q` (or `p` when integral).
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() || q.is_zero() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn serialize_rational<S: serde::Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}
