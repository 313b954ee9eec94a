//! Exact Walsh–Hadamard analysis on F₂ʳ.
//!
//! Coefficients are unnormalized integers:
//! `coeffs[ξ] = Σ_{x∈A} (−1)^{⟨ξ,x⟩}`, which is `2^r` times the normalized
//! transform `1̂_A(ξ)`.

use serde::Serialize;

use crate::density::{pow2, serialize_rational, Rational};
use crate::error::{input, Result};
use crate::gf2::{PointSet, Subspace, Vec2};
use crate::matroid::Matroid;

#[derive(Clone, PartialEq, Eq)]
pub struct Spectrum {
    rank: u32,
    coeffs: Vec<i32>,
}

/// In-place butterfly, `O(r·2^r)`.
fn butterfly(data: &mut [i32]) {
    let n = data.len();
    let mut h = 1;
    while h < n {
        for block in data.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

/// Transform of the indicator of `s`.
pub fn wht(s: &PointSet) -> Spectrum {
    let n = 1usize << s.rank();
    let mut coeffs = vec![0i32; n];
    for x in s.iter() {
        coeffs[x as usize] = 1;
    }
    butterfly(&mut coeffs);
    Spectrum { rank: s.rank(), coeffs }
}

impl Spectrum {
    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    #[inline]
    pub fn coeff(&self, xi: Vec2) -> i64 {
        i64::from(self.coeffs[xi as usize])
    }

    /// `|A|`.
    pub fn size(&self) -> u64 {
        self.coeffs[0] as u64
    }

    pub fn sum_of_squares(&self) -> i128 {
        self.coeffs.iter().map(|&c| i128::from(c) * i128::from(c)).sum()
    }

    /// `Σ_ξ coeffs[ξ]² = 2^r · |A|`.
    pub fn parseval_holds(&self) -> bool {
        self.sum_of_squares() == (1i128 << self.rank) * i128::from(self.coeffs[0])
    }

    /// Applies the transform again and divides by `2^r`, recovering the
    /// indicator table.
    pub fn invert(&self) -> Vec<i32> {
        let mut data = self.coeffs.clone();
        butterfly(&mut data);
        data.iter().map(|&c| c >> self.rank).collect()
    }

    /// `max_{ξ≠0} |coeffs[ξ]|`.
    pub fn max_nontrivial(&self) -> u64 {
        self.coeffs[1..].iter().map(|c| u64::from(c.unsigned_abs())).max().unwrap_or(0)
    }

    /// `|A ∩ D^⊥| = (1/|D|) Σ_{ξ∈D} coeffs[ξ]` for a subspace `D`.
    pub fn count_in_annihilator(&self, dual: &Subspace) -> u64 {
        let total: i64 = dual.elements().map(|xi| self.coeff(xi)).sum();
        debug_assert_eq!(total % (1i64 << dual.dim()), 0);
        (total >> dual.dim()) as u64
    }
}

impl std::fmt::Debug for Spectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Spectrum(r={}, {:?})", self.rank, self.coeffs)
    }
}

/// `max_{ξ≠0} |1̂_S(ξ)|` as an exact rational.
pub fn fourier_bias(s: &PointSet) -> Result<Rational> {
    if s.rank() == 0 {
        return input("Fourier bias needs a nonzero character (rank >= 1)");
    }
    Ok(bias_of(&wht(s)))
}

fn bias_of(spec: &Spectrum) -> Rational {
    Rational::new(i128::from(spec.max_nontrivial()), 1i128 << spec.rank)
}

fn same_rank(a: &PointSet, b: &PointSet, c: &PointSet) -> Result<()> {
    if a.rank() != b.rank() || b.rank() != c.rank() {
        return input(format!(
            "rank mismatch: {}, {}, {}",
            a.rank(),
            b.rank(),
            c.rank()
        ));
    }
    Ok(())
}

/// `|{(a,b,c) ∈ A×B×C : a+b+c = 0}|` by direct enumeration of `A×B`.
pub fn triple_count_direct(a: &PointSet, b: &PointSet, c: &PointSet) -> Result<u64> {
    same_rank(a, b, c)?;
    let mut count = 0u64;
    for x in a.iter() {
        for y in b.iter() {
            if c.contains(x ^ y) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// The same count as `2^{−r} Σ_ξ Â(ξ)·B̂(ξ)·Ĉ(ξ)`.
pub fn triple_count_spectral(a: &PointSet, b: &PointSet, c: &PointSet) -> Result<u64> {
    same_rank(a, b, c)?;
    let (sa, sb, sc) = (wht(a), wht(b), wht(c));
    Ok(spectral_triple(&sa, &sb, &sc))
}

fn spectral_triple(sa: &Spectrum, sb: &Spectrum, sc: &Spectrum) -> u64 {
    let total: i128 = sa
        .coeffs
        .iter()
        .zip(&sb.coeffs)
        .zip(&sc.coeffs)
        .map(|((&x, &y), &z)| i128::from(x) * i128::from(y) * i128::from(z))
        .sum();
    debug_assert_eq!(total % (1i128 << sa.rank), 0);
    (total >> sa.rank) as u64
}

/// Triple count; the spectral route is used and, for small inputs, checked
/// against direct enumeration in debug builds.
pub fn triple_count(a: &PointSet, b: &PointSet, c: &PointSet) -> Result<u64> {
    let spectral = triple_count_spectral(a, b, c)?;
    if cfg!(debug_assertions) && a.len().saturating_mul(b.len()) <= 1 << 20 {
        debug_assert_eq!(spectral, triple_count_direct(a, b, c)?);
    }
    Ok(spectral)
}

/// `Σ_{v∈E(M)} |Y ∩ (Y+v)|` by direct per-`v` counting.
pub fn overlap_sum_direct(m: &Matroid) -> u64 {
    let y = m.complement_set();
    m.edges().iter().map(|v| y.translate_overlap(v)).sum()
}

/// `(1/|M|) Σ_{v∈E(M)} |Y ∩ (Y+v)|`, via the triple count `(Y, Y, E)`.
pub fn average_overlap(m: &Matroid) -> Result<Rational> {
    if m.size() == 0 {
        return input("average overlap needs a nonempty edge set");
    }
    let y = m.complement_set();
    let total = triple_count(&y, &y, m.edges())?;
    Ok(Rational::new(i128::from(total), i128::from(m.size())))
}

/// Both sides of the spectral lower bound on the average overlap, and
/// whether its small-bias hypothesis applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourierCheck {
    #[serde(serialize_with = "serialize_rational")]
    pub alpha: Rational,
    /// Bias of the indicator of `E(M)`.
    #[serde(serialize_with = "serialize_rational")]
    pub bias_edges: Rational,
    /// Bias of the indicator of `Y`; equal to `bias_edges`.
    #[serde(serialize_with = "serialize_rational")]
    pub bias_complement: Rational,
    /// `α/3`; the hypothesis is `bias_edges < α/3`.
    #[serde(serialize_with = "serialize_rational")]
    pub bias_limit: Rational,
    pub hypothesis_holds: bool,
    /// `(1/|M|) Σ_{v∈E} |Y ∩ (Y+v)|`.
    #[serde(serialize_with = "serialize_rational")]
    pub average_overlap: Rational,
    /// `(2/3)·|Y|²/2^r`.
    #[serde(serialize_with = "serialize_rational")]
    pub lower_bound: Rational,
    pub conclusion_holds: bool,
}

impl FourierCheck {
    /// The testable form: a small bias forces the lower bound.
    pub fn implication_holds(&self) -> bool {
        !self.hypothesis_holds || self.conclusion_holds
    }
}

pub fn fourier_lower_bound_check(m: &Matroid) -> Result<FourierCheck> {
    if m.size() == 0 {
        return input("spectral bound needs a nonempty edge set");
    }
    let r = m.rank();
    let y = m.complement_set();
    let (spec_e, spec_y) = (wht(m.edges()), wht(&y));
    let bias_edges = bias_of(&spec_e);
    let bias_complement = bias_of(&spec_y);
    let y_size = i128::from(y.len());
    let alpha = Rational::new(y_size, 1i128 << r);
    let bias_limit = alpha / 3;
    let total = spectral_triple(&spec_y, &spec_y, &spec_e);
    let average_overlap = Rational::new(i128::from(total), i128::from(m.size()));
    let lower_bound = Rational::new(2, 3) * Rational::from_integer(y_size * y_size) / pow2(r);
    Ok(FourierCheck {
        alpha,
        bias_edges,
        bias_complement,
        bias_limit,
        hypothesis_holds: bias_edges < bias_limit,
        average_overlap,
        conclusion_holds: average_overlap > lower_bound,
        lower_bound,
    })
}
