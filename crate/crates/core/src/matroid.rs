//! Simple binary matroids as edge sets in F₂ʳ∖{0}.

use std::fmt;

use crate::density::Rational;
use crate::error::{input, Error, Result};
use crate::gf2::{check_rank, space_size, PointSet, Subspace, Vec2};

/// A simple binary matroid: an edge set `E ⊆ F₂ʳ∖{0}`.
///
/// Matroids built by [`Matroid::from_edges`] span F₂ʳ. Derived matroids (the
/// doubling `M_v` and restrictions) keep their ambient rank and may be
/// non-spanning; [`Matroid::is_spanning`] reports which.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    rank: u32,
    edges: PointSet,
    spanning: bool,
}

impl Matroid {
    /// Validated constructor: values in `[1, 2^rank − 1]`, no duplicates, full rank.
    pub fn from_edges(rank: u32, edges: &[u32]) -> Result<Self> {
        if rank == 0 {
            return input("rank must be at least 1");
        }
        check_rank(rank)?;
        let mut set = PointSet::empty(rank);
        for &e in edges {
            if e == 0 || u64::from(e) >= space_size(rank) {
                return input(format!("edge {e} is outside [1, {}]", space_size(rank) - 1));
            }
            if set.contains(e) {
                return input(format!("duplicate edge {e}"));
            }
            set.insert(e);
        }
        Self::from_point_set(set)
    }

    /// Validated constructor from a point set that excludes 0 and spans.
    pub fn from_point_set(edges: PointSet) -> Result<Self> {
        let m = Self::with_edges(edges)?;
        if !m.spanning {
            return Err(Error::Rank { rank: m.rank, span_dim: m.span_dim() });
        }
        Ok(m)
    }

    /// Accepts any edge set without 0; spanning is recorded, not enforced.
    pub fn with_edges(edges: PointSet) -> Result<Self> {
        if edges.contains(0) {
            return input("0 cannot be an edge");
        }
        let rank = edges.rank();
        let spanning = crate::gf2::subspace::span_dim(edges.iter(), rank) == rank;
        Ok(Self { rank, edges, spanning })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn edges(&self) -> &PointSet {
        &self.edges
    }

    /// `|M|`.
    pub fn size(&self) -> u64 {
        self.edges.len()
    }

    pub fn is_spanning(&self) -> bool {
        self.spanning
    }

    pub fn span_dim(&self) -> u32 {
        crate::gf2::subspace::span_dim(self.edges.iter(), self.rank)
    }

    pub fn contains_edge(&self, x: Vec2) -> bool {
        self.edges.contains(x)
    }

    /// `|M| / 2^r`.
    pub fn density(&self) -> Rational {
        Rational::new(i128::from(self.size()), 1i128 << self.rank)
    }

    /// `Y = F₂ʳ ∖ E(M)`; always contains 0.
    pub fn complement_set(&self) -> PointSet {
        self.edges.complement()
    }

    /// The doubling `M_v`: `x ∈ E(M_v)` iff `x` and `x + v` are both edges.
    pub fn double(&self, v: Vec2) -> Result<Self> {
        self.check_nonzero(v)?;
        let translate = self.edges.translate(v);
        Self::with_edges(self.edges.intersection(&translate))
    }

    /// `(|M_v|, 2^r − 2|Y| + |Y ∩ (Y+v)|)`; the two always agree.
    pub fn double_size_identity(&self, v: Vec2) -> Result<(u64, u64)> {
        let lhs = self.double(v)?.size();
        let y = self.complement_set();
        let rhs = space_size(self.rank) + y.translate_overlap(v) - 2 * y.len();
        Ok((lhs, rhs))
    }

    /// `E(M) ∩ H` in the coordinates of the canonical basis of `H`.
    pub fn restrict(&self, h: &Subspace) -> Self {
        assert_eq!(h.ambient_rank(), self.rank, "ambient rank mismatch");
        let mut edges = PointSet::empty(h.dim());
        for x in h.elements() {
            if self.edges.contains(x) {
                edges.insert(h.coordinates(x).expect("member of h"));
            }
        }
        Self::with_edges(edges).expect("0 is never an edge")
    }

    /// `F₂ʳ` minus the fixed codimension-(t−1) subspace of
    /// [`bose_burton_hole`]; the extremal PG(t−1,2)-free matroid.
    pub fn bose_burton(rank: u32, t: u32) -> Result<Self> {
        let hole = bose_burton_hole(rank, t)?;
        Self::from_point_set(hole.to_point_set().complement())
    }

    /// PG(r−1, 2): every nonzero vector.
    pub fn full_pg(rank: u32) -> Result<Self> {
        if rank == 0 {
            return input("rank must be at least 1");
        }
        check_rank(rank)?;
        let mut edges = PointSet::full(rank);
        edges.remove(0);
        Self::from_point_set(edges)
    }

    fn check_nonzero(&self, v: Vec2) -> Result<()> {
        if v == 0 {
            return input("v must be nonzero");
        }
        crate::gf2::check_vector(v, self.rank)
    }
}

/// The excluded subspace of the Bose–Burton geometry: the span of the top
/// `r − t + 1` unit vectors.
pub fn bose_burton_hole(rank: u32, t: u32) -> Result<Subspace> {
    if t < 2 || t > rank {
        return input(format!("need 2 <= t <= rank, got t = {t}, rank = {rank}"));
    }
    check_rank(rank)?;
    let basis: Vec<Vec2> = (t - 1..rank).map(|i| 1 << i).collect();
    Subspace::span(&basis, rank)
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(r={}, |M|={}", self.rank, self.size())?;
        if !self.spanning {
            write!(f, ", non-spanning")?;
        }
        write!(f, ", edges=")?;
        f.debug_list().entries(self.edges.iter()).finish()?;
        write!(f, ")")
    }
}
