//! Largest subspace inside a point set.
//!
//! Both the critical number and PG-containment reduce to this search:
//! `χ(M) = r − d(Y)` and `M ⊇ PG(t−1,2)` iff `d(E(M)) ≥ t`, where `d(S)` is
//! the largest dimension of a subspace `U` with `U∖{0} ⊆ S`.
//!
//! The search extends a basis depth first. A candidate `x` is only taken if
//! it exceeds the previous basis vector, has no bit at any existing pivot,
//! and the whole coset `span + x` lies in the set. Those three rules make
//! the chosen vectors exactly the reduced echelon basis of the span, so
//! every contained subspace is visited once.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{PointSet, Subspace, Vec2};
use crate::matroid::Matroid;

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// A maximum full subspace together with the search effort.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchWitness {
    pub dim: u32,
    pub subspace: Subspace,
    pub nodes_explored: u64,
}

#[inline]
fn top_bit(x: Vec2) -> u32 {
    31 - x.leading_zeros()
}

#[inline]
fn log2_floor_plus_one(n: usize) -> u32 {
    // floor(log2(n + 1))
    63 - (n as u64 + 1).leading_zeros()
}

enum Goal<'f> {
    Max,
    Visit { dim: u32, visit: &'f mut dyn FnMut(&Subspace) -> ControlFlow<()> },
}

/// DFS over the subspaces contained in a point set (treated as `S ∪ {0}`).
pub struct SubspaceSearch<'a> {
    set: &'a PointSet,
    budget: u64,
}

struct Frame {
    span: Vec<Vec2>,
    pivots: Vec2,
    chosen: Vec<Vec2>,
}

struct Run<'a, 'f> {
    set: &'a PointSet,
    budget: u64,
    nodes: u64,
    base: &'a Subspace,
    goal: Goal<'f>,
    best: Option<(u32, Vec<Vec2>)>,
    stopped: bool,
}

impl<'a> SubspaceSearch<'a> {
    pub fn new(set: &'a PointSet) -> Self {
        Self { set, budget: DEFAULT_NODE_BUDGET }
    }

    pub fn budget(mut self, nodes: u64) -> Self {
        self.budget = nodes;
        self
    }

    /// The largest full subspace; ties go to the lexicographically least
    /// ascending canonical basis.
    pub fn max_full(&self) -> Result<SearchWitness> {
        self.max_full_containing(&Subspace::zero(self.set.rank()))
    }

    /// The largest full subspace containing `base`. `base∖{0}` must lie in
    /// the set.
    pub fn max_full_containing(&self, base: &Subspace) -> Result<SearchWitness> {
        let mut run = self.run(base, Goal::Max)?;
        run.start()?;
        let (dim, chosen) = run.best.take().expect("base itself is a candidate");
        Ok(SearchWitness { dim, subspace: extend(base, &chosen), nodes_explored: run.nodes })
    }

    /// Calls `visit` on every full subspace of dimension `dim` containing
    /// `base`, in canonical order, until it breaks. Returns nodes explored.
    pub fn for_each_of_dim(
        &self,
        base: &Subspace,
        dim: u32,
        mut visit: impl FnMut(&Subspace) -> ControlFlow<()>,
    ) -> Result<u64> {
        let mut run = self.run(base, Goal::Visit { dim, visit: &mut visit })?;
        run.start()?;
        Ok(run.nodes)
    }

    /// The first full subspace of dimension `dim` in canonical order.
    pub fn first_of_dim(&self, base: &Subspace, dim: u32) -> Result<(Option<Subspace>, u64)> {
        let mut found = None;
        let nodes = self.for_each_of_dim(base, dim, |s| {
            found = Some(s.clone());
            ControlFlow::Break(())
        })?;
        Ok((found, nodes))
    }

    fn run<'f>(&self, base: &'a Subspace, goal: Goal<'f>) -> Result<Run<'a, 'f>>
    where
        'a: 'f,
    {
        assert_eq!(base.ambient_rank(), self.set.rank(), "ambient rank mismatch");
        if base.elements().any(|x| x != 0 && !self.set.contains(x)) {
            return Err(Error::Precondition("base subspace is not inside the set".into()));
        }
        Ok(Run {
            set: self.set,
            budget: self.budget,
            nodes: 0,
            base,
            goal,
            best: None,
            stopped: false,
        })
    }
}

fn extend(base: &Subspace, chosen: &[Vec2]) -> Subspace {
    let mut s = base.clone();
    for &x in chosen {
        s = s.with_vector(x);
    }
    s
}

impl Run<'_, '_> {
    fn start(&mut self) -> Result<()> {
        let base = self.base;
        let pivots = base.pivot_mask();
        let span: Vec<Vec2> = base.elements().collect();
        let cands: Vec<Vec2> = self
            .set
            .iter()
            .filter(|&x| x != 0 && x & pivots == 0)
            .filter(|&x| span.iter().all(|&s| self.set.contains(s ^ x)))
            .collect();
        let frame = Frame { span, pivots, chosen: Vec::new() };
        self.node(&frame, &cands, base.dim())
    }

    fn node(&mut self, frame: &Frame, cands: &[Vec2], dim: u32) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Resource {
                what: "subspace search nodes".into(),
                count: u128::from(self.nodes),
                cap: u128::from(self.budget),
            });
        }
        match &mut self.goal {
            Goal::Max => {
                if self.best.as_ref().is_none_or(|(d, _)| dim > *d) {
                    self.best = Some((dim, frame.chosen.clone()));
                }
            }
            Goal::Visit { dim: target, visit } => {
                if dim == *target {
                    let s = extend(self.base, &frame.chosen);
                    if visit(&s).is_break() {
                        self.stopped = true;
                    }
                    return Ok(());
                }
            }
        }
        let reach = dim + log2_floor_plus_one(cands.len());
        let worth = match &self.goal {
            Goal::Max => reach > self.best.as_ref().map_or(0, |(d, _)| *d),
            Goal::Visit { dim: target, .. } => reach >= *target,
        };
        if !worth {
            return Ok(());
        }

        for (i, &x) in cands.iter().enumerate() {
            let remaining = cands.len() - i - 1;
            let reach = dim + 1 + log2_floor_plus_one(remaining);
            let worth = match &self.goal {
                Goal::Max => reach > self.best.as_ref().map_or(0, |(d, _)| *d),
                Goal::Visit { dim: target, .. } => reach >= *target,
            };
            if !worth {
                break;
            }
            let p = top_bit(x);
            let child: Vec<Vec2> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&y| y >> p & 1 == 0)
                .filter(|&y| frame.span.iter().all(|&s| self.set.contains(s ^ x ^ y)))
                .collect();
            let mut span = Vec::with_capacity(frame.span.len() * 2);
            span.extend_from_slice(&frame.span);
            span.extend(frame.span.iter().map(|&s| s ^ x));
            let mut chosen = frame.chosen.clone();
            chosen.push(x);
            let next = Frame { span, pivots: frame.pivots | 1 << p, chosen };
            self.node(&next, &child, dim + 1)?;
            if self.stopped {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Largest `U` with `U∖{0} ⊆ S`.
pub fn max_full_subspace(set: &PointSet) -> Result<SearchWitness> {
    SubspaceSearch::new(set).max_full()
}

/// `χ(M)`: the least codimension of a subspace disjoint from `E(M)`,
/// together with such a subspace.
pub fn critical_number(m: &Matroid) -> Result<(u32, Subspace)> {
    critical_number_budgeted(m, DEFAULT_NODE_BUDGET)
}

pub fn critical_number_budgeted(m: &Matroid, budget: u64) -> Result<(u32, Subspace)> {
    let w = SubspaceSearch::new(&m.complement_set()).budget(budget).max_full()?;
    Ok((m.rank() - w.dim, w.subspace))
}

/// Whether `E(M)` contains a copy of PG(t−1,2), i.e. a `t`-dimensional `G`
/// with `G∖{0} ⊆ E(M)`.
pub fn contains_pg(m: &Matroid, t: u32) -> Result<(bool, Option<Subspace>)> {
    contains_pg_budgeted(m, t, DEFAULT_NODE_BUDGET)
}

pub fn contains_pg_budgeted(m: &Matroid, t: u32, budget: u64) -> Result<(bool, Option<Subspace>)> {
    if t > m.rank() {
        return Ok((false, None));
    }
    let base = Subspace::zero(m.rank());
    let (found, _) = SubspaceSearch::new(m.edges()).budget(budget).first_of_dim(&base, t)?;
    Ok((found.is_some(), found))
}

/// A subspace `H` with `v ∈ H`, `codim H = χ(M_v)`, and at most half of its
/// elements in `E(M)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoublingWitness {
    pub subspace: Subspace,
    /// `χ(M_v)`.
    pub chi_doubled: u32,
    /// `|E(M) ∩ H|`.
    pub edges_inside: u64,
}

/// Builds the subspace promised by the doubling bound: a maximum subspace
/// disjoint from `E(M_v)` must contain `v`, and `E(M) ∩ H` has no two
/// elements differing by `v`.
pub fn min_disjoint_subspace_with_member(m: &Matroid, v: Vec2) -> Result<DoublingWitness> {
    let doubled = m.double(v)?;
    let avoid = doubled.complement_set();
    let w = max_full_subspace(&avoid)?;
    let mut h = w.subspace;
    if !h.contains(v) {
        // Y_v + v = Y_v, so adding v keeps the subspace inside Y_v.
        h = h.with_vector(v);
    }
    let chi_doubled = h.codim();
    let edges_inside = m.edges().count_in(&h);
    Ok(DoublingWitness { subspace: h, chi_doubled, edges_inside })
}
