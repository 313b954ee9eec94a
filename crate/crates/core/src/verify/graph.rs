use std::fmt;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{shard_rng, Mode, Outcome, Tally, VerifyReport, Violation};
use crate::error::{input, Error, Result};

pub const LEMMA_VERTICES: usize = 30;

/// Simple graph on at most 64 vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > 64 {
            return input(format!("at most 64 vertices supported, got {n}"));
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            g.adj[u] = full_mask(n) & !(1 << u);
        }
        Ok(g)
    }

    /// `K_n` with the edges `{2i, 2i+1}` removed.
    pub fn complete_minus_matching(n: usize) -> Result<Self> {
        let mut g = Self::complete(n)?;
        for u in (0..n.saturating_sub(1)).step_by(2) {
            g.remove_edge(u, u + 1);
        }
        Ok(g)
    }

    /// Complement of `k` disjoint triangles on `3k` vertices.
    pub fn triangle_complement(k: usize) -> Result<Self> {
        let mut g = Self::complete(3 * k)?;
        for i in 0..k {
            let (a, b, c) = (3 * i, 3 * i + 1, 3 * i + 2);
            g.remove_edge(a, b);
            g.remove_edge(a, c);
            g.remove_edge(b, c);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return input(format!("invalid edge {u}-{v} for {n} vertices"));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Parses `vertices n` followed by `edges u-v ...`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines =
            text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let parse_err = |line: usize, message: String| Error::Parse { line: line + 1, column: 1, message };
        let (ln, first) = lines.next().ok_or_else(|| parse_err(0, "missing `vertices` line".into()))?;
        let n = first
            .trim()
            .strip_prefix("vertices")
            .and_then(|s| s.trim().parse::<usize>().ok())
            .ok_or_else(|| parse_err(ln, "expected `vertices <n>`".into()))?;
        let mut edges = Vec::new();
        if let Some((ln, line)) = lines.next() {
            let rest = line
                .trim()
                .strip_prefix("edges")
                .ok_or_else(|| parse_err(ln, "expected `edges u-v ...`".into()))?;
            for tok in rest.split_whitespace() {
                let (u, v) = tok
                    .split_once('-')
                    .and_then(|(u, v)| Some((u.parse().ok()?, v.parse().ok()?)))
                    .ok_or_else(|| parse_err(ln, format!("bad edge `{tok}`")))?;
                edges.push((u, v));
            }
        }
        if let Some((ln, _)) = lines.next() {
            return Err(parse_err(ln, "unexpected content after `edges` line".into()));
        }
        Self::from_edges(n, &edges)
    }

    pub fn to_text(&self) -> String {
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("vertices {}\nedges {}\n", self.n, edges.join(" "))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn degree(&self, u: usize) -> u32 {
        self.adj[u].count_ones()
    }

    pub fn max_degree(&self) -> u32 {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|u| self.adj[u] >> u & 1 == 0 && (0..self.n).all(|v| self.has_edge(u, v) == self.has_edge(v, u)))
    }

    fn edges_within(&self, q: [usize; 4]) -> u32 {
        let mask = q.iter().fold(0u64, |m, &v| m | 1 << v);
        q.iter().map(|&v| (self.adj[v] & mask).count_ones()).sum::<u32>() / 2
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} vertices, {} edges)", self.n, self.edge_count())
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 { u64::MAX } else { (1u64 << n) - 1 }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphLemmaCheck {
    /// Every four vertices span at least three edges.
    pub hypothesis_holds: bool,
    pub max_degree: u32,
    /// Some vertex has degree at least 16.
    pub conclusion_holds: bool,
    /// First quadruple (in lexicographic order) with fewer than three edges.
    pub violating_quadruple: Option<[usize; 4]>,
}

impl GraphLemmaCheck {
    pub fn implication_holds(&self) -> bool {
        !self.hypothesis_holds || self.conclusion_holds
    }
}

/// Scans all 27405 quadruples of a 30-vertex graph.
pub fn graph_lemma_check(g: &Graph) -> Result<GraphLemmaCheck> {
    if g.n != LEMMA_VERTICES {
        return input(format!("graph must have {LEMMA_VERTICES} vertices, got {}", g.n));
    }
    let n = g.n;
    let mut violating = None;
    'scan: for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if g.edges_within([a, b, c, d]) < 3 {
                        violating = Some([a, b, c, d]);
                        break 'scan;
                    }
                }
            }
        }
    }
    let max_degree = g.max_degree();
    Ok(GraphLemmaCheck {
        hypothesis_holds: violating.is_none(),
        max_degree,
        conclusion_holds: max_degree >= 16,
        violating_quadruple: violating,
    })
}

#[derive(Clone, Debug)]
pub struct GraphSearchOptions {
    pub trials: u64,
    pub seed: u64,
    pub degree_cap: u32,
    pub restart_after: u64,
}

impl GraphSearchOptions {
    pub fn new(trials: u64, seed: u64) -> Self {
        Self { trials, seed, degree_cap: 15, restart_after: 10_000 }
    }
}

const N: usize = LEMMA_VERTICES;
const QUADS: usize = 27405;

struct Combinadic {
    binom: [[usize; 5]; N + 1],
}

impl Combinadic {
    fn new() -> Self {
        let mut binom = [[0usize; 5]; N + 1];
        for (n, row) in binom.iter_mut().enumerate() {
            for (k, entry) in row.iter_mut().enumerate() {
                *entry = Self::choose(n, k);
            }
        }
        Self { binom }
    }

    fn choose(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |c, i| c * (n - i) / (i + 1))
    }

    /// Index of `a < b < c < d` in colexicographic order.
    fn index(&self, q: [usize; 4]) -> usize {
        self.binom[q[0]][1] + self.binom[q[1]][2] + self.binom[q[2]][3] + self.binom[q[3]][4]
    }
}

/// Repair state: edge counts per quadruple and the set of quadruples
/// with fewer than three edges.
struct RepairState<'c> {
    comb: &'c Combinadic,
    graph: Graph,
    counts: Vec<u8>,
    quads: Vec<[usize; 4]>,
    bad: Vec<usize>,
    bad_pos: Vec<usize>,
}

impl<'c> RepairState<'c> {
    fn new(comb: &'c Combinadic, quads: &[[usize; 4]]) -> Self {
        Self {
            comb,
            graph: Graph::empty(N).expect("30 vertices"),
            counts: vec![0; QUADS],
            quads: quads.to_vec(),
            bad: (0..QUADS).collect(),
            bad_pos: (0..QUADS).collect(),
        }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.graph.add_edge(u, v);
        let (u, v) = (u.min(v), u.max(v));
        for w in 0..N {
            if w == u || w == v {
                continue;
            }
            for x in w + 1..N {
                if x == u || x == v {
                    continue;
                }
                let mut q = [u, v, w, x];
                q.sort_unstable();
                let idx = self.comb.index(q);
                self.counts[idx] += 1;
                if self.counts[idx] == 3 {
                    let pos = self.bad_pos[idx];
                    let last = *self.bad.last().expect("nonempty");
                    self.bad.swap_remove(pos);
                    if last != idx {
                        self.bad_pos[last] = pos;
                    }
                }
            }
        }
    }
}

fn all_quads(comb: &Combinadic) -> Vec<[usize; 4]> {
    let mut quads = vec![[0; 4]; QUADS];
    for a in 0..N {
        for b in a + 1..N {
            for c in b + 1..N {
                for d in c + 1..N {
                    quads[comb.index([a, b, c, d])] = [a, b, c, d];
                }
            }
        }
    }
    quads
}

enum TrialEnd {
    DeadEnd,
    Found(Graph),
}

fn run_trial<R: Rng>(comb: &Combinadic, quads: &[[usize; 4]], opts: &GraphSearchOptions, rng: &mut R) -> TrialEnd {
    let mut state = RepairState::new(comb, quads);
    let mut repairs = 0u64;
    loop {
        if state.bad.is_empty() {
            return TrialEnd::Found(state.graph);
        }
        if repairs >= opts.restart_after {
            state = RepairState::new(comb, quads);
            repairs = 0;
            continue;
        }
        let q = state.quads[state.bad[rng.random_range(0..state.bad.len())]];
        let cap = opts.degree_cap;
        let g = &state.graph;
        let mut missing = Vec::with_capacity(6);
        for i in 0..4 {
            for j in i + 1..4 {
                let (u, v) = (q[i], q[j]);
                if !g.has_edge(u, v) && g.degree(u) < cap && g.degree(v) < cap {
                    missing.push((u, v));
                }
            }
        }
        if missing.is_empty() {
            // edges are never removed, so this quadruple stays violated
            return TrialEnd::DeadEnd;
        }
        let (u, v) = missing[rng.random_range(0..missing.len())];
        state.add_edge(u, v);
        repairs += 1;
    }
}

/// Local-repair search for a 30-vertex graph where every four vertices
/// span three edges and all degrees stay at most the cap.
pub fn graph_lemma_search(opts: &GraphSearchOptions) -> VerifyReport {
    let start = Instant::now();
    let comb = Combinadic::new();
    let quads = all_quads(&comb);
    let tallies: Vec<Tally> = (0..opts.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = shard_rng(opts.seed, trial);
            let mut tally = Tally::default();
            let outcome = match run_trial(&comb, &quads, opts, &mut rng) {
                TrialEnd::DeadEnd => Outcome::NotQualifying,
                TrialEnd::Found(g) => {
                    let check = graph_lemma_check(&g).expect("30 vertices");
                    let detail = format!(
                        "hypothesis {} with max degree {}: {}",
                        check.hypothesis_holds,
                        check.max_degree,
                        g.to_text().trim_end().replace('\n', "; ")
                    );
                    Outcome::Violation(Violation {
                        rank: N as u32,
                        edges: g.edges().map(|(u, v)| (u * N + v) as u32).collect(),
                        vector: None,
                        detail,
                    })
                }
            };
            tally.record(outcome);
            tally
        })
        .collect();
    let tally = tallies.into_iter().fold(Tally::default(), Tally::merge);
    let space = format!(
        "repair-grown graphs on {N} vertices, degree cap {}, restart after {} repairs",
        opts.degree_cap, opts.restart_after
    );
    tally.into_report("graph-lemma", Mode::Random, space, opts.seed, start.elapsed())
}
