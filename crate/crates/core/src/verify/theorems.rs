use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;

use super::space::ComplementSpace;
use super::{shard_ranges, shard_rng, Mode, Outcome, Tally, VerifyConfig, VerifyReport, Violation};
use crate::density::{bose_burton_threshold, exceeds, main_threshold};
use crate::error::{input, Error, Result};
use crate::gf2::{enumerate_subspaces, space_size, PointSet, Vec2};
use crate::matroid::Matroid;
use crate::search::{
    contains_pg_budgeted, critical_number_budgeted, min_disjoint_subspace_with_member,
};

const TRIAL_SHARD: u64 = 256;

fn check_t(rank: u32, t: u32) -> Result<()> {
    if t < 2 || t > rank {
        return input(format!("need 2 <= t <= rank, got t = {t}, rank = {rank}"));
    }
    crate::gf2::check_rank(rank)
}

fn violation(m: &Matroid, vector: Option<Vec2>, detail: String) -> Violation {
    Violation { rank: m.rank(), edges: m.edges().iter().collect(), vector, detail }
}

fn run_space<F>(space: ComplementSpace, cfg: &VerifyConfig, check: F) -> Result<Tally>
where
    F: Fn(&PointSet) -> Outcome + Sync,
{
    match cfg.mode {
        Mode::Exhaustive => space.exhaustive(cfg.cap, check),
        Mode::Random => Ok(space.random(cfg.samples, cfg.seed, check)),
    }
}

/// Every matroid with `|M| > (1 − 2·2^{−t})2^r` contains PG(t−1,2).
pub fn verify_bose_burton(rank: u32, t: u32, cfg: &VerifyConfig) -> Result<VerifyReport> {
    check_t(rank, t)?;
    let start = Instant::now();
    let space = ComplementSpace::below(rank, 2 << (rank - t));
    let budget = cfg.node_budget;
    let tally = run_space(space, cfg, |y| {
        let m = match Matroid::with_edges(y.complement()) {
            Ok(m) if m.is_spanning() => m,
            _ => return Outcome::NonSpanning,
        };
        if !exceeds(m.size(), rank, bose_burton_threshold(t)) {
            return Outcome::NotQualifying;
        }
        match contains_pg_budgeted(&m, t, budget) {
            Ok((true, _)) => Outcome::Qualifying,
            Ok((false, _)) => Outcome::Violation(violation(&m, None, format!("no PG({},2)", t - 1))),
            Err(_) => Outcome::ResourceSkipped,
        }
    })?;
    Ok(tally.into_report("bose-burton", cfg.mode, space.describe(), cfg.seed, start.elapsed()))
}

/// Every PG(t−1,2)-free matroid with `|M| > (1 − 3·2^{−t})2^r` has
/// `χ(M) ∈ {t−1, t}`.
pub fn verify_main_theorem(rank: u32, t: u32, cfg: &VerifyConfig) -> Result<VerifyReport> {
    check_t(rank, t)?;
    let start = Instant::now();
    let space = ComplementSpace::below(rank, 3 << (rank - t));
    let budget = cfg.node_budget;
    let tally = run_space(space, cfg, |y| {
        let m = match Matroid::with_edges(y.complement()) {
            Ok(m) if m.is_spanning() => m,
            _ => return Outcome::NonSpanning,
        };
        if !exceeds(m.size(), rank, main_threshold(t)) {
            return Outcome::NotQualifying;
        }
        match contains_pg_budgeted(&m, t, budget) {
            Ok((true, _)) => return Outcome::NotQualifying,
            Ok((false, _)) => {}
            Err(_) => return Outcome::ResourceSkipped,
        }
        match critical_number_budgeted(&m, budget) {
            Ok((chi, _)) if chi + 1 == t || chi == t => Outcome::Qualifying,
            Ok((chi, _)) => Outcome::Violation(violation(&m, None, format!("chi = {chi}"))),
            Err(_) => Outcome::ResourceSkipped,
        }
    })?;
    Ok(tally.into_report("main", cfg.mode, space.describe(), cfg.seed, start.elapsed()))
}

/// Random edge set with a density drawn uniformly from `[lo, 1)`.
fn random_matroid<R: Rng>(rank: u32, lo: f64, rng: &mut R) -> Matroid {
    let p = rng.random_range(lo..1.0);
    let mut edges = PointSet::empty(rank);
    for x in 1..space_size(rank) as Vec2 {
        if rng.random_bool(p) {
            edges.insert(x);
        }
    }
    Matroid::with_edges(edges).expect("0 excluded")
}

fn run_trials<F>(trials: u64, seed: u64, trial: F) -> Tally
where
    F: Fn(&mut rand_chacha::ChaCha8Rng) -> Outcome + Sync,
{
    let tallies: Vec<Tally> = shard_ranges(trials, TRIAL_SHARD)
        .into_par_iter()
        .enumerate()
        .map(|(shard, (lo, hi))| {
            let mut rng = shard_rng(seed, shard as u64);
            let mut tally = Tally::default();
            for _ in lo..hi {
                tally.record(trial(&mut rng));
            }
            tally
        })
        .collect();
    tallies.into_iter().fold(Tally::default(), Tally::merge)
}

fn pie_outcome(m: &Matroid, v: Vec2) -> Outcome {
    let (lhs, rhs) = m.double_size_identity(v).expect("v nonzero");
    // The complement of M_v must also be exactly Y ∪ (Y+v).
    let y = m.complement_set();
    let union = y.union(&y.translate(v));
    let doubled = m.double(v).expect("v nonzero");
    if lhs != rhs || doubled.complement_set() != union {
        Outcome::Violation(violation(m, Some(v), format!("|M_v| = {lhs}, formula = {rhs}")))
    } else {
        Outcome::Qualifying
    }
}

/// `|M_v| = 2^r − 2|Y| + |Y ∩ (Y+v)|`. Exhaustive mode covers every
/// spanning edge set and every `v ≠ 0`.
pub fn verify_pie(rank: u32, cfg: &VerifyConfig) -> Result<VerifyReport> {
    if rank == 0 {
        return input("rank must be at least 1");
    }
    crate::gf2::check_rank(rank)?;
    let start = Instant::now();
    let n = space_size(rank) - 1;
    let tally = match cfg.mode {
        Mode::Exhaustive => {
            let count = (1u128 << n.min(127)).saturating_mul(u128::from(n));
            if n > 40 || count > cfg.cap {
                return Err(Error::Resource {
                    what: format!("edge sets x vectors at rank {rank}"),
                    count,
                    cap: cfg.cap,
                });
            }
            let tallies: Vec<Tally> = (0u64..1 << n)
                .into_par_iter()
                .map(|mask| {
                    let mut tally = Tally::default();
                    let mut edges = PointSet::empty(rank);
                    for i in 0..n {
                        if mask >> i & 1 == 1 {
                            edges.insert(i as Vec2 + 1);
                        }
                    }
                    let m = Matroid::with_edges(edges).expect("0 excluded");
                    for v in 1..=n as Vec2 {
                        if !m.is_spanning() {
                            tally.record(Outcome::NonSpanning);
                        } else {
                            tally.record(pie_outcome(&m, v));
                        }
                    }
                    tally
                })
                .collect();
            tallies.into_iter().fold(Tally::default(), Tally::merge)
        }
        Mode::Random => run_trials(cfg.samples, cfg.seed, |rng| {
            let m = random_matroid(rank, 0.0, rng);
            if !m.is_spanning() {
                return Outcome::NonSpanning;
            }
            let v = rng.random_range(1..=n as Vec2);
            pie_outcome(&m, v)
        }),
    };
    let space = format!("(M, v) with M spanning in F2^{rank}, v != 0");
    Ok(tally.into_report("pie", cfg.mode, space, cfg.seed, start.elapsed()))
}

/// For `v ∈ E(M)`: if `M_v` contains PG(t−2,2) then `M` contains PG(t−1,2),
/// witnessed by the span of the smaller copy together with `v`.
pub fn verify_quotp(rank: u32, t: u32, cfg: &VerifyConfig) -> Result<VerifyReport> {
    if t < 3 || t > rank {
        return input(format!("need 3 <= t <= rank, got t = {t}, rank = {rank}"));
    }
    crate::gf2::check_rank(rank)?;
    let start = Instant::now();
    let budget = cfg.node_budget;
    let tally = run_trials(cfg.samples, cfg.seed, |rng| {
        let m = random_matroid(rank, 0.5, rng);
        if !m.is_spanning() {
            return Outcome::NonSpanning;
        }
        let edges: Vec<Vec2> = m.edges().iter().collect();
        let v = edges[rng.random_range(0..edges.len())];
        let doubled = m.double(v).expect("v nonzero");
        let smaller = match contains_pg_budgeted(&doubled, t - 1, budget) {
            Ok((true, Some(x))) => x,
            Ok(_) => return Outcome::NotQualifying,
            Err(_) => return Outcome::ResourceSkipped,
        };
        let lifted = smaller.with_vector(v);
        let lifted_ok =
            lifted.dim() == t && lifted.elements().all(|x| x == 0 || m.contains_edge(x));
        let found = matches!(contains_pg_budgeted(&m, t, budget), Ok((true, _)));
        if lifted_ok && found {
            Outcome::Qualifying
        } else {
            Outcome::Violation(violation(
                &m,
                Some(v),
                format!("lifted witness valid = {lifted_ok}, PG({},2) found = {found}", t - 1),
            ))
        }
    });
    let space = format!("random M in F2^{rank} (density >= 1/2), v in E(M)");
    Ok(tally.into_report("quotp", cfg.mode, space, cfg.seed, start.elapsed()))
}

/// `χ(M)` by scanning all subspaces by increasing codimension; independent
/// of the depth-first search.
pub fn brute_force_critical_number(m: &Matroid) -> Result<u32> {
    for k in 0..=m.rank() {
        let found = enumerate_subspaces(m.rank(), k, u128::MAX)?
            .any(|h| h.elements().all(|x| !m.contains_edge(x)));
        if found {
            return Ok(k);
        }
    }
    unreachable!("{{0}} is disjoint from every edge set")
}

/// The doubling subspace bound: `v ∈ H`, `codim H = χ(M_v)` and
/// `|E(M) ∩ H| ≤ 2^{r−k−1}`. At rank ≤ 5 `χ(M_v)` is also recomputed by
/// brute-force enumeration.
pub fn verify_quotx(rank: u32, cfg: &VerifyConfig) -> Result<VerifyReport> {
    if rank < 1 {
        return input("rank must be at least 1");
    }
    crate::gf2::check_rank(rank)?;
    let start = Instant::now();
    let n = space_size(rank) - 1;
    let budget = cfg.node_budget;
    let tally = run_trials(cfg.samples, cfg.seed, |rng| {
        let m = random_matroid(rank, 0.0, rng);
        if !m.is_spanning() {
            return Outcome::NonSpanning;
        }
        let v = rng.random_range(1..=n as Vec2);
        let doubled = m.double(v).expect("v nonzero");
        let k = match critical_number_budgeted(&doubled, budget) {
            Ok((k, _)) => k,
            Err(_) => return Outcome::ResourceSkipped,
        };
        let w = match min_disjoint_subspace_with_member(&m, v) {
            Ok(w) => w,
            Err(_) => return Outcome::ResourceSkipped,
        };
        let h = &w.subspace;
        let mut problems = Vec::new();
        if rank <= 5 {
            let oracle = brute_force_critical_number(&doubled).expect("small rank");
            if oracle != k {
                problems.push(format!("search chi {k} vs enumeration {oracle}"));
            }
        }
        if !h.contains(v) {
            problems.push("v not in H".to_string());
        }
        if h.codim() != k || w.chi_doubled != k {
            problems.push(format!("codim H = {}, chi(M_v) = {k}", h.codim()));
        }
        if h.elements().any(|x| doubled.contains_edge(x)) {
            problems.push("H meets E(M_v)".to_string());
        }
        let inside = h.elements().filter(|&x| m.contains_edge(x)).count() as u64;
        if inside != w.edges_inside || k + 1 > rank || inside > 1 << (rank - k - 1) {
            problems.push(format!("|E(M) ∩ H| = {inside}"));
        }
        if problems.is_empty() {
            Outcome::Qualifying
        } else {
            Outcome::Violation(violation(&m, Some(v), problems.join("; ")))
        }
    });
    let space = format!("random spanning M in F2^{rank}, v != 0");
    Ok(tally.into_report("quotx", cfg.mode, space, cfg.seed, start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bose_burton_small_exhaustive() {
        let r = verify_bose_burton(4, 3, &VerifyConfig::exhaustive()).unwrap();
        assert_eq!(r.candidates_examined, 121);
        assert!(r.violations.is_empty());
        assert_eq!(r.exit_status(), 0);
    }

    #[test]
    fn main_small_exhaustive() {
        let r = verify_main_theorem(4, 3, &VerifyConfig::exhaustive()).unwrap();
        assert_eq!(r.candidates_examined, 1941);
        assert!(r.violations.is_empty());
        assert!(r.qualifying > 0);
    }

    #[test]
    fn t_range_checked() {
        assert!(verify_main_theorem(3, 4, &VerifyConfig::exhaustive()).is_err());
        assert!(verify_bose_burton(4, 1, &VerifyConfig::exhaustive()).is_err());
        assert!(verify_quotp(4, 2, &VerifyConfig::random(1, 0)).is_err());
    }

    #[test]
    fn pie_exhaustive_rank_three() {
        let r = verify_pie(3, &VerifyConfig::exhaustive()).unwrap();
        assert_eq!(r.candidates_examined, 128 * 7);
        assert!(r.violations.is_empty());
        assert!(r.skipped_nonspanning > 0);
    }

    #[test]
    fn quotp_and_quotx_random() {
        let r = verify_quotp(5, 3, &VerifyConfig::random(300, 1)).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert!(r.qualifying > 0);
        let r = verify_quotx(4, &VerifyConfig::random(300, 1)).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
    }

    #[test]
    fn brute_force_chi_agrees_on_examples() {
        assert_eq!(brute_force_critical_number(&Matroid::full_pg(3).unwrap()).unwrap(), 3);
        assert_eq!(brute_force_critical_number(&Matroid::bose_burton(4, 3).unwrap()).unwrap(), 2);
    }
}
