//! Acceptance run: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use binmat_core::density::{exceeds, main_threshold, Rational};
use binmat_core::gf2::{PointSet, Vec2};
use binmat_core::matroid::Matroid;
use binmat_core::spectral::{
    fourier_bias, fourier_lower_bound_check, overlap_sum_direct, triple_count_direct,
    triple_count_spectral, wht,
};
use binmat_core::verify::{
    audit_candidate, coset_contribution_check, dirac_pairing, graph_lemma_check, graph_lemma_search,
    recheck_violation, validate_pairing, verify_bose_burton, verify_main_theorem, verify_pie,
    verify_quotx, AuditOptions, ConditionId, Graph, GraphSearchOptions, Hypothesis, Status,
    VerifyConfig, VerifyReport,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion<'a> = (u32, &'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    ok: bool,
    summary: String,
}

fn outcome(ok: bool, summary: impl Into<String>) -> Outcome {
    Outcome { ok, summary: summary.into() }
}

fn binomial_sum(n: u64, top: u64) -> u64 {
    let mut total = 0;
    let mut c = 1u64;
    for k in 0..=top.min(n) {
        total += c;
        c = c * (n - k) / (k + 1);
    }
    total
}

/// Independent rank-4 oracle: subspaces as 16-bit masks, closed under XOR.
struct Rank4 {
    subspaces: Vec<(u16, u32)>,
}

impl Rank4 {
    fn new() -> Self {
        let mut subspaces = Vec::new();
        for mask in 0u32..1 << 16 {
            if mask & 1 == 0 {
                continue;
            }
            let closed = (0..16).all(|a| {
                mask >> a & 1 == 0 || (0..16).all(|b| mask >> b & 1 == 0 || mask >> (a ^ b) & 1 == 1)
            });
            if closed {
                let dim = 31 - mask.count_ones().leading_zeros();
                subspaces.push((mask as u16, dim));
            }
        }
        Self { subspaces }
    }

    fn max_dim_inside(&self, set_with_zero: u16) -> u32 {
        self.subspaces.iter().filter(|&&(s, _)| s & !set_with_zero == 0).map(|&(_, d)| d).max().unwrap()
    }

    fn spanning(edges: u16) -> bool {
        let mut basis: Vec<u32> = Vec::new();
        for x in 1..16u32 {
            if edges >> x & 1 == 0 {
                continue;
            }
            let mut v = x;
            for &b in &basis {
                v = v.min(v ^ b);
            }
            if v != 0 {
                basis.push(v);
                basis.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        basis.len() == 4
    }

    /// Calls `f(y_mask)` for every complement `{0} ∪ Y'` with `|Y'| ≤ max_extra`.
    fn complements(max_extra: u32, mut f: impl FnMut(u16)) {
        for rest in 0u32..1 << 15 {
            if rest.count_ones() <= max_extra {
                f(((rest << 1) | 1) as u16);
            }
        }
    }
}

fn clean(r: &VerifyReport) -> bool {
    r.violations.is_empty() && r.resource_skipped == 0
}

fn criterion_1(oracle: &Rank4) -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for (t, expected) in [(2u32, 9949u64), (3, 121)] {
        let report = verify_bose_burton(4, t, &VerifyConfig::exhaustive()).unwrap();
        let k = (2u32 << (4 - t)) - 2;
        assert_eq!(binomial_sum(15, u64::from(k)), expected);
        let (mut examined, mut nonspanning, mut bad) = (0u64, 0u64, 0u64);
        Rank4::complements(k, |y| {
            examined += 1;
            let e = !y & 0xfffe;
            if !Rank4::spanning(e) {
                nonspanning += 1;
            } else if oracle.max_dim_inside(e | 1) < t {
                bad += 1;
            }
        });
        ok &= report.candidates_examined == expected
            && examined == expected
            && report.skipped_nonspanning == nonspanning
            && bad == 0
            && clean(&report);
        parts.push(format!("t={t}: {} candidates, {} violations", report.candidates_examined, report.violations.len()));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(10);
    outcome(ok, format!("r=4 {}; {:.2?}", parts.join(", "), elapsed))
}

fn criterion_2(oracle: &Rank4) -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for (t, expected) in [(3u32, 1941u64), (2, 30827)] {
        let report = verify_main_theorem(4, t, &VerifyConfig::exhaustive()).unwrap();
        let k = 3 * (1u32 << (4 - t)) - 2;
        assert_eq!(binomial_sum(15, u64::from(k)), expected);
        let (mut qualifying, mut bad) = (0u64, 0u64);
        let thr = main_threshold(t);
        Rank4::complements(k, |y| {
            let e = !y & 0xfffe;
            let size = u64::from(e.count_ones());
            if !Rank4::spanning(e) || !exceeds(size, 4, thr) || oracle.max_dim_inside(e | 1) >= t {
                return;
            }
            qualifying += 1;
            let chi = 4 - oracle.max_dim_inside(y);
            if chi + 1 != t && chi != t {
                bad += 1;
            }
        });
        ok &= report.candidates_examined == expected && report.qualifying == qualifying && bad == 0 && clean(&report);
        parts.push(format!(
            "t={t}: {} candidates, {} qualifying, {} violations",
            report.candidates_examined,
            report.qualifying,
            report.violations.len()
        ));
    }
    let exhaustive = start.elapsed();
    ok &= exhaustive < Duration::from_secs(60);
    for (r, t) in [(5u32, 3u32), (5, 4), (6, 4), (6, 5)] {
        let report = verify_main_theorem(r, t, &VerifyConfig::random(1_000_000, 2024)).unwrap();
        ok &= report.candidates_examined == 1_000_000 && clean(&report);
        parts.push(format!("random ({r},{t}): {} qualifying, {} violations", report.qualifying, report.violations.len()));
    }
    outcome(ok, format!("r=4 {}; exhaustive {:.2?}, total {:.2?}", parts.join(", "), exhaustive, start.elapsed()))
}

fn criterion_3() -> Outcome {
    let exhaustive = verify_pie(3, &VerifyConfig::exhaustive()).unwrap();
    // direct recount of the r = 3 space
    let mut mismatches = 0;
    let mut pairs = 0;
    for mask in 0u32..128 {
        let e: Vec<u32> = (1..8).filter(|x| mask >> (x - 1) & 1 == 1).collect();
        let Ok(m) = Matroid::from_edges(3, &e) else { continue };
        for v in 1..8u32 {
            pairs += 1;
            let lhs = e.iter().filter(|&&x| e.contains(&(x ^ v))).count() as i64;
            let y: Vec<u32> = (0..8).filter(|x| !e.contains(x)).collect();
            let ov = y.iter().filter(|&&x| y.contains(&(x ^ v))).count() as i64;
            let rhs = 8 - 2 * y.len() as i64 + ov;
            mismatches += i32::from(lhs != rhs || m.double(v).unwrap().size() as i64 != lhs);
        }
    }
    let mut ok = clean(&exhaustive) && mismatches == 0 && exhaustive.qualifying == pairs;
    let mut parts = vec![format!("r=3 exhaustive {pairs} spanning pairs")];
    for r in [5, 6] {
        let report = verify_pie(r, &VerifyConfig::random(10_000, 11)).unwrap();
        ok &= report.candidates_examined == 10_000 && clean(&report);
        parts.push(format!("r={r}: {} pairs, {} mismatches", report.qualifying, report.violations.len()));
    }
    outcome(ok, parts.join(", "))
}

fn criterion_4() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for r in [4, 5] {
        let report = verify_quotx(r, &VerifyConfig::random(1_000, 5)).unwrap();
        ok &= report.candidates_examined == 1_000 && clean(&report);
        parts.push(format!("r={r}: {} trials, {} violations", report.qualifying, report.violations.len()));
    }
    outcome(ok, parts.join(", "))
}

fn criterion_5() -> Outcome {
    let check = coset_contribution_check();
    let mut ok = check.rows.len() == 16 && clean(&check.report);
    for word in 0u32..16 {
        let subset: Vec<u32> = (0..4).filter(|x| word >> x & 1 == 1).collect();
        let overlap = |v: u32| subset.iter().filter(|&&x| subset.contains(&(x ^ v))).count() as u64;
        let l = overlap(1) + overlap(2);
        let r = (subset.len() as u64).saturating_sub(1);
        let case = match subset.len() {
            0 | 1 => l == 0,
            2 => l == 0 || l == 2,
            3 => l == 4,
            _ => l == 8,
        };
        let equality = 3 * l == 8 * r && r > 0;
        let row = check.rows.iter().find(|row| row.subset == subset).unwrap();
        ok &= case && 3 * l <= 8 * r && equality == (subset.len() == 4);
        ok &= row.overlap == l && row.excess == r && row.tight == equality;
    }
    outcome(ok, "16 subsets, case values and L <= (8/3)R, equality only at |Y_G| = 4")
}

fn random_set(rank: u32, p: f64, rng: &mut ChaCha8Rng) -> PointSet {
    let mut s = PointSet::empty(rank);
    for x in 0..1u32 << rank {
        if rng.random_bool(p) {
            s.insert(x);
        }
    }
    s
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut parseval_fail = 0;
    for _ in 0..1_000 {
        let p = rng.random_range(0.0..1.0);
        let s = random_set(10, p, &mut rng);
        let spec = wht(&s);
        let lhs: i128 = spec.coeffs().iter().map(|&c| i128::from(c) * i128::from(c)).sum();
        parseval_fail += i32::from(lhs != (1i128 << 10) * i128::from(s.len()));
    }
    let mut triple_fail = 0;
    for i in 0..1_000u32 {
        let r = 4 + i % 7;
        let a = random_set(r, rng.random_range(0.0..1.0), &mut rng);
        let b = random_set(r, rng.random_range(0.0..1.0), &mut rng);
        let c = random_set(r, rng.random_range(0.0..1.0), &mut rng);
        let mut direct = 0u64;
        for x in a.iter() {
            for y in b.iter() {
                direct += u64::from(c.contains(x ^ y));
            }
        }
        let spectral = triple_count_spectral(&a, &b, &c).unwrap();
        triple_fail += i32::from(direct != spectral || direct != triple_count_direct(&a, &b, &c).unwrap());
    }
    let mut bias_fail = 0;
    for r in 1..=12 {
        let pg = Matroid::full_pg(r).unwrap();
        bias_fail += i32::from(fourier_bias(pg.edges()).unwrap() != Rational::new(1, 1i128 << r));
    }
    outcome(
        parseval_fail + triple_fail + bias_fail == 0,
        format!(
            "Parseval failures {parseval_fail}/1000 at r=10, triple mismatches {triple_fail}/1000 at r=4..10, full-PG bias failures {bias_fail}/12"
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut passing, mut failures, mut attempts, mut rechecked) = (0u32, 0u32, 0u32, 0u32);
    while passing < 10_000 && attempts < 100_000 {
        attempts += 1;
        let r = if attempts % 2 == 0 { 8 } else { 10 };
        let mut e = random_set(r, rng.random_range(0.3..0.95), &mut rng);
        e.remove(0);
        let Ok(m) = Matroid::with_edges(e) else { continue };
        if m.size() == 0 {
            continue;
        }
        let fc = fourier_lower_bound_check(&m).unwrap();
        if !fc.hypothesis_holds {
            continue;
        }
        passing += 1;
        failures += u32::from(!fc.conclusion_holds);
        if passing % 200 == 0 {
            // direct overlap sum on a subsample
            rechecked += 1;
            let direct = Rational::new(i128::from(overlap_sum_direct(&m)), i128::from(m.size()));
            failures += u32::from(direct != fc.average_overlap);
        }
    }
    outcome(
        passing >= 10_000 && failures == 0,
        format!("{passing} sets passing the bias hypothesis at r in {{8,10}}, {failures} failures, {rechecked} direct rechecks"),
    )
}

fn criterion_8() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    let graphs = [
        ("K30", Graph::complete(30).unwrap()),
        ("K30-matching", Graph::complete_minus_matching(30).unwrap()),
        ("10-triangle complement", Graph::triangle_complement(10).unwrap()),
    ];
    let mut slowest = Duration::ZERO;
    for (name, g) in &graphs {
        let start = Instant::now();
        let check = graph_lemma_check(g).unwrap();
        slowest = slowest.max(start.elapsed());
        ok &= check.hypothesis_holds && check.conclusion_holds && check.max_degree >= 16;
        parts.push(format!("{name} max degree {}", check.max_degree));
    }
    ok &= slowest < Duration::from_secs(1);
    let start = Instant::now();
    let report = graph_lemma_search(&GraphSearchOptions::new(10_000, 8));
    for v in &report.violations {
        let g = Graph::from_edges(30, &v.edges.iter().map(|&c| (c as usize / 30, c as usize % 30)).collect::<Vec<_>>()).unwrap();
        ok &= graph_lemma_check(&g).unwrap().hypothesis_holds;
    }
    ok &= report.candidates_examined == 10_000 && clean(&report);
    outcome(
        ok,
        format!(
            "{}; scan {:.2?}; search 10^4 trials, {} counterexamples, {:.2?}",
            parts.join(", "),
            slowest,
            report.violations.len(),
            start.elapsed()
        ),
    )
}

fn independent_pairing_check(m: &Matroid, pairs: &[(Vec2, Vec2)], leftover: Option<Vec2>) -> bool {
    let mut used = vec![false; 1 << m.rank()];
    for &(a, b) in pairs {
        if a == b || used[a as usize] || used[b as usize] || !m.contains_edge(a ^ b) {
            return false;
        }
        used[a as usize] = true;
        used[b as usize] = true;
    }
    let covered = 2 * pairs.len() as u64 + u64::from(leftover.is_some());
    covered == m.size() && leftover.is_some() == (m.size() % 2 == 1)
        && m.edges().iter().all(|x| used[x as usize] || leftover == Some(x))
}

fn criterion_9() -> Outcome {
    let mut ok = true;
    for r in 3..=5 {
        let m = Matroid::full_pg(r).unwrap();
        let p = dirac_pairing(&m).unwrap();
        ok &= validate_pairing(&m, &p).is_ok() && independent_pairing_check(&m, &p.pairs, p.leftover);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut accepted, mut attempts) = (0, 0);
    while accepted < 100 && attempts < 100_000 {
        attempts += 1;
        let r = rng.random_range(4..=7);
        let mut e = random_set(r, rng.random_range(0.75..1.0), &mut rng);
        e.remove(0);
        let Ok(m) = Matroid::from_point_set(e) else { continue };
        let dirac = m.edges().iter().all(|v| 2 * m.double(v).unwrap().size() > m.size());
        match dirac_pairing(&m) {
            Ok(p) => {
                ok &= dirac && validate_pairing(&m, &p).is_ok() && independent_pairing_check(&m, &p.pairs, p.leftover);
                accepted += 1;
            }
            Err(_) => ok &= !dirac,
        }
    }
    ok &= accepted == 100;
    outcome(ok, format!("full PG r=3,4,5 and {accepted} random Dirac matroids ({attempts} drawn), all pairings valid"))
}

fn first_failing(oracle: &Rank4, y: u16, t: u32) -> Hypothesis {
    let e = !y & 0xfffe;
    if !Rank4::spanning(e) {
        Hypothesis::Spanning
    } else if !exceeds(u64::from(e.count_ones()), 4, main_threshold(t)) {
        Hypothesis::Density
    } else if oracle.max_dim_inside(e | 1) >= t {
        Hypothesis::PgFree
    } else {
        assert!(4 - oracle.max_dim_inside(y) <= t);
        Hypothesis::CriticalNumber
    }
}

fn criterion_10(oracle: &Rank4) -> Outcome {
    let opts = AuditOptions::default();
    let mut ok = true;
    let mut audited = 0u64;
    let mut boundary = 0u64;
    for t in [2u32, 3] {
        let k = 3 * (1u32 << (4 - t)) - 2;
        let bb = (2u32 << (4 - t)) - 2;
        for max_extra in [k, bb] {
            Rank4::complements(max_extra, |y| {
                let edges: Vec<u32> = (1..16).filter(|x| y >> x & 1 == 0).collect();
                let set = PointSet::from_vectors(4, edges).unwrap();
                let m = Matroid::with_edges(set).unwrap();
                let report = audit_candidate(&m, t, &opts).unwrap();
                audited += 1;
                ok &= report.failing_hypothesis == Some(first_failing(oracle, y, t)) && report.conditions.is_empty();
            });
        }
        // density boundary: |M| = (1 − 3·2^{−t})·16 exactly, and one more
        let at = 16 - 3 * (1u32 << (4 - t));
        Rank4::complements(16, |y| {
            let size = 15 - (y.count_ones() - 1);
            if size != at && size != at + 1 {
                return;
            }
            let e = !y & 0xfffe;
            if !Rank4::spanning(e) {
                return;
            }
            let edges: Vec<u32> = (1..16).filter(|x| e >> x & 1 == 1).collect();
            let m = Matroid::from_edges(4, &edges).unwrap();
            let report = audit_candidate(&m, t, &opts).unwrap();
            boundary += 1;
            let expected = first_failing(oracle, y, t);
            ok &= report.failing_hypothesis == Some(expected);
            ok &= (size == at) == (expected == Hypothesis::Density);
        });
    }
    // hand-built violations
    let forced = AuditOptions { force: true, ..AuditOptions::default() };
    let y_overlap = PointSet::from_vectors(5, [0, 1, 2, 16, 17, 18]).unwrap();
    let cases: Vec<(Matroid, u32, ConditionId)> = vec![
        (Matroid::bose_burton(5, 3).unwrap(), 2, ConditionId::C1),
        (Matroid::bose_burton(5, 3).unwrap(), 3, ConditionId::C2),
        (Matroid::bose_burton(5, 3).unwrap(), 2, ConditionId::C3),
        (Matroid::from_point_set(y_overlap.complement()).unwrap(), 3, ConditionId::C4),
        (Matroid::full_pg(5).unwrap(), 3, ConditionId::C5),
        (Matroid::bose_burton(5, 3).unwrap(), 3, ConditionId::C6),
    ];
    let mut flagged = Vec::new();
    for (m, t, id) in &cases {
        let report = audit_candidate(m, *t, &forced).unwrap();
        let c = report.condition(*id).unwrap();
        let hit = c.status == Status::Violated && c.witness.is_some() && recheck_violation(m, *t, c).unwrap();
        let all_recheck = report.violated().all(|c| recheck_violation(m, *t, c).unwrap());
        ok &= hit && all_recheck && report.conditions.len() == 11;
        if hit {
            flagged.push(id.to_string());
        }
    }
    let bb = audit_candidate(&Matroid::bose_burton(5, 3).unwrap(), 3, &opts).unwrap();
    ok &= bb.failing_hypothesis == Some(Hypothesis::CriticalNumber);
    let pg = audit_candidate(&Matroid::full_pg(4).unwrap(), 4, &opts).unwrap();
    ok &= pg.failing_hypothesis == Some(Hypothesis::PgFree);
    outcome(
        ok,
        format!(
            "{audited} exhaustive-space audits and {boundary} boundary audits not-applicable with the oracle's hypothesis; forced violations flagged and rechecked: {}",
            flagged.join(" ")
        ),
    )
}

fn main() -> ExitCode {
    let oracle = Rank4::new();
    let criteria: Vec<Criterion<'_>> = vec![
        (1, "exhaustive Bose-Burton", Box::new(|| criterion_1(&oracle))),
        (2, "main theorem", Box::new(|| criterion_2(&oracle))),
        (3, "doubling size identity", Box::new(criterion_3)),
        (4, "doubling subspace bound", Box::new(criterion_4)),
        (5, "coset case table", Box::new(criterion_5)),
        (6, "spectral consistency", Box::new(criterion_6)),
        (7, "Fourier implication", Box::new(criterion_7)),
        (8, "graph lemma", Box::new(criterion_8)),
        (9, "Dirac pairing", Box::new(criterion_9)),
        (10, "audit contract", Box::new(|| criterion_10(&oracle))),
    ];
    let only: Option<u32> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|s| s.parse().ok());
    let mut failed = 0;
    for (n, name, run) in &criteria {
        if only.is_some_and(|o| o != *n) {
            continue;
        }
        let start = Instant::now();
        let out = run();
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} [{tag}] {name}: {} ({:.2?})", out.summary, start.elapsed());
        failed += u32::from(!out.ok);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
