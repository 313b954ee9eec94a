use binmat_core::density::{critical_density_bound_holds, Rational};
use binmat_core::format::{parse_bm, write_bm};
use binmat_core::gf2::{subspaces_of_dim, LinearMap, PointSet, Subspace};
use binmat_core::matroid::Matroid;
use binmat_core::search::{critical_number, max_full_subspace};
use binmat_core::spectral::{
    fourier_bias, fourier_lower_bound_check, overlap_sum_direct, triple_count_direct,
    triple_count_spectral, wht,
};
use binmat_core::verify::brute_force_critical_number;
use proptest::prelude::*;
use rand::SeedableRng;

fn point_set(rank: u32, bits: &[bool]) -> PointSet {
    PointSet::from_vectors(rank, (0..1u32 << rank).filter(|&x| bits[x as usize])).unwrap()
}

fn arb_set(max_rank: u32) -> impl Strategy<Value = PointSet> {
    (1..=max_rank).prop_flat_map(|r| {
        prop::collection::vec(any::<bool>(), 1usize << r).prop_map(move |bits| point_set(r, &bits))
    })
}

fn arb_matroid(max_rank: u32) -> impl Strategy<Value = Matroid> {
    arb_set(max_rank).prop_map(|mut s| {
        s.remove(0);
        Matroid::with_edges(s).unwrap()
    })
}

/// Largest subspace inside `S ∪ {0}` by enumerating every subspace.
fn oracle_dim(s: &PointSet) -> u32 {
    let r = s.rank();
    (0..=r)
        .rev()
        .find(|&d| {
            subspaces_of_dim(r, d, u128::MAX).unwrap().any(|u| u.elements().all(|x| x == 0 || s.contains(x)))
        })
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn doubling_identity(m in arb_matroid(7), seed in any::<u64>()) {
        let v = (seed % ((1u64 << m.rank()) - 1) + 1) as u32;
        let (lhs, rhs) = m.double_size_identity(v).unwrap();
        prop_assert_eq!(lhs, rhs);
        let doubled = m.double(v).unwrap();
        for x in 1..1u32 << m.rank() {
            prop_assert_eq!(doubled.contains_edge(x), m.contains_edge(x) && m.contains_edge(x ^ v));
        }
    }

    #[test]
    fn complement_is_an_involution(s in arb_set(8)) {
        let c = s.complement();
        prop_assert_eq!(c.len() + s.len(), 1u64 << s.rank());
        prop_assert_eq!(c.complement(), s.clone());
        prop_assert_eq!(c.intersection_len(&s), 0);
    }

    #[test]
    fn parseval(s in arb_set(9)) {
        let spec = wht(&s);
        prop_assert!(spec.parseval_holds());
        let total: i128 = spec.coeffs().iter().map(|&c| i128::from(c).pow(2)).sum();
        prop_assert_eq!(total, (1i128 << s.rank()) * i128::from(s.len()));
    }

    #[test]
    fn triple_counts_agree(bits in prop::collection::vec(any::<bool>(), 3 * 64)) {
        let r = 6;
        let a = point_set(r, &bits[..64]);
        let b = point_set(r, &bits[64..128]);
        let c = point_set(r, &bits[128..]);
        prop_assert_eq!(triple_count_direct(&a, &b, &c).unwrap(), triple_count_spectral(&a, &b, &c).unwrap());
    }

    #[test]
    fn bias_is_affine_invariant(s in arb_set(7), shift in any::<u32>(), seed in any::<u64>()) {
        let r = s.rank();
        let bias = fourier_bias(&s).unwrap();
        let a = shift & ((1 << r) - 1);
        prop_assert_eq!(fourier_bias(&s.translate(a)).unwrap(), bias);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let map = LinearMap::random(r, &mut rng);
        prop_assert_eq!(fourier_bias(&s.map_linear(&map)).unwrap(), bias);
    }

    #[test]
    fn density_bound_from_critical_number(m in arb_matroid(6)) {
        let (chi, h) = critical_number(&m).unwrap();
        prop_assert!(critical_density_bound_holds(m.size(), m.rank(), chi));
        prop_assert_eq!(h.codim(), chi);
        prop_assert!(h.elements().all(|x| !m.contains_edge(x)));
    }

    #[test]
    fn search_matches_enumeration(s in arb_set(5)) {
        let w = max_full_subspace(&s).unwrap();
        prop_assert_eq!(w.dim, oracle_dim(&s));
        prop_assert!(w.subspace.elements().all(|x| x == 0 || s.contains(x)));
    }

    #[test]
    fn critical_number_matches_brute_force(m in arb_matroid(5)) {
        prop_assert_eq!(critical_number(&m).unwrap().0, brute_force_critical_number(&m).unwrap());
    }

    #[test]
    fn critical_number_is_monotone(m in arb_matroid(6), seed in any::<u32>()) {
        let x = seed % ((1 << m.rank()) - 1) + 1;
        let mut bigger = m.edges().clone();
        bigger.insert(x);
        let bigger = Matroid::with_edges(bigger).unwrap();
        prop_assert!(critical_number(&bigger).unwrap().0 >= critical_number(&m).unwrap().0);
    }

    #[test]
    fn fourier_implication(m in arb_matroid(7)) {
        prop_assume!(m.size() > 0);
        let fc = fourier_lower_bound_check(&m).unwrap();
        prop_assert!(fc.implication_holds());
        let direct = Rational::new(i128::from(overlap_sum_direct(&m)), i128::from(m.size()));
        prop_assert_eq!(direct, fc.average_overlap);
        prop_assert_eq!(fc.bias_edges, fc.bias_complement);
    }

    #[test]
    fn orthogonal_complement_round_trip(vs in prop::collection::vec(0u32..64, 0..6)) {
        let s = Subspace::span(&vs, 6).unwrap();
        let perp = s.orthogonal_complement();
        prop_assert_eq!(perp.dim() + s.dim(), 6);
        prop_assert_eq!(perp.orthogonal_complement(), s.clone());
        prop_assert_eq!(s.size(), s.elements().count() as u64);
    }

    #[test]
    fn bm_round_trip(m in arb_matroid(6)) {
        prop_assume!(m.is_spanning());
        prop_assert_eq!(parse_bm(&write_bm(&m)).unwrap(), m);
    }
}
