//! Randomized and small-exhaustive invariants, cross-checked against the
//! brute-force oracles in `support`.

mod support;

use hvec_core::{
    boundary_matrix, cofacet_graph, exhaustive_nonexistence_search, expected_hvector, f_to_h,
    gpsy_sums, h_to_f, hilbert_from_f, hilbert_from_h, is_cohen_macaulay, is_m_vector, is_serre,
    macaulay_bound, reduced_betti, s2_graph_obstruction, verify_counterexample, Face, FieldSpec,
    Graph, HilbertSeries, IntPolynomial, ObstructionVerdict, SimplicialComplex,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn enumerator_matches_antichain_counts_small() {
    for n in 1..=4u32 {
        assert_eq!(support::complex_count(n), support::COMPLEX_COUNTS[n as usize - 1]);
    }
}

#[test]
fn family_routes_agree_up_to_twelve() {
    for d in 5..=12 {
        let report = verify_counterexample(d, &[FieldSpec::GF2, FieldSpec::Rationals]).unwrap();
        assert!(report.all_pass, "d = {d}: {report:?}");
        let h = expected_hvector(d).unwrap();
        let closed = gpsy_sums(&h, 2).unwrap();
        let (d, c) = (d as i64, |n: u64, k: u64| hvec_core::binomial(n, k).unwrap() as i64);
        assert_eq!(closed[0], d - 3);
        assert_eq!(closed[1], (d - 4) * (d - 1) / 2);
        assert_eq!(closed[2], c(d as u64, 3) - c(d as u64, 2));
        assert!(is_m_vector(&[1, 2, 1]));
    }
}

#[test]
fn search_is_deterministic_across_worker_counts() {
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| exhaustive_nonexistence_search(5, FieldSpec::GF2, false).unwrap())
    };
    let single = run(1);
    let pooled = run(4);
    assert_eq!(single, pooled);
    assert_eq!(serde_json::to_string(&single).unwrap(), serde_json::to_string(&pooled).unwrap());
}

#[test]
fn m_vector_agrees_with_order_ideal_search_three_variables_degree_four() {
    // Every level profile reachable with at most 3 variables up to degree 4,
    // plus the infeasible ones next to them.
    for a1 in 0..=3i64 {
        for a2 in 0..=6 {
            for a3 in 0..=10 {
                for a4 in 0..=15 {
                    let v = [1, a1, a2, a3, a4];
                    assert_eq!(is_m_vector(&v), support::order_ideal_exists(&v), "vector {v:?}");
                }
            }
        }
    }
}

fn sampled_complex(seed: u64, max_n: u32) -> SimplicialComplex {
    support::sample_complex(&mut ChaCha8Rng::seed_from_u64(seed), max_n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        let left = a.add(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(a.sub(&a).unwrap(), IntPolynomial::zero());
    }

    #[test]
    fn poly_exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let product = a.mul(&b).unwrap();
        prop_assert_eq!(product.exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn series_reduction_is_canonical(coeffs in prop::collection::vec(-6i64..=6, 1..6), e in 0u32..4) {
        let num = IntPolynomial::from_coeffs(coeffs);
        let raw = HilbertSeries::new(num.clone(), e);
        let inflated = HilbertSeries::new(
            num.mul(&IntPolynomial::one_minus_t()).unwrap(),
            e + 1,
        );
        prop_assert_eq!(&raw, &inflated);
        prop_assert!(
            raw.denom_exponent() == 0
                || raw.numerator().is_zero()
                || raw.numerator().eval_at_one().unwrap() != 0,
            "reduced numerator still divisible by 1 - t: {}", raw
        );
    }

    #[test]
    fn face_order_matches_vertex_tuple_order(a in any::<u64>(), b in any::<u64>()) {
        let fa = Face::from_mask(a);
        let fb = Face::from_mask(b);
        prop_assert_eq!(fa.cmp(&fb), fa.vertices().cmp(&fb.vertices()));
    }

    #[test]
    fn macaulay_bound_is_monotone(a in 0u64..5000, delta in 0u64..5000, i in 1u32..=6) {
        let lo = macaulay_bound(a, i).unwrap();
        let hi = macaulay_bound(a + delta, i).unwrap();
        prop_assert!(lo <= hi);
    }

    #[test]
    fn complex_counts_and_transforms(seed in any::<u64>()) {
        let cx = sampled_complex(seed, 7);
        let f = cx.f_vector();
        let h = cx.h_vector();

        prop_assert_eq!(f.entries(), &support::brute_f_vector(&cx)[..]);
        prop_assert_eq!(&h_to_f(&h).unwrap(), &f);
        prop_assert_eq!(&f_to_h(&f).unwrap(), &h);

        let d = cx.d();
        prop_assert_eq!(h.h(1), cx.n() as i64 - d as i64);
        prop_assert_eq!(h.entries().iter().sum::<i64>(), f.f(d as i32 - 1));
        let sign = if d % 2 == 1 { 1 } else { -1 };
        prop_assert_eq!(h.h(d), sign * cx.reduced_euler_char());
        prop_assert_eq!(cx.reduced_euler_char(), support::brute_reduced_euler(&cx));

        for k in 0..=d {
            prop_assert_eq!(
                cx.faces_of_card(k).unwrap().len() as i64,
                f.entries()[k as usize]
            );
        }

        prop_assert_eq!(hilbert_from_h(&h), hilbert_from_f(&f).unwrap());
    }

    #[test]
    fn cones_flatten_the_top_entry(seed in any::<u64>()) {
        let cx = sampled_complex(seed, 7);
        let apex = cx.n() + 1;
        let cone = SimplicialComplex::from_faces(
            apex,
            cx.facets().iter().map(|f| f.insert(apex)).collect(),
        )
        .unwrap();
        prop_assert!(cone.is_cone());
        let reported = cone.cone_apex().expect("a cone reports an apex");
        prop_assert!(cone.facets().iter().all(|f| f.contains(reported)));
        prop_assert_eq!(cone.h_vector().h(cone.d()), 0);
        prop_assert_eq!(cone.reduced_euler_char(), 0);
    }

    #[test]
    fn nonfaces_complement_faces(seed in any::<u64>()) {
        let cx = sampled_complex(seed, 7);
        let nonfaces = cx.minimal_nonfaces();
        prop_assert_eq!(&nonfaces, &support::brute_minimal_nonfaces(&cx));
        for mask in 0..(1u64 << cx.n()) {
            let s = Face::from_mask(mask);
            let contains_nonface = nonfaces.iter().any(|&m| m.is_subset_of(s));
            prop_assert_eq!(cx.is_face(s), !contains_nonface);
        }
    }

    #[test]
    fn graph_complement_and_covers(n in 2u32..=7, picks in prop::collection::vec((1u32..=7, 1u32..=7), 0..12)) {
        let edges: Vec<(u32, u32)> = picks
            .into_iter()
            .filter(|&(u, v)| u != v && u <= n && v <= n)
            .collect();
        let g = Graph::from_edges(n, edges.clone()).unwrap();
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.minimal_vertex_covers(), support::brute_minimal_covers(n, &g.edges()));
    }

    #[test]
    fn boundaries_square_to_zero(seed in any::<u64>()) {
        // The signed matrices multiply to the integer zero matrix, which
        // covers every coefficient field at once.
        let cx = sampled_complex(seed, 6);
        let top = cx.dim();
        for k in 0..top {
            let dk = boundary_matrix(&cx, k as u32, FieldSpec::Rationals).unwrap();
            let dk1 = boundary_matrix(&cx, k as u32 + 1, FieldSpec::Rationals).unwrap();
            prop_assert!(dk.product_is_zero(&dk1));
        }
    }

    #[test]
    fn betti_alternating_sums_give_euler(seed in any::<u64>()) {
        let cx = sampled_complex(seed, 6);
        for field in [FieldSpec::Rationals, FieldSpec::GF2, FieldSpec::PrimeField(3)] {
            let betti = reduced_betti(&cx, field);
            prop_assert_eq!(betti.alternating_sum(), cx.reduced_euler_char());
        }
    }

    #[test]
    fn graph_complex_betti_counts_components_and_cycles(
        n in 2u32..=8,
        picks in prop::collection::vec((1u32..=8, 1u32..=8), 1..14),
    ) {
        let edges: Vec<(u32, u32)> = picks
            .iter()
            .copied()
            .filter(|&(u, v)| u != v && u <= n && v <= n)
            .collect();
        prop_assume!(!edges.is_empty());
        let g = Graph::from_edges(n, edges).unwrap();
        let covered: u64 = g.edges().iter().fold(0, |acc, &(u, v)| acc | 1 << (u - 1) | 1 << (v - 1));
        let mut faces: Vec<Face> = g
            .edges()
            .iter()
            .map(|&(u, v)| Face::from_vertices([u, v]).unwrap())
            .collect();
        for v in 1..=n {
            if covered >> (v - 1) & 1 == 0 {
                faces.push(Face::from_vertices([v]).unwrap());
            }
        }
        let cx = SimplicialComplex::from_faces(n, faces).unwrap();
        prop_assume!(cx.dim() == 1);

        let comps = g.connected_components().len() as i64;
        let cycles = g.edge_count() as i64 - n as i64 + comps;
        for field in [FieldSpec::Rationals, FieldSpec::GF2] {
            let betti = reduced_betti(&cx, field);
            prop_assert_eq!(betti.betti(0), comps - 1);
            prop_assert_eq!(betti.betti(1), cycles);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn serre_is_monotone_and_caps_at_cohen_macaulay(seed in any::<u64>()) {
        let cx = sampled_complex(seed, 6);
        let d = cx.d();
        for field in [FieldSpec::GF2, FieldSpec::Rationals] {
            let verdicts: Vec<bool> =
                (1..=d + 2).map(|r| is_serre(&cx, r, field).satisfied).collect();
            for pair in verdicts.windows(2) {
                prop_assert!(pair[1] <= pair[0], "satisfied ranks must form a prefix");
            }
            let cm = is_cohen_macaulay(&cx, field);
            for r in d..=d + 2 {
                prop_assert_eq!(is_serre(&cx, r, field).satisfied, cm.satisfied);
            }
            let s2 = is_serre(&cx, 2, field);
            if s2.satisfied {
                prop_assert!(cx.is_pure());
                if cx.dim() >= 1 {
                    prop_assert_eq!(cx.connected_components(), 1);
                }
            }
        }
    }

    #[test]
    fn obstruction_screen_is_sound(seed in any::<u64>(), n in 4u32..=8) {
        let cx = support::sample_codim2_complex(&mut ChaCha8Rng::seed_from_u64(seed), n);
        match s2_graph_obstruction(&cx).unwrap() {
            ObstructionVerdict::NotS2 { witness } => {
                let complement = cofacet_graph(&cx).unwrap().complement();
                prop_assert!(complement.has_edge(witness.u, witness.z));
                prop_assert!(complement.has_edge(witness.z, witness.v));
                prop_assert!(complement.has_edge(witness.v, witness.t));
                prop_assert!(complement.has_edge(witness.t, witness.u));
                prop_assert!(!complement.has_edge(witness.u, witness.v));
                prop_assert!(!complement.has_edge(witness.z, witness.t));
                for field in [FieldSpec::GF2, FieldSpec::Rationals] {
                    prop_assert!(!is_serre(&cx, 2, field).satisfied);
                }
            }
            ObstructionVerdict::Inconclusive => {}
        }
    }

    #[test]
    fn cofacet_graph_mirrors_cones_and_facets(seed in any::<u64>(), n in 4u32..=8) {
        let cx = support::sample_codim2_complex(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let g = cofacet_graph(&cx).unwrap();
        prop_assert_eq!(g.n(), cx.n());
        prop_assert_eq!(g.edge_count(), cx.facets().len());
        let isolated = (1..=g.n()).any(|v| (1..=g.n()).all(|u| u == v || !g.has_edge(u, v)));
        prop_assert_eq!(isolated, cx.is_cone());
        prop_assert_eq!(cx.minimal_nonfaces(), g.minimal_vertex_covers());
    }
}

prop_compose! {
    fn poly()(coeffs in prop::collection::vec(-9i64..=9, 0..7)) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs)
    }
}
