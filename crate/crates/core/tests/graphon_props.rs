mod common;

use graphon_spectra::{common_refinement, graph_to_graphon, SimpleGraph, StepGraphon};
use proptest::prelude::*;

fn graphon_strategy(max_m: usize) -> impl Strategy<Value = StepGraphon> {
    (1..=max_m, any::<u64>()).prop_map(|(m, seed)| common::random_graphon(&mut common::rng(seed), m))
}

fn graph_strategy() -> impl Strategy<Value = SimpleGraph> {
    (1usize..9).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..20).prop_map(move |pairs| {
            SimpleGraph::new(n, pairs.into_iter().filter(|(a, b)| a != b)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn embedding_is_valid_and_has_edge_density(g in graph_strategy()) {
        let w = graph_to_graphon(&g).unwrap();
        let n = g.num_vertices();
        prop_assert_eq!(w.num_blocks(), n);
        prop_assert!((w.weights().iter().sum::<f64>() - 1.0).abs() < 1e-12);
        for i in 0..n {
            prop_assert_eq!(w.value(i, i), 0.0);
            for j in 0..n {
                prop_assert_eq!(w.value(i, j), w.value(j, i));
                prop_assert_eq!(w.value(i, j) == 1.0, g.has_edge(i, j));
            }
        }
        let expected = 2.0 * g.num_edges() as f64 / (n * n) as f64;
        prop_assert!((w.l1_norm() - expected).abs() < 1e-12);
        prop_assert_eq!(w.l1_norm(), w.l2_norm_sq());
    }

    #[test]
    fn refinement_preserves_norms(u in graphon_strategy(5), w in graphon_strategy(5)) {
        let (ur, wr) = common_refinement(&u, &w);
        prop_assert_eq!(ur.weights(), wr.weights());
        prop_assert!(ur.num_blocks() < u.num_blocks() + w.num_blocks());
        prop_assert!(ur.weights().iter().all(|&x| x > 0.0));
        prop_assert!((ur.l1_norm() - u.l1_norm()).abs() < 1e-12);
        prop_assert!((ur.l2_norm_sq() - u.l2_norm_sq()).abs() < 1e-12);
        prop_assert!((wr.l1_norm() - w.l1_norm()).abs() < 1e-12);
        prop_assert!((wr.l2_norm_sq() - w.l2_norm_sq()).abs() < 1e-12);
    }

    #[test]
    fn refinement_samples_same_function(u in graphon_strategy(4), w in graphon_strategy(4), x in 0.0..1.0f64, y in 0.0..1.0f64) {
        let (ur, _) = common_refinement(&u, &w);
        let (p, pr) = (u.partition(), ur.partition());
        let near = |b: &[f64], z: f64| b.iter().any(|&t| (t - z).abs() < 1e-9);
        prop_assume!(!near(pr.boundaries(), x) && !near(pr.boundaries(), y));
        prop_assert_eq!(u.value(p.locate(x), p.locate(y)), ur.value(pr.locate(x), pr.locate(y)));
    }

    #[test]
    fn zero_one_norms_agree_bitwise(seed in any::<u64>(), m in 1usize..7) {
        let w = common::random_zero_one(&mut common::rng(seed), m);
        prop_assert_eq!(w.l1_norm().to_bits(), w.l2_norm_sq().to_bits());
    }

    #[test]
    fn json_round_trip(w in graphon_strategy(5)) {
        let s = serde_json::to_string(&w).unwrap();
        let back: StepGraphon = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, w);
    }
}
