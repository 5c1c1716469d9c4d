use hyperspan::format::{format_weight, parse_instance, write_instance};
use hyperspan_core::Hypergraph;
use proptest::prelude::*;

proptest! {
    #[test]
    fn weights_round_trip(x in any::<f64>().prop_filter("finite", |x| x.is_finite()).prop_map(f64::abs)) {
        let text = format_weight(x);
        prop_assert_eq!(text.parse::<f64>().unwrap().to_bits(), x.to_bits());
        prop_assert!(text.len() <= 24);
    }

    #[test]
    fn instances_round_trip(
        q in 2usize..5,
        raw in prop::collection::vec((prop::collection::btree_set(0usize..10, 4), 0.0f64..1e6), 0..8),
    ) {
        let edges: Vec<Vec<usize>> = raw.iter().map(|(s, _)| s.iter().copied().take(q).collect()).collect();
        prop_assume!(edges.iter().all(|e| e.len() == q));
        let weights = raw.iter().map(|(_, w)| *w).collect();
        let h = Hypergraph::new(q, 10, edges, weights).unwrap();
        let text = write_instance(&h);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(back.weights(), h.weights());
        prop_assert_eq!(write_instance(&back), text);
    }
}
