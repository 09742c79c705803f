mod support;

#[test]
fn orientation_flip_invariance() {
    support::flip_invariance(48).unwrap();
}

#[test]
fn solver_and_checker_agree() {
    support::solver_checker_independence(256).unwrap();
}

#[test]
fn canonical_form_is_idempotent() {
    support::canonical_idempotence(512).unwrap();
}

#[test]
fn graph6_round_trip_on_random_cubic_graphs() {
    support::graph6_round_trip(1000).unwrap();
}

#[test]
fn random_cubic_graphs_are_cubic() {
    for seed in 0..20 {
        let g = support::random_cubic(4 + 2 * (seed as usize % 9), seed);
        assert!(g.is_regular(3));
    }
}
