use cdt_core::catalog::{build_cdt, cdt_parameters, CdtName};
use cdt_core::graph::distances;
use cdt_core::perm::{
    arc_transitivity_with, automorphism_group, cayley_digraph, digraph_isomorphic, gl32_elements,
    is_distance_transitive_with, BinaryMatrix3, PermGroup, Permutation,
};

#[test]
fn automorphism_orders_and_transitivity() {
    for name in CdtName::ALL {
        let p = cdt_parameters(name);
        let (g, _) = build_cdt(name);
        let group = automorphism_group(&g);
        assert_eq!(group.order(), p.a as u128, "{name}");
        for gen in group.generators() {
            assert!(g
                .edges()
                .all(|(u, v)| g.has_edge(gen.apply(u), gen.apply(v))));
        }
        assert_eq!(arc_transitivity_with(&g, &group), p.k, "{name}");
        let dist = distances(&g).unwrap();
        assert!(is_distance_transitive_with(&group, &dist), "{name}");
    }
}

#[test]
fn gl32_cayley_digraph_shape() {
    let all = gl32_elements();
    let m1 = BinaryMatrix3::parse_rows(["100", "001", "010"]).unwrap();
    let m2 = BinaryMatrix3::parse_rows(["001", "110", "010"]).unwrap();
    let d = cayley_digraph(&all, |s, x| s.mul(x), &[m1, m2]).unwrap();
    assert_eq!(d.order(), 168);
    assert_eq!(d.arc_count(), 336);
    assert_eq!(automorphism_group(&d).order(), 168);
    assert!(digraph_isomorphic(&d, &d).is_some());
}

#[test]
fn a4_cayley_digraph() {
    let gens = [
        Permutation::from_cycles(4, &[&[0, 1, 2]]),
        Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]),
    ];
    let a4 = PermGroup::new(4, gens.to_vec()).elements();
    assert_eq!(a4.len(), 12);
    let d = cayley_digraph(&a4, |s, x| x.then(s), &gens).unwrap();
    assert!((0..12).all(|v| d.out_neighbors(v).len() == 2 && d.in_neighbors(v).len() == 2));
}
