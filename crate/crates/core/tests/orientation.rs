use cdt_core::catalog::{build_cdt, cdt_parameters, reference_ooc, CdtName};
use cdt_core::cycles::{enumerate_girth_cycles, fastening_profile};
use cdt_core::graph::{distances, girth, is_bipartite, is_planar};
use cdt_core::orient::{
    build_constraints, classify_kappa, resolve_fixture, solve, verify_ooa, Solution,
};

const POSITIVE: [CdtName; 7] = [
    CdtName::K4,
    CdtName::K33,
    CdtName::Q3,
    CdtName::Dodecahedral,
    CdtName::Desargues,
    CdtName::Coxeter,
    CdtName::Tutte,
];

#[test]
fn recomputed_metrics_match_table() {
    for name in CdtName::ALL {
        let p = cdt_parameters(name);
        let (g, _) = build_cdt(name);
        assert_eq!(g.order(), p.n, "{name}");
        assert_eq!(distances(&g).unwrap().diameter(), p.d, "{name}");
        assert_eq!(girth(&g).unwrap(), p.g, "{name}");
        assert_eq!(is_bipartite(&g), p.bipartite, "{name}");
    }
}

#[test]
fn girth_cycle_counts_and_fastening() {
    for name in CdtName::ALL {
        let p = cdt_parameters(name);
        let (g, _) = build_cdt(name);
        let cs = enumerate_girth_cycles(&g).unwrap();
        assert_eq!(cs.len(), p.eta, "{name}");
        let profile = fastening_profile(&g, &cs, p.k);
        assert_eq!(profile.levels.len(), p.k - 1);
        assert!(profile.is_uniform(), "{name}: {profile:?}");
    }
}

#[test]
fn solver_splits_the_catalog() {
    for name in CdtName::ALL {
        let p = cdt_parameters(name);
        let (g, _) = build_cdt(name);
        let cs = enumerate_girth_cycles(&g).unwrap();
        let pcg = build_constraints(&g, &cs, p.k).unwrap();
        let solved = match solve(&pcg) {
            Solution::Assignment(a) => {
                assert!(verify_ooa(&g, &cs, p.k, &a), "{name}");
                let mut flipped = a.clone();
                flipped.signs.iter_mut().for_each(|s| *s = !*s);
                assert!(verify_ooa(&g, &cs, p.k, &flipped), "{name}");
                true
            }
            Solution::Witness(w) => {
                assert!(w.validate(&cs), "{name}");
                false
            }
        };
        assert_eq!(solved, POSITIVE.contains(&name), "{name}");
        let kappa = classify_kappa(solved, is_planar(&g), p.g, p.k).unwrap();
        assert_eq!(kappa, p.kappa, "{name}");
    }
}

#[test]
fn published_collections_are_orientations() {
    for name in POSITIVE {
        let p = cdt_parameters(name);
        let (g, labels) = build_cdt(name);
        let cs = enumerate_girth_cycles(&g).unwrap();
        let pcg = build_constraints(&g, &cs, p.k).unwrap();
        let fixture = reference_ooc(name).unwrap();
        let res = resolve_fixture(&pcg, &cs, &labels, &fixture).unwrap();
        assert!(pcg.is_satisfied_by(&res.assignment.signs), "{name}");
        assert!(verify_ooa(&g, &cs, p.k, &res.assignment), "{name}");
        if name == CdtName::Coxeter {
            let rec: Vec<(String, String)> = res
                .reconstructed
                .iter()
                .map(|r| (r.name.clone(), r.oriented.join(" ")))
                .collect();
            assert_eq!(
                rec,
                [
                    ("3^3".to_owned(), "t6 t2 z2 u2 u3 z3 t3".to_owned()),
                    ("4^3".to_owned(), "z4 u4 u5 z5 t5 t1 t4".to_owned()),
                ]
            );
        }
    }
}
