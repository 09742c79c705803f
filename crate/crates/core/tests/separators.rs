use std::collections::BTreeMap;

use cdt_core::catalog::{build_cdt, cdt_parameters, CdtName};
use cdt_core::cycles::enumerate_girth_cycles;
use cdt_core::graph::{is_planar, Graph};
use cdt_core::orient::{build_constraints, solve, OrientationAssignment, Solution};
use cdt_core::perm::{automorphism_group, digraph_isomorphic, is_transitive};
use cdt_core::separator::{alternate_census, build_separator, summarize, SeparatorDigraph};
use cdt_core::surface::{euler, face_complex, truncate, Solid};

fn separator_with(name: CdtName, flip: bool) -> SeparatorDigraph {
    let p = cdt_parameters(name);
    let (g, _) = build_cdt(name);
    let cs = enumerate_girth_cycles(&g).unwrap();
    let Solution::Assignment(mut a) = solve(&build_constraints(&g, &cs, p.k).unwrap()) else {
        panic!("{name} has an orientation")
    };
    if flip {
        a = OrientationAssignment {
            signs: a.signs.iter().map(|s| !s).collect(),
        };
    }
    build_separator(&g, &cs, p.k, &a).unwrap()
}

fn separator(name: CdtName) -> SeparatorDigraph {
    separator_with(name, false)
}

/// `(r, length, simple) -> count` from exhaustive orbit enumeration.
fn oracle_census(name: CdtName) -> Vec<(usize, usize, bool, usize)> {
    match name {
        CdtName::K4 => vec![
            (1, 6, true, 4),
            (2, 9, true, 4),
            (3, 8, false, 6),
            (4, 15, false, 4),
        ],
        CdtName::K33 => vec![
            (1, 8, true, 9),
            (2, 9, true, 12),
            (3, 16, true, 9),
            (4, 10, false, 18),
        ],
        CdtName::Q3 => vec![
            (1, 6, true, 8),
            (2, 12, true, 6),
            (3, 12, true, 8),
            (4, 10, false, 12),
        ],
        CdtName::Dodecahedral => {
            vec![
                (1, 6, true, 20),
                (2, 15, true, 12),
                (3, 20, true, 12),
                (4, 15, true, 20),
            ]
        }
        CdtName::Desargues => {
            vec![
                (1, 8, true, 30),
                (2, 9, true, 40),
                (3, 24, true, 20),
                (4, 15, true, 40),
            ]
        }
        CdtName::Coxeter => {
            vec![
                (1, 8, true, 42),
                (2, 9, true, 56),
                (3, 28, true, 24),
                (4, 35, true, 24),
            ]
        }
        CdtName::Tutte => vec![
            (1, 8, true, 180),
            (2, 12, true, 180),
            (3, 32, true, 90),
            (4, 15, true, 240),
        ],
        _ => unreachable!(),
    }
}

const SEPARATED: [(CdtName, usize, i64); 7] = [
    (CdtName::K4, 12, 2),
    (CdtName::K33, 36, 0),
    (CdtName::Q3, 24, 2),
    (CdtName::Dodecahedral, 60, 2),
    (CdtName::Desargues, 120, -10),
    (CdtName::Coxeter, 168, -18),
    (CdtName::Tutte, 720, -90),
];

#[test]
fn separator_structure_and_census() {
    for (name, order, chi) in SEPARATED {
        let p = cdt_parameters(name);
        let s = separator(name);
        let d = s.digraph();
        assert_eq!(s.order(), order, "{name}");
        assert!((0..order as u32)
            .all(|v| d.out_neighbors(v).len() == 2 && d.in_neighbors(v).len() == 2));
        let u = s.underlying();
        assert!(u.is_regular(3) && u.is_connected(), "{name}");
        let census = alternate_census(&s);
        let summary = summarize(&s, &census);
        assert_eq!(summary.oriented_cycles, p.eta, "{name}");
        assert_eq!(summary.oriented_cycle_len, p.g, "{name}");
        assert_eq!(summary.underlying_edges, 3 * order / 2, "{name}");
        let mut got = Vec::new();
        for level in &census.levels {
            let h = level.histogram();
            assert_eq!(h.len(), 1, "{name} r={} {h:?}", level.r);
            let (&(len, simple), &count) = h.iter().next().unwrap();
            got.push((level.r, len, simple, count));
        }
        assert_eq!(got, oracle_census(name), "{name}");
        let fc = face_complex(&s, &census).unwrap();
        let report = euler(&fc);
        assert_eq!(report.chi, chi, "{name}");
        assert!(report.orientable, "{name}");
    }
}

#[test]
fn flipped_orientation_gives_isomorphic_separator() {
    for name in [CdtName::K4, CdtName::K33, CdtName::Desargues] {
        let a = separator_with(name, false).digraph();
        let b = separator_with(name, true).digraph();
        assert!(digraph_isomorphic(&a, &b).is_some(), "{name}");
    }
}

#[test]
fn separator_groups_match_host_groups() {
    for (name, order, _) in SEPARATED {
        let s = separator(name);
        let full = automorphism_group(&s.underlying());
        assert_eq!(full.order(), cdt_parameters(name).a as u128, "{name}");
        // orientation-preserving automorphisms act regularly
        let oriented = automorphism_group(&s.digraph());
        assert_eq!(oriented.order(), order as u128, "{name}");
        assert!(is_transitive(&oriented, order), "{name}");
    }
}

#[test]
fn planar_separators_are_truncated_solids() {
    let pairs = [
        (CdtName::K4, Solid::Tetrahedron),
        (CdtName::Q3, Solid::Octahedron),
        (CdtName::Dodecahedral, Solid::Icosahedron),
    ];
    for (name, solid) in pairs {
        let u: Graph = separator(name).underlying();
        assert!(is_planar(&u));
        assert!(
            digraph_isomorphic(&u, &truncate(&solid.graph())).is_some(),
            "{name}"
        );
    }
}

#[test]
fn simple_length_table_for_desargues() {
    let s = separator(CdtName::Desargues);
    let summary = summarize(&s, &alternate_census(&s));
    assert_eq!(
        summary.alternate[0].simple_lengths,
        BTreeMap::from([(8, 30)])
    );
    assert_eq!(summary.transposition_edges, 60);
}
