//! Property checks shared by the property tests and the acceptance run.

#![allow(dead_code)]

use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cdt_core::catalog::{build_cdt, cdt_parameters, CdtName};
use cdt_core::cycles::{canonical_rotation, enumerate_girth_cycles, CanonicalCycle, CycleSet};
use cdt_core::graph::Graph;
use cdt_core::io::{parse_graph6, to_graph6};
use cdt_core::orient::{
    build_constraints, solve, verify_ooa, OrientationAssignment, ParityConstraintGraph, Solution,
};
use cdt_core::perm::digraph_isomorphic;
use cdt_core::separator::{alternate_census, build_separator};

pub const SOLVABLE: [CdtName; 7] = [
    CdtName::K4,
    CdtName::K33,
    CdtName::Q3,
    CdtName::Dodecahedral,
    CdtName::Desargues,
    CdtName::Coxeter,
    CdtName::Tutte,
];

pub struct Prepared {
    pub name: CdtName,
    pub g: Graph,
    pub k: usize,
    pub cs: CycleSet,
    pub pcg: ParityConstraintGraph,
    pub solution: Solution,
}

/// The pipeline inputs for every catalog graph, built once.
pub fn prepared() -> &'static [Prepared] {
    static CELL: OnceLock<Vec<Prepared>> = OnceLock::new();
    CELL.get_or_init(|| {
        CdtName::ALL
            .iter()
            .map(|&name| {
                let (g, _) = build_cdt(name);
                let k = cdt_parameters(name).k;
                let cs = enumerate_girth_cycles(&g).unwrap();
                let pcg = build_constraints(&g, &cs, k).unwrap();
                let solution = solve(&pcg);
                Prepared {
                    name,
                    g,
                    k,
                    cs,
                    pcg,
                    solution,
                }
            })
            .collect()
    })
}

fn solvable() -> Vec<&'static Prepared> {
    prepared()
        .iter()
        .filter(|p| matches!(p.solution, Solution::Assignment(_)))
        .collect()
}

/// Uniform random simple cubic graph on `n` vertices by the pairing model
/// with rejection. Not necessarily connected.
pub fn random_cubic(n: usize, seed: u64) -> Graph {
    assert!(n >= 4 && n.is_multiple_of(2));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut points: Vec<u32> = (0..3 * n as u32).collect();
        points.shuffle(&mut rng);
        let mut edges: Vec<(u32, u32)> = points
            .chunks(2)
            .map(|p| {
                let (u, v) = (p[0] / 3, p[1] / 3);
                (u.min(v), u.max(v))
            })
            .collect();
        edges.sort_unstable();
        let simple = edges.iter().all(|&(u, v)| u != v) && edges.windows(2).all(|w| w[0] != w[1]);
        if simple {
            return Graph::new(n, &edges).unwrap();
        }
    }
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn finish(
    result: Result<(), proptest::test_runner::TestError<impl std::fmt::Debug>>,
) -> Result<(), String> {
    result.map_err(|e| e.to_string())
}

/// Component id of each cycle in the constraint graph.
fn components(pcg: &ParityConstraintGraph) -> Vec<usize> {
    let mut comp: Vec<usize> = (0..pcg.node_count()).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while c[r] != r {
            r = c[r];
        }
        c[x] = r;
        r
    }
    for e in pcg.edges() {
        let (a, b) = (find(&mut comp, e.a), find(&mut comp, e.b));
        comp[a.max(b)] = a.min(b);
    }
    (0..comp.len()).map(|x| find(&mut comp, x)).collect()
}

fn flipped(asg: &OrientationAssignment, comp: &[usize], mask: u64) -> OrientationAssignment {
    OrientationAssignment {
        signs: asg
            .signs
            .iter()
            .zip(comp)
            .map(|(&s, &c)| s ^ (mask >> (c % 64) & 1 == 1))
            .collect(),
    }
}

/// Flipping whole constraint components keeps the assignment valid, and the
/// separator built from it is isomorphic to the original.
pub fn flip_invariance(cases: u32) -> Result<(), String> {
    let graphs = solvable();
    let strategy = (0..graphs.len(), any::<u64>());
    finish(runner(cases).run(&strategy, |(i, mask)| {
        let p = graphs[i];
        let Solution::Assignment(asg) = &p.solution else {
            unreachable!()
        };
        let comp = components(&p.pcg);
        let other = flipped(asg, &comp, mask | 1);
        prop_assert!(p.pcg.is_satisfied_by(&other.signs));
        prop_assert!(verify_ooa(&p.g, &p.cs, p.k, &other));
        let a = build_separator(&p.g, &p.cs, p.k, asg).unwrap();
        let b = build_separator(&p.g, &p.cs, p.k, &other).unwrap();
        let hist = |s| -> Vec<_> {
            alternate_census(s)
                .levels
                .iter()
                .map(|l| l.histogram())
                .collect()
        };
        prop_assert_eq!(hist(&a), hist(&b), "{}", p.name);
        if a.order() <= 200 {
            prop_assert!(
                digraph_isomorphic(&a.digraph(), &b.digraph()).is_some(),
                "{}",
                p.name
            );
        }
        Ok(())
    }))
}

/// The direct checker and the constraint graph agree on arbitrary sign
/// vectors, and the solver output always passes the checker.
pub fn solver_checker_independence(cases: u32) -> Result<(), String> {
    let all = prepared();
    let strategy = (0..all.len(), any::<u64>(), any::<u64>());
    finish(runner(cases).run(&strategy, |(i, seed, mask)| {
        let p = &all[i];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let random = OrientationAssignment {
            signs: (0..p.cs.len()).map(|_| rng.gen()).collect(),
        };
        prop_assert_eq!(
            verify_ooa(&p.g, &p.cs, p.k, &random),
            p.pcg.is_satisfied_by(&random.signs)
        );
        match &p.solution {
            Solution::Assignment(asg) => {
                prop_assert!(verify_ooa(&p.g, &p.cs, p.k, asg));
                let comp = components(&p.pcg);
                let other = flipped(asg, &comp, mask);
                prop_assert!(verify_ooa(&p.g, &p.cs, p.k, &other));
                let mut broken = asg.clone();
                let c = rng.gen_range(0..broken.signs.len());
                broken.signs[c] = !broken.signs[c];
                prop_assert!(!verify_ooa(&p.g, &p.cs, p.k, &broken));
                prop_assert!(!p.pcg.is_satisfied_by(&broken.signs));
            }
            Solution::Witness(w) => {
                prop_assert!(w.validate(&p.cs));
                prop_assert!(!verify_ooa(&p.g, &p.cs, p.k, &random));
            }
        }
        Ok(())
    }))
}

fn rotate_reflect(seq: &[u32], shift: usize, reverse: bool) -> Vec<u32> {
    let mut v = seq.to_vec();
    if reverse {
        v.reverse();
    }
    let n = v.len();
    v.rotate_left(shift % n.max(1));
    v
}

/// Canonical forms are fixed by re-canonicalization and blind to rotation
/// and reflection.
pub fn canonical_idempotence(cases: u32) -> Result<(), String> {
    let all = prepared();
    let girth_cycles = (0..all.len(), any::<usize>(), any::<usize>(), any::<bool>());
    let arbitrary = (
        prop::collection::vec(0u32..40, 1..16),
        any::<usize>(),
        any::<bool>(),
    );
    let mut r = runner(cases);
    finish(r.run(&girth_cycles, |(i, c, shift, reverse)| {
        let p = &all[i];
        let id = c % p.cs.len();
        let cycle = p.cs.get(id);
        let moved = rotate_reflect(cycle.vertices(), shift, reverse);
        prop_assert_eq!(&CanonicalCycle::new(&moved), cycle);
        prop_assert_eq!(p.cs.find(&moved), Some(id));
        prop_assert_eq!(
            canonical_rotation(cycle.vertices()),
            cycle.vertices().to_vec()
        );
        Ok(())
    }))?;
    finish(r.run(&arbitrary, |(seq, shift, reverse)| {
        let c = canonical_rotation(&seq);
        prop_assert_eq!(canonical_rotation(&c), c.clone());
        prop_assert_eq!(canonical_rotation(&rotate_reflect(&seq, shift, reverse)), c);
        Ok(())
    }))
}

/// graph6 encoding followed by decoding is the identity on random cubic
/// graphs with at most 20 vertices.
pub fn graph6_round_trip(cases: u32) -> Result<(), String> {
    let strategy = (2usize..=10, any::<u64>());
    finish(runner(cases).run(&strategy, |(half, seed)| {
        let g = random_cubic(2 * half, seed);
        let text = to_graph6(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
        Ok(())
    }))
}
