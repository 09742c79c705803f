//! The separator digraph of an oriented girth-cycle collection.
//!
//! Vertices are the `(k-1)`-arcs of the host graph. The successor map `A`
//! advances an arc one step along the unique oriented cycle traversing it;
//! the transposition `T` reverses it.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::catalog::LabelTable;
use crate::cycles::CycleSet;
use crate::error::{Error, Result};
use crate::graph::{enumerate_arcs, underlying, ArcSeq, Digraph, Graph};
use crate::orient::OrientationAssignment;

#[derive(Debug, Clone)]
pub struct SeparatorDigraph {
    vertices: Vec<ArcSeq>,
    succ: Vec<u32>,
    trans: Vec<u32>,
    girth: usize,
}

impl SeparatorDigraph {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[ArcSeq] {
        &self.vertices
    }

    pub fn vertex(&self, v: u32) -> &ArcSeq {
        &self.vertices[v as usize]
    }

    /// Cycle successor `A`.
    pub fn succ(&self, v: u32) -> u32 {
        self.succ[v as usize]
    }

    /// Transposition `T`.
    pub fn transpose(&self, v: u32) -> u32 {
        self.trans[v as usize]
    }

    pub fn girth(&self) -> usize {
        self.girth
    }

    /// Cycle arcs plus both directions of every transposition pair.
    pub fn digraph(&self) -> Digraph {
        let arcs: Vec<(u32, u32)> = (0..self.order() as u32)
            .flat_map(|v| [(v, self.succ(v)), (v, self.transpose(v))])
            .collect();
        Digraph::new(self.order(), &arcs).expect("cycle and transposition arcs are distinct")
    }

    pub fn underlying(&self) -> Graph {
        underlying(&self.digraph())
    }

    /// The oriented cycles of `A`, each starting at its least vertex.
    pub fn oriented_cycles(&self) -> Vec<Vec<u32>> {
        orbits(self.order(), |v| self.succ(v))
    }

    /// Printed label of a vertex, e.g. `123` or `u1,u2,u3`.
    pub fn label(&self, v: u32, labels: &LabelTable) -> String {
        labels.join(self.vertex(v).vertices())
    }
}

fn orbits(n: usize, f: impl Fn(u32) -> u32) -> Vec<Vec<u32>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n as u32 {
        if seen[s as usize] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = s;
        while !seen[x as usize] {
            seen[x as usize] = true;
            orbit.push(x);
            x = f(x);
        }
        out.push(orbit);
    }
    out
}

pub fn build_separator(
    g: &Graph,
    cs: &CycleSet,
    k: usize,
    a: &OrientationAssignment,
) -> Result<SeparatorDigraph> {
    if k < 2 || a.signs.len() != cs.len() {
        return Err(Error::InvalidAssignment(format!(
            "{} signs for {} cycles",
            a.signs.len(),
            cs.len()
        )));
    }
    let len = k - 1;
    let vertices = enumerate_arcs(g, len);
    let index: HashMap<&[u32], u32> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.vertices(), i as u32))
        .collect();
    let mut succ = vec![u32::MAX; vertices.len()];
    for c in a.oriented_cycles(cs) {
        let n = c.len();
        let window = |s: usize| -> Vec<u32> { (0..=len).map(|i| c[(s + i) % n]).collect() };
        for s in 0..n {
            let from = window(s);
            let id = *index
                .get(from.as_slice())
                .ok_or_else(|| Error::InvalidAssignment(format!("{from:?} is not a {len}-arc")))?;
            if succ[id as usize] != u32::MAX {
                return Err(Error::InvalidAssignment(format!(
                    "arc {from:?} traversed by two oriented cycles"
                )));
            }
            succ[id as usize] = index[window(s + 1).as_slice()];
        }
    }
    if let Some(v) = succ.iter().position(|&x| x == u32::MAX) {
        return Err(Error::InvalidAssignment(format!(
            "arc {:?} traversed by no oriented cycle",
            vertices[v].vertices()
        )));
    }
    let trans = vertices
        .iter()
        .map(|v| index[v.reversed().vertices()])
        .collect();
    Ok(SeparatorDigraph {
        vertices,
        succ,
        trans,
        girth: cs.girth(),
    })
}

/// One closed orbit of `T∘A^r`, expanded to its vertex walk
/// `x, Ax, ..., A^r x, T A^r x, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternateWalk {
    pub walk: Vec<u32>,
    pub simple: bool,
}

impl AlternateWalk {
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }
}

pub fn alternate_walks(s: &SeparatorDigraph, r: usize) -> Vec<AlternateWalk> {
    let step = |x: u32| {
        let mut y = x;
        for _ in 0..r {
            y = s.succ(y);
        }
        s.transpose(y)
    };
    orbits(s.order(), step)
        .into_iter()
        .map(|orbit| {
            let mut walk = Vec::with_capacity(orbit.len() * (r + 1));
            for x in orbit {
                let mut y = x;
                walk.push(y);
                for _ in 0..r {
                    y = s.succ(y);
                    walk.push(y);
                }
            }
            let mut sorted = walk.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let simple = sorted.len() == walk.len();
            AlternateWalk { walk, simple }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternateLevel {
    pub r: usize,
    pub walks: Vec<AlternateWalk>,
}

impl AlternateLevel {
    pub fn simple_count(&self) -> usize {
        self.walks.iter().filter(|w| w.simple).count()
    }

    /// `(length, simple)` -> number of walks.
    pub fn histogram(&self) -> BTreeMap<(usize, bool), usize> {
        let mut h = BTreeMap::new();
        for w in &self.walks {
            *h.entry((w.len(), w.simple)).or_insert(0) += 1;
        }
        h
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternateCensus {
    pub levels: Vec<AlternateLevel>,
}

impl AlternateCensus {
    pub fn level(&self, r: usize) -> Option<&AlternateLevel> {
        self.levels.iter().find(|l| l.r == r)
    }
}

pub const MAX_ALTERNATION: usize = 4;

pub fn alternate_census(s: &SeparatorDigraph) -> AlternateCensus {
    AlternateCensus {
        levels: (1..=MAX_ALTERNATION)
            .map(|r| AlternateLevel {
                r,
                walks: alternate_walks(s, r),
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternateCount {
    pub r: usize,
    pub simple_cycles: usize,
    pub closed_walks: usize,
    /// cycle length -> number of simple cycles
    pub simple_lengths: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorSummary {
    pub vertices: usize,
    pub cycle_arcs: usize,
    pub transposition_edges: usize,
    pub underlying_edges: usize,
    pub oriented_cycles: usize,
    pub oriented_cycle_len: usize,
    pub alternate: Vec<AlternateCount>,
}

pub fn separator_summary(s: &SeparatorDigraph) -> SeparatorSummary {
    summarize(s, &alternate_census(s))
}

pub fn summarize(s: &SeparatorDigraph, census: &AlternateCensus) -> SeparatorSummary {
    let cycles = s.oriented_cycles();
    let alternate = census
        .levels
        .iter()
        .map(|l| {
            let mut simple_lengths = BTreeMap::new();
            for w in l.walks.iter().filter(|w| w.simple) {
                *simple_lengths.entry(w.len()).or_insert(0) += 1;
            }
            AlternateCount {
                r: l.r,
                simple_cycles: l.simple_count(),
                closed_walks: l.walks.len(),
                simple_lengths,
            }
        })
        .collect();
    SeparatorSummary {
        vertices: s.order(),
        cycle_arcs: s.order(),
        transposition_edges: s.order() / 2,
        underlying_edges: s.underlying().edge_count(),
        oriented_cycles: cycles.len(),
        oriented_cycle_len: cycles.first().map_or(0, Vec::len),
        alternate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_cdt, CdtName};
    use crate::cycles::enumerate_girth_cycles;
    use crate::orient::{build_constraints, solve, Solution};

    fn separator(name: CdtName, k: usize) -> (SeparatorDigraph, LabelTable) {
        let (g, labels) = build_cdt(name);
        let cs = enumerate_girth_cycles(&g).unwrap();
        let Solution::Assignment(a) = solve(&build_constraints(&g, &cs, k).unwrap()) else {
            panic!("{name} has an orientation")
        };
        (build_separator(&g, &cs, k, &a).unwrap(), labels)
    }

    #[test]
    fn k4_separator() {
        let (s, labels) = separator(CdtName::K4, 2);
        assert_eq!(s.order(), 12);
        let summary = separator_summary(&s);
        assert_eq!(summary.oriented_cycles, 4);
        assert_eq!(summary.oriented_cycle_len, 3);
        assert_eq!(summary.underlying_edges, 18);
        assert_eq!(
            summary.alternate[0].simple_lengths,
            BTreeMap::from([(6, 4)])
        );
        let v = labels.id("0").unwrap();
        let w = labels.id("1").unwrap();
        let x = s
            .vertices()
            .iter()
            .position(|a| a.vertices() == [v, w])
            .unwrap() as u32;
        assert_eq!(s.label(s.transpose(x), &labels), "10");
    }

    #[test]
    fn maps_are_permutations() {
        let (s, _) = separator(CdtName::K33, 3);
        let mut succ: Vec<u32> = (0..36).map(|v| s.succ(v)).collect();
        succ.sort_unstable();
        assert_eq!(succ, (0..36).collect::<Vec<_>>());
        assert!((0..36).all(|v| s.transpose(v) != v && s.transpose(s.transpose(v)) == v));
        let census = alternate_census(&s);
        for level in &census.levels {
            let total: usize = level.walks.iter().map(|w| w.len() / (level.r + 1)).sum();
            assert_eq!(total, 36);
        }
    }

    #[test]
    fn invalid_assignment_is_rejected() {
        let (g, _) = build_cdt(CdtName::K4);
        let cs = enumerate_girth_cycles(&g).unwrap();
        let all_plus = OrientationAssignment {
            signs: vec![true; cs.len()],
        };
        assert!(matches!(
            build_separator(&g, &cs, 2, &all_plus),
            Err(Error::InvalidAssignment(_))
        ));
    }
}
