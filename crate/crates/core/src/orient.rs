//! Opposite-orientation assignments of girth cycles.
//!
//! Each `(k-1)`-path lies on exactly two girth cycles, which must traverse it
//! in opposite directions. With one sign per cycle (keep or reverse its
//! canonical direction) every path becomes an equal/unequal constraint
//! between two signs, solved by 2-colouring.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::catalog::{LabelTable, OocFixture};
use crate::cycles::{CycleSet, Traversal};
use crate::error::{Error, Result};
use crate::graph::{enumerate_arcs, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    Equal,
    Unequal,
}

impl Relation {
    fn flips(self) -> bool {
        self == Relation::Unequal
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub a: usize,
    pub b: usize,
    /// The shared path, smaller endpoint first.
    pub path: Vec<u32>,
    pub relation: Relation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityConstraintGraph {
    nodes: usize,
    path_len: usize,
    edges: Vec<Constraint>,
}

impl ParityConstraintGraph {
    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn path_len(&self) -> usize {
        self.path_len
    }

    pub fn edges(&self) -> &[Constraint] {
        &self.edges
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.a].push(i);
            adj[e.b].push(i);
        }
        adj
    }

    /// Number of connected components, isolated nodes included.
    pub fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.nodes];
        let mut count = 0;
        for s in 0..self.nodes {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &ei in &adj[v] {
                    let e = &self.edges[ei];
                    let w = if e.a == v { e.b } else { e.a };
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// True when `signs` satisfies every constraint.
    pub fn is_satisfied_by(&self, signs: &[bool]) -> bool {
        signs.len() == self.nodes
            && self
                .edges
                .iter()
                .all(|e| (signs[e.a] != signs[e.b]) == e.relation.flips())
    }
}

pub fn build_constraints(g: &Graph, cs: &CycleSet, k: usize) -> Result<ParityConstraintGraph> {
    let path_len = k.checked_sub(1).filter(|&l| l >= 1).ok_or_else(|| {
        Error::Unsupported(format!("arc-transitivity {k} leaves no paths to constrain"))
    })?;
    let index = cs.path_index(path_len);
    let mut edges = Vec::new();
    for arc in enumerate_arcs(g, path_len) {
        let v = arc.vertices();
        if !arc.is_path() || v[0] > v[path_len] {
            continue;
        }
        let through = index.get(v);
        let &[(a, da), (b, db)] = through else {
            return Err(Error::PathCoverage(path_len, v.to_vec(), through.len()));
        };
        // traversing the path the same way means exactly one must flip
        let relation = if da == db {
            Relation::Unequal
        } else {
            Relation::Equal
        };
        edges.push(Constraint {
            a,
            b,
            path: v.to_vec(),
            relation,
        });
    }
    Ok(ParityConstraintGraph {
        nodes: cs.len(),
        path_len,
        edges,
    })
}

/// One sign per girth cycle: `true` keeps the canonical direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationAssignment {
    pub signs: Vec<bool>,
}

impl OrientationAssignment {
    pub fn oriented_cycles(&self, cs: &CycleSet) -> Vec<Vec<u32>> {
        cs.cycles()
            .iter()
            .zip(&self.signs)
            .map(|(c, &keep)| {
                if keep {
                    c.vertices().to_vec()
                } else {
                    c.reversed_sequence()
                }
            })
            .collect()
    }

    /// `+`/`-` string, one character per cycle.
    pub fn digest(&self) -> String {
        self.signs
            .iter()
            .map(|&s| if s { '+' } else { '-' })
            .collect()
    }
}

/// A closed chain of cycles, consecutive ones sharing a path, whose
/// constraints multiply to a sign change.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddWitness {
    /// `steps[i]` is a cycle and the path it shares with the next step's
    /// cycle; the last step wraps to the first.
    pub steps: Vec<WitnessStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessStep {
    pub cycle: usize,
    pub path: Vec<u32>,
    pub relation: Relation,
}

impl OddWitness {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Re-checks the witness against the cycles themselves.
    pub fn validate(&self, cs: &CycleSet) -> bool {
        let m = self.steps.len();
        if m == 0 {
            return false;
        }
        let mut flips = 0;
        for (i, step) in self.steps.iter().enumerate() {
            let next = self.steps[(i + 1) % m].cycle;
            let (Some(da), Some(db)) = (
                cs.get(step.cycle).traversal_of(&step.path),
                cs.get(next).traversal_of(&step.path),
            ) else {
                return false;
            };
            if step.cycle == next {
                return false;
            }
            let relation = if da == db {
                Relation::Unequal
            } else {
                Relation::Equal
            };
            if relation != step.relation {
                return false;
            }
            flips += usize::from(relation.flips());
        }
        flips % 2 == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Assignment(OrientationAssignment),
    Witness(OddWitness),
}

/// 2-colours the constraint graph from breadth-first spanning trees rooted
/// at the least node of each component (roots get `+`). On failure the
/// first violated constraint, closed by the two tree paths, is returned.
pub fn solve(pcg: &ParityConstraintGraph) -> Solution {
    let n = pcg.nodes;
    let adj = pcg.adjacency();
    let mut sign = vec![None::<bool>; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if sign[root].is_some() {
            continue;
        }
        sign[root] = Some(true);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &ei in &adj[v] {
                let e = &pcg.edges[ei];
                let w = if e.a == v { e.b } else { e.a };
                if sign[w].is_none() {
                    sign[w] = Some(sign[v].unwrap() ^ e.relation.flips());
                    parent_edge[w] = ei;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let signs: Vec<bool> = sign.into_iter().map(Option::unwrap).collect();
    let conflict = pcg
        .edges
        .iter()
        .position(|e| (signs[e.a] != signs[e.b]) != e.relation.flips());
    let Some(ci) = conflict else {
        return Solution::Assignment(OrientationAssignment { signs });
    };

    // climb both endpoints to their common ancestor
    let other = |ei: usize, v: usize| {
        let e = &pcg.edges[ei];
        if e.a == v {
            e.b
        } else {
            e.a
        }
    };
    let e = &pcg.edges[ci];
    let (mut x, mut y) = (e.a, e.b);
    let mut up_x = Vec::new();
    let mut up_y = Vec::new();
    while x != y {
        if depth[x] >= depth[y] {
            up_x.push(parent_edge[x]);
            x = other(parent_edge[x], x);
        } else {
            up_y.push(parent_edge[y]);
            y = other(parent_edge[y], y);
        }
    }
    // closed sequence a -> ... -> lca -> ... -> b -> (conflict) -> a
    let mut steps = Vec::new();
    let mut v = e.a;
    for &ei in &up_x {
        steps.push(step(pcg, v, ei));
        v = other(ei, v);
    }
    for &ei in up_y.iter().rev() {
        steps.push(step(pcg, v, ei));
        v = other(ei, v);
    }
    steps.push(step(pcg, v, ci));
    Solution::Witness(OddWitness { steps })
}

fn step(pcg: &ParityConstraintGraph, cycle: usize, edge: usize) -> WitnessStep {
    let e = &pcg.edges[edge];
    WitnessStep {
        cycle,
        path: e.path.clone(),
        relation: e.relation,
    }
}

/// Checks directly that every `(k-1)`-arc of `g` is traversed by exactly one
/// of the oriented cycles.
pub fn verify_oriented_cycles(g: &Graph, k: usize, oriented: &[Vec<u32>]) -> bool {
    if k < 2 {
        return false;
    }
    let len = k - 1;
    let mut uses: HashMap<Vec<u32>, usize> = HashMap::new();
    for c in oriented {
        let n = c.len();
        if n <= len || !(0..n).all(|i| g.has_edge(c[i], c[(i + 1) % n])) {
            return false;
        }
        for s in 0..n {
            let arc: Vec<u32> = (0..=len).map(|i| c[(s + i) % n]).collect();
            *uses.entry(arc).or_insert(0) += 1;
        }
    }
    let arcs = enumerate_arcs(g, len);
    arcs.len() == uses.len()
        && arcs
            .iter()
            .all(|a| uses.get(a.vertices()).copied() == Some(1))
}

pub fn verify_ooa(g: &Graph, cs: &CycleSet, k: usize, a: &OrientationAssignment) -> bool {
    a.signs.len() == cs.len() && verify_oriented_cycles(g, k, &a.oriented_cycles(cs))
}

/// The classification column: 0 no orientation, 1 planar, 2 when
/// `g = 2(k-1)`, 3 when `g > 2(k-1)`.
pub fn classify_kappa(solved: bool, planar: bool, girth: usize, k: usize) -> Result<u8> {
    let bound = 2 * k.saturating_sub(1);
    match (solved, planar) {
        (false, true) => Err(Error::Contradictory(
            "planar cubic distance-transitive graphs admit an orientation".into(),
        )),
        (false, false) => Ok(0),
        (true, true) => Ok(1),
        (true, false) if girth == bound => Ok(2),
        (true, false) if girth > bound => Ok(3),
        (true, false) => Err(Error::Contradictory(format!(
            "girth {girth} below 2(k-1) = {bound} for a non-planar solution"
        ))),
    }
}

/// A published collection turned into an assignment, with misprinted
/// entries recovered from the constraints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureResolution {
    pub assignment: OrientationAssignment,
    pub reconstructed: Vec<Reconstruction>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reconstruction {
    pub name: String,
    pub printed: String,
    pub cycle: usize,
    /// The recovered oriented cycle, in printed labels.
    pub oriented: Vec<String>,
}

pub fn resolve_fixture(
    pcg: &ParityConstraintGraph,
    cs: &CycleSet,
    labels: &LabelTable,
    fixture: &OocFixture,
) -> Result<FixtureResolution> {
    let mut sign: Vec<Option<bool>> = vec![None; cs.len()];
    for seq in fixture.cycles() {
        let id = cs
            .find(seq)
            .filter(|&id| cs.get(id).len() == seq.len())
            .ok_or_else(|| Error::Fixture(format!("{} is not a girth cycle", labels.join(seq))))?;
        if sign[id].is_some() {
            return Err(Error::Fixture(format!("{} listed twice", labels.join(seq))));
        }
        let head = &seq[..seq.len().min(3)];
        sign[id] = Some(cs.get(id).traversal_of(head) == Some(Traversal::Forward));
    }
    let missing: Vec<usize> = (0..cs.len()).filter(|&i| sign[i].is_none()).collect();
    let misprints: Vec<(&str, &str)> = fixture.misprints().collect();
    if missing.len() != misprints.len() {
        return Err(Error::Fixture(format!(
            "{} cycles missing but {} entries marked misprinted",
            missing.len(),
            misprints.len()
        )));
    }

    // propagate known signs along constraints until nothing changes
    let mut changed = true;
    while changed {
        changed = false;
        for e in pcg.edges() {
            match (sign[e.a], sign[e.b]) {
                (Some(s), None) => {
                    sign[e.b] = Some(s ^ e.relation.flips());
                    changed = true;
                }
                (None, Some(s)) => {
                    sign[e.a] = Some(s ^ e.relation.flips());
                    changed = true;
                }
                _ => {}
            }
        }
    }
    let signs: Vec<bool> = sign
        .iter()
        .map(|s| s.ok_or_else(|| Error::Fixture("misprinted cycle not determined".into())))
        .collect::<Result<_>>()?;
    let assignment = OrientationAssignment { signs };

    // pair each misprint with the missing cycle sharing most printed labels
    let oriented = assignment.oriented_cycles(cs);
    let mut free = missing;
    let mut reconstructed = Vec::new();
    for (name, printed) in misprints {
        let printed_ids: Vec<u32> = printed
            .split_whitespace()
            .filter_map(|t| labels.id(t))
            .collect();
        let best = free
            .iter()
            .copied()
            .enumerate()
            .max_by_key(|&(pos, id)| {
                let shared = oriented[id]
                    .iter()
                    .filter(|v| printed_ids.contains(v))
                    .count();
                (shared, std::cmp::Reverse(pos))
            })
            .map(|(pos, _)| pos)
            .expect("one free cycle per misprint");
        let id = free.remove(best);
        // rotate to start at the printed first vertex when possible
        let mut seq = oriented[id].clone();
        if let Some(p) = printed_ids
            .first()
            .and_then(|f| seq.iter().position(|v| v == f))
        {
            seq.rotate_left(p);
        }
        reconstructed.push(Reconstruction {
            name: name.to_owned(),
            printed: printed.to_owned(),
            cycle: id,
            oriented: seq.iter().map(|&v| labels.label(v).to_owned()).collect(),
        });
    }
    Ok(FixtureResolution {
        assignment,
        reconstructed,
    })
}
