//! Closed surfaces spanned by the oriented cycles and alternate cycles of a
//! separator digraph.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separator::{AlternateCensus, SeparatorDigraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceComplex {
    pub vertices: usize,
    pub edges: Vec<(u32, u32)>,
    /// Closed walks in the underlying graph.
    pub faces: Vec<Vec<u32>>,
}

fn edge_key(u: u32, v: u32) -> (u32, u32) {
    (u.min(v), u.max(v))
}

/// Faces are the oriented girth cycles and the simple alternate cycles
/// (`r = 1`). Every edge must lie on exactly two face sides.
pub fn face_complex(s: &SeparatorDigraph, census: &AlternateCensus) -> Result<FaceComplex> {
    let g = s.underlying();
    let mut faces = s.oriented_cycles();
    if let Some(level) = census.level(1) {
        faces.extend(
            level
                .walks
                .iter()
                .filter(|w| w.simple)
                .map(|w| w.walk.clone()),
        );
    }
    let fc = FaceComplex {
        vertices: g.order(),
        edges: g.edges().collect(),
        faces,
    };
    check_coverage(&g, &fc)?;
    Ok(fc)
}

fn check_coverage(g: &Graph, fc: &FaceComplex) -> Result<()> {
    let mut slots: HashMap<(u32, u32), usize> = fc.edges.iter().map(|&e| (e, 0)).collect();
    for f in &fc.faces {
        for i in 0..f.len() {
            let (u, v) = (f[i], f[(i + 1) % f.len()]);
            if !g.has_edge(u, v) {
                return Err(Error::FaceCoverage(u, v, 0));
            }
            *slots.get_mut(&edge_key(u, v)).unwrap() += 1;
        }
    }
    let mut bad: Vec<_> = slots.into_iter().filter(|&(_, c)| c != 2).collect();
    bad.sort_unstable();
    match bad.first() {
        Some(&((u, v), c)) => Err(Error::FaceCoverage(u, v, c)),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerReport {
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub chi: i64,
    pub orientable: bool,
    /// Orientable genus `(2 - chi) / 2`; absent for non-orientable surfaces.
    pub genus: Option<i64>,
    /// `2 - chi`, meaningful either way.
    pub euler_genus: i64,
}

pub fn euler(fc: &FaceComplex) -> EulerReport {
    let chi = fc.vertices as i64 - fc.edges.len() as i64 + fc.faces.len() as i64;
    let orientable = is_orientable(fc);
    EulerReport {
        v: fc.vertices,
        e: fc.edges.len(),
        f: fc.faces.len(),
        chi,
        orientable,
        genus: (orientable && chi % 2 == 0).then_some((2 - chi) / 2),
        euler_genus: 2 - chi,
    }
}

/// Tries to orient every face so that the two sides of each edge run in
/// opposite directions.
fn is_orientable(fc: &FaceComplex) -> bool {
    // edge -> the (face, runs low-to-high) sides on it
    let mut sides: HashMap<(u32, u32), Vec<(usize, bool)>> = HashMap::new();
    for (fi, f) in fc.faces.iter().enumerate() {
        for i in 0..f.len() {
            let (u, v) = (f[i], f[(i + 1) % f.len()]);
            sides.entry(edge_key(u, v)).or_default().push((fi, u < v));
        }
    }
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); fc.faces.len()];
    for s in sides.values() {
        let &[(a, da), (b, db)] = s.as_slice() else {
            return false;
        };
        // same direction on both sides means exactly one face must flip
        let flip = da == db;
        if a == b {
            if flip {
                return false;
            }
            continue;
        }
        adj[a].push((b, flip));
        adj[b].push((a, flip));
    }
    let mut sign: Vec<Option<bool>> = vec![None; fc.faces.len()];
    for root in 0..fc.faces.len() {
        if sign[root].is_some() {
            continue;
        }
        sign[root] = Some(true);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let sx = sign[x].unwrap();
            for &(y, flip) in &adj[x] {
                match sign[y] {
                    None => {
                        sign[y] = Some(sx ^ flip);
                        queue.push_back(y);
                    }
                    Some(sy) if sy != sx ^ flip => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// The Platonic solids whose truncations appear as separator graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Solid {
    Tetrahedron,
    Octahedron,
    Icosahedron,
}

impl Solid {
    pub fn graph(self) -> Graph {
        let edges: Vec<(u32, u32)> = match self {
            Solid::Tetrahedron => (0..4)
                .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
                .collect(),
            // K6 minus the antipodal matching {0,3}, {1,4}, {2,5}
            Solid::Octahedron => (0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|&(u, v)| v != u + 3)
                .collect(),
            // apex 0, upper ring 1..=5, lower ring 6..=10, apex 11
            Solid::Icosahedron => {
                let up = |i: u32| 1 + i % 5;
                let low = |i: u32| 6 + i % 5;
                (0..5)
                    .flat_map(|i| {
                        [
                            (0, up(i)),
                            (up(i), up(i + 1)),
                            (up(i), low(i)),
                            (up(i + 1), low(i)),
                            (low(i), low(i + 1)),
                            (low(i), 11),
                        ]
                    })
                    .collect()
            }
        };
        let n = match self {
            Solid::Tetrahedron => 4,
            Solid::Octahedron => 6,
            Solid::Icosahedron => 12,
        };
        Graph::new(n, &edges).expect("solid graphs are simple")
    }

    pub fn truncated_name(self) -> &'static str {
        match self {
            Solid::Tetrahedron => "truncated tetrahedron",
            Solid::Octahedron => "truncated octahedron",
            Solid::Icosahedron => "truncated icosahedron",
        }
    }
}

/// Truncation of a polyhedral graph whose vertex links are cycles: one
/// vertex per arc `(v, w)`, joined to its reverse and to the arcs `(v, w')`
/// with `w, w'` adjacent.
pub fn truncate(g: &Graph) -> Graph {
    let mut arc_id = HashMap::new();
    for v in 0..g.order() as u32 {
        for &w in g.neighbors(v) {
            let id = arc_id.len() as u32;
            arc_id.insert((v, w), id);
        }
    }
    let mut edges = Vec::new();
    for (&(v, w), &id) in &arc_id {
        let rev = arc_id[&(w, v)];
        if id < rev {
            edges.push((id, rev));
        }
        for &x in g.neighbors(v) {
            let other = arc_id[&(v, x)];
            if id < other && g.has_edge(w, x) {
                edges.push((id, other));
            }
        }
    }
    edges.sort_unstable();
    Graph::new(arc_id.len(), &edges).expect("truncation is simple")
}
