//! Undirected and directed graphs over dense vertex ids, plus the elementary
//! metrics the rest of the crate is built on.

mod hamilton;
mod planar;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use hamilton::{is_hamiltonian, Hamiltonicity};
pub use planar::is_planar;

/// Simple undirected graph on vertices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adjacency: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn new(order: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in edges {
            for w in [u, v] {
                if w as usize >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for (u, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u as u32, w[0]);
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
        }
        Ok(Self { adjacency })
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adjacency
            .get(u as usize)
            .is_some_and(|n| n.binary_search(&v).is_ok())
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| {
            let u = u as u32;
            nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v))
        })
    }

    pub fn is_regular(&self, degree: usize) -> bool {
        self.adjacency.iter().all(|n| n.len() == degree)
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || bfs(self, 0).iter().all(|d| d.is_some())
    }

    /// The symmetric digraph carrying each edge as a pair of opposite arcs.
    pub fn to_digraph(&self) -> Digraph {
        Digraph::from_out_lists(self.adjacency.clone())
    }
}

/// Simple digraph on vertices `0..order`: no loops, no repeated arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Digraph {
    out: Vec<Vec<u32>>,
    inc: Vec<Vec<u32>>,
}

impl Digraph {
    pub fn new(order: usize, arcs: &[(u32, u32)]) -> Result<Self> {
        let mut out = vec![Vec::new(); order];
        for &(u, v) in arcs {
            for w in [u, v] {
                if w as usize >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            out[u as usize].push(v);
        }
        for (u, nbrs) in out.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u as u32, w[0]));
            }
        }
        Ok(Self::from_out_lists(out))
    }

    fn from_out_lists(out: Vec<Vec<u32>>) -> Self {
        let mut inc = vec![Vec::new(); out.len()];
        for (u, nbrs) in out.iter().enumerate() {
            for &v in nbrs {
                inc[v as usize].push(u as u32);
            }
        }
        // pushed in increasing u, so already sorted
        Self { out, inc }
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn out_neighbors(&self, v: u32) -> &[u32] {
        &self.out[v as usize]
    }

    pub fn in_neighbors(&self, v: u32) -> &[u32] {
        &self.inc[v as usize]
    }

    pub fn has_arc(&self, u: u32, v: u32) -> bool {
        self.out
            .get(u as usize)
            .is_some_and(|n| n.binary_search(&v).is_ok())
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().map(move |&v| (u as u32, v)))
    }
}

/// Forgets orientation; each pair of opposite arcs becomes one edge.
pub fn underlying(d: &Digraph) -> Graph {
    let mut adjacency = vec![Vec::new(); d.order()];
    for (u, v) in d.arcs() {
        adjacency[u as usize].push(v);
        adjacency[v as usize].push(u);
    }
    for nbrs in &mut adjacency {
        nbrs.sort_unstable();
        nbrs.dedup();
    }
    Graph { adjacency }
}

/// An ℓ-arc: a non-backtracking walk of ℓ ≥ 1 steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArcSeq(Vec<u32>);

impl ArcSeq {
    /// Checks adjacency and the non-backtracking condition in `g`.
    pub fn new(g: &Graph, vertices: Vec<u32>) -> Option<Self> {
        let ok = vertices.len() >= 2
            && vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && vertices.windows(3).all(|w| w[0] != w[2]);
        ok.then_some(Self(vertices))
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    /// Number of steps ℓ.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// True when no vertex repeats.
    pub fn is_path(&self) -> bool {
        let mut seen = self.0.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

/// All ℓ-arcs of `g` in lexicographic order of their vertex sequences.
pub fn enumerate_arcs(g: &Graph, len: usize) -> Vec<ArcSeq> {
    fn extend(g: &Graph, walk: &mut Vec<u32>, len: usize, out: &mut Vec<ArcSeq>) {
        if walk.len() == len + 1 {
            out.push(ArcSeq(walk.clone()));
            return;
        }
        let last = *walk.last().unwrap();
        let prev = (walk.len() >= 2).then(|| walk[walk.len() - 2]);
        for &w in g.neighbors(last) {
            if Some(w) == prev {
                continue;
            }
            walk.push(w);
            extend(g, walk, len, out);
            walk.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    let mut walk = Vec::with_capacity(len + 1);
    for v in 0..g.order() as u32 {
        walk.push(v);
        extend(g, &mut walk, len, &mut out);
        walk.pop();
    }
    out
}

/// Pairwise hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    order: usize,
    dist: Vec<u32>,
    diameter: u32,
}

impl DistanceTable {
    pub fn get(&self, u: u32, v: u32) -> u32 {
        self.dist[u as usize * self.order + v as usize]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

fn bfs(g: &Graph, root: u32) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.order()];
    dist[root as usize] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v as usize].unwrap();
        for &w in g.neighbors(v) {
            if dist[w as usize].is_none() {
                dist[w as usize] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn distances(g: &Graph) -> Result<DistanceTable> {
    let n = g.order();
    let mut dist = Vec::with_capacity(n * n);
    let mut diameter = 0;
    for root in 0..n as u32 {
        for (v, d) in bfs(g, root).into_iter().enumerate() {
            let d = d.ok_or(Error::Disconnected(root, v as u32))?;
            diameter = diameter.max(d);
            dist.push(d);
        }
    }
    Ok(DistanceTable {
        order: n,
        dist,
        diameter,
    })
}

/// Length of a shortest cycle, via a BFS from every vertex.
pub fn girth(g: &Graph) -> Result<usize> {
    let mut best = usize::MAX;
    for root in 0..g.order() as u32 {
        let mut dist = vec![u32::MAX; g.order()];
        let mut parent = vec![u32::MAX; g.order()];
        dist[root as usize] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v as usize];
            if 2 * dv as usize >= best {
                break;
            }
            for &w in g.neighbors(v) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dv + 1;
                    parent[w as usize] = v;
                    queue.push_back(w);
                } else if parent[v as usize] != w {
                    best = best.min((dv + dist[w as usize] + 1) as usize);
                }
            }
        }
    }
    if best == usize::MAX {
        Err(Error::Acyclic)
    } else {
        Ok(best)
    }
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![None::<bool>; g.order()];
    for root in 0..g.order() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = VecDeque::from([root as u32]);
        while let Some(v) = queue.pop_front() {
            let s = side[v as usize].unwrap();
            for &w in g.neighbors(v) {
                match side[w as usize] {
                    None => {
                        side[w as usize] = Some(!s);
                        queue.push_back(w);
                    }
                    Some(t) if t == s => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}
