//! Individualization-refinement search over equitable partitions.
//!
//! The first path of the search tree individualizes the least vertex of the
//! first non-singleton cell at every level; its leaf is the reference
//! labelling. Automorphisms are leaves of other branches that agree with the
//! reference refinement trace and preserve arcs. Branches already known to
//! lie in the orbit of the reference vertex are skipped, so the product of
//! the orbit lengths along the first path is the group order.

use std::collections::VecDeque;

use super::{PermGroup, Permutation};
use crate::graph::{Digraph, Graph};

/// Read access to a (di)graph's arcs. Undirected graphs use the same list
/// for both directions.
pub trait Adjacency {
    fn order(&self) -> usize;
    fn out_neighbors(&self, v: u32) -> &[u32];
    fn in_neighbors(&self, v: u32) -> &[u32];
    fn has_arc(&self, u: u32, v: u32) -> bool;

    fn arc_count(&self) -> usize {
        (0..self.order() as u32)
            .map(|v| self.out_neighbors(v).len())
            .sum()
    }
}

impl Adjacency for Graph {
    fn order(&self) -> usize {
        Graph::order(self)
    }
    fn out_neighbors(&self, v: u32) -> &[u32] {
        self.neighbors(v)
    }
    fn in_neighbors(&self, v: u32) -> &[u32] {
        self.neighbors(v)
    }
    fn has_arc(&self, u: u32, v: u32) -> bool {
        self.has_edge(u, v)
    }
}

impl Adjacency for Digraph {
    fn order(&self) -> usize {
        Digraph::order(self)
    }
    fn out_neighbors(&self, v: u32) -> &[u32] {
        Digraph::out_neighbors(self, v)
    }
    fn in_neighbors(&self, v: u32) -> &[u32] {
        Digraph::in_neighbors(self, v)
    }
    fn has_arc(&self, u: u32, v: u32) -> bool {
        Digraph::has_arc(self, u, v)
    }
}

#[derive(Debug, Clone)]
struct Partition {
    cells: Vec<Vec<u32>>,
    cell_of: Vec<usize>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        Self {
            cells: vec![(0..n as u32).collect()],
            cell_of: vec![0; n],
        }
    }

    fn target_cell(&self) -> Option<usize> {
        self.cells.iter().position(|c| c.len() > 1)
    }

    fn sorted_cell(&self, c: usize) -> Vec<u32> {
        let mut cell = self.cells[c].clone();
        cell.sort_unstable();
        cell
    }

    /// Splits `v` off cell `c`; `v` keeps index `c` and the rest moves to a
    /// new last cell. Returns the index to refine with.
    fn individualize(&mut self, c: usize, v: u32) -> usize {
        let rest: Vec<u32> = self.cells[c].iter().copied().filter(|&x| x != v).collect();
        let new = self.cells.len();
        for &x in &rest {
            self.cell_of[x as usize] = new;
        }
        self.cells[c] = vec![v];
        self.cells.push(rest);
        c
    }

    fn leaf(&self) -> Vec<u32> {
        self.cells.iter().map(|c| c[0]).collect()
    }
}

struct Scratch {
    count_in: Vec<u32>,
    count_out: Vec<u32>,
}

/// Refines to the coarsest equitable partition below `part`, splitting on
/// the cells in `queue`. Every split is appended to `trace`.
fn refine<A: Adjacency>(
    a: &A,
    part: &mut Partition,
    queue: Vec<usize>,
    scratch: &mut Scratch,
    trace: &mut Vec<u32>,
) {
    let mut queued = vec![false; a.order().max(1)];
    let mut queue: VecDeque<usize> = queue.into();
    for &c in &queue {
        queued[c] = true;
    }
    let mut touched: Vec<u32> = Vec::new();
    while let Some(w) = queue.pop_front() {
        queued[w] = false;
        touched.clear();
        for &v in &part.cells[w] {
            for &u in a.out_neighbors(v) {
                if scratch.count_in[u as usize] == 0 && scratch.count_out[u as usize] == 0 {
                    touched.push(u);
                }
                scratch.count_in[u as usize] += 1;
            }
            for &u in a.in_neighbors(v) {
                if scratch.count_in[u as usize] == 0 && scratch.count_out[u as usize] == 0 {
                    touched.push(u);
                }
                scratch.count_out[u as usize] += 1;
            }
        }
        let mut cells: Vec<usize> = touched.iter().map(|&u| part.cell_of[u as usize]).collect();
        cells.sort_unstable();
        cells.dedup();
        for c in cells {
            if part.cells[c].len() == 1 {
                continue;
            }
            let key = |u: u32| (scratch.count_in[u as usize], scratch.count_out[u as usize]);
            let mut members = std::mem::take(&mut part.cells[c]);
            members.sort_unstable_by_key(|&u| (key(u), u));
            let mut groups: Vec<Vec<u32>> = Vec::new();
            let mut last = None;
            for u in members {
                if last != Some(key(u)) {
                    groups.push(Vec::new());
                    last = Some(key(u));
                }
                groups.last_mut().unwrap().push(u);
            }
            trace.extend([w as u32, c as u32, groups.len() as u32]);
            for g in &groups {
                let (ki, ko) = key(g[0]);
                trace.extend([ki, ko, g.len() as u32]);
            }
            if groups.len() == 1 {
                part.cells[c] = groups.pop().unwrap();
                continue;
            }
            let mut groups = groups.into_iter();
            part.cells[c] = groups.next().unwrap();
            if !queued[c] {
                queued[c] = true;
                queue.push_back(c);
            }
            for g in groups {
                let idx = part.cells.len();
                for &u in &g {
                    part.cell_of[u as usize] = idx;
                }
                part.cells.push(g);
                if queued.len() <= idx {
                    queued.resize(idx + 1, false);
                }
                queued[idx] = true;
                queue.push_back(idx);
            }
        }
        for &u in &touched {
            scratch.count_in[u as usize] = 0;
            scratch.count_out[u as usize] = 0;
        }
    }
}

/// A node on the reference path: the partition before individualizing, the
/// target cell and the trace of the refinement that followed.
struct Node {
    part: Partition,
    cell: usize,
    trace: Vec<u32>,
}

struct Reference {
    root_trace: Vec<u32>,
    nodes: Vec<Node>,
    base: Vec<u32>,
    leaf: Vec<u32>,
}

fn reference_path<A: Adjacency>(a: &A, scratch: &mut Scratch) -> Reference {
    let mut part = Partition::unit(a.order());
    let mut root_trace = Vec::new();
    refine(a, &mut part, vec![0], scratch, &mut root_trace);
    let mut nodes = Vec::new();
    let mut base = Vec::new();
    while let Some(c) = part.target_cell() {
        let v = *part.cells[c].iter().min().unwrap();
        let mut next = part.clone();
        let split = next.individualize(c, v);
        let mut trace = Vec::new();
        refine(a, &mut next, vec![split], scratch, &mut trace);
        nodes.push(Node {
            part,
            cell: c,
            trace,
        });
        base.push(v);
        part = next;
    }
    Reference {
        root_trace,
        nodes,
        base,
        leaf: part.leaf(),
    }
}

/// Depth-first search below `part` (at depth `level` of the reference path)
/// for a leaf of `b` whose labelling maps `a` onto `b`.
fn descend<A: Adjacency, B: Adjacency>(
    a: &A,
    b: &B,
    reference: &Reference,
    part: Partition,
    level: usize,
    scratch: &mut Scratch,
) -> Option<Permutation> {
    let Some(node) = reference.nodes.get(level) else {
        let sigma = mapping(&reference.leaf, &part.leaf());
        return preserves_arcs(a, b, &sigma).then_some(sigma);
    };
    if part.cells.len() != node.part.cells.len()
        || part.cells[node.cell].len() != node.part.cells[node.cell].len()
    {
        return None;
    }
    for w in part.sorted_cell(node.cell) {
        if let Some(sigma) = try_branch(a, b, reference, &part, level, w, scratch) {
            return Some(sigma);
        }
    }
    None
}

fn try_branch<A: Adjacency, B: Adjacency>(
    a: &A,
    b: &B,
    reference: &Reference,
    part: &Partition,
    level: usize,
    w: u32,
    scratch: &mut Scratch,
) -> Option<Permutation> {
    let node = &reference.nodes[level];
    let mut next = part.clone();
    let split = next.individualize(node.cell, w);
    let mut trace = Vec::new();
    refine(b, &mut next, vec![split], scratch, &mut trace);
    if trace != node.trace {
        return None;
    }
    descend(a, b, reference, next, level + 1, scratch)
}

fn mapping(from: &[u32], to: &[u32]) -> Permutation {
    let mut images = vec![0; from.len()];
    for (&x, &y) in from.iter().zip(to) {
        images[x as usize] = y;
    }
    Permutation::from_images(images).expect("leaves are discrete partitions")
}

fn preserves_arcs<A: Adjacency, B: Adjacency>(a: &A, b: &B, sigma: &Permutation) -> bool {
    a.arc_count() == b.arc_count()
        && (0..a.order() as u32).all(|u| {
            a.out_neighbors(u)
                .iter()
                .all(|&v| b.has_arc(sigma.apply(u), sigma.apply(v)))
        })
}

fn scratch_for(n: usize) -> Scratch {
    Scratch {
        count_in: vec![0; n],
        count_out: vec![0; n],
    }
}

struct Orbits(Vec<u32>);

impl Orbits {
    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.0[r as usize] != r {
            r = self.0[r as usize];
        }
        let mut y = x;
        while self.0[y as usize] != r {
            let next = self.0[y as usize];
            self.0[y as usize] = r;
            y = next;
        }
        r
    }

    fn absorb(&mut self, p: &Permutation) {
        for x in 0..p.degree() as u32 {
            let (rx, ry) = (self.find(x), self.find(p.apply(x)));
            if rx != ry {
                self.0[rx.max(ry) as usize] = rx.min(ry);
            }
        }
    }
}

/// Automorphism group of a graph or digraph.
pub fn automorphism_group<A: Adjacency>(a: &A) -> PermGroup {
    let n = a.order();
    let mut scratch = scratch_for(n);
    let reference = reference_path(a, &mut scratch);
    let mut gens: Vec<Permutation> = Vec::new();
    for level in (0..reference.nodes.len()).rev() {
        // every generator found so far fixes the base points above `level`
        let mut orbits = Orbits((0..n as u32).collect());
        for g in &gens {
            orbits.absorb(g);
        }
        let node = &reference.nodes[level];
        let b = reference.base[level];
        for w in node.part.sorted_cell(node.cell) {
            if orbits.find(w) == orbits.find(b) {
                continue;
            }
            if let Some(sigma) = try_branch(a, a, &reference, &node.part, level, w, &mut scratch) {
                orbits.absorb(&sigma);
                gens.push(sigma);
            }
        }
    }
    PermGroup::new(n, gens)
}

/// An arc-preserving bijection from `a` onto `b`, if one exists.
pub fn digraph_isomorphic<A: Adjacency, B: Adjacency>(a: &A, b: &B) -> Option<Permutation> {
    let n = a.order();
    if n != b.order() || a.arc_count() != b.arc_count() {
        return None;
    }
    let mut scratch = scratch_for(n);
    let reference = reference_path(a, &mut scratch);
    let mut part = Partition::unit(n);
    let mut trace = Vec::new();
    refine(b, &mut part, vec![0], &mut scratch, &mut trace);
    if trace != reference.root_trace {
        return None;
    }
    descend(a, b, &reference, part, 0, &mut scratch)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n as usize, &edges).unwrap()
    }

    #[test]
    fn small_graph_groups() {
        assert_eq!(automorphism_group(&cycle(6)).order(), 12);
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(automorphism_group(&k2).order(), 2);
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(automorphism_group(&path).order(), 2);
        let empty = Graph::new(3, &[]).unwrap();
        assert_eq!(automorphism_group(&empty).order(), 6);
    }

    #[test]
    fn directed_cycle_group() {
        let arcs: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let d = Digraph::new(5, &arcs).unwrap();
        assert_eq!(automorphism_group(&d).order(), 5);
    }

    #[test]
    fn isomorphism_between_relabelled_copies() {
        let a = cycle(7);
        let relabel = |x: u32| (3 * x + 2) % 7;
        let edges: Vec<_> = a.edges().map(|(u, v)| (relabel(u), relabel(v))).collect();
        let b = Graph::new(7, &edges).unwrap();
        let sigma = digraph_isomorphic(&a, &b).unwrap();
        assert!(a
            .edges()
            .all(|(u, v)| b.has_edge(sigma.apply(u), sigma.apply(v))));
        let identity = digraph_isomorphic(&a, &a).unwrap();
        assert!(a
            .edges()
            .all(|(u, v)| a.has_edge(identity.apply(u), identity.apply(v))));
        let two_triangles =
            Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(digraph_isomorphic(&cycle(6), &two_triangles).is_none());
    }
}
