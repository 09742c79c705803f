//! Girth cycles: enumeration, canonical form, path index, fastening profile.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{distances, enumerate_arcs, girth, ArcSeq, Graph};

/// A cycle written as its lexicographically least rotation or reflection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCycle(Vec<u32>);

impl CanonicalCycle {
    pub fn new(seq: &[u32]) -> Self {
        Self(canonical_rotation(seq))
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The cycle read in the opposite direction, starting at the same vertex.
    pub fn reversed_sequence(&self) -> Vec<u32> {
        let mut r = Vec::with_capacity(self.0.len());
        if let Some(&first) = self.0.first() {
            r.push(first);
            r.extend(self.0[1..].iter().rev());
        }
        r
    }

    /// How this cycle traverses the vertex sequence `p`, if at all.
    pub fn traversal_of(&self, p: &[u32]) -> Option<Traversal> {
        let c = &self.0;
        let n = c.len();
        if p.is_empty() || p.len() > n {
            return None;
        }
        let start = c.iter().position(|&v| v == p[0])?;
        if (0..p.len()).all(|i| c[(start + i) % n] == p[i]) {
            Some(Traversal::Forward)
        } else if (0..p.len()).all(|i| c[(start + n - i) % n] == p[i]) {
            Some(Traversal::Reverse)
        } else {
            None
        }
    }
}

/// Least of the 2n rotations and reflections of a cyclic sequence.
pub fn canonical_rotation(seq: &[u32]) -> Vec<u32> {
    let n = seq.len();
    if n == 0 {
        return Vec::new();
    }
    let least = *seq.iter().min().unwrap();
    let mut best: Option<Vec<u32>> = None;
    for start in (0..n).filter(|&i| seq[i] == least) {
        let fwd: Vec<u32> = (0..n).map(|i| seq[(start + i) % n]).collect();
        let bwd: Vec<u32> = (0..n).map(|i| seq[(start + n - i) % n]).collect();
        for cand in [fwd, bwd] {
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Traversal {
    Forward,
    Reverse,
}

/// All girth cycles of a graph in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSet {
    girth: usize,
    cycles: Vec<CanonicalCycle>,
}

impl CycleSet {
    pub fn girth(&self) -> usize {
        self.girth
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn cycles(&self) -> &[CanonicalCycle] {
        &self.cycles
    }

    pub fn get(&self, id: usize) -> &CanonicalCycle {
        &self.cycles[id]
    }

    /// Id of the cycle through the given cyclic sequence, in any rotation or
    /// direction.
    pub fn find(&self, seq: &[u32]) -> Option<usize> {
        self.cycles.binary_search(&CanonicalCycle::new(seq)).ok()
    }

    /// Index of all paths with `len` edges lying on some cycle.
    pub fn path_index(&self, len: usize) -> PathIndex {
        let mut map: HashMap<Vec<u32>, Vec<(usize, Traversal)>> = HashMap::new();
        for (id, c) in self.cycles.iter().enumerate() {
            let v = c.vertices();
            let n = v.len();
            if len + 1 > n {
                continue;
            }
            for start in 0..n {
                let seq: Vec<u32> = (0..=len).map(|i| v[(start + i) % n]).collect();
                // each unordered path is visited once per cycle via its
                // forward reading
                let (key, dir) = if seq[0] <= seq[len] {
                    (seq, Traversal::Forward)
                } else {
                    (seq.into_iter().rev().collect(), Traversal::Reverse)
                };
                map.entry(key).or_default().push((id, dir));
            }
        }
        PathIndex { len, map }
    }
}

/// Canonical key of a path: smaller endpoint first.
pub fn path_key(p: &[u32]) -> Vec<u32> {
    if p.first() <= p.last() {
        p.to_vec()
    } else {
        p.iter().rev().copied().collect()
    }
}

/// Cycles on each path of a fixed length, keyed by [`path_key`]. The
/// traversal is relative to the key's direction.
#[derive(Debug, Clone)]
pub struct PathIndex {
    len: usize,
    map: HashMap<Vec<u32>, Vec<(usize, Traversal)>>,
}

impl PathIndex {
    pub fn path_len(&self) -> usize {
        self.len
    }

    pub fn get(&self, key: &[u32]) -> &[(usize, Traversal)] {
        self.map.get(key).map_or(&[], Vec::as_slice)
    }
}

pub fn enumerate_girth_cycles(g: &Graph) -> Result<CycleSet> {
    let len = girth(g)?;
    let dist = distances(g)?;
    let n = g.order() as u32;
    let mut cycles = Vec::new();
    let mut path = Vec::with_capacity(len);
    let mut on_path = vec![false; n as usize];
    for root in 0..n {
        path.clear();
        path.push(root);
        on_path[root as usize] = true;
        extend(g, &dist, len, root, &mut path, &mut on_path, &mut cycles);
        on_path[root as usize] = false;
    }
    // the root is the least vertex and the second vertex is smaller than the
    // last, so every sequence found is already canonical
    cycles.sort();
    Ok(CycleSet {
        girth: len,
        cycles: cycles.into_iter().map(CanonicalCycle).collect(),
    })
}

fn extend(
    g: &Graph,
    dist: &crate::graph::DistanceTable,
    len: usize,
    root: u32,
    path: &mut Vec<u32>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<u32>>,
) {
    let last = *path.last().unwrap();
    if path.len() == len {
        if g.has_edge(last, root) && path[1] < path[len - 1] {
            out.push(path.clone());
        }
        return;
    }
    let remaining = (len - path.len()) as u32;
    for &w in g.neighbors(last) {
        if w <= root || on_path[w as usize] || dist.get(w, root) > remaining {
            continue;
        }
        on_path[w as usize] = true;
        path.push(w);
        extend(g, dist, len, root, path, on_path, out);
        path.pop();
        on_path[w as usize] = false;
    }
}

/// Cycles containing the path `p`, with the direction in which each one
/// traverses it.
pub fn cycles_through(cs: &CycleSet, p: &ArcSeq) -> Result<Vec<(usize, Traversal)>> {
    if !p.is_path() {
        return Err(Error::NotAPath(p.vertices().to_vec()));
    }
    Ok(cs
        .cycles
        .iter()
        .enumerate()
        .filter_map(|(id, c)| c.traversal_of(p.vertices()).map(|t| (id, t)))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FasteningLevel {
    /// Level `i`: paths with `k - i - 1` edges.
    pub level: usize,
    pub path_len: usize,
    pub expected: usize,
    /// cycles-per-path count -> number of paths with that count
    pub counts: BTreeMap<usize, usize>,
}

impl FasteningLevel {
    pub fn is_uniform(&self) -> bool {
        self.counts.len() == 1 && self.counts.contains_key(&self.expected)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FasteningProfile {
    pub k: usize,
    pub levels: Vec<FasteningLevel>,
}

impl FasteningProfile {
    pub fn is_uniform(&self) -> bool {
        self.levels.iter().all(FasteningLevel::is_uniform)
    }
}

pub fn fastening_profile(g: &Graph, cs: &CycleSet, k: usize) -> FasteningProfile {
    let mut levels = Vec::new();
    for i in 0..k.saturating_sub(1) {
        let path_len = k - i - 1;
        let index = cs.path_index(path_len);
        let mut counts = BTreeMap::new();
        for arc in enumerate_arcs(g, path_len) {
            let v = arc.vertices();
            if !arc.is_path() || v[0] > v[path_len] {
                continue;
            }
            *counts.entry(index.get(v).len()).or_insert(0) += 1;
        }
        levels.push(FasteningLevel {
            level: i,
            path_len,
            expected: 1 << (i + 1),
            counts,
        });
    }
    FasteningProfile { k, levels }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_cdt, CdtName};

    #[test]
    fn canonical_form() {
        assert_eq!(canonical_rotation(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(canonical_rotation(&[2, 1, 3]), vec![1, 2, 3]);
        assert_eq!(canonical_rotation(&[5, 0, 4, 9]), vec![0, 4, 9, 5]);
        let c = CanonicalCycle::new(&[4, 0, 5, 9]);
        assert_eq!(c.reversed_sequence(), vec![0, 5, 9, 4]);
    }

    #[test]
    fn small_counts() {
        let (k4, _) = build_cdt(CdtName::K4);
        let cs = enumerate_girth_cycles(&k4).unwrap();
        assert_eq!(cs.len(), 4);
        assert_eq!(cs.get(0).vertices(), &[0, 1, 2]);
        let (pet, _) = build_cdt(CdtName::Petersen);
        assert_eq!(enumerate_girth_cycles(&pet).unwrap().len(), 12);
    }

    #[test]
    fn paths_in_k4_and_heawood() {
        let (k4, _) = build_cdt(CdtName::K4);
        let cs = enumerate_girth_cycles(&k4).unwrap();
        let p = ArcSeq::new(&k4, vec![0, 1, 2, 3]).unwrap();
        assert!(cycles_through(&cs, &p).unwrap().is_empty());
        let e = ArcSeq::new(&k4, vec![0, 1]).unwrap();
        let through = cycles_through(&cs, &e).unwrap();
        assert_eq!(through.len(), 2);

        let (hea, _) = build_cdt(CdtName::Heawood);
        let cs = enumerate_girth_cycles(&hea).unwrap();
        let e = ArcSeq::new(&hea, vec![0, 1]).unwrap();
        assert_eq!(cycles_through(&cs, &e).unwrap().len(), 8);
        let profile = fastening_profile(&hea, &cs, 4);
        let expected: Vec<usize> = profile.levels.iter().map(|l| l.expected).collect();
        assert_eq!(expected, [2, 4, 8]);
        assert!(profile.is_uniform());
    }

    #[test]
    fn non_path_is_rejected() {
        let (k4, _) = build_cdt(CdtName::K4);
        let cs = enumerate_girth_cycles(&k4).unwrap();
        let walk = ArcSeq::new(&k4, vec![0, 1, 2, 0]).unwrap();
        assert!(matches!(
            cycles_through(&cs, &walk),
            Err(Error::NotAPath(_))
        ));
    }
}
