use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use super::{automorphism_group, PermGroup, Permutation};
use crate::error::{Error, Result};
use crate::graph::{distances, enumerate_arcs, Digraph, DistanceTable, Graph};

/// Whether `group` has a single orbit on `0..points`.
pub fn is_transitive(group: &PermGroup, points: usize) -> bool {
    points == 0 || group.orbit(0).len() == points
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Largest `l <= 7` such that the group is transitive on `l`-arcs.
pub fn arc_transitivity_with(g: &Graph, group: &PermGroup) -> usize {
    if !is_transitive(group, g.order()) {
        return 0;
    }
    for len in 1..=7 {
        let arcs = enumerate_arcs(g, len);
        if arcs.is_empty() {
            return len - 1;
        }
        let index: HashMap<&[u32], usize> = arcs
            .iter()
            .enumerate()
            .map(|(i, a)| (a.vertices(), i))
            .collect();
        let mut uf = UnionFind::new(arcs.len());
        let mut orbits = arcs.len();
        let mut image = Vec::with_capacity(len + 1);
        for gen in group.generators() {
            for (i, a) in arcs.iter().enumerate() {
                image.clear();
                image.extend(a.vertices().iter().map(|&v| gen.apply(v)));
                if uf.union(i, index[image.as_slice()]) {
                    orbits -= 1;
                }
            }
        }
        if orbits > 1 {
            return len - 1;
        }
    }
    7
}

pub fn arc_transitivity(g: &Graph) -> usize {
    arc_transitivity_with(g, &automorphism_group(g))
}

/// Whether the orbits of `group` on ordered pairs are exactly the distance
/// classes.
pub fn is_distance_transitive_with(group: &PermGroup, dist: &DistanceTable) -> bool {
    let n = dist.order();
    let mut uf = UnionFind::new(n * n);
    let mut orbits = n * n;
    for gen in group.generators() {
        for u in 0..n as u32 {
            for v in 0..n as u32 {
                let (gu, gv) = (gen.apply(u), gen.apply(v));
                if uf.union(u as usize * n + v as usize, gu as usize * n + gv as usize) {
                    orbits -= 1;
                }
            }
        }
    }
    // automorphisms preserve distance, so orbits refine the distance classes
    orbits == dist.diameter() as usize + 1
}

pub fn is_distance_transitive(g: &Graph) -> bool {
    match distances(g) {
        Ok(dist) => is_distance_transitive_with(&automorphism_group(g), &dist),
        Err(_) => false,
    }
}

/// Cayley digraph with an arc `x -> s·x` for every element `x` and
/// generator `s`.
pub fn cayley_digraph<T: Eq + Hash + Clone>(
    elements: &[T],
    mul: impl Fn(&T, &T) -> T,
    generators: &[T],
) -> Result<Digraph> {
    let index: HashMap<&T, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, x)| (x, i as u32))
        .collect();
    for (i, s) in generators.iter().enumerate() {
        if !index.contains_key(s) {
            return Err(Error::UnknownGenerator(i));
        }
    }
    let mut arcs = Vec::with_capacity(elements.len() * generators.len());
    for (i, x) in elements.iter().enumerate() {
        for s in generators {
            let y = mul(s, x);
            let j = *index
                .get(&y)
                .ok_or_else(|| Error::Unsupported("element list is not closed".into()))?;
            arcs.push((i as u32, j));
        }
    }
    Digraph::new(elements.len(), &arcs)
}

pub fn element_order_spectrum(group: &PermGroup) -> BTreeSet<u64> {
    group.order_spectrum()
}

/// Generators with redundant ones dropped greedily.
fn reduced_generators(group: &PermGroup) -> Vec<Permutation> {
    let mut kept: Vec<Permutation> = Vec::new();
    let mut sub = PermGroup::new(group.degree(), Vec::new());
    for g in group.generators() {
        if !sub.contains(g) {
            kept.push(g.clone());
            sub = PermGroup::new(group.degree(), kept.clone());
            if sub.order() == group.order() {
                break;
            }
        }
    }
    kept
}

/// All subgroups of index 2, as kernels of the surjections onto a group of
/// order 2. A sign pattern on the generators defines a homomorphism exactly
/// when letting each generator also swap two extra points does not enlarge
/// the group.
pub fn index_two_subgroups(group: &PermGroup) -> Vec<PermGroup> {
    let n = group.degree();
    let gens = reduced_generators(group);
    let m = gens.len();
    let mut out = Vec::new();
    for mask in 1u64..(1 << m) {
        let extended: Vec<Permutation> = gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let mut images = g.images().to_vec();
                if mask >> i & 1 == 1 {
                    images.extend([n as u32 + 1, n as u32]);
                } else {
                    images.extend([n as u32, n as u32 + 1]);
                }
                Permutation::from_images(images).unwrap()
            })
            .collect();
        let lifted = PermGroup::with_base(n + 2, extended, &[n as u32]);
        if lifted.order() != group.order() {
            continue;
        }
        let kernel_gens: Vec<Permutation> = lifted
            .stabilizer(1)
            .generators()
            .iter()
            .map(|g| Permutation::from_images(g.images()[..n].to_vec()).unwrap())
            .collect();
        out.push(PermGroup::new(n, kernel_gens));
    }
    out
}

/// Subgroups acting regularly on `0..points`, drawn from the group itself
/// and its subgroups of index 2.
pub fn regular_subgroups(group: &PermGroup, points: usize) -> Result<Vec<PermGroup>> {
    let order = group.order();
    if points == 0 || !order.is_multiple_of(points as u128) {
        return Ok(Vec::new());
    }
    match order / points as u128 {
        1 => Ok(is_transitive(group, points)
            .then(|| group.clone())
            .into_iter()
            .collect()),
        2 => Ok(index_two_subgroups(group)
            .into_iter()
            .filter(|h| h.order() == points as u128 && is_transitive(h, points))
            .collect()),
        index => Err(Error::UnsupportedIndex(index as u64)),
    }
}

/// The first of [`regular_subgroups`].
pub fn regular_subgroup(group: &PermGroup, points: usize) -> Result<Option<PermGroup>> {
    Ok(regular_subgroups(group, points)?.into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> PermGroup {
        PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[&[0, 1, 2, 3]]),
                Permutation::from_cycles(4, &[&[0, 1]]),
            ],
        )
    }

    #[test]
    fn transitivity() {
        assert!(is_transitive(&s4(), 4));
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!is_transitive(&automorphism_group(&path), 3));
        assert!(is_transitive(&PermGroup::new(1, Vec::new()), 1));
    }

    #[test]
    fn s4_has_one_index_two_subgroup() {
        let subs = index_two_subgroups(&s4());
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].order(), 12);
        assert!(!subs[0].contains(&Permutation::from_cycles(4, &[&[0, 1]])));
    }

    #[test]
    fn regular_action_on_itself() {
        let z5 = PermGroup::new(5, vec![Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]])]);
        let reg = regular_subgroup(&z5, 5).unwrap().unwrap();
        assert_eq!(reg.order(), 5);
        // D4 on the square: rotations form a regular subgroup of index 2
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let d4 = automorphism_group(&c4);
        let reg = regular_subgroup(&d4, 4).unwrap().unwrap();
        assert_eq!(reg.order(), 4);
        assert!(is_transitive(&reg, 4));
        assert!(matches!(
            regular_subgroup(&s4(), 4),
            Err(Error::UnsupportedIndex(6))
        ));
    }

    #[test]
    fn small_cayley_digraphs() {
        let z2 = [
            Permutation::identity(2),
            Permutation::from_cycles(2, &[&[0, 1]]),
        ];
        let d = cayley_digraph(&z2, |s, x| x.then(s), &z2[1..]).unwrap();
        assert_eq!(d.arc_count(), 2);
        assert!(d.has_arc(0, 1) && d.has_arc(1, 0));
        let stray = Permutation::from_cycles(3, &[&[0, 1]]);
        let err = cayley_digraph(&z2, |s, x| x.then(s), &[stray]).unwrap_err();
        assert_eq!(err, Error::UnknownGenerator(0));
    }

    #[test]
    fn distance_transitivity_of_small_graphs() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(is_distance_transitive(&k2));
        let chorded: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).chain([(0, 3)]).collect();
        assert!(!is_distance_transitive(&Graph::new(6, &chorded).unwrap()));
    }
}
