//! Permutation groups: permutations, stabilizer chains, automorphism search,
//! Cayley digraphs and regular subgroups.

mod cayley;
mod matrix;
mod search;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use cayley::{
    arc_transitivity, arc_transitivity_with, cayley_digraph, element_order_spectrum,
    index_two_subgroups, is_distance_transitive, is_distance_transitive_with, is_transitive,
    regular_subgroup, regular_subgroups,
};
pub use matrix::{gl32_elements, BinaryMatrix3};
pub use search::{automorphism_group, digraph_isomorphic, Adjacency};

/// Bijection of `0..degree`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen.get_mut(x as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Self(images))
    }

    /// Product of disjoint or overlapping cycles, applied left to right.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Self {
        let mut p = Self::identity(degree);
        for c in cycles {
            let mut q = Self::identity(degree);
            for (i, &x) in c.iter().enumerate() {
                q.0[x as usize] = c[(i + 1) % c.len()];
            }
            p = p.then(&q);
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.0[x as usize]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        Self(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Self(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn first_moved(&self) -> Option<u32> {
        self.0
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.0.len()];
        let mut order = 1u64;
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0u64;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// Cycle notation without fixed points, e.g. `(0 1 2)(3 4)`.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x as u32);
                x = self.0[x] as usize;
            }
            out.push(c);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[derive(Debug, Clone)]
struct Level {
    base: u32,
    gens: Vec<Permutation>,
    orbit: Vec<u32>,
    /// `transversal[x]` maps the base point to `x`.
    transversal: Vec<Option<Permutation>>,
    checked_points: usize,
    checked_gens: usize,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base as usize] = Some(Permutation::identity(degree));
        Self {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
            checked_points: 0,
            checked_gens: 0,
        }
    }

    fn add_gen(&mut self, g: Permutation) {
        self.gens.push(g);
        // extend the orbit breadth-first under all generators
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for s in &self.gens {
                let y = s.apply(x);
                if self.transversal[y as usize].is_none() {
                    let u = self.transversal[x as usize].as_ref().unwrap().then(s);
                    self.transversal[y as usize] = Some(u);
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

/// Permutation group with a stabilizer chain built by the Schreier–Sims
/// algorithm.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Self {
        Self::with_base(degree, generators, &[])
    }

    /// Like [`PermGroup::new`], with the chain's first base points fixed to
    /// `prefix`, so that `stabilizer(prefix.len())` is their pointwise
    /// stabilizer.
    pub fn with_base(degree: usize, generators: Vec<Permutation>, prefix: &[u32]) -> Self {
        let generators: Vec<Permutation> = generators
            .into_iter()
            .filter(|g| !g.is_identity())
            .collect();
        assert!(generators.iter().all(|g| g.degree() == degree));
        let mut group = Self {
            degree,
            generators: generators.clone(),
            levels: prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        for g in generators {
            group.insert(g, 0);
        }
        group.complete();
        group
    }

    /// Adds `g` to the levels it reaches while sifting from `from`.
    fn insert(&mut self, g: Permutation, from: usize) -> bool {
        let (h, depth) = self.sift(&g, from);
        if h.is_identity() {
            return false;
        }
        if depth == self.levels.len() {
            let b = h.first_moved().unwrap();
            self.levels.push(Level::new(b, self.degree));
        }
        for l in from..=depth {
            self.levels[l].add_gen(h.clone());
        }
        true
    }

    /// Sifts every unchecked Schreier generator until all reduce to the
    /// identity.
    fn complete(&mut self) {
        'outer: loop {
            for i in (0..self.levels.len()).rev() {
                let level = &self.levels[i];
                let (pc, gc) = (level.checked_points, level.checked_gens);
                let (np, ng) = (level.orbit.len(), level.gens.len());
                if pc == np && gc == ng {
                    continue;
                }
                for p in 0..np {
                    for s in 0..ng {
                        if p < pc && s < gc {
                            continue;
                        }
                        let level = &self.levels[i];
                        let x = level.orbit[p];
                        let gen = &level.gens[s];
                        let y = gen.apply(x);
                        let schreier = level.transversal[x as usize]
                            .as_ref()
                            .unwrap()
                            .then(gen)
                            .then(&level.transversal[y as usize].as_ref().unwrap().inverse());
                        // only deeper levels can change here
                        self.insert(schreier, i + 1);
                    }
                }
                let level = &mut self.levels[i];
                level.checked_points = np;
                level.checked_gens = ng;
                continue 'outer;
            }
            break;
        }
    }

    fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let x = h.apply(level.base);
            match &level.transversal[x as usize] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g, 0).0.is_identity()
    }

    /// Pointwise stabilizer of the first `depth` base points.
    pub fn stabilizer(&self, depth: usize) -> PermGroup {
        let gens = self
            .levels
            .get(depth)
            .map(|l| l.gens.clone())
            .unwrap_or_default();
        PermGroup::new(self.degree, gens)
    }

    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut orbit = vec![point];
        let mut i = 0;
        while i < orbit.len() {
            for g in &self.generators {
                let y = g.apply(orbit[i]);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    /// All elements, as products of transversal representatives.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for h in &out {
                for x in &level.orbit {
                    next.push(h.then(level.transversal[*x as usize].as_ref().unwrap()));
                }
            }
            out = next;
        }
        out
    }

    /// Set of element orders.
    pub fn order_spectrum(&self) -> BTreeSet<u64> {
        self.elements().iter().map(Permutation::order).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_basics() {
        let p = Permutation::from_cycles(4, &[&[0, 1, 2]]);
        assert_eq!(p.images(), &[1, 2, 0, 3]);
        assert_eq!(p.order(), 3);
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.to_string(), "(0 1 2)");
        assert!(Permutation::from_images(vec![0, 0]).is_none());
        assert!(Permutation::from_images(vec![0, 2]).is_none());
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        let s5 = PermGroup::new(
            5,
            vec![
                Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]),
                Permutation::from_cycles(5, &[&[0, 1]]),
            ],
        );
        assert_eq!(s5.order(), 120);
        let a5 = PermGroup::new(
            5,
            vec![
                Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]),
                Permutation::from_cycles(5, &[&[0, 1, 2]]),
            ],
        );
        assert_eq!(a5.order(), 60);
        assert!(!a5.contains(&Permutation::from_cycles(5, &[&[0, 1]])));
        assert_eq!(a5.elements().len(), 60);
        assert_eq!(
            a5.order_spectrum().into_iter().collect::<Vec<_>>(),
            [1, 2, 3, 5]
        );
    }

    #[test]
    fn base_prefix_gives_stabilizer() {
        let s4 = PermGroup::with_base(
            4,
            vec![
                Permutation::from_cycles(4, &[&[0, 1, 2, 3]]),
                Permutation::from_cycles(4, &[&[0, 1]]),
            ],
            &[3],
        );
        assert_eq!(s4.base()[0], 3);
        assert_eq!(s4.order(), 24);
        let stab = s4.stabilizer(1);
        assert_eq!(stab.order(), 6);
        assert!(stab.generators().iter().all(|g| g.apply(3) == 3));
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::new(3, vec![Permutation::identity(3)]);
        assert_eq!(g.order(), 1);
        assert_eq!(g.orbit(1), vec![1]);
        assert_eq!(g.elements().len(), 1);
    }
}
