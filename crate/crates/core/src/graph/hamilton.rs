use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Hamiltonicity {
    Hamiltonian,
    NonHamiltonian,
    Timeout,
}

/// Backtracking search for a Hamiltonian cycle through vertex 0.
///
/// A branch is cut as soon as some unvisited vertex has fewer than two
/// usable neighbours left (unvisited ones, or an end of the current path).
pub fn is_hamiltonian(g: &Graph, budget: Duration) -> Hamiltonicity {
    let n = g.order();
    if n < 3 || !g.is_connected() || (0..n as u32).any(|v| g.degree(v) < 2) {
        return Hamiltonicity::NonHamiltonian;
    }
    let mut search = Search {
        g,
        visited: vec![false; n],
        path: Vec::with_capacity(n),
        deadline: Instant::now() + budget,
        steps: 0,
        timed_out: false,
    };
    search.visited[0] = true;
    search.path.push(0);
    if search.extend() {
        Hamiltonicity::Hamiltonian
    } else if search.timed_out {
        Hamiltonicity::Timeout
    } else {
        Hamiltonicity::NonHamiltonian
    }
}

struct Search<'a> {
    g: &'a Graph,
    visited: Vec<bool>,
    path: Vec<u32>,
    deadline: Instant,
    steps: u64,
    timed_out: bool,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        self.steps += 1;
        if self.steps.is_multiple_of(4096) && Instant::now() > self.deadline {
            self.timed_out = true;
        }
        if self.timed_out {
            return false;
        }
        let n = self.g.order();
        let last = *self.path.last().unwrap();
        if self.path.len() == n {
            return self.g.has_edge(last, 0);
        }
        if !self.feasible(last) {
            return false;
        }
        for &w in self.g.neighbors(last) {
            if self.visited[w as usize] {
                continue;
            }
            // each cycle is found in both directions; fix one of them
            if self.path.len() == 1 && w == *self.g.neighbors(0).last().unwrap() {
                continue;
            }
            self.visited[w as usize] = true;
            self.path.push(w);
            if self.extend() {
                return true;
            }
            self.path.pop();
            self.visited[w as usize] = false;
        }
        false
    }

    fn feasible(&self, last: u32) -> bool {
        (0..self.g.order() as u32)
            .filter(|&v| !self.visited[v as usize])
            .all(|v| {
                self.g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| !self.visited[w as usize] || w == last || w == 0)
                    .count()
                    >= 2
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(
            is_hamiltonian(&c5, Duration::from_secs(1)),
            Hamiltonicity::Hamiltonian
        );
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            is_hamiltonian(&star, Duration::from_secs(1)),
            Hamiltonicity::NonHamiltonian
        );
        // K_{2,3}
        let k23 = Graph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(
            is_hamiltonian(&k23, Duration::from_secs(1)),
            Hamiltonicity::NonHamiltonian
        );
    }
}
