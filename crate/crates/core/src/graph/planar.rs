//! Planarity by incremental face embedding (Demoucron, Malgrange, Pertuiset),
//! applied to each biconnected block.

use std::collections::HashSet;

use super::Graph;

/// Planarity of `g`; a graph is planar iff each of its blocks is.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return false;
    }
    blocks(g).iter().all(|edges| block_is_planar(edges))
}

/// Edge sets of the biconnected components (Hopcroft–Tarjan).
fn blocks(g: &Graph) -> Vec<Vec<(u32, u32)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<u32>,
        low: Vec<u32>,
        time: u32,
        stack: Vec<(u32, u32)>,
        out: Vec<Vec<(u32, u32)>>,
    }
    fn visit(s: &mut State, v: u32, parent: Option<u32>) {
        s.time += 1;
        s.disc[v as usize] = s.time;
        s.low[v as usize] = s.time;
        for &w in s.g.neighbors(v) {
            if s.disc[w as usize] == 0 {
                s.stack.push((v, w));
                visit(s, w, Some(v));
                s.low[v as usize] = s.low[v as usize].min(s.low[w as usize]);
                if s.low[w as usize] >= s.disc[v as usize] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (v, w) {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if Some(w) != parent && s.disc[w as usize] < s.disc[v as usize] {
                s.stack.push((v, w));
                s.low[v as usize] = s.low[v as usize].min(s.disc[w as usize]);
            }
        }
    }
    let n = g.order();
    let mut s = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n as u32 {
        if s.disc[v as usize] == 0 {
            visit(&mut s, v, None);
        }
    }
    s.out
}

fn block_is_planar(edges: &[(u32, u32)]) -> bool {
    // a bridge or a lone cycle is trivially planar
    let mut verts: Vec<u32> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    if edges.len() <= verts.len() {
        return true;
    }
    let index = |v: u32| verts.binary_search(&v).unwrap();
    let m = verts.len();
    let mut adj = vec![Vec::new(); m];
    for &(u, v) in edges {
        adj[index(u)].push(index(v));
        adj[index(v)].push(index(u));
    }

    let cycle = find_cycle(&adj);
    let mut embedded_v = vec![false; m];
    let mut embedded_e: HashSet<(usize, usize)> = HashSet::new();
    for (i, &v) in cycle.iter().enumerate() {
        embedded_v[v] = true;
        let w = cycle[(i + 1) % cycle.len()];
        embedded_e.insert((v.min(w), v.max(w)));
    }
    let mut faces = vec![cycle.clone(), cycle];

    while embedded_e.len() < edges.len() {
        let fragments = fragments(&adj, &embedded_v, &embedded_e);
        let mut chosen = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.contacts.iter().all(|c| f.contains(c)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    chosen = Some((fi, admissible[0]));
                    break;
                }
                _ if chosen.is_none() => chosen = Some((fi, admissible[0])),
                _ => {}
            }
        }
        let (fi, face_idx) = chosen.expect("at least one fragment remains");
        let path = fragment_path(&adj, &fragments[fi], &embedded_v);
        for w in path.windows(2) {
            embedded_e.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            embedded_v[v] = true;
        }
        let (a, b) = split_face(&faces[face_idx], &path);
        faces[face_idx] = a;
        faces.push(b);
    }
    true
}

fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    // DFS until a back edge closes a cycle
    let m = adj.len();
    let mut parent = vec![usize::MAX; m];
    let mut depth = vec![usize::MAX; m];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some((v, i)) = stack.pop() {
        if i >= adj[v].len() {
            continue;
        }
        stack.push((v, i + 1));
        let w = adj[v][i];
        if depth[w] == usize::MAX {
            depth[w] = depth[v] + 1;
            parent[w] = v;
            stack.push((w, 0));
        } else if w != parent[v] && depth[w] < depth[v] {
            let mut cycle = vec![v];
            let mut x = v;
            while x != w {
                x = parent[x];
                cycle.push(x);
            }
            return cycle;
        }
    }
    unreachable!("a block with more edges than vertices has a cycle")
}

struct Fragment {
    /// Inner vertices; empty for a single chord.
    inner: Vec<usize>,
    chord: Option<(usize, usize)>,
    contacts: Vec<usize>,
}

fn fragments(
    adj: &[Vec<usize>],
    embedded_v: &[bool],
    embedded_e: &HashSet<(usize, usize)>,
) -> Vec<Fragment> {
    let m = adj.len();
    let mut out = Vec::new();
    for u in 0..m {
        if !embedded_v[u] {
            continue;
        }
        for &w in &adj[u] {
            if u < w && embedded_v[w] && !embedded_e.contains(&(u, w)) {
                out.push(Fragment {
                    inner: Vec::new(),
                    chord: Some((u, w)),
                    contacts: vec![u, w],
                });
            }
        }
    }
    let mut seen = vec![false; m];
    for s in 0..m {
        if embedded_v[s] || seen[s] {
            continue;
        }
        let mut inner = vec![s];
        let mut contacts = Vec::new();
        seen[s] = true;
        let mut i = 0;
        while i < inner.len() {
            let v = inner[i];
            i += 1;
            for &w in &adj[v] {
                if embedded_v[w] {
                    contacts.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    inner.push(w);
                }
            }
        }
        contacts.sort_unstable();
        contacts.dedup();
        out.push(Fragment {
            inner,
            chord: None,
            contacts,
        });
    }
    out
}

/// A path through the fragment joining two distinct contact vertices.
fn fragment_path(adj: &[Vec<usize>], frag: &Fragment, embedded_v: &[bool]) -> Vec<usize> {
    if let Some((u, w)) = frag.chord {
        return vec![u, w];
    }
    let start = frag.contacts[0];
    let inner: HashSet<usize> = frag.inner.iter().copied().collect();
    // BFS from `start` through inner vertices to another contact
    let mut prev = std::collections::HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    for &w in &adj[start] {
        if inner.contains(&w) && !prev.contains_key(&w) {
            prev.insert(w, start);
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if embedded_v[w] && w != start {
                let mut path = vec![w, v];
                let mut x = v;
                while let Some(&p) = prev.get(&x) {
                    path.push(p);
                    if p == start {
                        break;
                    }
                    x = p;
                }
                path.reverse();
                return path;
            }
            if inner.contains(&w) && !prev.contains_key(&w) {
                prev.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragments of a block have two contacts")
}

fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let inner = &path[1..path.len() - 1];
    let len = face.len();
    let ia = face.iter().position(|&v| v == a).unwrap();
    let ib = face.iter().position(|&v| v == b).unwrap();
    let walk = |from: usize, to: usize| {
        let mut seq = Vec::new();
        let mut i = from;
        loop {
            seq.push(face[i]);
            if i == to {
                break;
            }
            i = (i + 1) % len;
        }
        seq
    };
    // a..b along the face, closed by the path reversed
    let mut first = walk(ia, ib);
    first.extend(inner.iter().rev());
    // b..a along the face, closed by the path
    let mut second = walk(ib, ia);
    second.extend(inner.iter());
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: u32) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n as usize, &edges).unwrap()
    }

    #[test]
    fn kuratowski_graphs_are_not_planar() {
        let k33: Vec<_> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
        assert!(!is_planar(&Graph::new(6, &k33).unwrap()));
        assert!(!is_planar(&complete(5)));
        assert!(is_planar(&complete(4)));
    }

    #[test]
    fn blocks_joined_at_cut_vertex() {
        // two triangles sharing vertex 2, plus a pendant edge
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]).unwrap();
        assert_eq!(blocks(&g).len(), 3);
        assert!(is_planar(&g));
    }

    #[test]
    fn prism_and_wheel_are_planar() {
        let prism = Graph::new(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(is_planar(&prism));
        let wheel: Vec<_> = (1..7)
            .map(|i| (0, i))
            .chain((1..7).map(|i| (i, i % 6 + 1)))
            .collect();
        assert!(is_planar(&Graph::new(7, &wheel).unwrap()));
    }
}
