//! Test-only oracles. Nothing here calls into the traversal or accumulation
//! code it is used to check.
#![allow(dead_code)]

use netvuln_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const INF: u32 = u32::MAX;

pub fn path(n: usize) -> Graph {
    Graph::from_index_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_index_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::from_index_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

/// Hub is vertex 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_index_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

pub fn grid(side: usize) -> Graph {
    let id = |r: usize, c: usize| r * side + c;
    let mut edges = Vec::new();
    for r in 0..side {
        for c in 0..side {
            if c + 1 < side {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < side {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_index_edges(side * side, edges).unwrap()
}

/// `G(n, p)` drawn independently of the crate's generators.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_index_edges(n, edges).unwrap()
}

pub fn random_graphs(seed: u64, count: usize, n_range: (usize, usize)) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_range.0..=n_range.1);
            let p = rng.gen_range(0.05..0.7);
            random_graph(&mut rng, n, p)
        })
        .collect()
}

/// Floyd–Warshall on the edge list.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

fn edge_id(g: &Graph, u: usize, v: usize) -> usize {
    let key = if u < v { (u, v) } else { (v, u) };
    g.edges().iter().position(|&e| e == key).unwrap()
}

/// Every simple path from `s` to `t` with exactly `len` edges.
fn simple_paths(g: &Graph, s: usize, t: usize, len: usize) -> Vec<Vec<usize>> {
    fn walk(
        g: &Graph,
        t: usize,
        left: usize,
        stack: &mut Vec<usize>,
        seen: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let v = *stack.last().unwrap();
        if left == 0 {
            if v == t {
                out.push(stack.clone());
            }
            return;
        }
        for &(a, b) in g.edges() {
            let w = if a == v { b } else if b == v { a } else { continue };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
                walk(g, t, left - 1, stack, seen, out);
                stack.pop();
                seen[w] = false;
            }
        }
    }
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    let mut out = Vec::new();
    walk(g, t, len, &mut vec![s], &mut seen, &mut out);
    out
}

/// All geodesics between `s` and `t` via iterative deepening; empty when
/// disconnected.
pub fn all_geodesics(g: &Graph, s: usize, t: usize) -> Vec<Vec<usize>> {
    for len in 1..g.n() {
        let paths = simple_paths(g, s, t, len);
        if !paths.is_empty() {
            return paths;
        }
    }
    Vec::new()
}

/// Edge and vertex betweenness by enumerating every geodesic of every
/// unordered pair.
pub fn brute_force_betweenness(g: &Graph) -> (Vec<f64>, Vec<f64>) {
    let mut edges = vec![0.0; g.edge_count()];
    let mut vertices = vec![0.0; g.n()];
    for s in 0..g.n() {
        for t in s + 1..g.n() {
            let paths = all_geodesics(g, s, t);
            if paths.is_empty() {
                continue;
            }
            let w = 1.0 / paths.len() as f64;
            for p in &paths {
                for pair in p.windows(2) {
                    edges[edge_id(g, pair[0], pair[1])] += w;
                }
                for &inner in &p[1..p.len() - 1] {
                    vertices[inner] += w;
                }
            }
        }
    }
    (edges, vertices)
}

/// Checks that `assignment` partitions the vertices into `count` boxes,
/// each with all pairwise distances `< lb`. Returns the largest box size.
pub fn check_boxes(dist: &[Vec<u32>], assignment: &[usize], count: usize, lb: u32) -> usize {
    let mut boxes = vec![Vec::new(); count];
    for (v, &b) in assignment.iter().enumerate() {
        assert!(b < count, "vertex {v} in box {b} >= {count}");
        boxes[b].push(v);
    }
    for (b, members) in boxes.iter().enumerate() {
        assert!(!members.is_empty(), "box {b} is empty");
        for &u in members {
            for &w in members {
                assert!(dist[u][w] < lb, "box {b}: d({u},{w}) = {} >= {lb}", dist[u][w]);
            }
        }
    }
    boxes.iter().map(Vec::len).max().unwrap_or(0)
}

pub fn wiener_index(dist: &[Vec<u32>]) -> u64 {
    let mut w = 0u64;
    for (i, row) in dist.iter().enumerate() {
        for &d in &row[i + 1..] {
            w += u64::from(d);
        }
    }
    w
}

/// A pair of connected graphs on the same vertex count whose average edge
/// betweenness ties exactly while their edge-betweenness multisets differ.
///
/// For connected graphs the edge values sum to the Wiener index, so the
/// tie `W_a / E_a = W_b / E_b` is checked in integers. Graphs are
/// enumerated by edge bitmask for `n = 4..=7`; the first hit is returned.
/// (wiener, edges, sorted edge values, edge list)
type Seen = (u64, u64, Vec<f64>, Vec<(usize, usize)>);

pub fn find_b1_tie() -> Option<(Graph, Graph)> {
    for n in 4..=7usize {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut seen: Vec<Seen> = Vec::new();
        for mask in 1u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(b, _)| mask & (1 << b) != 0)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_index_edges(n, edges.clone()).unwrap();
            let d = floyd_warshall(&g);
            if d[0].contains(&INF) {
                continue;
            }
            let w = wiener_index(&d);
            let e = edges.len() as u64;
            let tied: Vec<usize> =
                (0..seen.len()).filter(|&i| seen[i].0 * e == w * seen[i].1).collect();
            let (mut values, _) = brute_force_betweenness(&g);
            values.sort_by(f64::total_cmp);
            for i in tied {
                let (_, _, v2, edges2) = &seen[i];
                let same = v2.len() == values.len()
                    && v2.iter().zip(&values).all(|(a, b)| (a - b).abs() < 1e-9);
                if !same {
                    let a = Graph::from_index_edges(n, edges2.clone()).unwrap();
                    return Some((a, g));
                }
            }
            if seen.iter().any(|s| s.0 == w && s.1 == e) {
                continue;
            }
            seen.push((w, e, values, edges));
        }
    }
    None
}
