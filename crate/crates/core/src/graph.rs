//! Simple undirected graphs with dense vertex indexing and hop-count
//! shortest paths.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Sentinel stored in [`DistanceMatrix`] rows for pairs in different
/// components. It compares greater than every finite hop count.
pub const UNREACHABLE: u32 = u32::MAX;

/// Immutable simple undirected graph.
///
/// Vertices are `0..n`, each carrying the external label it was built from.
/// Edges are stored once as `(lo, hi)` with `lo < hi`; neighbor lists are
/// sorted and carry the id of the connecting edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// Incremental construction from labelled endpoints.
///
/// Labels get dense indices in first-appearance order and repeated edges
/// collapse to one.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    seen: BTreeSet<(usize, usize)>,
    edges: Vec<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the index for `label`, registering it if new.
    pub fn vertex(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        i
    }

    /// Adds an edge between two labels. Returns `false` if the edge was
    /// already present.
    pub fn edge(&mut self, a: &str, b: &str) -> Result<bool> {
        if a == b {
            return Err(Error::SelfLoop { label: a.to_string() });
        }
        let u = self.vertex(a);
        let v = self.vertex(b);
        Ok(self.push_edge(u, v))
    }

    fn push_edge(&mut self, u: usize, v: usize) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        if self.seen.insert(key) {
            self.edges.push(key);
            true
        } else {
            false
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn build(self) -> Result<Graph> {
        if self.labels.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(Graph::assemble(self.labels, self.edges))
    }
}

impl Graph {
    /// Builds a graph from labelled endpoint pairs.
    pub fn from_edges<I, S>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut b = GraphBuilder::new();
        for (u, v) in edges {
            b.edge(u.as_ref(), v.as_ref())?;
        }
        b.build()
    }

    /// Builds a graph on vertices `0..n` labelled by their decimal index.
    pub fn from_index_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { index: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { label: u.to_string() });
            }
            let key = if u < v { (u, v) } else { (v, u) };
            if seen.insert(key) {
                list.push(key);
            }
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        Ok(Self::assemble(labels, list))
    }

    fn assemble(labels: Vec<String>, edges: Vec<(usize, usize)>) -> Self {
        let n = labels.len();
        let mut pairs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            pairs[u].push((v, id));
            pairs[v].push((u, id));
        }
        let mut adjacency = Vec::with_capacity(n);
        let mut incidence = Vec::with_capacity(n);
        for mut list in pairs {
            list.sort_unstable();
            adjacency.push(list.iter().map(|&(w, _)| w).collect());
            incidence.push(list.iter().map(|&(_, e)| e).collect());
        }
        Graph { labels, adjacency, incidence, edges }
    }

    /// The subgraph induced by every vertex not in `removed`.
    ///
    /// Surviving vertices keep their relative order and labels. The result
    /// may be empty.
    pub fn without_vertices(&self, removed: &[usize]) -> Graph {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            if v < gone.len() {
                gone[v] = true;
            }
        }
        let mut remap = vec![usize::MAX; self.n()];
        let mut labels = Vec::new();
        for v in 0..self.n() {
            if !gone[v] {
                remap[v] = labels.len();
                labels.push(self.labels[v].clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| !gone[u] && !gone[v])
            .map(|&(u, v)| (remap[u], remap[v]))
            .collect();
        Self::assemble(labels, edges)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(lo, hi)` pairs; the position is the edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// `(neighbor, edge id)` pairs around `v`, sorted by neighbor.
    pub fn incident(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency[v]
            .iter()
            .copied()
            .zip(self.incidence[v].iter().copied())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Hop distances from `source`, [`UNREACHABLE`] outside its component.
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let next = dist[v] + 1;
            for &w in &self.adjacency[v] {
                if dist[w] == UNREACHABLE {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Geodesic counts and the shortest-path predecessor DAG from `source`.
    pub fn geodesic_counts(&self, source: usize) -> Result<ShortestPathDag> {
        if source >= self.n() {
            return Err(Error::VertexOutOfRange { index: source, n: self.n() });
        }
        let n = self.n();
        let mut dist = vec![UNREACHABLE; n];
        let mut sigma = vec![0.0; n];
        let mut preds: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        dist[source] = 0;
        sigma[source] = 1.0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for (w, e) in self.incident(v) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push((v, e));
                }
            }
        }
        Ok(ShortestPathDag { source, dist, sigma, preds, order })
    }
}

/// Single-source result of [`Graph::geodesic_counts`].
#[derive(Debug, Clone)]
pub struct ShortestPathDag {
    pub source: usize,
    dist: Vec<u32>,
    sigma: Vec<f64>,
    preds: Vec<Vec<(usize, usize)>>,
    order: Vec<usize>,
}

impl ShortestPathDag {
    pub fn distance(&self, v: usize) -> Option<u32> {
        (self.dist[v] != UNREACHABLE).then_some(self.dist[v])
    }

    /// Number of geodesics from the source to `v` (0 if unreachable).
    pub fn count(&self, v: usize) -> f64 {
        self.sigma[v]
    }

    /// `(predecessor, edge id)` pairs one hop closer to the source.
    pub fn predecessors(&self, v: usize) -> &[(usize, usize)] {
        &self.preds[v]
    }

    /// Reached vertices in non-decreasing distance order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// All-pairs hop distances plus the component decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    component_id: Vec<usize>,
    component_sizes: Vec<usize>,
    diameter: u32,
}

impl DistanceMatrix {
    /// One BFS per source. Components are numbered by their smallest vertex.
    pub fn compute(g: &Graph) -> Self {
        let n = g.n();
        let mut dist = Vec::with_capacity(n * n);
        let mut component_id = vec![usize::MAX; n];
        let mut component_sizes = Vec::new();
        let mut diameter = 0;
        for s in 0..n {
            let row = g.bfs(s);
            if component_id[s] == usize::MAX {
                let c = component_sizes.len();
                let mut size = 0;
                for (v, &d) in row.iter().enumerate() {
                    if d != UNREACHABLE {
                        component_id[v] = c;
                        size += 1;
                    }
                }
                component_sizes.push(size);
            }
            for &d in &row {
                if d != UNREACHABLE && d > diameter {
                    diameter = d;
                }
            }
            dist.extend_from_slice(&row);
        }
        DistanceMatrix { n, dist, component_id, component_sizes, diameter }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Hop distance, `None` across components.
    pub fn get(&self, v: usize, w: usize) -> Option<u32> {
        let d = self.dist[v * self.n + w];
        (d != UNREACHABLE).then_some(d)
    }

    /// Raw row for `v`; cross-component entries hold [`UNREACHABLE`].
    pub fn row(&self, v: usize) -> &[u32] {
        &self.dist[v * self.n..(v + 1) * self.n]
    }

    /// Largest finite distance over all pairs (0 for edgeless graphs).
    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_id[v]
    }

    pub fn component_sizes(&self) -> &[usize] {
        &self.component_sizes
    }

    pub fn component_count(&self) -> usize {
        self.component_sizes.len()
    }
}
