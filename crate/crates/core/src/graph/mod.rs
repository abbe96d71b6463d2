//! Undirected simple graphs with sorted adjacency lists, BFS layer machinery,
//! and the elementary induced-subgraph constructions everything else builds on.

mod generate;
mod io;
mod search;

pub use generate::{generate, Family, GeneratorSpec};
pub use io::{parse_graph, write_graph};
pub use search::{enumerate_maximal_cliques, find_induced_complete_bipartite, find_induced_quadrangle};

use crate::error::{Error, Result};

/// Undirected simple graph. Adjacency lists are sorted ascending and symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    label: Option<String>,
}

/// BFS layers around a source vertex. `layers[i]` holds exactly the vertices at
/// distance `i` from the source; vertices outside the source's component are absent.
#[derive(Debug, Clone)]
pub struct DistancePartition {
    pub source: usize,
    pub layers: Vec<Vec<usize>>,
}

impl DistancePartition {
    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.len()).collect()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Rejects self-loops, duplicate edges,
    /// and endpoints outside `[0, n)`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameters(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameters(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameters(format!(
                    "duplicate edge at vertex {v}"
                )));
            }
        }
        Ok(Graph {
            n,
            adj,
            label: None,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = Some(label.into());
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let k = self.degree(0);
        if (1..self.n).all(|v| self.degree(v) == k) {
            Some(k)
        } else {
            None
        }
    }

    /// BFS distances from `v`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[v] = 0;
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Largest eccentricity over all vertices; `None` when the graph is
    /// empty or disconnected.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let mut best = 0;
        for v in 0..self.n {
            let ecc = *self.bfs_distances(v).iter().max().expect("nonempty");
            if ecc == usize::MAX {
                return None;
            }
            best = best.max(ecc);
        }
        Some(best)
    }

    /// BFS layers around `v`. On disconnected input only the component of `v`
    /// appears.
    pub fn distance_partition(&self, v: usize) -> Result<DistancePartition> {
        if v >= self.n {
            return Err(Error::InvalidParameters(format!(
                "vertex {v} out of range for n = {}",
                self.n
            )));
        }
        let dist = self.bfs_distances(v);
        let ecc = dist.iter().filter(|&&d| d != usize::MAX).max().copied().unwrap_or(0);
        let mut layers = vec![Vec::new(); ecc + 1];
        for (w, &dw) in dist.iter().enumerate() {
            if dw != usize::MAX {
                layers[dw].push(w);
            }
        }
        Ok(DistancePartition { source: v, layers })
    }

    /// Induced subgraph on `N(v)`, plus the map from new indices back to `self`.
    pub fn neighborhood_subgraph(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        if v >= self.n {
            return Err(Error::InvalidParameters(format!(
                "vertex {v} out of range for n = {}",
                self.n
            )));
        }
        self.induced_subgraph(&self.adj[v])
    }

    /// Induced subgraph on `vertices` (must be sorted, distinct, in range),
    /// plus the map from new indices back to `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::InvalidParameters(format!(
                    "vertex {v} out of range for n = {}",
                    self.n
                )));
            }
            if pos[v] != usize::MAX {
                return Err(Error::InvalidParameters(format!("duplicate vertex {v}")));
            }
            pos[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX && pos[w] > i {
                    edges.push((i, pos[w]));
                }
            }
        }
        Ok((Graph::new(vertices.len(), &edges)?, vertices.to_vec()))
    }

    /// Line graph: one vertex per edge of `self` (edges in lexicographic order),
    /// adjacency iff the edges share an endpoint. Also returns the edge list that
    /// names the line-graph vertices.
    pub fn line_graph(&self) -> Result<(Graph, Vec<(usize, usize)>)> {
        let edges = self.edges();
        if edges.is_empty() {
            return Err(Error::InvalidParameters("line graph of an empty edge set".into()));
        }
        // Bucket edge ids by endpoint; two edge ids are adjacent iff they share a bucket.
        let mut by_endpoint = vec![Vec::new(); self.n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            by_endpoint[u].push(id);
            by_endpoint[v].push(id);
        }
        let mut line_edges = Vec::new();
        for bucket in &by_endpoint {
            for i in 0..bucket.len() {
                for j in i + 1..bucket.len() {
                    line_edges.push((bucket[i], bucket[j]));
                }
            }
        }
        // Edges meeting at both endpoints would duplicate, but simple graphs
        // cannot share two endpoints.
        let g = Graph::new(edges.len(), &line_edges)?;
        Ok((g, edges))
    }

    /// Cartesian product: `(a, b) ~ (a', b')` iff equal in one coordinate and
    /// adjacent in the other. Vertex `(a, b)` gets index `a * h.n() + b`.
    pub fn cartesian_product(&self, h: &Graph) -> Graph {
        let n = self.n * h.n;
        let mut edges = Vec::new();
        for a in 0..self.n {
            for (b1, b2) in h.edges() {
                edges.push((a * h.n + b1, a * h.n + b2));
            }
        }
        for (a1, a2) in self.edges() {
            for b in 0..h.n {
                edges.push((a1 * h.n + b, a2 * h.n + b));
            }
        }
        Graph::new(n, &edges).expect("product of valid graphs is valid")
    }

    /// Adjacency rows as bitsets (`words_per_row` u64 words each), for the
    /// clique and automorphism searches.
    pub(crate) fn adjacency_bitsets(&self) -> (Vec<u64>, usize) {
        let words = self.n.div_ceil(64).max(1);
        let mut rows = vec![0u64; self.n * words];
        for u in 0..self.n {
            for &v in &self.adj[u] {
                rows[u * words + v / 64] |= 1 << (v % 64);
            }
        }
        (rows, words)
    }
}
