//! Simple undirected graphs on dense `0..n` vertex labels.
//!
//! A [`Graph`] is immutable once built. Degrees and sorted neighbour lists
//! are computed at construction so that index computations and scans never
//! recount them.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop ({0}, {0})")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
}

/// A simple undirected graph. Edges are stored as `(lo, hi)` pairs with
/// `lo < hi`, in the order they were supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated pairs and out-of-range
    /// endpoints. `(u, v)` and `(v, u)` are the same pair.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = HashSet::new();
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let pair = (u.min(v), u.max(v));
            if !seen.insert(pair) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            normalized.push(pair);
        }
        Ok(Self::from_normalized(n, normalized))
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_normalized(n, Vec::new())
    }

    /// Caller guarantees every pair is `(lo, hi)` with `lo < hi < n` and no
    /// pair repeats.
    pub(crate) fn from_normalized(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut degrees = vec![0; n];
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            degrees[u] += 1;
            degrees[v] += 1;
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        debug_assert_eq!(degrees.iter().sum::<usize>(), 2 * edges.len());
        Self {
            n,
            edges,
            degrees,
            neighbors,
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Δ; zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// δ; zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    /// Component id per vertex, ids assigned in order of lowest vertex.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        const UNSEEN: usize = usize::MAX;
        let mut label = vec![UNSEEN; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if label[start] != UNSEEN {
                continue;
            }
            label[start] = count;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &w in &self.neighbors[v] {
                    if label[w] == UNSEEN {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().1
    }

    /// The empty graph is not connected; a single vertex is.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count() == 1
    }

    /// Two-colourability by BFS.
    pub fn is_bipartite(&self) -> bool {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for &w in &self.neighbors[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Graph::from_normalized(self.n + other.n, edges)
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of
    /// `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        Graph::from_normalized(self.n, edges)
    }

    /// Degree sequence sorted in non-increasing order.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

/// Structural summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphClass {
    pub connected: bool,
    pub components: usize,
    /// m − n + c.
    pub cycle_rank: usize,
    pub is_tree: bool,
    pub is_unicyclic: bool,
    /// Δ ≤ 4.
    pub is_chemical: bool,
    pub is_regular: bool,
    pub is_star: bool,
    pub is_cycle: bool,
    pub is_complete: bool,
    pub max_degree: usize,
    pub min_degree: usize,
}

pub fn classify(g: &Graph) -> GraphClass {
    let n = g.order();
    let m = g.size();
    let components = g.component_count();
    let connected = n > 0 && components == 1;
    // m ≥ n − c for every graph, so this never underflows.
    let cycle_rank = m + components - n;
    let max_degree = g.max_degree();
    let min_degree = g.min_degree();
    let is_tree = connected && cycle_rank == 0;
    GraphClass {
        connected,
        components,
        cycle_rank,
        is_tree,
        is_unicyclic: connected && cycle_rank == 1,
        is_chemical: max_degree <= 4,
        is_regular: max_degree == min_degree,
        is_star: is_tree && n >= 2 && max_degree == n - 1,
        is_cycle: connected && n >= 3 && max_degree == 2 && min_degree == 2,
        is_complete: 2 * m == n * n.saturating_sub(1),
        max_degree,
        min_degree,
    }
}
