//! Simple undirected graphs, the dumbbell/theta families, canonical forms and
//! the graph6 codec.

mod canon;
mod family;
mod graph6;

pub(crate) use canon::canonical_rows;
pub use canon::{brute_force_canonical_form, canonical_form, canonical_labeling, CanonicalForm};
pub use family::{
    classify_bicyclic, dumbbell_with_cycles, make_cycle, make_dumbbell, make_path, make_theta,
    theta_with_paths, BicyclicClass, DumbbellParams, Origin, ThetaParams,
};
pub use graph6::{graph6_decode, graph6_encode};

use crate::error::{Error, Result};
use std::collections::VecDeque;
use std::fmt;

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as sorted pairs `(i, j)` with `i < j`, in ascending order.
/// Graphs built by the family constructors remember their [`Origin`]; the
/// origin is metadata only and does not take part in equality.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    origin: Option<Origin>,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs may be given in either
    /// orientation; self-loops, duplicates and out-of-range endpoints are
    /// rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if j >= n {
                return Err(Error::VertexOutOfRange { vertex: j, n });
            }
            normalized.push((i, j));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Graph {
            n,
            edges: normalized,
            origin: None,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            origin: None,
        }
    }

    pub(crate) fn with_origin(mut self, origin: Origin) -> Self {
        self.origin = Some(origin);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn origin(&self) -> Option<&Origin> {
        self.origin.as_ref()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).is_ok()
    }

    /// Adjacency lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(i, j)| {
                if i == v {
                    Some(j)
                } else if j == v {
                    Some(i)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Degrees indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    /// Degree multiset in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = self.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        deg
    }

    /// Component label for every vertex, labels numbered in order of first
    /// appearance.
    pub fn components(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    /// The empty graph on zero vertices counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count() == 1
    }

    /// Edges whose removal increases the number of components.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let base = self.component_count();
        self.edges
            .iter()
            .copied()
            .filter(|&e| {
                let rest = self.edges.iter().copied().filter(|&f| f != e);
                Graph {
                    n: self.n,
                    edges: rest.collect(),
                    origin: None,
                }
                .component_count()
                    > base
            })
            .collect()
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "permutation of length {} for graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidGraph("not a permutation".into()));
            }
        }
        Graph::new(self.n, self.edges.iter().map(|&(i, j)| (perm[i], perm[j])))
    }

    /// Returns a copy with the edge `{a, b}` added.
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied().chain([(a, b)]))
    }

    /// Rows of the adjacency matrix as bitmasks. Requires `n <= 64`.
    pub(crate) fn adjacency_bits(&self) -> Vec<u64> {
        assert!(
            self.n <= 64,
            "bitset adjacency supports at most 64 vertices"
        );
        let mut rows = vec![0u64; self.n];
        for &(i, j) in &self.edges {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
        rows
    }

    pub(crate) fn from_adjacency_bits(rows: &[u64]) -> Graph {
        let n = rows.len();
        let mut edges = Vec::new();
        for (i, &row) in rows.iter().enumerate() {
            for j in (i + 1)..n {
                if row >> j & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph {
            n,
            edges,
            origin: None,
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("Graph");
        s.field("n", &self.n).field("edges", &self.edges);
        if let Some(o) = &self.origin {
            s.field("origin", o);
        }
        s.finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.origin {
            Some(o) => write!(f, "{o}"),
            None => write!(
                f,
                "graph on {} vertices, {} edges",
                self.n,
                self.edges.len()
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(matches!(
            Graph::new(3, [(1, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::InvalidGraph(_))
        ));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn edges_are_normalized() {
        let g = Graph::new(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert!(g.has_edge(2, 0));
        assert_eq!(g.neighbors(0), vec![1, 2]);
    }

    #[test]
    fn components_and_bridges() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert_eq!(g.component_count(), 2);
        assert!(!g.is_connected());
        assert_eq!(g.bridges(), vec![(2, 3)]);
        assert!(!Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn relabel_checks_permutation() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(g.relabel(&[2, 0, 1]).unwrap().edges(), &[(0, 2)]);
        assert!(g.relabel(&[0, 0, 1]).is_err());
        assert!(g.relabel(&[0, 1]).is_err());
    }

    #[test]
    fn bit_rows_round_trip() {
        let g = Graph::new(4, [(0, 3), (1, 2), (2, 3)]).unwrap();
        assert_eq!(Graph::from_adjacency_bits(&g.adjacency_bits()), g);
    }
}
