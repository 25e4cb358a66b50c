//! Isomorph-free enumeration of small graphs.
//!
//! The main route adds one edge at a time and keeps one canonical
//! representative per isomorphism class at each edge count. A second route
//! adds one vertex at a time and deduplicates with the brute-force canonical
//! form; it exists only to cross-check totals.

use crate::error::{Error, Result};
use crate::graph::{
    brute_force_canonical_form, canonical_rows, graph6_decode, graph6_encode, Graph,
};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

pub const DEFAULT_CAP: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EnumerationTask {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    /// Degree sequence in descending order.
    pub degree_sequence: Option<Vec<usize>>,
}

impl EnumerationTask {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if m > n * n.saturating_sub(1) / 2 {
            return Err(Error::InvalidParams(format!(
                "{m} edges do not fit on {n} vertices"
            )));
        }
        Ok(EnumerationTask {
            n,
            m,
            connected: false,
            degree_sequence: None,
        })
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn with_degrees(mut self, mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        self.degree_sequence = Some(degrees);
        self
    }

    fn cache_name(&self) -> String {
        let filter = if self.connected { "connected" } else { "all" };
        format!("graphs_n{}_m{}_{}.g6", self.n, self.m, filter)
    }
}

/// Enumeration settings: the vertex cap and an optional graph6 cache
/// directory. Cached files hold the unfiltered-by-degree level for a given
/// `(n, m, connected)`.
#[derive(Clone, Debug)]
pub struct Enumerator {
    pub cap: usize,
    pub cache_dir: Option<PathBuf>,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            cap: DEFAULT_CAP,
            cache_dir: None,
        }
    }
}

impl Enumerator {
    pub fn new(cap: usize, cache_dir: Option<PathBuf>) -> Self {
        Enumerator { cap, cache_dir }
    }

    /// One representative per isomorphism class, in canonical form, sorted by
    /// adjacency code.
    pub fn enumerate(&self, task: &EnumerationTask) -> Result<Vec<Graph>> {
        if task.n > self.cap {
            return Err(Error::CapExceeded {
                n: task.n,
                cap: self.cap,
            });
        }
        let level = match self.load_cached(task)? {
            Some(graphs) => graphs,
            None => {
                let graphs = generate_level(task.n, task.m, task.connected);
                self.store_cached(task, &graphs)?;
                graphs
            }
        };
        Ok(match &task.degree_sequence {
            Some(seq) => level
                .into_iter()
                .filter(|g| &g.degree_sequence() == seq)
                .collect(),
            None => level,
        })
    }

    fn cache_path(&self, task: &EnumerationTask) -> Option<PathBuf> {
        self.cache_dir.as_ref().map(|d| d.join(task.cache_name()))
    }

    fn load_cached(&self, task: &EnumerationTask) -> Result<Option<Vec<Graph>>> {
        let Some(path) = self.cache_path(task) else {
            return Ok(None);
        };
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let mut graphs = Vec::new();
        for line in text.lines().filter(|l| !l.is_empty()) {
            match graph6_decode(line.as_bytes()) {
                Ok(g) if g.n() == task.n && g.edge_count() == task.m => graphs.push(g),
                // stale or damaged cache: regenerate
                _ => return Ok(None),
            }
        }
        Ok(Some(graphs))
    }

    fn store_cached(&self, task: &EnumerationTask, graphs: &[Graph]) -> Result<()> {
        let Some(path) = self.cache_path(task) else {
            return Ok(());
        };
        write_graph6_file(&path, graphs)
    }
}

fn write_graph6_file(path: &Path, graphs: &[Graph]) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let mut text = String::new();
    for g in graphs {
        text.push_str(&graph6_encode(g));
        text.push('\n');
    }
    let tmp = path.with_extension("g6.tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn is_forest(rows: &[u64], m: usize) -> bool {
    // a graph is a forest iff m = n - (number of components)
    let n = rows.len();
    let mut seen = 0u64;
    let mut components = 0;
    for start in 0..n {
        if seen >> start & 1 == 1 {
            continue;
        }
        components += 1;
        let mut frontier = 1u64 << start;
        seen |= frontier;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = rows[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
    }
    m + components == n
}

/// All canonical graphs with `n` vertices and `m` edges, optionally only the
/// connected ones.
///
/// For the connected filter, levels below `n - 1` keep only forests (a tree
/// minus an edge is a forest) and later levels only connected graphs (a
/// connected graph with a cycle stays connected after deleting a cycle edge).
fn generate_level(n: usize, m: usize, connected: bool) -> Vec<Graph> {
    if connected && (n == 0 || m + 1 < n) {
        return Vec::new();
    }
    let mut level: Vec<Vec<u64>> = vec![vec![0u64; n]];
    for edges in 1..=m {
        let keep = |rows: &Vec<u64>| {
            !connected
                || if edges < n {
                    is_forest(rows, edges)
                } else {
                    true
                }
        };
        let next: BTreeSet<Vec<u64>> = level
            .par_iter()
            .flat_map_iter(|rows| {
                let mut out = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        if rows[a] >> b & 1 == 0 {
                            let mut child = rows.clone();
                            child[a] |= 1 << b;
                            child[b] |= 1 << a;
                            if keep(&child) {
                                out.push(canonical_rows(&child));
                            }
                        }
                    }
                }
                out
            })
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        level = next.into_iter().collect();
    }
    level
        .iter()
        .map(|rows| Graph::from_adjacency_bits(rows))
        .collect()
}

/// Enumerates with the default enumerator (cap 10, no cache).
pub fn enumerate_graphs(task: &EnumerationTask) -> Result<Vec<Graph>> {
    Enumerator::default().enumerate(task)
}

/// All graphs on `n` vertices by vertex addition, deduplicated with the
/// brute-force canonical form. Practical up to `n = 7`.
pub fn enumerate_by_vertex_addition(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for size in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u64..(1 << (size - 1)) {
                let mut edges = g.edges().to_vec();
                edges.extend(
                    (0..size - 1)
                        .filter(|v| mask >> v & 1 == 1)
                        .map(|v| (v, size - 1)),
                );
                let child = Graph::new(size, edges).expect("new vertex edges are fresh");
                let form = brute_force_canonical_form(&child);
                if seen.insert(form) {
                    next.push(child);
                }
            }
        }
        level = next;
    }
    level
}

/// Number of isomorphism classes per edge count.
pub fn totals_by_edge_count(graphs: &[Graph]) -> BTreeMap<usize, usize> {
    let mut totals = BTreeMap::new();
    for g in graphs {
        *totals.entry(g.edge_count()).or_insert(0) += 1;
    }
    totals
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, m: usize, connected: bool) -> usize {
        let mut t = EnumerationTask::new(n, m).unwrap();
        if connected {
            t = t.connected();
        }
        enumerate_graphs(&t).unwrap().len()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(4, 3, true), 2);
        assert_eq!(count(4, 6, false), 1);
        assert_eq!(count(0, 0, false), 1);
        assert_eq!(count(5, 2, true), 0);
        // 4-vertex graphs by edge count: 1 1 2 3 2 1 1
        let per_m: Vec<usize> = (0..=6).map(|m| count(4, m, false)).collect();
        assert_eq!(per_m, vec![1, 1, 2, 3, 2, 1, 1]);
        assert_eq!(
            (4..=7).map(|n| count(n, n + 1, true)).collect::<Vec<_>>(),
            vec![1, 5, 19, 67]
        );
    }

    #[test]
    fn cap_and_bad_tasks() {
        let t = EnumerationTask::new(11, 12).unwrap();
        assert!(matches!(
            enumerate_graphs(&t),
            Err(Error::CapExceeded { n: 11, cap: 10 })
        ));
        assert!(EnumerationTask::new(4, 7).is_err());
    }

    #[test]
    fn degree_filter() {
        let t = EnumerationTask::new(6, 7)
            .unwrap()
            .connected()
            .with_degrees(vec![2, 2, 3, 2, 3, 2]);
        assert_eq!(enumerate_graphs(&t).unwrap().len(), 4);
    }

    #[test]
    fn second_route_small() {
        let graphs = enumerate_by_vertex_addition(5);
        assert_eq!(graphs.len(), 34);
        let first: usize = (0..=10).map(|m| count(5, m, false)).sum();
        assert_eq!(first, 34);
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let e = Enumerator::new(10, Some(dir.path().to_path_buf()));
        let t = EnumerationTask::new(6, 7).unwrap().connected();
        let fresh = e.enumerate(&t).unwrap();
        let file = dir.path().join("graphs_n6_m7_connected.g6");
        assert_eq!(fs::read_to_string(&file).unwrap().lines().count(), 19);
        assert_eq!(e.enumerate(&t).unwrap(), fresh);
        fs::write(&file, "garbage\n").unwrap();
        assert_eq!(e.enumerate(&t).unwrap(), fresh);
    }
}
