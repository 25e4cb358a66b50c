//! Canonical labeling for small graphs (at most 64 vertices).
//!
//! The main route is an individualization-refinement search over ordered
//! partitions. Leaves are compared by the adjacency rows of the relabeled
//! graph and the lexicographically smallest wins. Subtrees are pruned with
//! automorphisms discovered along the way: orbits of the automorphisms that
//! fix the current individualization sequence, and the jump back to the
//! divergence level whenever a leaf reproduces the first leaf.
//!
//! `brute_force_canonical_form` is an independent second route that scans
//! every permutation inside the degree classes.

use super::{graph6_encode, Graph};
use std::fmt;

/// Certificate of an isomorphism class: the graph6 bytes of the canonically
/// relabeled graph. Two graphs have equal forms iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        super::graph6_decode(&self.0).expect("canonical form is valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Permutation sending each vertex to its canonical label.
///
/// # Panics
/// If the graph has more than 64 vertices.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let rows = g.adjacency_bits();
    Search::new(&rows).run().1
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let rows = g.adjacency_bits();
    let (code, _) = Search::new(&rows).run();
    CanonicalForm(graph6_encode(&Graph::from_adjacency_bits(&code)).into_bytes())
}

/// Canonical adjacency rows, used directly by the enumerator to avoid
/// round-tripping through [`Graph`].
pub(crate) fn canonical_rows(rows: &[u64]) -> Vec<u64> {
    Search::new(rows).run().0
}

/// Minimum adjacency code over all permutations that list vertices by
/// descending degree, permuting freely within each degree class.
pub fn brute_force_canonical_form(g: &Graph) -> CanonicalForm {
    let rows = g.adjacency_bits();
    let deg = g.degrees();
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in order {
        match classes.last_mut() {
            Some(c) if deg[c[0]] == deg[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }

    let mut best: Option<Vec<u64>> = None;
    let mut current: Vec<Vec<usize>> = classes.clone();
    fn recurse(
        idx: usize,
        classes: &[Vec<usize>],
        current: &mut Vec<Vec<usize>>,
        rows: &[u64],
        best: &mut Option<Vec<u64>>,
    ) {
        if idx == classes.len() {
            let seq: Vec<usize> = current.iter().flatten().copied().collect();
            let mut label = vec![0; seq.len()];
            for (pos, &v) in seq.iter().enumerate() {
                label[v] = pos;
            }
            let code = relabel_rows(rows, &label);
            if best.as_ref().is_none_or(|b| code < *b) {
                *best = Some(code);
            }
            return;
        }
        let k = classes[idx].len();
        heap_permutations(&mut current[idx].clone(), k, &mut |perm| {
            current[idx].copy_from_slice(perm);
            recurse(idx + 1, classes, current, rows, best);
        });
    }
    recurse(0, &classes, &mut current, &rows, &mut best);
    let code = best.unwrap_or_default();
    CanonicalForm(graph6_encode(&Graph::from_adjacency_bits(&code)).into_bytes())
}

fn heap_permutations(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(items, k - 1, visit);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    heap_permutations(items, k - 1, visit);
}

fn relabel_rows(rows: &[u64], label: &[usize]) -> Vec<u64> {
    let mut out = vec![0u64; rows.len()];
    for (v, &row) in rows.iter().enumerate() {
        let mut bits = row;
        let mut mapped = 0u64;
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            mapped |= 1 << label[w];
        }
        out[label[v]] = mapped;
    }
    out
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    rows: &'a [u64],
    first: Option<(Vec<u64>, Vec<usize>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(rows: &'a [u64]) -> Self {
        Search {
            rows,
            first: None,
            best: None,
            automorphisms: Vec::new(),
        }
    }

    fn run(mut self) -> (Vec<u64>, Vec<usize>) {
        let n = self.rows.len();
        if n == 0 {
            return (Vec::new(), Vec::new());
        }
        let root = self.refine(vec![(0..n).collect()]);
        self.descend(root, &mut Vec::new());
        self.best.expect("search visits at least one leaf")
    }

    /// Splits cells in place by neighbour counts into every cell until the
    /// partition is equitable. Subcells are ordered by their count vectors.
    fn refine(&self, mut cells: Partition) -> Partition {
        loop {
            let masks: Vec<u64> = cells
                .iter()
                .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect();
            let mut next: Partition = Vec::with_capacity(cells.len());
            let mut changed = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let sig = masks
                            .iter()
                            .map(|&m| (self.rows[v] & m).count_ones())
                            .collect();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut groups: Vec<Vec<usize>> = Vec::new();
                let mut prev: Option<&Vec<u32>> = None;
                for (sig, v) in &keyed {
                    match groups.last_mut() {
                        Some(last) if prev == Some(sig) => last.push(*v),
                        _ => groups.push(vec![*v]),
                    }
                    prev = Some(sig);
                }
                changed |= groups.len() > 1;
                next.extend(groups);
            }
            cells = next;
            if !changed {
                return cells;
            }
        }
    }

    fn orbit_min(&self, path: &[usize], v: usize) -> usize {
        let n = self.rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if path.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    // keep the smaller vertex as root
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi] = lo;
                }
            }
        }
        find(&mut parent, v)
    }

    /// Returns `Some(level)` when the caller chain should unwind to `level`.
    fn descend(&mut self, cells: Partition, path: &mut Vec<usize>) -> Option<usize> {
        let depth = path.len();
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let mut members = cells[target].clone();
        members.sort_unstable();
        for v in members {
            if self.orbit_min(path, v) != v {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&w| w != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            let child = self.refine(child);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &Partition, path: &[usize]) -> Option<usize> {
        let n = self.rows.len();
        let mut label = vec![0; n];
        for (pos, cell) in cells.iter().enumerate() {
            label[cell[0]] = pos;
        }
        let code = relabel_rows(self.rows, &label);
        let Some((first_code, first_label, first_path)) = &self.first else {
            self.first = Some((code.clone(), label.clone(), path.to_vec()));
            self.best = Some((code, label));
            return None;
        };
        if code == *first_code {
            let gamma = compose_automorphism(first_label, &label);
            let common = path
                .iter()
                .zip(first_path)
                .take_while(|(a, b)| a == b)
                .count();
            self.automorphisms.push(gamma);
            return Some(common);
        }
        let (best_code, best_label) = self.best.as_ref().expect("best set with first");
        match code.cmp(best_code) {
            std::cmp::Ordering::Equal => {
                let gamma = compose_automorphism(best_label, &label);
                self.automorphisms.push(gamma);
            }
            std::cmp::Ordering::Less => self.best = Some((code, label)),
            std::cmp::Ordering::Greater => {}
        }
        None
    }
}

/// The vertex map `v -> target_label^{-1}(label(v))`.
fn compose_automorphism(target_label: &[usize], label: &[usize]) -> Vec<usize> {
    let mut inverse = vec![0; target_label.len()];
    for (v, &l) in target_label.iter().enumerate() {
        inverse[l] = v;
    }
    label.iter().map(|&l| inverse[l]).collect()
}
