//! Seeded random connected graphs for property checks.

use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random spanning tree on `n >= 1` vertices (each vertex of a shuffled
/// order attaches to a uniformly chosen earlier one) plus each remaining pair
/// independently with probability `density`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    assert!(n >= 1, "graph needs at least one vertex");
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i].min(order[j]), order[i].max(order[j])));
    }
    let mut g = Graph::new(n, edges).expect("tree edges are distinct");
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) && rng.gen_bool(density) {
                g = g.with_edge(a, b).expect("fresh edge");
            }
        }
    }
    g
}

/// `count` connected graphs with `min_n..=max_n` vertices, reproducible from
/// `seed`.
pub fn random_connected_graphs(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            let density = rng.gen_range(0.0..0.5);
            random_connected_graph(&mut rng, n, density)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graphs_are_connected_and_reproducible() {
        let a = random_connected_graphs(7, 50, 1, 10);
        assert!(a.iter().all(Graph::is_connected));
        assert!(a.iter().all(|g| (1..=10).contains(&g.n())));
        assert_eq!(a, random_connected_graphs(7, 50, 1, 10));
        assert_ne!(a, random_connected_graphs(8, 50, 1, 10));
    }
}
