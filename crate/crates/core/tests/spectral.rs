use lapspec::charpoly::{charpoly_by_interpolation, spanning_tree_count};
use lapspec::invariants::{degree_constraint_solver, direct_invariants};
use lapspec::random::{random_connected_graph, random_connected_graphs};
use lapspec::verify::{enumerate_graphs, EnumerationTask};
use lapspec::{charpoly, invariants_from_charpoly, is_l_cospectral, laplacian, Graph};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.0..0.6);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}

#[test]
fn coefficient_identities_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n);
        let p = charpoly(&laplacian(&g));
        assert!(p.is_monic());
        assert!(p.coeff(0).is_zero());
        assert_eq!(p.coeff(n - 1), BigInt::from(-2 * g.edge_count() as i64));
        assert_eq!(p.zero_root_multiplicity(), Some(g.component_count()));
        let inv = invariants_from_charpoly(&p).unwrap();
        assert_eq!(inv, direct_invariants(&g));
        if g.is_connected() {
            assert_eq!(p.coeff(1).abs(), BigInt::from(n) * spanning_tree_count(&g));
        }
    }
}

#[test]
fn two_charpoly_routes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n);
        let m = laplacian(&g);
        assert_eq!(charpoly(&m), charpoly_by_interpolation(&m).unwrap());
    }
}

#[test]
fn cospectrality_is_an_equivalence_on_enumerated_graphs() {
    let task = EnumerationTask::new(7, 8).unwrap().connected();
    let graphs = enumerate_graphs(&task).unwrap();
    let sample = &graphs[..60];
    for a in sample {
        assert!(is_l_cospectral(a, a));
        for b in sample {
            assert_eq!(is_l_cospectral(a, b), is_l_cospectral(b, a));
            if !is_l_cospectral(a, b) {
                continue;
            }
            for c in sample {
                if is_l_cospectral(b, c) {
                    assert!(is_l_cospectral(a, c));
                }
            }
        }
    }
}

#[test]
fn solver_never_forces_outside_the_profile() {
    for n in 5..=8 {
        for m in [n - 1, n, n + 1, n + 2] {
            let task = EnumerationTask::new(n, m).unwrap().connected();
            for g in enumerate_graphs(&task).unwrap() {
                let inv = invariants_from_charpoly(&charpoly(&laplacian(&g))).unwrap();
                let forced = degree_constraint_solver(&inv).is_forced();
                let mut profile = vec![3, 3];
                profile.extend(std::iter::repeat_n(2, n - 2));
                assert_eq!(forced, m == n + 1 && g.degree_sequence() == profile);
            }
        }
    }
}

#[test]
fn random_connected_graphs_are_seeded() {
    let a = random_connected_graphs(1, 20, 3, 9);
    assert_eq!(a, random_connected_graphs(1, 20, 3, 9));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = random_connected_graph(&mut rng, 12, 0.0);
    assert_eq!(g.edge_count(), 11);
    assert!(g.is_connected());
}
