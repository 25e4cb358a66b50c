use lapspec::graph::{classify_bicyclic, BicyclicClass};
use lapspec::verify::{enumerate_graphs, family_members, EnumerationTask, FamilyParams};
use lapspec::{canonical_form, Graph};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

fn expected_class(m: &FamilyParams) -> BicyclicClass {
    match *m {
        FamilyParams::Dumbbell(d) => BicyclicClass::Dumbbell(d),
        FamilyParams::Theta(t) => BicyclicClass::Theta(t),
    }
}

#[test]
fn classification_inverts_construction_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 4..=16 {
        for m in family_members(n) {
            let g = m.graph();
            assert_eq!(g.n(), n);
            assert_eq!(g.edge_count(), n + 1);
            assert_eq!(classify_bicyclic(&g), expected_class(&m));
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(
                classify_bicyclic(&g.relabel(&perm).unwrap()),
                expected_class(&m),
                "{m}"
            );
        }
    }
}

#[test]
fn family_sizes_small_n() {
    let sizes: Vec<usize> = (4..=7).map(|n| family_members(n).len()).collect();
    assert_eq!(sizes, vec![1, 2, 4, 6]);
}

#[test]
fn profile_filtered_enumeration_is_the_family() {
    for n in 4..=9 {
        let mut degrees = vec![3, 3];
        degrees.extend(std::iter::repeat_n(2, n - 2));
        let task = EnumerationTask::new(n, n + 1)
            .unwrap()
            .connected()
            .with_degrees(degrees);
        let enumerated: BTreeSet<_> = enumerate_graphs(&task)
            .unwrap()
            .iter()
            .map(|g| {
                assert!(classify_bicyclic(g).in_family());
                canonical_form(g)
            })
            .collect();
        let members: BTreeSet<_> = family_members(n)
            .iter()
            .map(|m| canonical_form(&m.graph()))
            .collect();
        assert_eq!(enumerated, members, "n = {n}");
    }
}

#[test]
fn non_family_bicyclic_graphs_are_rejected() {
    // two triangles sharing a vertex (a degree-4 vertex)
    let bowtie = Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
    assert_eq!(classify_bicyclic(&bowtie), BicyclicClass::NotInFamily);
    // K4 minus an edge plus a pendant vertex: degrees (3,3,3,2,1)
    let g = Graph::new(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4)]).unwrap();
    assert_eq!(classify_bicyclic(&g), BicyclicClass::NotInFamily);
}

proptest! {
    #[test]
    fn dumbbell_role_swap_is_isomorphic(a in 3usize..9, k in 0usize..6, b in 3usize..9) {
        let g = lapspec::graph::dumbbell_with_cycles(a, k, b).unwrap();
        let h = lapspec::graph::dumbbell_with_cycles(b, k, a).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn theta_path_order_is_irrelevant(a in 0usize..6, b in 1usize..6, c in 1usize..6) {
        let g = lapspec::graph::theta_with_paths(a, b, c).unwrap();
        for (x, y, z) in [(b, a, c), (c, b, a), (b, c, a)] {
            let h = lapspec::graph::theta_with_paths(x, y, z).unwrap();
            prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        }
    }
}
