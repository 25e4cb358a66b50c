use lapspec::graph::{dumbbell_with_cycles, make_path, theta_with_paths};
use lapspec::recurrence::{
    dumbbell_charpoly_rec, dumbbell_identity, path_charpoly_rec, theta_charpoly_rec,
    theta_identity, u_poly_rec, TermTable,
};
use lapspec::{charpoly, laplacian, submatrix_charpoly, u_matrix_charpoly};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn paths_and_u_up_to_forty() {
    for n in 1..=40 {
        assert_eq!(
            path_charpoly_rec(n),
            charpoly(&laplacian(&make_path(n).unwrap()))
        );
        assert_eq!(
            u_poly_rec(n as i64).unwrap(),
            u_matrix_charpoly(n as i64).unwrap()
        );
    }
}

#[test]
fn u_is_path_with_ends_removed() {
    for n in 0..=10usize {
        let g = make_path(n + 2).unwrap();
        assert_eq!(
            submatrix_charpoly(&g, &[0, n + 1]).unwrap(),
            u_poly_rec(n as i64).unwrap()
        );
    }
}

#[test]
fn dumbbell_recurrence_is_symmetric_in_the_cycles() {
    for p in 3..=8 {
        for q in 3..=8 {
            for k in 0..=5 {
                assert_eq!(
                    dumbbell_charpoly_rec(p, k, q).unwrap(),
                    dumbbell_charpoly_rec(q, k, p).unwrap()
                );
            }
        }
    }
}

#[test]
fn table_instantiation_examples() {
    let fd = TermTable::dumbbell()
        .instantiate(&[("p", 3), ("k", 0), ("q", 3)])
        .unwrap();
    // 2(-1)^p y^p and 2(-1)^q y^q collide when p = q
    assert_eq!(fd.lowest_term().unwrap(), (3, BigInt::from(-4)));
    let fd = TermTable::dumbbell()
        .instantiate(&[("p", 4), ("k", 0), ("q", 3)])
        .unwrap();
    assert_eq!(fd.lowest_term().unwrap(), (3, BigInt::from(-2)));
    let ft = TermTable::theta()
        .instantiate(&[("r", 3), ("s", 1), ("t", 1)])
        .unwrap();
    assert_eq!(ft.lowest_term().unwrap(), (4, BigInt::from(2)));
}

#[test]
fn collision_cases_sum_coefficients() {
    // q = 2k + 4: 2(-1)^q y^q meets y^{2k+4}
    for (p, k, q) in [(4, 0, 4), (6, 1, 6), (8, 2, 8), (7, 0, 4)] {
        let table = dumbbell_identity(p, k, q).unwrap().table;
        let (e, c) = table.lowest_term().unwrap();
        assert_eq!(e, q as i64);
        let mut expected = 2 + 1;
        if p == q {
            expected += 2;
        }
        assert_eq!(c, BigInt::from(expected), "D({p},{k},{q})");
    }
    // s = t + 2: 2(-1)^{s+t} y^{s+t+2} meets y^{2t+4}
    for (r, s, t, c) in [(3, 2, 0, 3), (5, 3, 1, 3), (4, 4, 2, 5)] {
        let table = theta_identity(r, s, t).unwrap().table;
        let (e, coeff) = table.lowest_term().unwrap();
        assert_eq!(e, (2 * t + 4) as i64, "Theta({r},{s},{t})");
        assert_eq!(coeff, BigInt::from(c), "Theta({r},{s},{t})");
    }
}

proptest! {
    #[test]
    fn theta_recurrence_matches_matrix_in_any_order(a in 0usize..7, b in 1usize..7, c in 1usize..7) {
        let direct = charpoly(&laplacian(&theta_with_paths(a, b, c).unwrap()));
        for (x, y, z) in [(a, b, c), (b, a, c), (c, b, a), (a, c, b)] {
            prop_assert_eq!(&theta_charpoly_rec(x, y, z).unwrap(), &direct);
        }
    }

    #[test]
    fn dumbbell_recurrence_matches_matrix(p in 3usize..10, k in 0usize..7, q in 3usize..10) {
        let direct = charpoly(&laplacian(&dumbbell_with_cycles(p, k, q).unwrap()));
        prop_assert_eq!(dumbbell_charpoly_rec(p, k, q).unwrap(), direct);
    }
}
