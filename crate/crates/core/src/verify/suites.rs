//! The verification suites. Each returns a [`VerificationReport`] whose pass
//! flag is set iff no counterexample was found.

use super::enumerate::{
    enumerate_by_vertex_addition, totals_by_edge_count, EnumerationTask, Enumerator,
};
use super::family::{family_members, FamilyParams};
use super::report::{Counterexample, VerificationReport};
use crate::charpoly::{
    charpoly, charpoly_by_interpolation, deletion_formula_check, laplacian, u_matrix_charpoly,
};
use crate::error::Result;
use crate::graph::{
    canonical_form, classify_bicyclic, dumbbell_with_cycles, graph6_decode, graph6_encode,
    theta_with_paths, Graph,
};
use crate::invariants::{
    degree_constraint_solver, direct_invariants, invariants_from_charpoly, DegreeProfile,
};
use crate::poly::IntPolynomial;
use crate::random::random_connected_graphs;
use crate::recurrence::{
    closed_form_check_eq1, dumbbell_charpoly_rec, dumbbell_identity, dumbbell_value_at4,
    path_charpoly_rec, theta_charpoly_rec, theta_identity, theta_value_at4, u_poly_table,
    IdentityAudit,
};
use num_bigint::BigInt;
use rayon::prelude::*;
use std::collections::HashMap;
use std::time::Instant;

/// Parameter bounds for the dumbbell and theta grids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    pub cycle_min: usize,
    pub cycle_max: usize,
    pub bridge_max: usize,
    pub theta_max: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            cycle_min: 3,
            cycle_max: 8,
            bridge_max: 5,
            theta_max: 8,
        }
    }
}

impl Grid {
    /// Every `(p, k, q)` with both cycle lengths in range, in either order.
    pub fn dumbbells(&self) -> Vec<(usize, usize, usize)> {
        let cycles = self.cycle_min.max(3)..=self.cycle_max;
        let mut out = Vec::new();
        for p in cycles.clone() {
            for q in cycles.clone() {
                for k in 0..=self.bridge_max {
                    out.push((p, k, q));
                }
            }
        }
        out
    }

    /// Every `(r, s, t)` with `theta_max >= r >= s >= t`, `s >= 1`.
    pub fn thetas(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for r in 0..=self.theta_max {
            for s in 1..=r {
                for t in 0..=s {
                    out.push((r, s, t));
                }
            }
        }
        out
    }

    fn annotate(&self, report: VerificationReport) -> VerificationReport {
        report
            .with_grid("p, q", format!("{}..={}", self.cycle_min, self.cycle_max))
            .with_grid("k", format!("0..={}", self.bridge_max))
            .with_grid("r >= s >= t", format!("r <= {}", self.theta_max))
    }
}

fn merge(mut base: VerificationReport, parts: Vec<VerificationReport>) -> VerificationReport {
    for p in parts {
        base.absorb(p);
    }
    base
}

fn scratch() -> VerificationReport {
    VerificationReport::new("", "")
}

/// Recurrence route against the matrix route for paths, `U_n`, dumbbells
/// and thetas.
pub fn verify_recurrences(path_max: usize, grid: &Grid) -> VerificationReport {
    let started = Instant::now();
    let mut report = grid.annotate(
        VerificationReport::new(
            "recurrences",
            "three-term recurrences equal direct matrix characteristic polynomials",
        )
        .with_grid("n (paths, U)", format!("0..={path_max}")),
    );
    let u = u_poly_table(path_max as i64).expect("nonnegative");
    let paths: Vec<VerificationReport> = (0..=path_max)
        .into_par_iter()
        .map(|n| {
            let mut r = scratch();
            let rec = path_charpoly_rec(n);
            let direct = if n == 0 {
                IntPolynomial::zero()
            } else {
                charpoly(&laplacian(&crate::graph::make_path(n).expect("n >= 1")))
            };
            r.check(rec == direct, format!("P_{n}"), || {
                format!("recurrence {rec} vs matrix {direct}")
            });
            let u_rec = &u[n + 2];
            let u_mat = u_matrix_charpoly(n as i64).expect("n >= 0");
            r.check(u_rec == &u_mat, format!("U_{n}"), || {
                format!("recurrence {u_rec} vs matrix {u_mat}")
            });
            r
        })
        .collect();
    report = merge(report, paths);
    let dumbbells: Vec<VerificationReport> = grid
        .dumbbells()
        .into_par_iter()
        .map(|(p, k, q)| {
            let mut r = scratch();
            let rec = dumbbell_charpoly_rec(p, k, q).expect("valid");
            let direct = charpoly(&laplacian(&dumbbell_with_cycles(p, k, q).expect("valid")));
            r.check(rec == direct, format!("D({p},{k},{q})"), || {
                format!("recurrence {rec} vs matrix {direct}")
            });
            r
        })
        .collect();
    report = merge(report, dumbbells);
    let thetas: Vec<VerificationReport> = grid
        .thetas()
        .into_par_iter()
        .map(|(a, b, c)| {
            let mut r = scratch();
            let direct = charpoly(&laplacian(&theta_with_paths(a, b, c).expect("valid")));
            // every ordering of the paths goes through the recurrence
            for (x, y, z) in [
                (a, b, c),
                (a, c, b),
                (b, a, c),
                (b, c, a),
                (c, a, b),
                (c, b, a),
            ] {
                let rec = theta_charpoly_rec(x, y, z).expect("valid");
                r.check(rec == direct, format!("Theta({x},{y},{z})"), || {
                    format!("recurrence {rec} vs matrix {direct}")
                });
            }
            r
        })
        .collect();
    merge(report, thetas).finish(started)
}

/// `(y^{r+2} - y^r) φ(U_r)(y) = y^{2r+2} - 1` for `r <= r_max`.
pub fn verify_eq1(r_max: usize) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(
        "eq1",
        "(y^(r+2) - y^r) * U_r(y + 2 + 1/y) = y^(2r+2) - 1 as exact Laurent polynomials",
    )
    .with_grid("r", format!("0..={r_max}"));
    for r in 0..=r_max {
        let c = closed_form_check_eq1(r);
        report.check(c.holds(), format!("r = {r}"), || {
            format!("lhs {} vs rhs {}", c.lhs, c.rhs)
        });
    }
    report.finish(started)
}

/// Values at `x = 4` and `x = 2` of the path and `U_n` polynomials.
pub fn verify_prop23(n_max: usize) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(
        "prop23",
        "phi(L(P_n);4) = 4n, phi(U_n;4) = n+1, phi(U_n;2) = 0 (n odd) or (-1)^(n/2) (n even)",
    )
    .with_grid("n", format!("0..={n_max}"));
    let u = u_poly_table(n_max as i64).expect("nonnegative");
    for n in 0..=n_max {
        let path = path_charpoly_rec(n);
        let v = path.eval_i64(4);
        report.check(v == BigInt::from(4 * n), format!("P_{n} at 4"), || {
            format!("got {v}")
        });
        let un = &u[n + 2];
        let v = un.eval_i64(4);
        report.check(v == BigInt::from(n + 1), format!("U_{n} at 4"), || {
            format!("got {v}")
        });
        let v = un.eval_i64(2);
        let expected = match n % 4 {
            0 => 1,
            2 => -1,
            _ => 0,
        };
        report.check(v == BigInt::from(expected), format!("U_{n} at 2"), || {
            format!("got {v}")
        });
        let half = path_charpoly_rec(n + 1).eval_i64(2);
        report.check(
            BigInt::from(2) * &v == half,
            format!("U_{n} at 2 vs P_{}", n + 1),
            || format!("2 * {v} != {half}"),
        );
    }
    report.finish(started)
}

fn audit_report(audit: Result<IdentityAudit>, subject: String) -> VerificationReport {
    let mut r = scratch();
    let audit = match audit {
        Ok(a) => a,
        Err(e) => {
            r.fail(subject, e.to_string());
            return r;
        }
    };
    r.check(audit.routes_agree(), &audit.label, || {
        format!(
            "matrix-route lhs {} differs from recurrence-route lhs {}",
            audit.matrix_lhs, audit.recurrence_lhs
        )
    });
    let diffs = audit.table_differences();
    if diffs.is_empty() {
        r.note(&audit.label, "table matches computed lhs");
    } else {
        let listed: Vec<String> = diffs
            .iter()
            .map(|(e, lhs, table)| format!("y^{e}: lhs {lhs}, table {table}"))
            .collect();
        r.note(
            &audit.label,
            format!("table differs: {}", listed.join("; ")),
        );
    }
    r
}

fn identity_summary(report: &mut VerificationReport, total: usize) {
    let matching = report
        .findings
        .iter()
        .filter(|f| f.detail == "table matches computed lhs")
        .count();
    report.note(
        "summary",
        format!("transcribed table matches the computed lhs for {matching} of {total} tuples"),
    );
}

/// Dumbbell `y`-side identity: matrix route against recurrence route, plus
/// the per-tuple table audit.
pub fn verify_eq2(grid: &Grid) -> VerificationReport {
    let started = Instant::now();
    let tuples = grid.dumbbells();
    let report = grid.annotate(VerificationReport::new(
        "eq2",
        "y^n (y^2-1)^3 phi(L(D(p,k,q))) + f(y): matrix route vs recurrence route; table audited",
    ));
    let parts: Vec<VerificationReport> = tuples
        .par_iter()
        .map(|&(p, k, q)| audit_report(dumbbell_identity(p, k, q), format!("D({p},{k},{q})")))
        .collect();
    let mut report = merge(report, parts);
    identity_summary(&mut report, tuples.len());
    report.finish(started)
}

/// Theta `y`-side identity, as [`verify_eq2`].
pub fn verify_eq3(grid: &Grid) -> VerificationReport {
    let started = Instant::now();
    let tuples = grid.thetas();
    let report = grid.annotate(VerificationReport::new(
        "eq3",
        "y^n (y^2-1)^3 phi(L(Theta(r,s,t))) + f(y): matrix route vs recurrence route; table audited",
    ));
    let parts: Vec<VerificationReport> = tuples
        .par_iter()
        .map(|&(r, s, t)| audit_report(theta_identity(r, s, t), format!("Theta({r},{s},{t})")))
        .collect();
    let mut report = merge(report, parts);
    identity_summary(&mut report, tuples.len());
    report.finish(started)
}

/// Closed forms of `φ(L(G); 4)` for both families against direct
/// evaluation of the matrix polynomial.
pub fn verify_prop27(grid: &Grid) -> VerificationReport {
    let started = Instant::now();
    let report = grid.annotate(VerificationReport::new(
        "prop27",
        "closed forms for phi(L(G);4) equal direct evaluation for dumbbells and thetas",
    ));
    let dumbbells: Vec<VerificationReport> = grid
        .dumbbells()
        .into_par_iter()
        .map(|(p, k, q)| {
            let mut r = scratch();
            let direct =
                charpoly(&laplacian(&dumbbell_with_cycles(p, k, q).expect("valid"))).eval_i64(4);
            let closed = dumbbell_value_at4(p, k, q);
            r.check(direct == closed, format!("D({p},{k},{q})"), || {
                format!("closed form {closed}, direct {direct}")
            });
            r
        })
        .collect();
    let thetas: Vec<VerificationReport> = grid
        .thetas()
        .into_par_iter()
        .map(|(a, b, c)| {
            let mut r = scratch();
            let direct =
                charpoly(&laplacian(&theta_with_paths(a, b, c).expect("valid"))).eval_i64(4);
            let closed = theta_value_at4(a, b, c);
            r.check(direct == closed, format!("Theta({a},{b},{c})"), || {
                format!("closed form {closed}, direct {direct}")
            });
            r
        })
        .collect();
    let mut report = merge(merge(report, dumbbells), thetas);
    // K_{2,3} has Laplacian spectrum {0, 2, 2, 3, 5}
    let spectrum_product: i64 = [0, 2, 2, 3, 5].iter().map(|l| 4 - l).product();
    let spot = theta_value_at4(1, 1, 1);
    report.check(
        spot == BigInt::from(spectrum_product) && spot == BigInt::from(-16),
        "Theta(1,1,1) at 4",
        || format!("closed form {spot}, spectrum product {spectrum_product}"),
    );
    report.finish(started)
}

fn deletion_checks(g: &Graph, subject: &str) -> VerificationReport {
    let mut r = scratch();
    for u in 0..g.n() {
        match deletion_formula_check(g, u) {
            Ok(c) => r.check(c.holds(), format!("{subject} vertex {u}"), || {
                format!("direct {} vs expanded {}", c.direct, c.expanded)
            }),
            Err(e) => r.fail(format!("{subject} vertex {u}"), e.to_string()),
        }
    }
    r
}

/// The vertex-deletion expansion at every vertex of every family member with
/// at most `family_n_max` vertices and of `random_count` seeded random
/// connected graphs with at most `random_n_max` vertices.
pub fn verify_deletion_formula(
    family_n_max: usize,
    random_count: usize,
    random_n_max: usize,
    seed: u64,
) -> VerificationReport {
    let started = Instant::now();
    let report = VerificationReport::new(
        "deletion-formula",
        "phi(L(G)) = (x-d(u)) phi(L_u) - sum over neighbours - 2 sum over cycles through u",
    )
    .with_grid("family n", format!("4..={family_n_max}"))
    .with_grid(
        "random graphs",
        format!("{random_count} with n in 1..={random_n_max}"),
    )
    .with_grid("seed", seed);
    let members: Vec<FamilyParams> = (4..=family_n_max).flat_map(family_members).collect();
    let family: Vec<VerificationReport> = members
        .par_iter()
        .map(|m| deletion_checks(&m.graph(), &m.to_string()))
        .collect();
    let random = random_connected_graphs(seed, random_count, 1, random_n_max);
    let randoms: Vec<VerificationReport> = random
        .par_iter()
        .map(|g| deletion_checks(g, &graph6_encode(g)))
        .collect();
    let mut report = merge(merge(report, family), randoms);
    report.counts.graphs_enumerated = (members.len() + random.len()) as u64;
    report.finish(started)
}

/// Invariants read off the characteristic polynomial against direct counts
/// on seeded random connected graphs, plus the spanning-tree formulas of the
/// two families.
pub fn verify_invariants(
    count: usize,
    n_max: usize,
    seed: u64,
    family_n_max: usize,
) -> VerificationReport {
    let started = Instant::now();
    let report = VerificationReport::new(
        "invariants",
        "n, m, components, spanning trees and sum of squared degrees from the charpoly equal direct counts",
    )
    .with_grid("random graphs", format!("{count} with n in 1..={n_max}"))
    .with_grid("seed", seed)
    .with_grid("family n", format!("4..={family_n_max}"));
    let graphs = random_connected_graphs(seed, count, 1, n_max);
    let parts: Vec<VerificationReport> = graphs
        .par_iter()
        .map(|g| {
            let mut r = scratch();
            let subject = graph6_encode(g);
            let p = charpoly(&laplacian(g));
            match invariants_from_charpoly(&p) {
                Ok(inv) => {
                    let direct = direct_invariants(g);
                    r.check(inv == direct, &subject, || {
                        format!("from charpoly {inv:?}, direct {direct:?}")
                    });
                }
                Err(e) => r.fail(subject.clone(), e.to_string()),
            }
            match charpoly_by_interpolation(&laplacian(g)) {
                Ok(q) => r.check(p == q, &subject, || {
                    format!("Berkowitz {p} vs interpolation {q}")
                }),
                Err(e) => r.fail(subject, e.to_string()),
            }
            r
        })
        .collect();
    let mut report = merge(report, parts);
    for m in (4..=family_n_max).flat_map(family_members) {
        let expected = match m {
            FamilyParams::Dumbbell(d) => BigInt::from(d.p() * d.q()),
            FamilyParams::Theta(t) => {
                let (r, s, t) = (t.r() + 1, t.s() + 1, t.t() + 1);
                BigInt::from(r * s + r * t + s * t)
            }
        };
        let g = m.graph();
        let from_poly = invariants_from_charpoly(&charpoly(&laplacian(&g))).map(|i| i.tau);
        let cofactor = crate::charpoly::spanning_tree_count(&g);
        report.check(
            from_poly.as_ref() == Ok(&expected) && cofactor == expected,
            m,
            || format!("expected {expected}, charpoly {from_poly:?}, cofactor {cofactor}"),
        );
    }
    report.counts.graphs_enumerated = graphs.len() as u64;
    report.finish(started)
}

/// Pairwise distinct characteristic polynomials (recurrence route) among all
/// dumbbells and thetas on `n` vertices, for `4 <= n <= n_max`.
pub fn verify_within_family_distinct(n_max: usize) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(
        "within-family",
        "no two members of the dumbbell and theta families on the same vertex count share a Laplacian charpoly",
    )
    .with_grid("n", format!("4..={n_max}"));
    report.certified_range = Some(format!("4 <= n <= {n_max}"));
    for n in 4..=n_max {
        let members = family_members(n);
        let polys: Vec<IntPolynomial> =
            members.par_iter().map(FamilyParams::charpoly_rec).collect();
        let mut seen: HashMap<&IntPolynomial, FamilyParams> = HashMap::new();
        for (m, p) in members.iter().zip(&polys) {
            report.counts.checks += 1;
            if let Some(prev) = seen.insert(p, *m) {
                report.push_counterexample(Counterexample {
                    subject: format!("{prev} and {m}"),
                    graphs: vec![graph6_encode(&prev.graph()), graph6_encode(&m.graph())],
                    charpoly: Some(p.to_string()),
                    detail: "distinct family members share a Laplacian charpoly".into(),
                });
            }
        }
        let k = members.len() as u64;
        report.counts.comparisons += k * k.saturating_sub(1) / 2;
        report.counts.graphs_enumerated += k;
    }
    report.finish(started)
}

fn bicyclic_pool(n: usize, enumerator: &Enumerator) -> Result<Vec<Graph>> {
    enumerator.enumerate(&EnumerationTask::new(n, n + 1)?.connected())
}

/// For each family member on `n` vertices, searches all connected graphs
/// with `n` vertices and `n + 1` edges for a non-isomorphic graph with the
/// same Laplacian charpoly.
pub fn verify_ds(n: usize, enumerator: &Enumerator) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(
        "ds",
        "every dumbbell and theta on n vertices has no non-isomorphic Laplacian-cospectral mate",
    )
    .with_grid("n", n)
    .with_grid("cap", enumerator.cap);
    report.certified_range = Some(format!(
        "n = {n} (finite check, not the unbounded statement)"
    ));
    let pool = match bicyclic_pool(n, enumerator) {
        Ok(p) => p,
        Err(e) => {
            report.fail(format!("n = {n}"), e.to_string());
            return report.finish(started);
        }
    };
    report.counts.graphs_enumerated = pool.len() as u64;
    let pool_polys: Vec<IntPolynomial> = pool.par_iter().map(|g| charpoly(&laplacian(g))).collect();
    let mut by_poly: HashMap<&IntPolynomial, Vec<usize>> = HashMap::new();
    for (i, p) in pool_polys.iter().enumerate() {
        by_poly.entry(p).or_default().push(i);
    }
    let members = family_members(n);
    for m in &members {
        let g = m.graph();
        let g6 = graph6_encode(&g);
        let p = charpoly(&laplacian(&g));
        // the pool restriction is justified by n, m and c being spectral
        match invariants_from_charpoly(&p) {
            Ok(inv) => report.check(inv.n == n && inv.m == n + 1 && inv.c == 1, m, || {
                format!("charpoly gives n = {}, m = {}, c = {}", inv.n, inv.m, inv.c)
            }),
            Err(e) => report.fail(m.to_string(), e.to_string()),
        }
        let form = canonical_form(&g);
        let hits = by_poly.get(&p).cloned().unwrap_or_default();
        report.counts.comparisons += pool.len() as u64;
        report.check(
            hits.iter().any(|&i| canonical_form(&pool[i]) == form),
            m,
            || "member not found among the enumerated graphs".into(),
        );
        for i in hits {
            if canonical_form(&pool[i]) != form {
                report.push_counterexample(Counterexample {
                    subject: format!("{m} and a non-isomorphic mate"),
                    graphs: vec![g6.clone(), graph6_encode(&pool[i])],
                    charpoly: Some(p.to_string()),
                    detail: "Laplacian-cospectral but not isomorphic".into(),
                });
            }
        }
        report.note(
            m.to_string(),
            format!("checked against {} candidates", pool.len()),
        );
    }
    report.finish(started)
}

/// [`verify_ds`] for every `n` in `n_min..=n_max`.
pub fn verify_ds_range(n_min: usize, n_max: usize, enumerator: &Enumerator) -> VerificationReport {
    if n_min == n_max {
        return verify_ds(n_min, enumerator);
    }
    let started = Instant::now();
    let mut report = VerificationReport::new(
        "ds",
        "every dumbbell and theta on n vertices has no non-isomorphic Laplacian-cospectral mate",
    )
    .with_grid("n", format!("{n_min}..={n_max}"))
    .with_grid("cap", enumerator.cap);
    report.certified_range = Some(format!(
        "{n_min} <= n <= {n_max} (finite check, not the unbounded statement)"
    ));
    for n in n_min..=n_max {
        report.absorb(verify_ds(n, enumerator));
    }
    report.finish(started)
}

/// Mates of family members stay in the family, and the degree profile
/// `(3^2, 2^{n-2})` is forced by the spectral invariants.
pub fn verify_lemma34_reduction(n: usize, enumerator: &Enumerator) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(
        "lemma34",
        "cospectral mates of family members are dumbbells or thetas; invariants force the (3^2, 2^(n-2)) profile",
    )
    .with_grid("n", n)
    .with_grid("cap", enumerator.cap);
    report.certified_range = Some(format!("n = {n}"));
    let pool = match bicyclic_pool(n, enumerator) {
        Ok(p) => p,
        Err(e) => {
            report.fail(format!("n = {n}"), e.to_string());
            return report.finish(started);
        }
    };
    report.counts.graphs_enumerated = pool.len() as u64;
    let profile = DegreeProfile::bicyclic_profile(n);
    let members = family_members(n);
    let member_polys: HashMap<IntPolynomial, FamilyParams> =
        members.iter().map(|m| (m.charpoly_rec(), *m)).collect();
    for m in &members {
        let inv = invariants_from_charpoly(&m.charpoly_rec());
        let forced = inv.as_ref().map(degree_constraint_solver);
        report.check(forced.as_ref() == Ok(&profile), m, || {
            format!("solver returned {forced:?}")
        });
    }
    let mut bicyclic_profile_graphs = 0;
    for g in &pool {
        let g6 = graph6_encode(g);
        let p = charpoly(&laplacian(g));
        let direct = direct_invariants(g);
        let inv = match invariants_from_charpoly(&p) {
            Ok(i) => i,
            Err(e) => {
                report.fail(g6, e.to_string());
                continue;
            }
        };
        report.check(
            inv.degree_square_sum == direct.degree_square_sum,
            &g6,
            || {
                format!(
                    "sum of squared degrees {} vs direct {}",
                    inv.degree_square_sum, direct.degree_square_sum
                )
            },
        );
        let has_profile = g.degree_sequence() == expected_sequence(n);
        if has_profile {
            bicyclic_profile_graphs += 1;
            report.check(classify_bicyclic(g).in_family(), &g6, || {
                "degree profile (3^2, 2^(n-2)) but not a dumbbell or theta".into()
            });
        } else {
            report.check(inv.degree_square_sum != (4 * n + 10) as u64, &g6, || {
                "profile differs but the sum of squared degrees is 4n + 10".into()
            });
            report.check(!degree_constraint_solver(&inv).is_forced(), &g6, || {
                "solver forced a profile the graph does not have".into()
            });
        }
        if let Some(m) = member_polys.get(&p) {
            report.counts.comparisons += 1;
            report.check(classify_bicyclic(g).in_family(), &g6, || {
                format!("cospectral with {m} but outside the family")
            });
            report.check(degree_constraint_solver(&inv) == profile, &g6, || {
                format!("cospectral with {m} but the profile is not forced")
            });
        }
    }
    report.note(
        "pool",
        format!(
            "{} connected graphs with {} edges, {} with profile (3^2, 2^{})",
            pool.len(),
            n + 1,
            bicyclic_profile_graphs,
            n - 2
        ),
    );
    report.finish(started)
}

fn expected_sequence(n: usize) -> Vec<usize> {
    let mut seq = vec![3, 3];
    seq.extend(std::iter::repeat_n(2, n - 2));
    seq
}

/// graph6 round trips on every connected `(n, n+1)` graph for
/// `4 <= n <= roundtrip_n_max`, and per-edge-count totals of all graphs on
/// `n <= totals_n_max` vertices from two independent enumeration routes.
pub fn verify_enumeration(
    totals_n_max: usize,
    roundtrip_n_max: usize,
    enumerator: &Enumerator,
) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(
        "enumeration",
        "graph6 round trip on enumerated graphs; edge-addition totals equal vertex-addition totals",
    )
    .with_grid("totals n", format!("0..={totals_n_max}"))
    .with_grid("round-trip n", format!("4..={roundtrip_n_max}"));
    let roundtrip = |g: &Graph, report: &mut VerificationReport| {
        let s = graph6_encode(g);
        let back = graph6_decode(s.as_bytes());
        report.check(
            back.as_ref().is_ok_and(|h| h == g && graph6_encode(h) == s),
            &s,
            || format!("round trip gave {back:?}"),
        );
    };
    for n in 4..=roundtrip_n_max {
        match bicyclic_pool(n, enumerator) {
            Ok(pool) => {
                report.counts.graphs_enumerated += pool.len() as u64;
                for g in &pool {
                    roundtrip(g, &mut report);
                }
            }
            Err(e) => report.fail(format!("n = {n}"), e.to_string()),
        }
    }
    for n in 0..=totals_n_max {
        let max_m = n * n.saturating_sub(1) / 2;
        let mut first = Vec::new();
        for m in 0..=max_m {
            match EnumerationTask::new(n, m).and_then(|t| enumerator.enumerate(&t)) {
                Ok(level) => first.extend(level),
                Err(e) => report.fail(format!("n = {n}, m = {m}"), e.to_string()),
            }
        }
        let second = enumerate_by_vertex_addition(n);
        report.counts.graphs_enumerated += (first.len() + second.len()) as u64;
        for g in &first {
            roundtrip(g, &mut report);
        }
        let (a, b) = (totals_by_edge_count(&first), totals_by_edge_count(&second));
        report.check(a == b, format!("n = {n}"), || {
            format!("edge addition {a:?} vs vertex addition {b:?}")
        });
        report.note(format!("n = {n}"), format!("{} graphs", first.len()));
    }
    report.finish(started)
}
