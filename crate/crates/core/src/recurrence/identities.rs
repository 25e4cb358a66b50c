//! Identities on the `y` side of the substitution `x = y + 2 + 1/y`.

use super::terms::TermTable;
use super::{dumbbell_charpoly_rec, theta_charpoly_rec, u_poly_rec};
use crate::charpoly::{charpoly, laplacian};
use crate::error::Result;
use crate::graph::{dumbbell_with_cycles, theta_with_paths, ThetaParams};
use crate::poly::{IntPolynomial, LaurentPolynomial};
use num_bigint::BigInt;

/// `(y^{r+2} - y^r) φ(U_r)(y) = y^{2r+2} - 1`, both sides expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormCheck {
    pub r: usize,
    pub lhs: LaurentPolynomial,
    pub rhs: LaurentPolynomial,
}

impl ClosedFormCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn closed_form_check_eq1(r: usize) -> ClosedFormCheck {
    let u = u_poly_rec(r as i64).expect("r >= 0");
    let r_i = r as i64;
    let factor = LaurentPolynomial::from_terms([(r_i + 2, 1), (r_i, -1)]);
    ClosedFormCheck {
        r,
        lhs: &factor * &u.substitute_y(),
        rhs: LaurentPolynomial::from_terms([(2 * r_i + 2, 1), (0, -1)]),
    }
}

/// `f(y) = 1 - 2y - 3y^2 + 4y^3 + 4y^4 - 4y^{2n+2} - 4y^{2n+3} + 3y^{2n+4}
/// + 2y^{2n+5} - y^{2n+6}`.
pub fn correction_poly(n: usize) -> LaurentPolynomial {
    let h = 2 * n as i64;
    LaurentPolynomial::from_terms([
        (0, 1),
        (1, -2),
        (2, -3),
        (3, 4),
        (4, 4),
        (h + 2, -4),
        (h + 3, -4),
        (h + 4, 3),
        (h + 5, 2),
        (h + 6, -1),
    ])
}

/// `y^n (y^2 - 1)^3 φ(y) + f(y)` where `n` is the vertex count.
pub fn y_side_lhs(phi: &IntPolynomial, n: usize) -> LaurentPolynomial {
    let cube = LaurentPolynomial::from_terms([(2, 1), (0, -1)]).pow(3);
    &(&phi.substitute_y().shift(n as i64) * &cube) + &correction_poly(n)
}

/// Both computational sides of a `y`-side identity and the transcribed
/// table they are compared against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityAudit {
    pub label: String,
    pub matrix_lhs: LaurentPolynomial,
    pub recurrence_lhs: LaurentPolynomial,
    pub table: LaurentPolynomial,
}

impl IdentityAudit {
    pub fn routes_agree(&self) -> bool {
        self.matrix_lhs == self.recurrence_lhs
    }

    /// `(exponent, lhs coefficient, table coefficient)` wherever they differ.
    pub fn table_differences(&self) -> Vec<(i64, BigInt, BigInt)> {
        self.matrix_lhs.differences(&self.table)
    }

    pub fn table_matches(&self) -> bool {
        self.matrix_lhs == self.table
    }
}

/// Audit of the dumbbell identity. The cycle lengths may be in either order;
/// the table is instantiated with `p` and `q` as given.
pub fn dumbbell_identity(p: usize, k: usize, q: usize) -> Result<IdentityAudit> {
    let g = dumbbell_with_cycles(p, k, q)?;
    let n = g.n();
    let matrix = charpoly(&laplacian(&g));
    let rec = dumbbell_charpoly_rec(p, k, q)?;
    let table =
        TermTable::dumbbell().instantiate(&[("p", p as i64), ("k", k as i64), ("q", q as i64)])?;
    Ok(IdentityAudit {
        label: format!("D({p},{k},{q})"),
        matrix_lhs: y_side_lhs(&matrix, n),
        recurrence_lhs: y_side_lhs(&rec, n),
        table,
    })
}

/// Audit of the theta identity; requires `r >= s >= t`.
pub fn theta_identity(r: usize, s: usize, t: usize) -> Result<IdentityAudit> {
    let params = ThetaParams::new(r, s, t)?;
    let g = theta_with_paths(r, s, t)?;
    let n = g.n();
    let matrix = charpoly(&laplacian(&g));
    let rec = theta_charpoly_rec(r, s, t)?;
    let table =
        TermTable::theta().instantiate(&[("r", r as i64), ("s", s as i64), ("t", t as i64)])?;
    Ok(IdentityAudit {
        label: params.to_string(),
        matrix_lhs: y_side_lhs(&matrix, n),
        recurrence_lhs: y_side_lhs(&rec, n),
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eq1_small_cases() {
        let c0 = closed_form_check_eq1(0);
        assert_eq!(c0.lhs, LaurentPolynomial::from_terms([(2, 1), (0, -1)]));
        assert!(c0.holds());
        let c1 = closed_form_check_eq1(1);
        assert_eq!(c1.lhs, LaurentPolynomial::from_terms([(4, 1), (0, -1)]));
        assert!(closed_form_check_eq1(50).holds());
    }

    #[test]
    fn correction_poly_shape() {
        let f = correction_poly(6);
        assert_eq!(f.len(), 10);
        assert_eq!(f.highest_term().unwrap(), (18, BigInt::from(-1)));
        assert_eq!(f.coeff(14), BigInt::from(-4));
    }

    #[test]
    fn lhs_has_no_negative_exponents() {
        let g = theta_with_paths(2, 1, 0).unwrap();
        let lhs = y_side_lhs(&charpoly(&laplacian(&g)), g.n());
        assert!(lhs.lowest_term().unwrap().0 >= 0);
    }

    #[test]
    fn dumbbell_table_matches_lhs() {
        let audit = dumbbell_identity(3, 0, 3).unwrap();
        assert!(audit.routes_agree());
        assert!(audit.table_matches(), "{:?}", audit.table_differences());
        assert_eq!(audit.table.lowest_term().unwrap(), (3, BigInt::from(-4)));
    }

    #[test]
    fn theta_table_lacks_one_term() {
        // the transcribed theta table is short a -2*y^{2r+2t+6} term
        for (r, s, t) in [(1, 1, 1), (3, 1, 1), (4, 2, 0), (2, 2, 0), (5, 4, 3)] {
            let audit = theta_identity(r, s, t).unwrap();
            assert!(audit.routes_agree());
            let n = (r + t + 3) as i64;
            let diffs = audit.table_differences();
            assert_eq!(diffs.len(), 1);
            let (e, lhs, table) = &diffs[0];
            assert_eq!((*e, lhs - table), (2 * n, BigInt::from(-2)));
        }
        let audit = theta_identity(3, 1, 1).unwrap();
        assert_eq!(audit.table.lowest_term().unwrap(), (4, BigInt::from(2)));
    }

    #[test]
    fn smallest_exponent_law() {
        for p in 3..=8 {
            for q in 3..=p {
                for k in 0..=5 {
                    let table = dumbbell_identity(p, k, q).unwrap().table;
                    let (e, _) = table.lowest_term().unwrap();
                    if q != 2 * k + 4 {
                        assert_eq!(e, q.min(2 * k + 4) as i64, "D({p},{k},{q})");
                    }
                }
            }
        }
        for r in 1..=8 {
            for s in 1..=r {
                for t in 0..=s {
                    let table = theta_identity(r, s, t).unwrap().table;
                    let (e, _) = table.lowest_term().unwrap();
                    if s != t + 2 {
                        assert_eq!(e, (s + t + 2).min(2 * t + 4) as i64, "Θ({r},{s},{t})");
                    }
                }
            }
        }
    }

    #[test]
    fn smallest_exponent_collisions() {
        // q = 2k + 4: both candidates share the exponent q
        let table = dumbbell_identity(4, 0, 4).unwrap().table;
        let (e, _) = table.lowest_term().unwrap();
        assert_eq!(e, 4);
        // s = t + 2
        let table = theta_identity(3, 2, 0).unwrap().table;
        assert_eq!(table.lowest_term().unwrap().0, 4);
    }
}
