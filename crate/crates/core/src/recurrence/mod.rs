//! Three-term recurrences for path-like Laplacian polynomials, the
//! dumbbell and theta characteristic-polynomial recurrences, their values at
//! `x = 4`, and the `y`-side identities.
//!
//! `φ(U_n)` follows `φ(U_{n+1}) = (x-2) φ(U_n) - φ(U_{n-1})` from
//! `φ(U_0) = 1`, `φ(U_1) = x - 2`, extended backwards to `φ(U_{-1}) = 0`,
//! `φ(U_{-2}) = -1`. The backward values make the dumbbell recurrence valid
//! at `k = 0` and the theta recurrence valid at `t = 0` without special
//! cases.

pub mod identities;
pub mod terms;

pub use identities::{
    closed_form_check_eq1, correction_poly, dumbbell_identity, theta_identity, y_side_lhs,
    ClosedFormCheck, IdentityAudit,
};
pub use terms::{AffineForm, Term, TermTable};

use crate::error::{Error, Result};
use crate::graph::ThetaParams;
use crate::poly::IntPolynomial;
use num_bigint::BigInt;

fn parity_sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `φ(L(P_n))` from `φ(L(P_0)) = 0`, `φ(L(P_1)) = x` and
/// `φ(L(P_{n+1})) = (x-2) φ(L(P_n)) - φ(L(P_{n-1}))`.
pub fn path_charpoly_rec(n: usize) -> IntPolynomial {
    let step = IntPolynomial::linear(2);
    let (mut prev, mut cur) = (IntPolynomial::zero(), IntPolynomial::x());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&step * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `φ(U_n)` for `n >= -2`.
pub fn u_poly_rec(n: i64) -> Result<IntPolynomial> {
    Ok(u_poly_table(n)?.pop().expect("table is non-empty"))
}

/// `[φ(U_{-2}), φ(U_{-1}), ..., φ(U_max)]`.
pub fn u_poly_table(max: i64) -> Result<Vec<IntPolynomial>> {
    if max < -2 {
        return Err(Error::InvalidParams(format!(
            "U polynomials are defined from index -2, got {max}"
        )));
    }
    let step = IntPolynomial::linear(2);
    let mut table = vec![IntPolynomial::constant(-1), IntPolynomial::zero()];
    for _ in 0..=max {
        let len = table.len();
        let next = &(&step * &table[len - 1]) - &table[len - 2];
        table.push(next);
    }
    table.truncate((max + 3) as usize);
    Ok(table)
}

/// Indexed access into a [`u_poly_table`] by `U` index.
struct UPolys(Vec<IntPolynomial>);

impl UPolys {
    fn upto(max: i64) -> Result<Self> {
        Ok(UPolys(u_poly_table(max.max(1))?))
    }

    fn get(&self, n: i64) -> &IntPolynomial {
        &self.0[(n + 2) as usize]
    }
}

/// `(x-3) φ(U_{m-1}) - 2 φ(U_{m-2}) - 2 (-1)^m`: the cycle factor of the
/// dumbbell recurrence.
fn cycle_factor(u: &UPolys, m: i64) -> IntPolynomial {
    let a = &IntPolynomial::linear(3) * u.get(m - 1);
    let b = u.get(m - 2).scale(&BigInt::from(2));
    &(&a - &b) - &IntPolynomial::constant(2 * parity_sign(m))
}

fn helper(u: &UPolys, q: i64, k: i64) -> IntPolynomial {
    &(&cycle_factor(u, q) * u.get(k)) - &(u.get(q - 1) * u.get(k - 1))
}

/// `φ(L_{q,k})`: the Laplacian of a dumbbell with the `p`-cycle removed.
/// Defined for `q >= 3`, `k >= -1`.
pub fn dumbbell_helper_poly(q: usize, k: i64) -> Result<IntPolynomial> {
    if q < 3 || k < -1 {
        return Err(Error::InvalidParams(format!(
            "dumbbell helper needs q >= 3 and k >= -1, got q = {q}, k = {k}"
        )));
    }
    let u = UPolys::upto(q as i64 + k)?;
    Ok(helper(&u, q as i64, k))
}

/// `φ(L(D(p,k,q)))` by the dumbbell recurrence. Either cycle order is
/// accepted.
pub fn dumbbell_charpoly_rec(p: usize, k: usize, q: usize) -> Result<IntPolynomial> {
    if p < 3 || q < 3 {
        return Err(Error::InvalidParams(format!(
            "dumbbell cycle lengths must be at least 3, got {p} and {q}"
        )));
    }
    let (p, k, q) = (p as i64, k as i64, q as i64);
    let u = UPolys::upto(p + q + k)?;
    let first = &cycle_factor(&u, p) * &helper(&u, q, k);
    let second = u.get(p - 1) * &helper(&u, q, k - 1);
    Ok(&first - &second)
}

fn theta_helper(u: &UPolys, r: i64, s: i64, t: i64) -> IntPolynomial {
    let (ur, us, ut) = (u.get(r), u.get(s), u.get(t));
    let main = &(&(&IntPolynomial::linear(3) * ur) * us) * ut;
    let minus_r = &(u.get(r - 1) * us) * ut;
    let minus_s = &(ur * u.get(s - 1)) * ut;
    let minus_t = &(ur * us) * u.get(t - 1);
    &(&(&main - &minus_r) - &minus_s) - &minus_t
}

/// `φ(θ_{r,s,t})`: the theta Laplacian with one hub removed. Each index may
/// be as low as -1.
pub fn theta_helper_poly(r: i64, s: i64, t: i64) -> Result<IntPolynomial> {
    if r.min(s).min(t) < -1 {
        return Err(Error::InvalidParams(format!(
            "theta helper indices must be >= -1, got ({r},{s},{t})"
        )));
    }
    let u = UPolys::upto(r.max(s).max(t))?;
    Ok(theta_helper(&u, r, s, t))
}

/// `φ(L(Θ(r,s,t)))` by the theta recurrence, including the three cycle
/// correction terms. The path lengths may be given in any order.
pub fn theta_charpoly_rec(r: usize, s: usize, t: usize) -> Result<IntPolynomial> {
    ThetaParams::normalized(r, s, t)?;
    let (r, s, t) = (r as i64, s as i64, t as i64);
    let u = UPolys::upto(r.max(s).max(t))?;
    let mut out = &IntPolynomial::linear(3) * &theta_helper(&u, r, s, t);
    out = &out - &theta_helper(&u, r - 1, s, t);
    out = &out - &theta_helper(&u, r, s - 1, t);
    out = &out - &theta_helper(&u, r, s, t - 1);
    for (idx, others) in [(r, s + t), (s, r + t), (t, r + s)] {
        out = &out - &u.get(idx).scale(&BigInt::from(2 * parity_sign(others)));
    }
    Ok(out)
}

/// Closed form of `φ(L(D(p,k,q)); 4)`.
pub fn dumbbell_value_at4(p: usize, k: usize, q: usize) -> BigInt {
    let (p, k, q) = (p as i128, k as i128, q as i128);
    let odd = |m: i128| 1 - parity_sign(m as i64) as i128;
    let v = 4 * p * q * k - 2 * p * (2 * k + 1) * odd(q) - 2 * q * (2 * k + 1) * odd(p)
        + 4 * (k + 1) * odd(p) * odd(q);
    BigInt::from(v)
}

/// Closed form of `φ(L(Θ(r,s,t)); 4)`.
pub fn theta_value_at4(r: usize, s: usize, t: usize) -> BigInt {
    let (r, s, t) = (r as i128, s as i128, t as i128);
    let even = |m: i128| 1 + parity_sign(m as i64) as i128;
    let sg = |m: i128| parity_sign(m as i64) as i128;
    let v = 4 * r * s * t
        - 2 * r * even(s + t)
        - 2 * s * even(r + t)
        - 2 * t * even(r + s)
        - 2 * (1 + sg(s + t) + sg(r + t) + sg(r + s));
    BigInt::from(v)
}
