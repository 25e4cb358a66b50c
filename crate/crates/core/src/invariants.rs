//! Graph invariants recoverable from the Laplacian characteristic polynomial.

use crate::charpoly::{charpoly, laplacian};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralInvariants {
    pub n: usize,
    pub m: usize,
    /// Number of connected components.
    pub c: usize,
    /// Spanning-tree count; zero when the graph is disconnected.
    #[serde(with = "bigint_string")]
    pub tau: BigInt,
    pub degree_square_sum: u64,
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

fn small(v: &BigInt, what: &str) -> Result<u64> {
    v.to_u64().ok_or_else(|| {
        Error::Inconsistent(format!("{what} = {v} is not a small nonnegative integer"))
    })
}

/// Reads `n`, `m`, the component count, the spanning-tree count and the sum of
/// squared degrees off the coefficients of `φ(L(G))`.
///
/// With `a_i` the coefficient of `x^i`: `Σλ = -a_{n-1} = 2m` and
/// `Σλ² = a_{n-1}² - 2a_{n-2} = Σd² + 2m`.
pub fn invariants_from_charpoly(p: &IntPolynomial) -> Result<SpectralInvariants> {
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => {
            return Err(Error::InvalidCharpoly(
                "a Laplacian polynomial has degree at least 1".into(),
            ))
        }
    };
    if !p.is_monic() {
        return Err(Error::InvalidCharpoly(format!("{p} is not monic")));
    }
    if !p.coeff(0).is_zero() {
        return Err(Error::InvalidCharpoly(format!(
            "{p} has a nonzero constant term"
        )));
    }
    let a1 = p.coeff(n - 1);
    let (twice_m, rem) = (-&a1).div_rem(&BigInt::from(2));
    if !rem.is_zero() || twice_m.is_negative() {
        return Err(Error::Inconsistent(format!(
            "trace {} is not a nonnegative even integer",
            -&a1
        )));
    }
    let m = small(&twice_m, "edge count")? as usize;
    let c = p.zero_root_multiplicity().expect("nonzero polynomial");
    let tau = if c == 1 {
        let (q, r) = p.coeff(1).abs().div_rem(&BigInt::from(n));
        if !r.is_zero() {
            return Err(Error::Inconsistent(format!(
                "coefficient of x is not divisible by n = {n}"
            )));
        }
        q
    } else {
        BigInt::zero()
    };
    let a2 = if n >= 2 {
        p.coeff(n - 2)
    } else {
        BigInt::zero()
    };
    let power_sum2 = &a1 * &a1 - BigInt::from(2) * a2;
    let degree_square_sum = small(
        &(power_sum2 - BigInt::from(2 * m)),
        "sum of squared degrees",
    )?;
    Ok(SpectralInvariants {
        n,
        m,
        c,
        tau,
        degree_square_sum,
    })
}

pub fn is_l_cospectral(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && charpoly(&laplacian(g)) == charpoly(&laplacian(h))
}

/// Outcome of the degree-counting argument for bicyclic graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DegreeProfile {
    /// `counts[i]` vertices have degree `i`.
    Forced {
        counts: Vec<usize>,
    },
    Inconclusive {
        reason: String,
    },
}

impl DegreeProfile {
    pub fn is_forced(&self) -> bool {
        matches!(self, DegreeProfile::Forced { .. })
    }

    /// The profile `(3^2, 2^{n-2})`.
    pub fn bicyclic_profile(n: usize) -> Self {
        DegreeProfile::Forced {
            counts: vec![0, 0, n - 2, 2],
        }
    }
}

/// With `x_i` the number of degree-`i` vertices of a connected graph,
/// `Σ x_i = n`, `Σ i x_i = 2m` and `Σ i² x_i = Σd²` give
/// `Σ (i² - 3i + 2) x_i = Σd² - 6m + 2n`. For `m = n + 1` and
/// `Σd² = 4n + 10` the right side is 4. The weight `i² - 3i + 2` vanishes for
/// `i = 1, 2`, is 2 for `i = 3` and at least 6 beyond, so `x_3 = 2` and
/// `x_i = 0` for `i >= 4`; the two linear equations then give `x_1 = 0` and
/// `x_2 = n - 2`.
pub fn degree_constraint_solver(inv: &SpectralInvariants) -> DegreeProfile {
    let inconclusive = |reason: String| DegreeProfile::Inconclusive { reason };
    if inv.c != 1 {
        return inconclusive(format!("graph has {} components", inv.c));
    }
    let n = inv.n as i64;
    if inv.m as i64 != n + 1 {
        return inconclusive(format!("m = {} but n + 1 = {}", inv.m, n + 1));
    }
    let weighted = inv.degree_square_sum as i64 - 6 * inv.m as i64 + 2 * n;
    if weighted != 4 {
        return inconclusive(format!("Σ(i²-3i+2)x_i = {weighted}, not 4"));
    }
    // weight(i) >= 6 for i >= 4, so only degree-3 vertices carry weight
    let mut counts = vec![0i64; 4];
    counts[3] = weighted / 2;
    // x_1 + x_2 = n - x_3 and x_1 + 2 x_2 = 2m - 3 x_3 (no isolated vertices)
    let rest = n - counts[3];
    let rest_degree = 2 * inv.m as i64 - 3 * counts[3];
    counts[2] = rest_degree - rest;
    counts[1] = rest - counts[2];
    if counts.iter().any(|&c| c < 0) {
        return inconclusive("negative vertex count".into());
    }
    DegreeProfile::Forced {
        counts: counts.into_iter().map(|c| c as usize).collect(),
    }
}

/// Direct counts used to check [`invariants_from_charpoly`].
pub fn direct_invariants(g: &Graph) -> SpectralInvariants {
    let degree_square_sum = g.degrees().iter().map(|&d| (d * d) as u64).sum();
    let c = g.component_count();
    let tau = if c == 1 {
        crate::charpoly::spanning_tree_count(g)
    } else {
        BigInt::zero()
    };
    SpectralInvariants {
        n: g.n(),
        m: g.edge_count(),
        c,
        tau,
        degree_square_sum,
    }
}
