use crate::charpoly::{charpoly, laplacian};
use crate::graph::{make_dumbbell, make_theta, DumbbellParams, Graph, ThetaParams};
use crate::poly::IntPolynomial;
use crate::recurrence::{dumbbell_charpoly_rec, theta_charpoly_rec};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyParams {
    Dumbbell(DumbbellParams),
    Theta(ThetaParams),
}

impl FamilyParams {
    pub fn graph(&self) -> Graph {
        match *self {
            FamilyParams::Dumbbell(d) => make_dumbbell(d),
            FamilyParams::Theta(t) => make_theta(t),
        }
    }

    pub fn charpoly_rec(&self) -> IntPolynomial {
        match *self {
            FamilyParams::Dumbbell(d) => dumbbell_charpoly_rec(d.p(), d.k(), d.q()),
            FamilyParams::Theta(t) => theta_charpoly_rec(t.r(), t.s(), t.t()),
        }
        .expect("normalized parameters are valid")
    }

    pub fn charpoly_matrix(&self) -> IntPolynomial {
        charpoly(&laplacian(&self.graph()))
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyParams::Dumbbell(d) => d.fmt(f),
            FamilyParams::Theta(t) => t.fmt(f),
        }
    }
}

/// Every dumbbell `D(p,k,q)` with `p + k + q = n`, `p >= q >= 3`, then every
/// theta `Θ(r,s,t)` with `r + s + t + 2 = n`, `r >= s >= t`, `s >= 1`.
pub fn family_members(n: usize) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for q in 3..=n {
        for p in q..=n {
            if p + q <= n {
                let params = DumbbellParams::new(p, n - p - q, q).expect("in range");
                out.push(FamilyParams::Dumbbell(params));
            }
        }
    }
    let internal = n.saturating_sub(2);
    if n >= 2 {
        for t in 0..=internal {
            for s in t.max(1)..=internal {
                if s + t <= internal && internal - s - t >= s {
                    let params = ThetaParams::new(internal - s - t, s, t).expect("in range");
                    out.push(FamilyParams::Theta(params));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        family_members(n).iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn members_small_n() {
        assert_eq!(labels(4), vec!["Theta(1,1,0)"]);
        let six = labels(6);
        assert_eq!(six.len(), 4);
        assert!(six.contains(&"D(3,0,3)".to_string()));
        for t in ["Theta(2,1,1)", "Theta(2,2,0)", "Theta(3,1,0)"] {
            assert!(six.contains(&t.to_string()));
        }
        let seven = labels(7);
        for l in [
            "D(4,0,3)",
            "D(3,1,3)",
            "Theta(3,1,1)",
            "Theta(2,2,1)",
            "Theta(3,2,0)",
            "Theta(4,1,0)",
        ] {
            assert!(seven.contains(&l.to_string()), "{l}");
        }
        assert_eq!(seven.len(), 6);
    }

    #[test]
    fn members_are_distinct_and_sized() {
        for n in 4..=14 {
            let members = family_members(n);
            let mut sorted = members.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), members.len());
            for m in &members {
                let g = m.graph();
                assert_eq!((g.n(), g.edge_count()), (n, n + 1));
            }
        }
    }
}
