use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse polynomial in `y` with integer exponents of either sign.
///
/// Only nonzero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c * y^e`
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(e, c.into());
        out
    }

    /// Sums `(exponent, coefficient)` pairs; repeated exponents accumulate.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Multiplies by `y^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Smallest exponent with its coefficient.
    pub fn lowest_term(&self) -> Result<(i64, BigInt)> {
        self.terms
            .iter()
            .next()
            .map(|(&e, c)| (e, c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn highest_term(&self) -> Result<(i64, BigInt)> {
        self.terms
            .iter()
            .next_back()
            .map(|(&e, c)| (e, c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exponents whose coefficients differ, with `(self, other)` coefficients.
    pub fn differences(&self, other: &Self) -> Vec<(i64, BigInt, BigInt)> {
        let mut exps: Vec<i64> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        exps.sort_unstable();
        exps.dedup();
        exps.into_iter()
            .filter_map(|e| {
                let (a, b) = (self.coeff(e), other.coeff(e));
                (a != b).then_some((e, a, b))
            })
            .collect()
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for LaurentPolynomial {
    /// Ascending exponents: `c_k*y^k + ...`, exact decimal coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            write!(f, "{}*y^{}", c.abs(), e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(t: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(t.iter().copied())
    }

    #[test]
    fn shift_examples() {
        assert_eq!(l(&[(-1, 1), (0, 1)]).shift(1), l(&[(0, 1), (1, 1)]));
        let p = l(&[(-3, 2), (4, -1)]);
        assert_eq!(p.shift(0), p);
        assert_eq!(p.shift(5).shift(-5), p);
    }

    #[test]
    fn lowest_term_examples() {
        assert_eq!(
            l(&[(2, 3), (5, 1)]).lowest_term().unwrap(),
            (2, BigInt::from(3))
        );
        assert_eq!(
            l(&[(-3, 1), (1, -1)]).lowest_term().unwrap(),
            (-3, BigInt::one())
        );
        assert_eq!(
            LaurentPolynomial::zero().lowest_term(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn collisions_cancel() {
        let p = l(&[(2, 3), (2, -3), (1, 1)]);
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(2), BigInt::zero());
    }

    #[test]
    fn multiplication_and_display() {
        // (y^3 - y)(y + 1/y) = y^4 - 1
        let prod = &l(&[(3, 1), (1, -1)]) * &l(&[(1, 1), (-1, 1)]);
        assert_eq!(prod, l(&[(4, 1), (0, -1)]));
        assert_eq!(prod.to_string(), "-1*y^0 + 1*y^4");
        assert_eq!(l(&[(-1, 2), (0, -3)]).to_string(), "2*y^-1 - 3*y^0");
    }

    #[test]
    fn differences_lists_both_sides() {
        let a = l(&[(0, 1), (2, 5)]);
        let b = l(&[(0, 1), (3, -2)]);
        assert_eq!(
            a.differences(&b),
            vec![
                (2, BigInt::from(5), BigInt::zero()),
                (3, BigInt::zero(), BigInt::from(-2))
            ]
        );
    }
}
