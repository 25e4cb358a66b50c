//! Exact integer polynomials in `x` and Laurent polynomials in `y`.

mod laurent;

pub use laurent::LaurentPolynomial;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. The vector is empty for the zero
/// polynomial and otherwise ends in a nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `x - a`
    pub fn linear(a: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![-a.into(), BigInt::one()])
    }

    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// Coefficients in ascending order of degree; trailing zeros are dropped.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        IntPolynomial { coeffs }.normalize()
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    /// Index of the lowest nonzero coefficient, i.e. the multiplicity of the
    /// root 0. `None` for the zero polynomial.
    pub fn zero_root_multiplicity(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, v: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * v + c)
    }

    pub fn eval_i64(&self, v: i64) -> BigInt {
        self.eval(&BigInt::from(v))
    }

    /// Evaluates at `x = y + 2 + 1/y`, i.e. `x = (y+1)^2 / y`, which is how
    /// `y^2 - (x-2) y + 1 = 0` parametrizes `x`.
    pub fn substitute_y(&self) -> LaurentPolynomial {
        let x_in_y = LaurentPolynomial::from_terms([(1, 1), (0, 2), (-1, 1)]);
        self.coeffs
            .iter()
            .rev()
            .fold(LaurentPolynomial::zero(), |acc, c| {
                &(&acc * &x_in_y) + &LaurentPolynomial::monomial(c.clone(), 0)
            })
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl fmt::Display for IntPolynomial {
    /// Descending powers, e.g. `x^3 - 6*x^2 + 9*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn ring_examples() {
        let xm2 = IntPolynomial::linear(2);
        assert_eq!(&xm2 * &xm2, p(&[4, -4, 1]));
        let q = p(&[1, 0, 3]);
        assert_eq!(&q + &IntPolynomial::zero(), q);
        assert_eq!((&q * &xm2).degree(), Some(3));
        assert_eq!(&q - &q, IntPolynomial::zero());
        assert_eq!(q.scale(&BigInt::from(-2)), p(&[-2, 0, -6]));
        assert_eq!(q.scale(&BigInt::zero()), IntPolynomial::zero());
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(p(&[0, -4, 1]).eval_i64(4), BigInt::zero());
        assert_eq!(p(&[0, -2, 1]).eval_i64(2), BigInt::zero());
        assert_eq!(p(&[3, 0, 1]).eval_i64(-5), BigInt::from(28));
    }

    #[test]
    fn normalization_and_queries() {
        let q = p(&[0, 0, 5, 0, 0]);
        assert_eq!(q.degree(), Some(2));
        assert_eq!(q.zero_root_multiplicity(), Some(2));
        assert!(!q.is_monic());
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(q.coeff(10), BigInt::zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 9, -6, 1]).to_string(), "x^3 - 6*x^2 + 9*x");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[2, -1]).to_string(), "-x + 2");
    }

    #[test]
    fn substitution_examples() {
        let x = IntPolynomial::x().substitute_y();
        assert_eq!(x, LaurentPolynomial::from_terms([(1, 1), (0, 2), (-1, 1)]));
        assert_eq!(
            IntPolynomial::constant(7).substitute_y(),
            LaurentPolynomial::from_terms([(0, 7)])
        );
        // (y+1)^2/y - 4 = y - 2 + 1/y = y^{-1} (y-1)^2
        let s = IntPolynomial::linear(4).substitute_y();
        assert_eq!(s, LaurentPolynomial::from_terms([(1, 1), (0, -2), (-1, 1)]));
        let square = LaurentPolynomial::from_terms([(1, 1), (0, -1)]).pow(2);
        assert_eq!(s, square.shift(-1));
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        proptest::collection::vec(-20i64..=20, 0..6).prop_map(|c| IntPolynomial::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn substitution_is_a_ring_homomorphism(a in small_poly(), b in small_poly()) {
            prop_assert_eq!((&a * &b).substitute_y(), &a.substitute_y() * &b.substitute_y());
            prop_assert_eq!((&a + &b).substitute_y(), &a.substitute_y() + &b.substitute_y());
        }

        #[test]
        fn substitution_is_palindromic(a in small_poly()) {
            prop_assume!(!a.is_zero());
            let n = a.degree().unwrap() as i64;
            let shifted = a.substitute_y().shift(n);
            prop_assert!(shifted.lowest_term().unwrap().0 >= 0);
            for (e, c) in shifted.terms() {
                prop_assert_eq!(c, &shifted.coeff(2 * n - e));
            }
        }

        #[test]
        fn product_degree_adds(a in small_poly(), b in small_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((&a * &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
        }

        #[test]
        fn evaluation_is_multiplicative(a in small_poly(), b in small_poly(), v in -7i64..=7) {
            prop_assert_eq!((&a * &b).eval_i64(v), a.eval_i64(v) * b.eval_i64(v));
        }
    }
}
