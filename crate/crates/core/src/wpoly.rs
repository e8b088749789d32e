//! Polynomials in `w` whose coefficients are truncated series in `z`.
//!
//! This is the shape of the factors produced by the Hensel lifting in
//! [`crate::algebraic`]: a [`PolyWSeries`] of degree `d` stores `d + 1`
//! coefficient series, all truncated at one common order.

use num::{BigRational, One};

use crate::series::SeriesZ;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyWSeries {
    coeffs: Vec<SeriesZ>,
}

impl PolyWSeries {
    /// Builds from coefficient series indexed by degree in `w`.
    ///
    /// Mixed truncation orders are reconciled to their minimum, matching the
    /// series arithmetic rules. Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<SeriesZ>) -> Self {
        assert!(!coeffs.is_empty(), "a polynomial needs at least one coefficient");
        let ord = coeffs.iter().map(SeriesZ::order).min().unwrap();
        Self {
            coeffs: coeffs.into_iter().map(|s| s.truncated(ord)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Common truncation order of all coefficient series.
    pub fn order(&self) -> usize {
        self.coeffs[0].order()
    }

    pub fn coeff(&self, w_deg: usize) -> &SeriesZ {
        &self.coeffs[w_deg]
    }

    pub fn coeffs(&self) -> &[SeriesZ] {
        &self.coeffs
    }

    /// Whether the leading coefficient is the constant series 1.
    pub fn is_monic(&self) -> bool {
        let lead = self.coeffs.last().unwrap();
        lead.coeff(0).is_one() && (1..=lead.order()).all(|n| lead.coeff(n).is_zero())
    }

    /// Substitutes the scalar `w0` for `w` (Horner evaluation).
    pub fn eval(&self, w0: &BigRational) -> SeriesZ {
        let mut acc = self.coeffs.last().unwrap().clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.scale(w0).add(c);
        }
        acc
    }

    /// Evaluation at `w = 1`: the sum of the coefficient series.
    pub fn eval_one(&self) -> SeriesZ {
        self.eval(&BigRational::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let ord = self.order().min(other.order());
        let deg = self.degree().max(other.degree());
        let coeffs = (0..=deg)
            .map(|i| {
                let a = self.coeffs.get(i).map(|s| s.truncated(ord));
                let b = other.coeffs.get(i).map(|s| s.truncated(ord));
                match (a, b) {
                    (Some(a), Some(b)) => a.add(&b),
                    (Some(a), None) => a,
                    (None, Some(b)) => b,
                    (None, None) => unreachable!(),
                }
            })
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(SeriesZ::neg).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let ord = self.order().min(other.order());
        let deg = self.degree() + other.degree();
        let mut coeffs = vec![SeriesZ::zero(ord); deg + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn series(v: &[i64]) -> SeriesZ {
        SeriesZ::from_int_coeffs(v)
    }

    #[test]
    fn eval_linear_at_one() {
        // g = w - (1 + z): g(1) = -z
        let g = PolyWSeries::new(vec![series(&[-1, -1]), series(&[1, 0])]);
        assert_eq!(g.eval_one(), series(&[0, -1]));
    }

    #[test]
    fn eval_square_at_one() {
        // (w - 1)^2 evaluated at w = 1 is 0
        let g = PolyWSeries::new(vec![series(&[1, 0]), series(&[-2, 0]), series(&[1, 0])]);
        assert!(g.eval_one().is_zero());
        assert!(g.is_monic());
    }

    #[test]
    fn eval_at_rational_scalar() {
        // w^2 + 3 at w = 1/2 is 13/4
        let g = PolyWSeries::new(vec![series(&[3]), series(&[0]), series(&[1])]);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let v = g.eval(&half);
        assert_eq!(
            v.coeff(0),
            &BigRational::new(BigInt::from(13), BigInt::from(4))
        );
    }

    #[test]
    fn product_of_linear_factors() {
        // (w - 1)(w + 1) = w^2 - 1, orders reconciled to the minimum
        let a = PolyWSeries::new(vec![series(&[-1, 0, 0]), series(&[1, 0, 0])]);
        let b = PolyWSeries::new(vec![series(&[1, 0]), series(&[1, 0])]);
        let prod = a.mul(&b);
        assert_eq!(prod.order(), 1);
        assert_eq!(prod.coeff(0), &series(&[-1, 0]));
        assert_eq!(prod.coeff(1), &series(&[0, 0]));
        assert_eq!(prod.coeff(2), &series(&[1, 0]));
    }
}
