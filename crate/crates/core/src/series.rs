//! Truncated power series in `z` with exact rational coefficients.
//!
//! A [`SeriesZ`] knows its coefficients for `z^0 ..= z^order` and nothing
//! beyond: coefficients past the truncation order are unknown, not zero.
//! Binary operations therefore return a result truncated to the minimum of
//! the operand orders, and equality of two series is only meaningful up to a
//! stated order (see [`SeriesZ::agrees_up_to`]). The engines always build
//! series at one uniform order, so the silent minimum never loses data in
//! practice.
//!
//! Coefficients are rationals even though every path-counting output is an
//! integer; integrality is checked at output boundaries instead of assumed.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesZ {
    coeffs: Vec<BigRational>,
}

impl SeriesZ {
    /// Builds a series from coefficients `z^0 ..= z^{len-1}`.
    ///
    /// Panics when `coeffs` is empty: a series always knows at least its
    /// constant term.
    pub fn from_rational_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        Self { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_rational_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Truncation order: coefficients are known for `z^0 ..= z^order`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n`.
    ///
    /// Panics when `n` exceeds the truncation order; such a coefficient is
    /// unknown rather than zero.
    pub fn coeff(&self, n: usize) -> &BigRational {
        assert!(
            n <= self.order(),
            "coefficient of z^{n} is beyond truncation order {}",
            self.order()
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let ord = self.order().min(other.order());
        Self {
            coeffs: (0..=ord)
                .map(|n| &self.coeffs[n] + &other.coeffs[n])
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let ord = self.order().min(other.order());
        Self {
            coeffs: (0..=ord)
                .map(|n| &self.coeffs[n] - &other.coeffs[n])
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let ord = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); ord + 1];
        for (i, a) in self.coeffs.iter().take(ord + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(ord + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse, preserving the truncation order.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let inv0 = self.coeffs[0].recip();
        let mut out = vec![BigRational::zero(); self.coeffs.len()];
        out[0] = inv0.clone();
        for n in 1..self.coeffs.len() {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out[n - k];
                }
            }
            out[n] = -&inv0 * acc;
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplies by `z`; the result is known one order further.
    pub fn mul_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigRational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Exact division by `z`: requires a vanishing constant term and a
    /// positive truncation order. The result is known to one order less.
    pub fn div_exact_by_z(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm(self.coeffs[0].to_string()));
        }
        assert!(self.order() >= 1, "cannot drop below order 0");
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Restricts to a smaller truncation order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Keeps the odd-degree terms: `(f(z) - f(-z)) / 2`.
    pub fn odd_part(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { c.clone() } else { BigRational::zero() })
                .collect(),
        }
    }

    /// Equality of the coefficients of `z^0 ..= z^order`.
    ///
    /// Panics if either operand is truncated before `order`.
    pub fn agrees_up_to(&self, other: &Self, order: usize) -> bool {
        (0..=order).all(|n| self.coeff(n) == other.coeff(n))
    }

    /// All coefficients as integers, or an error naming the first
    /// non-integer one.
    pub fn integer_coefficients(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegerCoefficient(c.to_string()))
                }
            })
            .collect()
    }

    /// Like [`Self::integer_coefficients`] but also rejects negatives.
    pub fn nonnegative_integer_coefficients(&self) -> Result<Vec<BigInt>> {
        let ints = self.integer_coefficients()?;
        if let Some(bad) = ints.iter().find(|c| c.is_negative()) {
            return Err(Error::NegativeCoefficient(bad.to_string()));
        }
        Ok(ints)
    }
}

impl fmt::Display for SeriesZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                if c.is_negative() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            wrote = true;
            let mag = c.abs();
            match n {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if n == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{n}")?;
                    }
                }
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn mul_truncates_to_min_order() {
        let a = SeriesZ::from_int_coeffs(&[1, 1, 0, 0]); // 1 + z, order 3
        let b = SeriesZ::from_int_coeffs(&[1, -1, 0]); // 1 - z, order 2
        let prod = a.mul(&b);
        assert_eq!(prod.order(), 2);
        assert_eq!(prod, SeriesZ::from_int_coeffs(&[1, 0, -1])); // 1 - z^2
    }

    #[test]
    fn geometric_inverse() {
        let a = SeriesZ::from_int_coeffs(&[1, -1, 0, 0, 0, 0]); // 1 - z
        let inv = a.inverse().unwrap();
        assert_eq!(inv, SeriesZ::from_int_coeffs(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn inverse_needs_unit_constant_term() {
        let a = SeriesZ::from_int_coeffs(&[0, 1]);
        assert_eq!(a.inverse(), Err(Error::NonInvertibleSeries));
    }

    #[test]
    fn div_by_z_shifts_down() {
        let a = SeriesZ::from_int_coeffs(&[0, 1, 6, 53]);
        let q = a.div_exact_by_z().unwrap();
        assert_eq!(q, SeriesZ::from_int_coeffs(&[1, 6, 53]));
        let bad = SeriesZ::from_int_coeffs(&[2, 1]);
        assert!(matches!(
            bad.div_exact_by_z(),
            Err(Error::NonzeroConstantTerm(_))
        ));
    }

    #[test]
    fn integer_extraction_rejects_fractions() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let s = SeriesZ::from_rational_coeffs(vec![BigRational::one(), half]);
        assert!(matches!(
            s.integer_coefficients(),
            Err(Error::NonIntegerCoefficient(_))
        ));
        let t = SeriesZ::from_int_coeffs(&[1, -2]);
        assert!(matches!(
            t.nonnegative_integer_coefficients(),
            Err(Error::NegativeCoefficient(_))
        ));
        assert!(t.integer_coefficients().is_ok());
    }

    #[test]
    fn display_is_readable() {
        let s = SeriesZ::from_int_coeffs(&[1, 6, 53]);
        assert_eq!(s.to_string(), "1 + 6*z + 53*z^2 + O(z^3)");
    }

    fn arb_series() -> impl Strategy<Value = SeriesZ> {
        proptest::collection::vec(-6i64..7, 1..7).prop_map(|v| SeriesZ::from_int_coeffs(&v))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_series(), b in arb_series(), c in arb_series()) {
            let ord = a.order().min(b.order()).min(c.order());
            prop_assert!(a.add(&b).agrees_up_to(&b.add(&a), ord));
            prop_assert!(a.mul(&b).agrees_up_to(&b.mul(&a), ord));
            prop_assert!(a.mul(&b).mul(&c).agrees_up_to(&a.mul(&b.mul(&c)), ord));
            prop_assert!(a.mul(&b.add(&c)).agrees_up_to(&a.mul(&b).add(&a.mul(&c)), ord));
        }

        #[test]
        fn inverse_round_trip(mut v in proptest::collection::vec(-6i64..7, 1..7)) {
            if v[0] == 0 { v[0] = 1; }
            let a = SeriesZ::from_int_coeffs(&v);
            let prod = a.mul(&a.inverse().unwrap());
            prop_assert!(prod.agrees_up_to(&SeriesZ::one(a.order()), a.order()));
        }
    }
}
