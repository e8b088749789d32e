//! Dense bivariate polynomials with exact coefficients.
//!
//! [`Poly2`] stores a rectangular table `rows[i][j]` holding the coefficient
//! of `x^i y^j`. Tables are kept in canonical form (no trailing all-zero row
//! or column), so structural equality is polynomial equality. The zero
//! polynomial is the empty table; its degree is treated as -1 when trimming.
//!
//! Degrees stay small here (bounded by the boundary path length), so a dense
//! table is simpler than a sparse map and makes exact division by `x - 1`
//! a straight synthetic division per column.

use std::fmt;
use std::ops::{Neg, Sub};

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

/// Coefficient ring for [`Poly2`]. Satisfied by `BigInt` and `BigRational`.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

/// Dense polynomial in two variables `x` and `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly2<C> {
    rows: Vec<Vec<C>>,
}

/// The integer-coefficient polynomials used throughout the engines.
pub type PolyXY = Poly2<BigInt>;

impl<C: Coeff> Poly2<C> {
    fn canonical(mut rows: Vec<Vec<C>>) -> Self {
        while rows
            .last()
            .is_some_and(|r| r.iter().all(|c| c.is_zero()))
        {
            rows.pop();
        }
        let width = rows
            .iter()
            .map(|r| r.iter().rposition(|c| !c.is_zero()).map_or(0, |p| p + 1))
            .max()
            .unwrap_or(0);
        if width == 0 {
            return Self { rows: Vec::new() };
        }
        for r in &mut rows {
            r.resize(width, C::zero());
        }
        Self { rows }
    }

    pub fn zero() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::canonical(vec![vec![c]])
    }

    pub fn var_x() -> Self {
        Self::monomial(1, 0, C::one())
    }

    pub fn var_y() -> Self {
        Self::monomial(0, 1, C::one())
    }

    /// `c * x^x_deg * y^y_deg`.
    pub fn monomial(x_deg: usize, y_deg: usize, c: C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut rows = vec![vec![C::zero(); y_deg + 1]; x_deg + 1];
        rows[x_deg][y_deg] = c;
        Self { rows }
    }

    /// Builds from a (possibly ragged) table `rows[i][j] = [x^i y^j]`.
    pub fn from_table(rows: Vec<Vec<C>>) -> Self {
        Self::canonical(rows)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Degree in `x`, or `None` for the zero polynomial.
    pub fn x_degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    /// Degree in `y`, or `None` for the zero polynomial.
    pub fn y_degree(&self) -> Option<usize> {
        self.rows.first().map(|r| r.len() - 1)
    }

    pub fn coeff(&self, x_deg: usize, y_deg: usize) -> C {
        self.rows
            .get(x_deg)
            .and_then(|r| r.get(y_deg))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// The canonical coefficient table (rows indexed by `x`-degree).
    pub fn table(&self) -> &[Vec<C>] {
        &self.rows
    }

    pub fn add(&self, other: &Self) -> Self {
        let nr = self.rows.len().max(other.rows.len());
        let nc = self
            .rows
            .first()
            .map_or(0, |r| r.len())
            .max(other.rows.first().map_or(0, |r| r.len()));
        let mut rows = vec![vec![C::zero(); nc]; nr];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                let cur = std::mem::replace(&mut rows[i][j], C::zero());
                rows[i][j] = cur + c.clone();
            }
        }
        for (i, row) in other.rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                let cur = std::mem::replace(&mut rows[i][j], C::zero());
                rows[i][j] = cur + c.clone();
            }
        }
        Self::canonical(rows)
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|c| -c.clone()).collect())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let nr = self.rows.len() + other.rows.len() - 1;
        let nc = self.rows[0].len() + other.rows[0].len() - 1;
        let mut rows = vec![vec![C::zero(); nc]; nr];
        for (i1, r1) in self.rows.iter().enumerate() {
            for (j1, c1) in r1.iter().enumerate() {
                if c1.is_zero() {
                    continue;
                }
                for (i2, r2) in other.rows.iter().enumerate() {
                    for (j2, c2) in r2.iter().enumerate() {
                        if c2.is_zero() {
                            continue;
                        }
                        let cur = std::mem::replace(&mut rows[i1 + i2][j1 + j2], C::zero());
                        rows[i1 + i2][j1 + j2] = cur + c1.clone() * c2.clone();
                    }
                }
            }
        }
        Self::canonical(rows)
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by `x^k` (shifts rows up).
    pub fn mul_x_pow(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let width = self.rows[0].len();
        let mut rows = vec![vec![C::zero(); width]; k];
        rows.extend(self.rows.iter().cloned());
        Self { rows }
    }

    /// Multiplies by `y^k` (shifts columns right).
    pub fn mul_y_pow(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut nr = vec![C::zero(); k];
                nr.extend(r.iter().cloned());
                nr
            })
            .collect();
        Self { rows }
    }

    /// Substitutes `x = 1`, collapsing the table onto a single row in `y`.
    pub fn eval_x1(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let width = self.rows[0].len();
        let mut row = vec![C::zero(); width];
        for r in &self.rows {
            for (j, c) in r.iter().enumerate() {
                let cur = std::mem::replace(&mut row[j], C::zero());
                row[j] = cur + c.clone();
            }
        }
        Self::canonical(vec![row])
    }

    /// Evaluates at `x = y = 1`, i.e. the sum of all coefficients.
    pub fn eval_one_one(&self) -> C {
        let mut acc = C::zero();
        for r in &self.rows {
            for c in r {
                acc = acc + c.clone();
            }
        }
        acc
    }

    /// Exact quotient by `x - 1`.
    ///
    /// Fails with [`Error::NotDivisibleByXMinusOne`] when the input does not
    /// vanish at `x = 1`; a failure indicates a caller bug, since every use in
    /// the engines divides a difference of the form `a - a(1, y)`.
    pub fn exact_div_x_minus_1(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dx = self.rows.len() - 1;
        if dx == 0 {
            return Err(Error::NotDivisibleByXMinusOne);
        }
        let width = self.rows[0].len();
        let mut q = vec![vec![C::zero(); width]; dx];
        for j in 0..width {
            q[dx - 1][j] = self.rows[dx][j].clone();
            for i in (1..dx).rev() {
                q[i - 1][j] = self.rows[i][j].clone() + q[i][j].clone();
            }
            let rem = self.rows[0][j].clone() + q[0][j].clone();
            if !rem.is_zero() {
                return Err(Error::NotDivisibleByXMinusOne);
            }
        }
        Ok(Self::canonical(q))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly2<D> {
        Poly2::canonical(
            self.rows
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        )
    }
}

impl PolyXY {
    /// Test/doc helper: builds from `i64` rows, e.g. `&[&[0, 2, 1], &[2], &[1]]`
    /// for `x^2 + 2x + 2y + y^2`.
    pub fn from_int_table(rows: &[&[i64]]) -> Self {
        Self::canonical(
            rows.iter()
                .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    /// Widens the coefficients to rationals.
    pub fn to_rational(&self) -> Poly2<BigRational> {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.iter().all(|c| c.sign() != num::bigint::Sign::Minus))
    }
}

impl fmt::Display for PolyXY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.rows.len()).rev() {
            for (j, c) in self.rows[i].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let neg = c.sign() == num::bigint::Sign::Minus;
                let mag = c.magnitude();
                if first {
                    if neg {
                        write!(f, "-")?;
                    }
                    first = false;
                } else if neg {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                let mut parts: Vec<String> = Vec::new();
                if !mag.is_one() || (i == 0 && j == 0) {
                    parts.push(mag.to_string());
                }
                match i {
                    0 => {}
                    1 => parts.push("x".into()),
                    _ => parts.push(format!("x^{i}")),
                }
                match j {
                    0 => {}
                    1 => parts.push("y".into()),
                    _ => parts.push(format!("y^{j}")),
                }
                write!(f, "{}", parts.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(rows: &[&[i64]]) -> PolyXY {
        PolyXY::from_int_table(rows)
    }

    #[test]
    fn add_examples() {
        // (x + y) + x = 2x + y
        let a = p(&[&[0, 1], &[1]]);
        let b = p(&[&[], &[1]]);
        assert_eq!(a.add(&b), p(&[&[0, 1], &[2]]));
        // p + 0 = p
        assert_eq!(a.add(&PolyXY::zero()), a);
        // (x^2 + x + y) + (x^2 + 2x + 2y + y^2) = 2x^2 + 3x + 3y + y^2
        let c = p(&[&[0, 1], &[1], &[1]]);
        let d = p(&[&[0, 2, 1], &[2], &[1]]);
        assert_eq!(c.add(&d), p(&[&[0, 3, 1], &[3], &[2]]));
    }

    #[test]
    fn mul_examples() {
        let x = PolyXY::var_x();
        let y = PolyXY::var_y();
        assert_eq!(x.mul(&x), p(&[&[], &[], &[1]]));
        // x^2 * (x + y) = x^3 + x^2 y
        let x2 = x.mul(&x);
        let xy = x.add(&y);
        assert_eq!(x2.mul(&xy), p(&[&[], &[], &[0, 1], &[1]]));
        // (x + y)(x - 1) = x^2 + xy - x - y
        let xm1 = x.sub(&PolyXY::one());
        assert_eq!(xy.mul(&xm1), p(&[&[0, -1], &[-1, 1], &[1]]));
    }

    #[test]
    fn eval_x1_examples() {
        // x^2 + 2x + 2y + y^2 -> 3 + 2y + y^2
        let a = p(&[&[0, 2, 1], &[2], &[1]]);
        assert_eq!(a.eval_x1(), p(&[&[3, 2, 1]]));
        assert_eq!(PolyXY::constant(7.into()).eval_x1(), p(&[&[7]]));
        let xk = PolyXY::var_x().pow(5);
        assert_eq!(xk.eval_x1(), PolyXY::one());
    }

    #[test]
    fn exact_division_examples() {
        // (x^2 - 1) / (x - 1) = x + 1
        let a = p(&[&[-1], &[], &[1]]);
        assert_eq!(a.exact_div_x_minus_1().unwrap(), p(&[&[1], &[1]]));
        // (x - 1) / (x - 1) = 1
        let b = p(&[&[-1], &[1]]);
        assert_eq!(b.exact_div_x_minus_1().unwrap(), PolyXY::one());
        // (x^3 + x^2 y - x - y) / (x - 1) = x^2 + xy + x + y
        let c = p(&[&[0, -1], &[-1], &[0, 1], &[1]]);
        let q = c.exact_div_x_minus_1().unwrap();
        assert_eq!(q, p(&[&[0, 1], &[1, 1], &[1]]));
        // oracle: multiply back
        let xm1 = PolyXY::var_x().sub(&PolyXY::one());
        assert_eq!(q.mul(&xm1), c);
    }

    #[test]
    fn non_divisible_is_reported() {
        assert_eq!(
            PolyXY::one().exact_div_x_minus_1(),
            Err(Error::NotDivisibleByXMinusOne)
        );
        assert_eq!(
            p(&[&[1], &[1]]).exact_div_x_minus_1(),
            Err(Error::NotDivisibleByXMinusOne)
        );
    }

    #[test]
    fn canonical_zero_has_no_degree() {
        let z = p(&[&[0, 0], &[0]]);
        assert!(z.is_zero());
        assert_eq!(z, PolyXY::zero());
        assert_eq!(z.x_degree(), None);
        assert_eq!(z.y_degree(), None);
    }

    #[test]
    fn display_formats_terms() {
        let a = p(&[&[0, 2, 1], &[2], &[1]]);
        assert_eq!(a.to_string(), "x^2 + 2*x + 2*y + y^2");
        assert_eq!(PolyXY::zero().to_string(), "0");
        assert_eq!(p(&[&[-1], &[1]]).to_string(), "x - 1");
    }

    fn arb_poly() -> impl Strategy<Value = PolyXY> {
        proptest::collection::vec(proptest::collection::vec(-4i64..5, 0..4), 0..4)
            .prop_map(|rows| {
                PolyXY::from_table(
                    rows.into_iter()
                        .map(|r| r.into_iter().map(BigInt::from).collect())
                        .collect(),
                )
            })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn division_round_trip(a in arb_poly()) {
            let xm1 = PolyXY::var_x().sub(&PolyXY::one());
            let prod = a.mul(&xm1);
            prop_assert_eq!(prod.exact_div_x_minus_1().unwrap(), a);
        }

        #[test]
        fn operations_stay_canonical(a in arb_poly(), b in arb_poly()) {
            for r in [a.add(&b), a.sub(&b), a.mul(&b), a.eval_x1()] {
                let again = PolyXY::from_table(r.table().to_vec());
                prop_assert_eq!(&again, &r);
            }
        }
    }
}
