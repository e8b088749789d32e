//! The polynomial recursion engine.
//!
//! Counting paths below a boundary does not recurse on the count alone:
//! appending an `E` step to the boundary mixes in how many paths hug it.
//! The fix is to carry the whole two-variable polynomial
//! `A(x, y) = sum over paths of x^shared_north * y^leading_east`
//! and recurse on that. Appending `N` to the boundary multiplies `A` by `x`;
//! appending `E` applies the operator
//!
//! ```text
//! phi(A) = x/(x-1) * A + (y - x/(x-1)) * A(1, y)
//! ```
//!
//! which is computed here in the equivalent polynomial form
//! `y*A(1,y) + x*(A - A(1,y))/(x-1)` so that everything stays inside
//! integer-coefficient polynomials; `A - A(1,y)` vanishes at `x = 1`, so the
//! division is always exact. Setting `x = y = 1` afterwards recovers the
//! plain path count — the substitution just cannot be done before the
//! recursion has finished.

use num::BigInt;

use crate::path::{LatticePath, Step};
use crate::pattern::Pattern;
use crate::poly::PolyXY;

/// The free-extension operator: `y*a(1,y) + x*(a - a(1,y))/(x-1)`.
pub fn phi(a: &PolyXY) -> PolyXY {
    let at_x1 = a.eval_x1();
    let quot = a
        .sub(&at_x1)
        .exact_div_x_minus_1()
        .expect("a - a(1,y) vanishes at x = 1, so x - 1 divides it");
    at_x1.mul_y_pow(1).add(&quot.mul_x_pow(1))
}

/// Effect of appending one boundary step on the path polynomial.
pub fn tutte_step(t: &PolyXY, step: Step) -> PolyXY {
    match step {
        Step::North => t.mul_x_pow(1),
        Step::East => phi(t),
    }
}

/// Path polynomial of a boundary, built step by step from 1.
///
/// Equals [`crate::path::tutte_bruteforce`] on every boundary; the fold here
/// costs polynomial arithmetic instead of path enumeration.
pub fn tutte_of_path(boundary: &LatticePath) -> PolyXY {
    boundary
        .steps()
        .iter()
        .fold(PolyXY::one(), |acc, &s| tutte_step(&acc, s))
}

/// One staircase block: `phi^l (x^k * a)`.
pub fn advance_block(a: &PolyXY, k: u32, l: u32) -> PolyXY {
    let mut cur = a.mul_x_pow(k as usize);
    for _ in 0..l {
        cur = phi(&cur);
    }
    cur
}

/// The polynomials `A_n` and counts `A_n(1,1)` for a staircase pattern.
#[derive(Clone, Debug)]
pub struct TutteSequence {
    pattern: Pattern,
    polys: Vec<PolyXY>,
    counts: Vec<BigInt>,
}

impl TutteSequence {
    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    /// `polys()[n]` is the polynomial of the `n`-times-repeated staircase;
    /// index 0 holds the empty boundary's polynomial 1.
    pub fn polys(&self) -> &[PolyXY] {
        &self.polys
    }

    /// `counts()[n]` is the number of paths below the `n`-fold staircase.
    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }
}

/// Runs the blockwise recursion up to `n_max` repetitions, keeping every
/// intermediate polynomial.
///
/// Blocks advance innermost-first: each repetition applies
/// `a -> phi^{l_i}(x^{k_i} * a)` for `i = 1..r` in block order, which is the
/// same as folding [`tutte_step`] over one period of the staircase.
pub fn tutte_sequence(pattern: &Pattern, n_max: usize) -> TutteSequence {
    let mut polys = Vec::with_capacity(n_max + 1);
    polys.push(PolyXY::one());
    for _ in 0..n_max {
        let mut cur = polys.last().unwrap().clone();
        for &(k, l) in pattern.blocks() {
            cur = advance_block(&cur, k, l);
        }
        debug_assert!(cur.has_nonnegative_coeffs());
        polys.push(cur);
    }
    let counts = polys.iter().map(PolyXY::eval_one_one).collect();
    TutteSequence {
        pattern: pattern.clone(),
        polys,
        counts,
    }
}

/// Path counts `q_0 ..= q_{n_max}` for a staircase pattern; `q_0 = 1` by the
/// empty-boundary convention.
pub fn count_series(pattern: &Pattern, n_max: usize) -> Vec<BigInt> {
    tutte_sequence(pattern, n_max).counts
}
