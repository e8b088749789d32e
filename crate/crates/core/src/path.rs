//! Lattice paths, dominance against a boundary, and brute-force oracles.
//!
//! A path uses steps `N = (0,1)` and `E = (1,0)`. Whether a path `p` stays
//! weakly below a boundary `P` with the same endpoints is decided in the
//! `a`-coordinates: `a_j` is the number of `E` steps before the `j`-th `N`
//! step, and `p` is below `P` exactly when `a_j(p) >= a_j(P)` for every `j`.
//! Everything else in this module (enumeration, the counting DP, path
//! statistics, the brute-force polynomial) is phrased in those coordinates,
//! which keeps the oracles independent from the recursion engine in
//! [`crate::tutte`].

use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::poly::PolyXY;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    North,
    East,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::North => write!(f, "N"),
            Step::East => write!(f, "E"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        Self { steps }
    }

    pub fn empty() -> Self {
        Self { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn north_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::North).count()
    }

    pub fn east_count(&self) -> usize {
        self.len() - self.north_count()
    }

    /// Endpoint reached from the origin, as `(east, north)`.
    pub fn endpoint(&self) -> (usize, usize) {
        (self.east_count(), self.north_count())
    }

    /// For each `N` step in order, the number of `E` steps preceding it.
    pub fn east_before_each_north(&self) -> Vec<usize> {
        let mut a = Vec::with_capacity(self.north_count());
        let mut east = 0;
        for s in &self.steps {
            match s {
                Step::North => a.push(east),
                Step::East => east += 1,
            }
        }
        a
    }

    /// Number of `E` steps before the first `N` step (all steps when the
    /// path never goes north).
    pub fn leading_east_count(&self) -> usize {
        self.steps
            .iter()
            .take_while(|s| **s == Step::East)
            .count()
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'N' => Ok(Step::North),
                'E' => Ok(Step::East),
                other => Err(Error::InvalidPath(format!(
                    "unexpected character {other:?}, expected 'N' or 'E'"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromIterator<Step> for LatticePath {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

/// Whether `path` stays weakly below `boundary` (never goes above it).
///
/// Both paths must share endpoints. A path equal to the boundary counts as
/// below it.
pub fn below(path: &LatticePath, boundary: &LatticePath) -> Result<bool> {
    let (pe, pn) = path.endpoint();
    let (be, bn) = boundary.endpoint();
    if (pe, pn) != (be, bn) {
        return Err(Error::EndpointMismatch(pe, pn, be, bn));
    }
    let a_path = path.east_before_each_north();
    let a_bound = boundary.east_before_each_north();
    Ok(a_path.iter().zip(&a_bound).all(|(p, b)| p >= b))
}

/// All paths with `boundary`'s endpoints that stay weakly below it, in
/// lexicographic order with `N < E`.
pub fn enumerate_below(boundary: &LatticePath) -> Vec<LatticePath> {
    let c = boundary.east_before_each_north();
    let east_total = boundary.east_count();
    let mut out = Vec::new();
    let mut prefix: Vec<Step> = Vec::with_capacity(boundary.len());
    // A prefix with n norths and e easts extends to a full valid path iff the
    // dominance bounds seen so far hold, because appending the remaining E
    // steps first only raises later a-coordinates.
    fn rec(
        prefix: &mut Vec<Step>,
        norths: usize,
        easts: usize,
        c: &[usize],
        east_total: usize,
        out: &mut Vec<LatticePath>,
    ) {
        if norths == c.len() && easts == east_total {
            out.push(LatticePath::new(prefix.clone()));
            return;
        }
        if norths < c.len() && easts >= c[norths] {
            prefix.push(Step::North);
            rec(prefix, norths + 1, easts, c, east_total, out);
            prefix.pop();
        }
        if easts < east_total {
            prefix.push(Step::East);
            rec(prefix, norths, easts + 1, c, east_total, out);
            prefix.pop();
        }
    }
    rec(&mut prefix, 0, 0, &c, east_total, &mut out);
    out
}

/// Number of paths weakly below `boundary`, by a column dynamic program.
///
/// Agrees with `enumerate_below(boundary).len()` but never materializes the
/// paths, so it scales to boundaries far beyond enumeration range.
pub fn count_below_dp(boundary: &LatticePath) -> BigInt {
    let c = boundary.east_before_each_north();
    let m = boundary.east_count();
    if c.is_empty() {
        return BigInt::one();
    }
    // ways[v] = number of valid a_1..a_j with a_j = v; prefix sums advance j.
    let mut ways: Vec<BigInt> = (0..=m)
        .map(|v| if v >= c[0] { BigInt::one() } else { BigInt::zero() })
        .collect();
    for &cj in &c[1..] {
        let mut acc = BigInt::zero();
        let mut next = vec![BigInt::zero(); m + 1];
        for (v, w) in ways.iter().enumerate() {
            acc += w;
            if v >= cj {
                next[v] = acc.clone();
            }
        }
        ways = next;
    }
    ways.into_iter().sum()
}

/// The two path statistics against a boundary: the number of `N` steps
/// shared with the boundary as lattice edges, and the number of leading `E`
/// steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathStats {
    pub shared_north: usize,
    pub leading_east: usize,
}

/// Statistics of `path` against `boundary`; requires `path` weakly below.
///
/// The `j`-th `N` steps of the two paths are the same lattice edge exactly
/// when their `a`-coordinates agree, so `shared_north` counts those indices.
pub fn path_stats(path: &LatticePath, boundary: &LatticePath) -> Result<PathStats> {
    if !below(path, boundary)? {
        return Err(Error::NotBelow);
    }
    let a_path = path.east_before_each_north();
    let a_bound = boundary.east_before_each_north();
    let shared_north = a_path
        .iter()
        .zip(&a_bound)
        .filter(|(p, b)| p == b)
        .count();
    Ok(PathStats {
        shared_north,
        leading_east: path.leading_east_count(),
    })
}

/// The boundary's two-variable path polynomial, summed path by path:
/// each path below contributes `x^shared_north * y^leading_east`.
///
/// This is the independent oracle for [`crate::tutte::tutte_of_path`].
pub fn tutte_bruteforce(boundary: &LatticePath) -> PolyXY {
    let mut table =
        vec![vec![BigInt::zero(); boundary.east_count() + 1]; boundary.north_count() + 1];
    for path in enumerate_below(boundary) {
        let stats = path_stats(&path, boundary).expect("enumerated path is below");
        table[stats.shared_north][stats.leading_east] += 1;
    }
    PolyXY::from_table(table)
}
