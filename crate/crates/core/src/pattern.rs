//! Periodic staircase boundaries.
//!
//! A [`Pattern`] is an ordered list of blocks `(k_i, l_i)`; repeating the
//! block sequence `n` times yields the boundary path
//! `(N^{k_1} E^{l_1} ... N^{k_r} E^{l_r})^n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::path::{LatticePath, Step};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    blocks: Vec<(u32, u32)>,
}

impl Pattern {
    /// Both parts of every block must be at least 1.
    pub fn new(blocks: Vec<(u32, u32)>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidPattern("no blocks given".into()));
        }
        if let Some((k, l)) = blocks.iter().find(|(k, l)| *k == 0 || *l == 0) {
            return Err(Error::InvalidPattern(format!(
                "block ({k},{l}) has a zero part; both parts must be positive"
            )));
        }
        Ok(Self { blocks })
    }

    pub fn single(k: u32, l: u32) -> Result<Self> {
        Self::new(vec![(k, l)])
    }

    /// Parses the flat comma list `k1,l1,k2,l2,...` (even length).
    pub fn parse_flat(s: &str) -> Result<Self> {
        let mut nums = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let v: u32 = part
                .parse()
                .map_err(|_| Error::InvalidPattern(format!("{part:?} is not a positive integer")))?;
            nums.push(v);
        }
        if nums.len() % 2 != 0 {
            return Err(Error::InvalidPattern(format!(
                "odd number of values ({}); expected k1,l1,k2,l2,...",
                nums.len()
            )));
        }
        Self::new(nums.chunks(2).map(|c| (c[0], c[1])).collect())
    }

    pub fn blocks(&self) -> &[(u32, u32)] {
        &self.blocks
    }

    /// Total north steps per period.
    pub fn north_total(&self) -> u32 {
        self.blocks.iter().map(|(k, _)| k).sum()
    }

    /// Total east steps per period.
    pub fn east_total(&self) -> u32 {
        self.blocks.iter().map(|(_, l)| l).sum()
    }

    pub fn period_steps(&self) -> usize {
        (self.north_total() + self.east_total()) as usize
    }

    pub fn reversed(&self) -> Self {
        Self {
            blocks: self.blocks.iter().rev().copied().collect(),
        }
    }

    /// The boundary path for `n` repetitions of the block sequence.
    pub fn staircase(&self, n: usize) -> LatticePath {
        let mut steps = Vec::with_capacity(self.period_steps() * n);
        for _ in 0..n {
            for &(k, l) in &self.blocks {
                steps.extend(std::iter::repeat(Step::North).take(k as usize));
                steps.extend(std::iter::repeat(Step::East).take(l as usize));
            }
        }
        LatticePath::new(steps)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flat: Vec<String> = self
            .blocks
            .iter()
            .flat_map(|(k, l)| [k.to_string(), l.to_string()])
            .collect();
        write!(f, "{}", flat.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_flat_patterns() {
        let p = Pattern::parse_flat("2,2,1,1").unwrap();
        assert_eq!(p.blocks(), &[(2, 2), (1, 1)]);
        assert_eq!(p.north_total(), 3);
        assert_eq!(p.east_total(), 3);
        assert_eq!(p.to_string(), "2,2,1,1");
        assert!(Pattern::parse_flat("2,2,1").is_err());
        assert!(Pattern::parse_flat("2,0").is_err());
        assert!(Pattern::parse_flat("").is_err());
        assert!(Pattern::parse_flat("a,b").is_err());
    }

    #[test]
    fn zero_parts_rejected() {
        assert!(Pattern::new(vec![(2, 0)]).is_err());
        assert!(Pattern::new(vec![(0, 2)]).is_err());
        assert!(Pattern::new(vec![]).is_err());
    }

    #[test]
    fn staircase_layout() {
        let p = Pattern::single(2, 2).unwrap();
        assert_eq!(p.staircase(2).to_string(), "NNEENNEE");
        assert_eq!(p.staircase(0), LatticePath::empty());
        let q = Pattern::parse_flat("2,2,1,1").unwrap();
        assert_eq!(q.staircase(1).to_string(), "NNEENE");
        assert_eq!(q.reversed().staircase(1).to_string(), "NENNEE");
    }
}
