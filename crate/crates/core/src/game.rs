//! Direct simulation of the ball game.
//!
//! A game runs `n` turns; each turn plays the rounds in order. Round `i`
//! puts the next `s_i` labelled balls into the basket and then removes some
//! `t_i`-subset of the whole basket, every choice branching the game. After
//! `n` turns, `t*n` balls lie outside, and the question is how many distinct
//! outside sets are reachable.
//!
//! Outside sets correspond to lattice paths: reading balls in reverse label
//! order (ball `i` maps to step `s*n - i + 1`, `N` when the ball is outside)
//! turns a reachable set into a path weakly below the staircase of
//! [`GameSpec::pattern`]. Because of that label reversal, the staircase
//! blocks appear in reverse round order.

use std::collections::BTreeSet;

use num::BigInt;

use crate::error::{Error, Result};
use crate::path::{LatticePath, Step};
use crate::pattern::Pattern;

/// Default ceiling on the total number of balls, i.e. on `s * n`. States are
/// explored breadth-first over subsets, so memory grows quickly past this.
pub const DEFAULT_BALL_CAP: usize = 20;

/// Structural limit: ball sets are stored as bit masks in a `u64`.
pub const MAX_BALLS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameSpec {
    rounds: Vec<(u32, u32)>,
    turns: usize,
}

impl GameSpec {
    /// Rounds are `(s_i, t_i)` pairs with `0 < t_i < s_i`.
    pub fn new(rounds: Vec<(u32, u32)>, turns: usize) -> Result<Self> {
        if rounds.is_empty() {
            return Err(Error::InvalidGame("no rounds given".into()));
        }
        for &(s, t) in &rounds {
            if t == 0 || t >= s {
                return Err(Error::InvalidGame(format!(
                    "round ({s},{t}) must satisfy 0 < t < s"
                )));
            }
        }
        Ok(Self { rounds, turns })
    }

    /// The game whose reachable sets correspond to paths below
    /// `pattern.staircase(turns)`: round `i` is `(k_j + l_j, k_j)` for the
    /// block `j` at the mirrored position.
    pub fn for_pattern(pattern: &Pattern, turns: usize) -> Self {
        let rounds = pattern
            .blocks()
            .iter()
            .rev()
            .map(|&(k, l)| (k + l, k))
            .collect();
        Self { rounds, turns }
    }

    pub fn rounds(&self) -> &[(u32, u32)] {
        &self.rounds
    }

    pub fn turns(&self) -> usize {
        self.turns
    }

    pub fn balls_per_turn(&self) -> usize {
        self.rounds.iter().map(|&(s, _)| s as usize).sum()
    }

    pub fn removed_per_turn(&self) -> usize {
        self.rounds.iter().map(|&(_, t)| t as usize).sum()
    }

    pub fn total_balls(&self) -> usize {
        self.balls_per_turn() * self.turns
    }

    /// The staircase pattern matched by this game's reachable sets. The
    /// label reversal in the ball/path correspondence reverses round order.
    pub fn pattern(&self) -> Pattern {
        let blocks = self
            .rounds
            .iter()
            .rev()
            .map(|&(s, t)| (t, s - t))
            .collect();
        Pattern::new(blocks).expect("rounds with 0 < t < s give positive blocks")
    }
}

fn check_cap(spec: &GameSpec, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_BALLS);
    if spec.total_balls() > cap {
        return Err(Error::CapExceeded(format!(
            "game has {} balls, cap is {cap}",
            spec.total_balls()
        )));
    }
    Ok(())
}

fn for_each_subset(items: &[u32], size: usize, f: &mut impl FnMut(u64)) {
    fn rec(items: &[u32], size: usize, start: usize, mask: u64, f: &mut impl FnMut(u64)) {
        if size == 0 {
            f(mask);
            return;
        }
        for i in start..=items.len() - size {
            rec(items, size - 1, i + 1, mask | (1u64 << items[i]), f);
        }
    }
    if size <= items.len() {
        rec(items, size, 0, 0, f);
    }
}

/// Reachable outside sets as bit masks (bit `i` set means ball `i + 1` is
/// outside), in increasing mask order.
fn reachable_masks(spec: &GameSpec, cap: usize) -> Result<BTreeSet<u64>> {
    check_cap(spec, cap)?;
    let mut states = BTreeSet::from([0u64]);
    let mut introduced: u64 = 0;
    let mut next_ball = 0u32;
    for _ in 0..spec.turns {
        for &(s, t) in &spec.rounds {
            for _ in 0..s {
                introduced |= 1 << next_ball;
                next_ball += 1;
            }
            let mut next = BTreeSet::new();
            for outside in &states {
                let basket = introduced & !outside;
                let bits: Vec<u32> = (0..next_ball).filter(|b| basket & (1 << b) != 0).collect();
                for_each_subset(&bits, t as usize, &mut |removed| {
                    next.insert(outside | removed);
                });
            }
            states = next;
        }
    }
    Ok(states)
}

/// Number of distinct reachable outside sets, under the default ball cap.
pub fn game_count(spec: &GameSpec) -> Result<BigInt> {
    game_count_with_cap(spec, DEFAULT_BALL_CAP)
}

/// Number of distinct reachable outside sets with an explicit ball cap
/// (still bounded by [`MAX_BALLS`]).
pub fn game_count_with_cap(spec: &GameSpec, cap: usize) -> Result<BigInt> {
    Ok(BigInt::from(reachable_masks(spec, cap)?.len()))
}

/// The reachable outside sets as sorted label lists, in lexicographic order.
pub fn game_outside_sets(spec: &GameSpec) -> Result<Vec<Vec<u32>>> {
    game_outside_sets_with_cap(spec, DEFAULT_BALL_CAP)
}

pub fn game_outside_sets_with_cap(spec: &GameSpec, cap: usize) -> Result<Vec<Vec<u32>>> {
    let mut sets: Vec<Vec<u32>> = reachable_masks(spec, cap)?
        .into_iter()
        .map(|mask| (0..64).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect())
        .collect();
    sets.sort();
    Ok(sets)
}

/// The path encoding of an outside set: step `s*n - i + 1` is `N` exactly
/// when ball `i` is outside.
///
/// The set is reachable in the game iff the returned path is weakly below
/// `spec.pattern().staircase(spec.turns())`.
pub fn ball_set_to_path(outside: &[u32], spec: &GameSpec) -> Result<LatticePath> {
    let total = spec.total_balls();
    let expected = spec.removed_per_turn() * spec.turns;
    if outside.len() != expected {
        return Err(Error::InvalidBallSet(format!(
            "expected {expected} balls outside, got {}",
            outside.len()
        )));
    }
    let mut is_outside = vec![false; total];
    for &ball in outside {
        if ball == 0 || ball as usize > total {
            return Err(Error::InvalidBallSet(format!(
                "ball {ball} is out of range 1..={total}"
            )));
        }
        if std::mem::replace(&mut is_outside[ball as usize - 1], true) {
            return Err(Error::InvalidBallSet(format!("ball {ball} listed twice")));
        }
    }
    // Position p holds ball total - p + 1; reversed so the last-played balls
    // land at the front of the path.
    let steps = (0..total)
        .map(|p| {
            if is_outside[total - 1 - p] {
                Step::North
            } else {
                Step::East
            }
        })
        .collect();
    Ok(LatticePath::new(steps))
}
