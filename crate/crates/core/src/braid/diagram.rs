use std::fmt;

use serde::Serialize;

use super::{BraidError, BraidWord, Sign, StrandPermutation};

/// What happened to one crossing of the base word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CrossingState {
    Kept,
    Flipped,
    Smoothed,
}

impl CrossingState {
    pub fn symbol(self) -> char {
        match self {
            CrossingState::Kept => 'K',
            CrossingState::Flipped => 'F',
            CrossingState::Smoothed => 'S',
        }
    }
}

/// A braid word together with a per-letter [`CrossingState`].
///
/// Vertices of the resolving trees and circuit partitions are both values of
/// this type. Smoothed letters act as the identity on strand columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResolvedDiagram {
    base: BraidWord,
    states: Vec<CrossingState>,
}

impl ResolvedDiagram {
    pub fn new(base: BraidWord, states: Vec<CrossingState>) -> Result<Self, BraidError> {
        if states.len() != base.len() {
            return Err(BraidError::StateLength { expected: base.len(), found: states.len() });
        }
        Ok(Self { base, states })
    }

    pub fn unresolved(base: BraidWord) -> Self {
        let states = vec![CrossingState::Kept; base.len()];
        Self { base, states }
    }

    pub fn base(&self) -> &BraidWord {
        &self.base
    }

    pub fn states(&self) -> &[CrossingState] {
        &self.states
    }

    pub fn state(&self, i: usize) -> CrossingState {
        self.states[i]
    }

    pub fn set_state(&mut self, i: usize, state: CrossingState) {
        self.states[i] = state;
    }

    pub fn strands(&self) -> usize {
        self.base.strands()
    }

    /// Sign of letter `i` as it stands in this diagram; `None` when smoothed.
    pub fn effective_sign(&self, i: usize) -> Option<Sign> {
        let sign = self.base.letters()[i].sign;
        match self.states[i] {
            CrossingState::Kept => Some(sign),
            CrossingState::Flipped => Some(sign.flipped()),
            CrossingState::Smoothed => None,
        }
    }

    pub fn permutation(&self) -> StrandPermutation {
        let gaps = self
            .base
            .letters()
            .iter()
            .zip(&self.states)
            .filter(|(_, s)| **s != CrossingState::Smoothed)
            .map(|(l, _)| l.gap);
        StrandPermutation::from_swaps(self.strands(), gaps)
    }

    /// Number of link components of the closure.
    pub fn components(&self) -> usize {
        self.permutation().cycle_count()
    }

    /// Writhe of the remaining crossings, after flips.
    pub fn writhe(&self) -> i64 {
        (0..self.states.len()).filter_map(|i| self.effective_sign(i)).map(Sign::value).sum()
    }

    pub fn smoothed(&self) -> impl Iterator<Item = usize> + '_ {
        self.states.iter().enumerate().filter(|(_, s)| **s == CrossingState::Smoothed).map(|(i, _)| i)
    }

    pub fn smoothed_count(&self) -> usize {
        self.smoothed().count()
    }

    /// Smoothed letters whose sign in the base word is negative.
    pub fn smoothed_negative_count(&self) -> usize {
        self.smoothed().filter(|&i| self.base.letters()[i].sign == Sign::Negative).count()
    }

    /// The braid word this diagram draws: flipped letters inverted, smoothed letters dropped.
    pub fn to_word(&self) -> BraidWord {
        let letters = (0..self.states.len())
            .filter_map(|i| {
                self.effective_sign(i).map(|sign| super::BraidLetter::new(self.base.letters()[i].gap, sign))
            })
            .collect();
        BraidWord::new(self.strands(), letters).expect("subword of a valid word")
    }

    /// State string such as `SKSF`.
    pub fn state_string(&self) -> String {
        self.states.iter().map(|s| s.symbol()).collect()
    }
}

impl fmt::Display for ResolvedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.base, self.state_string())
    }
}
