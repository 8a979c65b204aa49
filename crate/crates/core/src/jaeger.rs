//! Admissible circuit partitions and the two expansions built on them.
//!
//! A circuit partition smooths a set `S` of crossings and leaves the rest as
//! they are. It is admissible when, walking it naturally, the first passage
//! at every smoothed positive crossing is a left tangence and at every
//! smoothed negative crossing a right tangence (the dual variant swaps left
//! and right).

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::braid::{BraidError, BraidWord, CrossingState, ResolvedDiagram, Side, Sign, Walker};
use crate::poly::LaurentPoly2;
use crate::resolver::{enumerate_leaves, expansion, Mode, Tally};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Standard,
    Dual,
}

impl Variant {
    /// Side of the first passage that makes a smoothed crossing admissible.
    pub fn admissible_side(self, sign: Sign) -> Side {
        match (self, sign) {
            (Variant::Standard, Sign::Positive) | (Variant::Dual, Sign::Negative) => Side::Left,
            _ => Side::Right,
        }
    }

    /// The resolving tree whose leaves are in bijection with this variant.
    pub fn tree_mode(self) -> Mode {
        match self {
            Variant::Standard => Mode::Descending,
            Variant::Dual => Mode::Ascending,
        }
    }
}

/// A braid with the crossings in `smoothed` smoothed; equality is equality
/// of the pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CircuitPartition {
    base: BraidWord,
    smoothed: BTreeSet<usize>,
}

impl CircuitPartition {
    pub fn new(base: BraidWord, smoothed: BTreeSet<usize>) -> Result<Self, BraidError> {
        if let Some(&bad) = smoothed.iter().find(|&&i| i >= base.len()) {
            return Err(BraidError::StateLength { expected: base.len(), found: bad + 1 });
        }
        Ok(Self { base, smoothed })
    }

    pub fn base(&self) -> &BraidWord {
        &self.base
    }

    pub fn smoothed(&self) -> &BTreeSet<usize> {
        &self.smoothed
    }

    pub fn to_diagram(&self) -> ResolvedDiagram {
        let states = (0..self.base.len())
            .map(|i| if self.smoothed.contains(&i) { CrossingState::Smoothed } else { CrossingState::Kept })
            .collect();
        ResolvedDiagram::new(self.base.clone(), states).expect("one state per letter")
    }

    pub fn t(&self) -> usize {
        self.smoothed.len()
    }

    pub fn t_neg(&self) -> usize {
        self.smoothed.iter().filter(|&&i| self.base.letters()[i].sign == Sign::Negative).count()
    }

    pub fn gamma(&self) -> usize {
        self.to_diagram().components()
    }
}

pub fn is_admissible(partition: &CircuitPartition, variant: Variant) -> bool {
    let word = partition.base();
    let mut walker = Walker::new(word);
    while let Some(arrival) = walker.advance(word) {
        let smoothed = partition.smoothed.contains(&arrival.letter);
        if smoothed && arrival.first {
            let sign = word.letters()[arrival.letter].sign;
            if arrival.side != variant.admissible_side(sign) {
                return false;
            }
        }
        walker.pass(word, smoothed);
    }
    true
}

#[derive(Debug, Clone)]
struct Frame {
    walker: Walker,
    /// `None` until the walker first reaches the letter.
    decided: Vec<Option<bool>>,
}

/// Stream of admissible partitions.
///
/// The search walks the partition while building it: a letter's fate is
/// chosen at its first visit, and smoothing is offered only when that first
/// passage is admissible. Admissibility depends only on the walk up to the
/// first visit, so no branch is ever abandoned later.
pub struct AdmissiblePartitions {
    word: BraidWord,
    variant: Variant,
    stack: Vec<Frame>,
}

impl Iterator for AdmissiblePartitions {
    type Item = CircuitPartition;

    fn next(&mut self) -> Option<CircuitPartition> {
        let mut frame = self.stack.pop()?;
        let word = &self.word;
        while let Some(arrival) = frame.walker.advance(word) {
            let smoothed = match frame.decided[arrival.letter] {
                Some(s) => s,
                None => {
                    let sign = word.letters()[arrival.letter].sign;
                    if arrival.side == self.variant.admissible_side(sign) {
                        let mut branch = frame.clone();
                        branch.decided[arrival.letter] = Some(true);
                        branch.walker.pass(word, true);
                        self.stack.push(branch);
                    }
                    frame.decided[arrival.letter] = Some(false);
                    false
                }
            };
            frame.walker.pass(word, smoothed);
        }
        let smoothed = frame.decided.iter().enumerate().filter(|(_, d)| **d == Some(true)).map(|(i, _)| i).collect();
        Some(CircuitPartition { base: word.clone(), smoothed })
    }
}

pub fn enumerate_admissible(word: &BraidWord, variant: Variant) -> AdmissiblePartitions {
    let root = Frame { walker: Walker::new(word), decided: vec![None; word.len()] };
    AdmissiblePartitions { word: word.clone(), variant, stack: vec![root] }
}

/// Jaeger's expansion over `A(D)` (standard) or its dual over `A*(D)`.
pub fn homfly_jaeger(word: &BraidWord, variant: Variant) -> LaurentPoly2 {
    let mut tally = Tally::default();
    for p in enumerate_admissible(word, variant) {
        tally.record(p.gamma(), p.t(), p.t_neg());
    }
    expansion(word.strands(), word.writhe(), variant.tree_mode(), &tally)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub leaves: usize,
    pub partitions: usize,
    /// Human-readable discrepancies; empty when the bijection holds.
    pub mismatches: Vec<String>,
}

impl BijectionReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compare the tree leaves with the admissible partitions: the smoothed sets
/// must coincide, and matched pairs must agree on `γ`, `t` and `t′`.
pub fn check_bijection(word: &BraidWord, variant: Variant) -> BijectionReport {
    let mut from_leaves: BTreeMap<Vec<usize>, (usize, usize, usize)> = BTreeMap::new();
    let mut mismatches = Vec::new();
    let mut leaves = 0;
    for leaf in enumerate_leaves(word, variant.tree_mode()) {
        leaves += 1;
        let key: Vec<usize> =
            leaf.states.iter().enumerate().filter(|(_, s)| **s == CrossingState::Smoothed).map(|(i, _)| i).collect();
        if from_leaves.insert(key.clone(), (leaf.gamma, leaf.t, leaf.t_neg)).is_some() {
            mismatches.push(format!("two leaves smooth {key:?}"));
        }
    }
    let mut partitions = 0;
    for p in enumerate_admissible(word, variant) {
        partitions += 1;
        let key: Vec<usize> = p.smoothed().iter().copied().collect();
        let stats = (p.gamma(), p.t(), p.t_neg());
        match from_leaves.remove(&key) {
            None => mismatches.push(format!("partition smoothing {key:?} has no leaf")),
            Some(leaf_stats) if leaf_stats != stats => mismatches
                .push(format!("smoothed set {key:?}: leaf (γ, t, t′) = {leaf_stats:?}, partition = {stats:?}")),
            Some(_) => {}
        }
    }
    for key in from_leaves.keys() {
        mismatches.push(format!("leaf smoothing {key:?} has no admissible partition"));
    }
    BijectionReport { leaves, partitions, mismatches }
}

pub fn verify_bijection(word: &BraidWord, variant: Variant) -> bool {
    check_bijection(word, variant).holds()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(strands: usize, t: &[i64]) -> BraidWord {
        BraidWord::from_tokens(strands, t)
    }

    fn partition(word: &BraidWord, s: &[usize]) -> CircuitPartition {
        CircuitPartition::new(word.clone(), s.iter().copied().collect()).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let t3 = w(2, &[1, 1, 1]);
        assert!(is_admissible(&partition(&t3, &[]), Variant::Standard));
        assert!(is_admissible(&partition(&t3, &[0, 1, 2]), Variant::Standard));
        assert!(!is_admissible(&partition(&w(2, &[-1]), &[0]), Variant::Standard));
        assert!(is_admissible(&partition(&w(2, &[-1]), &[0]), Variant::Dual));
        assert!(CircuitPartition::new(t3, [3].into_iter().collect()).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let only: Vec<_> = enumerate_admissible(&w(2, &[-1]), Variant::Standard).collect();
        assert_eq!(only, vec![partition(&w(2, &[-1]), &[])]);
        let mut sets: Vec<Vec<usize>> = enumerate_admissible(&w(2, &[1]), Variant::Standard)
            .map(|p| p.smoothed().iter().copied().collect())
            .collect();
        sets.sort();
        assert_eq!(sets, vec![vec![], vec![0]]);
        assert_eq!(enumerate_admissible(&w(3, &[]), Variant::Standard).count(), 1);
    }

    #[test]
    fn expansions_match_fixtures() {
        let trefoil: LaurentPoly2 = "-a^-4 + 2*a^-2 + a^-2*z^2".parse().unwrap();
        let delta: LaurentPoly2 = "a*z^-1 - a^-1*z^-1".parse().unwrap();
        for v in [Variant::Standard, Variant::Dual] {
            assert_eq!(homfly_jaeger(&w(2, &[1]), v), LaurentPoly2::one());
            assert_eq!(homfly_jaeger(&w(2, &[1, 1, 1]), v), trefoil);
            assert_eq!(homfly_jaeger(&w(4, &[]), v), delta.pow(3));
        }
    }

    #[test]
    fn bijection_examples() {
        for v in [Variant::Standard, Variant::Dual] {
            assert!(verify_bijection(&w(2, &[1]), v));
            assert!(verify_bijection(&w(5, &[-1, 3, -2, -4, -4, -4, 1, -3]), v));
            assert!(verify_bijection(&w(3, &[]), v));
        }
    }
}
