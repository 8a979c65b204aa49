//! Descending and ascending resolving trees of a closed braid.
//!
//! Algorithm D walks a diagram naturally, stops at the first ascending
//! crossing and splits into a flipped child and a smoothed child; the leaves
//! are descending braids, whose closures are trivial links. Algorithm A is
//! the same with the roles of ascending and descending exchanged. The HOMFLY
//! polynomial is a sum of one monomial-times-power term per leaf.
//!
//! Trees are never materialized: leaves are produced by a depth-first walk
//! over state vectors, re-running the traversal at each node.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::braid::{BraidWord, CrossingState, ResolvedDiagram, Role, Walker};
use crate::poly::LaurentPoly2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Descending,
    Ascending,
}

impl Mode {
    /// Role a non-smoothed leaf crossing's first-arriving arm must play.
    fn leaf_role(self) -> Role {
        match self {
            Mode::Descending => Role::Over,
            Mode::Ascending => Role::Under,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResolveError {
    #[error("letter {letter} is out of range for a word of {len} letters")]
    OutOfRange { letter: usize, len: usize },
    #[error("letter {letter} is already smoothed")]
    AlreadySmoothed { letter: usize },
}

/// One leaf of a resolving tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeafSummary {
    pub states: Vec<CrossingState>,
    /// Number of components `γ`.
    pub gamma: usize,
    /// Smoothed crossings `t`.
    pub t: usize,
    /// Smoothed crossings that are negative in the base word, `t′`.
    pub t_neg: usize,
    /// Writhe of the leaf diagram.
    pub writhe: i64,
}

impl LeafSummary {
    fn of(diagram: &ResolvedDiagram) -> Self {
        Self {
            states: diagram.states().to_vec(),
            gamma: diagram.components(),
            t: diagram.smoothed_count(),
            t_neg: diagram.smoothed_negative_count(),
            writhe: diagram.writhe(),
        }
    }
}

fn violation(word: &BraidWord, states: &[CrossingState], mode: Mode) -> Option<usize> {
    let mut walker = Walker::new(word);
    while let Some(arrival) = walker.advance(word) {
        let state = states[arrival.letter];
        if arrival.first && state != CrossingState::Smoothed {
            let mut sign = word.letters()[arrival.letter].sign;
            if state == CrossingState::Flipped {
                sign = sign.flipped();
            }
            if crate::braid::arrival_role(sign, arrival.side) != mode.leaf_role() {
                return Some(arrival.letter);
            }
        }
        walker.pass(word, state == CrossingState::Smoothed);
    }
    None
}

/// First crossing, in natural-traversal order of first visits, that is
/// ascending (mode descending) or descending (mode ascending).
pub fn first_violation(d: &ResolvedDiagram, mode: Mode) -> Option<usize> {
    violation(d.base(), d.states(), mode)
}

/// The flipped and smoothed children at letter `i`.
pub fn split_at(d: &ResolvedDiagram, i: usize) -> Result<(ResolvedDiagram, ResolvedDiagram), ResolveError> {
    if i >= d.states().len() {
        return Err(ResolveError::OutOfRange { letter: i, len: d.states().len() });
    }
    let toggled = match d.state(i) {
        CrossingState::Kept => CrossingState::Flipped,
        CrossingState::Flipped => CrossingState::Kept,
        CrossingState::Smoothed => return Err(ResolveError::AlreadySmoothed { letter: i }),
    };
    let mut flipped = d.clone();
    flipped.set_state(i, toggled);
    let mut smoothed = d.clone();
    smoothed.set_state(i, CrossingState::Smoothed);
    Ok((flipped, smoothed))
}

/// Depth-first stream of tree leaves; the flipped child is expanded before
/// the smoothed one.
pub struct Leaves {
    word: BraidWord,
    mode: Mode,
    stack: Vec<Vec<CrossingState>>,
}

impl Iterator for Leaves {
    type Item = LeafSummary;

    fn next(&mut self) -> Option<LeafSummary> {
        let mut states = self.stack.pop()?;
        while let Some(i) = violation(&self.word, &states, self.mode) {
            let mut smoothed = states.clone();
            smoothed[i] = CrossingState::Smoothed;
            self.stack.push(smoothed);
            states[i] = match states[i] {
                CrossingState::Kept => CrossingState::Flipped,
                _ => CrossingState::Kept,
            };
        }
        let diagram = ResolvedDiagram::new(self.word.clone(), states).expect("state length preserved");
        Some(LeafSummary::of(&diagram))
    }
}

pub fn enumerate_leaves(word: &BraidWord, mode: Mode) -> Leaves {
    Leaves { word: word.clone(), mode, stack: vec![vec![CrossingState::Kept; word.len()]] }
}

/// Whether `states` describes a leaf of the tree for `mode`, decided by a
/// single walk instead of building the tree.
///
/// At the first visit of each letter: a smoothed letter must be approached
/// from the arm that would be its underpass (descending) or overpass
/// (ascending) in the base word; a present letter must be approached from
/// its overpass (descending) or underpass (ascending) as it stands.
pub fn is_tree_leaf(word: &BraidWord, states: &[CrossingState], mode: Mode) -> bool {
    if states.len() != word.len() {
        return false;
    }
    let smoothed_role = match mode {
        Mode::Descending => Role::Under,
        Mode::Ascending => Role::Over,
    };
    let mut walker = Walker::new(word);
    while let Some(arrival) = walker.advance(word) {
        let state = states[arrival.letter];
        if arrival.first {
            let original = word.letters()[arrival.letter].sign;
            let ok = match state {
                CrossingState::Smoothed => crate::braid::arrival_role(original, arrival.side) == smoothed_role,
                CrossingState::Kept => crate::braid::arrival_role(original, arrival.side) == mode.leaf_role(),
                CrossingState::Flipped => {
                    crate::braid::arrival_role(original.flipped(), arrival.side) == mode.leaf_role()
                }
            };
            if !ok {
                return false;
            }
        }
        walker.pass(word, state == CrossingState::Smoothed);
    }
    true
}

/// Membership in the descending leaf set `F↓(D)`.
pub fn leaf_membership_test(word: &BraidWord, states: &[CrossingState]) -> bool {
    is_tree_leaf(word, states, Mode::Descending)
}

/// Multiset of `(γ, t, t′ mod 2)` over a leaf set: all the expansion needs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    counts: BTreeMap<(usize, usize, bool), i64>,
}

impl Tally {
    pub fn record(&mut self, gamma: usize, t: usize, t_neg: usize) {
        *self.counts.entry((gamma, t, t_neg % 2 == 1)).or_insert(0) += 1;
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
        self
    }

    pub fn total(&self) -> i64 {
        self.counts.values().sum()
    }
}

fn exponent(x: i64) -> i32 {
    i32::try_from(x).expect("degree fits in i32")
}

/// Evaluate
/// `a^{1-n-w} Σ (-1)^{t′} z^t ((a²-1)z⁻¹)^{γ-1}` (descending) or
/// `a^{n-1-w} Σ (-1)^{t′} z^t ((1-a⁻²)z⁻¹)^{γ-1}` (ascending).
pub fn expansion(strands: usize, writhe: i64, mode: Mode, tally: &Tally) -> LaurentPoly2 {
    let n = strands as i64;
    let (prefactor, base) = match mode {
        Mode::Descending => (1 - n - writhe, LaurentPoly2::term(1, -1, 2) - LaurentPoly2::term(1, -1, 0)),
        Mode::Ascending => (n - 1 - writhe, LaurentPoly2::term(1, -1, 0) - LaurentPoly2::term(1, -1, -2)),
    };
    let mut powers: Vec<LaurentPoly2> = vec![LaurentPoly2::one()];
    let mut sum = LaurentPoly2::zero();
    for (&(gamma, t, odd), &count) in &tally.counts {
        while powers.len() < gamma {
            let next = powers.last().expect("nonempty") * &base;
            powers.push(next);
        }
        let coeff = if odd { -count } else { count };
        let term = powers[gamma - 1].scale_monomial(exponent(t as i64), 0, coeff).expect("coefficient overflow");
        sum = sum + term;
    }
    sum.scale_monomial(0, exponent(prefactor), 1).expect("coefficient overflow")
}

fn tally_of(leaves: impl Iterator<Item = LeafSummary>) -> Tally {
    let mut tally = Tally::default();
    for leaf in leaves {
        tally.record(leaf.gamma, leaf.t, leaf.t_neg);
    }
    tally
}

/// HOMFLY polynomial from the descending (Eq. e1 shape) or ascending tree.
pub fn homfly(word: &BraidWord, mode: Mode) -> LaurentPoly2 {
    let tally = tally_of(enumerate_leaves(word, mode));
    expansion(word.strands(), word.writhe(), mode, &tally)
}

/// Subtrees above this depth are handed to the rayon pool.
const PARALLEL_DEPTH: usize = 12;

fn tally_subtree(word: &BraidWord, states: Vec<CrossingState>, mode: Mode, depth: usize) -> Tally {
    if depth >= PARALLEL_DEPTH {
        let leaves = Leaves { word: word.clone(), mode, stack: vec![states] };
        return tally_of(leaves);
    }
    match violation(word, &states, mode) {
        None => {
            let d = ResolvedDiagram::new(word.clone(), states).expect("state length preserved");
            let leaf = LeafSummary::of(&d);
            let mut t = Tally::default();
            t.record(leaf.gamma, leaf.t, leaf.t_neg);
            t
        }
        Some(i) => {
            let mut flipped = states.clone();
            flipped[i] = match states[i] {
                CrossingState::Kept => CrossingState::Flipped,
                _ => CrossingState::Kept,
            };
            let mut smoothed = states;
            smoothed[i] = CrossingState::Smoothed;
            let (a, b) = rayon::join(
                || tally_subtree(word, flipped, mode, depth + 1),
                || tally_subtree(word, smoothed, mode, depth + 1),
            );
            a.merge(b)
        }
    }
}

/// Same value as [`homfly`], with subtrees enumerated on the rayon pool.
pub fn homfly_parallel(word: &BraidWord, mode: Mode) -> LaurentPoly2 {
    let tally = tally_subtree(word, vec![CrossingState::Kept; word.len()], mode, 0);
    expansion(word.strands(), word.writhe(), mode, &tally)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HistogramBin {
    pub gamma: usize,
    pub t: usize,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeafStatistics {
    pub leaf_count: usize,
    pub max_gamma: usize,
    pub max_t: usize,
    pub histogram: Vec<HistogramBin>,
}

pub fn leaf_statistics(word: &BraidWord, mode: Mode) -> LeafStatistics {
    let mut bins: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let (mut leaf_count, mut max_gamma, mut max_t) = (0, 0, 0);
    for leaf in enumerate_leaves(word, mode) {
        leaf_count += 1;
        max_gamma = max_gamma.max(leaf.gamma);
        max_t = max_t.max(leaf.t);
        *bins.entry((leaf.gamma, leaf.t)).or_insert(0) += 1;
    }
    let histogram = bins.into_iter().map(|((gamma, t), count)| HistogramBin { gamma, t, count }).collect();
    LeafStatistics { leaf_count, max_gamma, max_t, histogram }
}
