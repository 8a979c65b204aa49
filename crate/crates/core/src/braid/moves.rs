//! Word-level moves that preserve the closed link: far commutation, the
//! braid relation, free cancellation/insertion, conjugation by rotation and
//! Markov stabilization.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{BraidLetter, BraidWord, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Move {
    /// Swap letters `at`, `at + 1` whose gaps differ by at least 2.
    Commute { at: usize },
    /// `σ_i σ_{i+1} σ_i ↔ σ_{i+1} σ_i σ_{i+1}` on letters `at..at + 3`, all one sign.
    BraidRelation { at: usize },
    /// Delete an inverse pair at `at`, `at + 1`.
    Cancel { at: usize },
    /// Insert `σ_gap^{±1} σ_gap^{∓1}` before position `at`.
    Insert { at: usize, gap: usize, sign: Sign },
    /// Move the first letter to the end (conjugation).
    Rotate,
    /// Append `σ_n^{±1}` on a new strand.
    Stabilize { sign: Sign },
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |sign: &Sign| if *sign == Sign::Positive { "+" } else { "-" };
        match self {
            Move::Commute { at } => write!(f, "commute@{at}"),
            Move::BraidRelation { at } => write!(f, "braid@{at}"),
            Move::Cancel { at } => write!(f, "cancel@{at}"),
            Move::Insert { at, gap, sign } => write!(f, "insert@{at}:{}{gap}", s(sign)),
            Move::Rotate => f.write_str("rotate"),
            Move::Stabilize { sign } => write!(f, "stabilize{}", s(sign)),
        }
    }
}

/// Apply one move; `None` if it does not apply at the given position.
pub fn apply_move(word: &BraidWord, mv: Move) -> Option<BraidWord> {
    let mut letters = word.letters().to_vec();
    let mut strands = word.strands();
    match mv {
        Move::Commute { at } => {
            let (x, y) = (letters.get(at)?, letters.get(at + 1)?);
            if x.gap.abs_diff(y.gap) < 2 {
                return None;
            }
            letters.swap(at, at + 1);
        }
        Move::BraidRelation { at } => {
            let triple = letters.get(at..at + 3)?;
            let (x, y, z) = (triple[0], triple[1], triple[2]);
            if x != z || x.sign != y.sign || x.gap.abs_diff(y.gap) != 1 {
                return None;
            }
            letters[at] = y;
            letters[at + 1] = x;
            letters[at + 2] = y;
        }
        Move::Cancel { at } => {
            let (x, y) = (letters.get(at)?, letters.get(at + 1)?);
            if x.gap != y.gap || x.sign == y.sign {
                return None;
            }
            letters.drain(at..at + 2);
        }
        Move::Insert { at, gap, sign } => {
            if at > letters.len() || gap == 0 || gap >= strands {
                return None;
            }
            letters.splice(at..at, [BraidLetter::new(gap, sign), BraidLetter::new(gap, sign.flipped())]);
        }
        Move::Rotate => {
            if !letters.is_empty() {
                letters.rotate_left(1);
            }
        }
        Move::Stabilize { sign } => {
            letters.push(BraidLetter::new(strands, sign));
            strands += 1;
        }
    }
    Some(BraidWord::new(strands, letters).expect("moves keep letters in range"))
}

pub fn rotate(word: &BraidWord) -> BraidWord {
    apply_move(word, Move::Rotate).expect("rotation always applies")
}

pub fn stabilize(word: &BraidWord, sign: Sign) -> BraidWord {
    apply_move(word, Move::Stabilize { sign }).expect("stabilization always applies")
}

/// Every move that applies to `word`, except insertions and stabilizations.
fn applicable_moves(word: &BraidWord) -> Vec<Move> {
    let len = word.len();
    let mut moves = Vec::new();
    for at in 0..len {
        for mv in [Move::Commute { at }, Move::BraidRelation { at }, Move::Cancel { at }] {
            if apply_move(word, mv).is_some() {
                moves.push(mv);
            }
        }
    }
    if len > 1 {
        moves.push(Move::Rotate);
    }
    moves
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovVariant {
    pub word: BraidWord,
    pub moves: Vec<Move>,
}

impl fmt::Display for MarkovVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let moves: Vec<String> = self.moves.iter().map(|m| m.to_string()).collect();
        write!(f, "{} via [{}]", self.word.to_line(), moves.join(", "))
    }
}

/// Deterministic pseudo-random words isotopic (as closed braids) to `word`.
///
/// Each variant applies one to three random moves to `word` itself, so
/// variants do not drift far from the input. At most one insertion and one
/// stabilization are used per variant.
pub fn markov_variants(word: &BraidWord, seed: u64, count: usize) -> Vec<MarkovVariant> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let steps = rng.gen_range(1..=3);
        let mut current = word.clone();
        let mut moves = Vec::new();
        let (mut inserted, mut stabilized) = (false, false);
        for _ in 0..steps {
            let mut options = applicable_moves(&current);
            if !inserted && current.strands() >= 2 {
                let at = rng.gen_range(0..=current.len());
                let gap = rng.gen_range(1..current.strands());
                let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
                options.push(Move::Insert { at, gap, sign });
            }
            if !stabilized {
                let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
                options.push(Move::Stabilize { sign });
            }
            let Some(&mv) = options.choose(&mut rng) else {
                continue;
            };
            inserted |= matches!(mv, Move::Insert { .. });
            stabilized |= matches!(mv, Move::Stabilize { .. });
            current = apply_move(&current, mv).expect("chosen from applicable moves");
            moves.push(mv);
        }
        out.push(MarkovVariant { word: current, moves });
    }
    out
}
