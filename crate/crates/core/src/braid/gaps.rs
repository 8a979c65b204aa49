use serde::{Deserialize, Serialize};

use super::{BraidLetter, BraidWord, Sign};

/// Crossings living in one gap (between columns `g` and `g + 1`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapTally {
    pub count: usize,
    pub positive: usize,
    pub negative: usize,
    /// Letter indices in top-to-bottom order.
    pub positions: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapProfile {
    /// Entry `g - 1` describes gap `g`.
    pub gaps: Vec<GapTally>,
}

impl GapProfile {
    pub fn of(word: &BraidWord) -> Self {
        let mut gaps = vec![GapTally::default(); word.strands().saturating_sub(1)];
        for (i, letter) in word.letters().iter().enumerate() {
            let tally = &mut gaps[letter.gap - 1];
            tally.count += 1;
            match letter.sign {
                Sign::Positive => tally.positive += 1,
                Sign::Negative => tally.negative += 1,
            }
            tally.positions.push(i);
        }
        Self { gaps }
    }

    pub fn gap(&self, g: usize) -> &GapTally {
        &self.gaps[g - 1]
    }
}

/// Diagram-level flags. `non_split` means every gap holds a crossing; it
/// says nothing about topological splittability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramClass {
    pub alternating: bool,
    pub positive_leading: bool,
    pub negative_leading: bool,
    pub reduced: bool,
    pub non_split: bool,
}

impl DiagramClass {
    /// Reduced, non-split and alternating: every gap has at least two crossings.
    pub fn is_reduced_alternating_non_split(&self) -> bool {
        self.alternating && self.reduced && self.non_split
    }
}

/// The sign odd gaps must carry if this letter sits in an alternating word.
fn odd_gap_sign(letter: &BraidLetter) -> Sign {
    if letter.gap % 2 == 1 {
        letter.sign
    } else {
        letter.sign.flipped()
    }
}

pub fn classify(word: &BraidWord) -> DiagramClass {
    let profile = GapProfile::of(word);
    let odd_sign = word.letters().first().map(odd_gap_sign);
    let alternating = match odd_sign {
        None => true,
        Some(s) => word.letters().iter().all(|l| odd_gap_sign(l) == s),
    };
    DiagramClass {
        alternating,
        positive_leading: alternating && odd_sign == Some(Sign::Positive),
        negative_leading: alternating && odd_sign == Some(Sign::Negative),
        reduced: profile.gaps.iter().all(|g| g.count != 1),
        non_split: profile.gaps.iter().all(|g| g.count >= 1),
    }
}

/// A maximal run of columns joined by non-empty gaps, re-indexed to start at column 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// First column of the block in the original diagram.
    pub first_column: usize,
    pub word: BraidWord,
    /// Original letter index of each letter in `word`.
    pub letter_indices: Vec<usize>,
}

/// Split a diagram at its empty gaps. A column with empty gaps on both sides
/// becomes a one-strand block.
pub fn split_blocks(word: &BraidWord) -> Vec<Block> {
    let profile = GapProfile::of(word);
    let mut blocks = Vec::new();
    let mut start = 1;
    for col in 1..=word.strands() {
        let closes = col == word.strands() || profile.gap(col).count == 0;
        if !closes {
            continue;
        }
        let (lo, hi) = (start, col);
        let mut letters = Vec::new();
        let mut letter_indices = Vec::new();
        for (i, l) in word.letters().iter().enumerate() {
            if l.gap >= lo && l.gap < hi {
                letters.push(BraidLetter::new(l.gap - lo + 1, l.sign));
                letter_indices.push(i);
            }
        }
        let block_word = BraidWord::new(hi - lo + 1, letters).expect("block letters lie inside the block");
        blocks.push(Block { first_column: lo, word: block_word, letter_indices });
        start = col + 1;
    }
    blocks
}
