//! Braid words and the combinatorics of their closures.

mod diagram;
mod gaps;
mod moves;
mod perm;
mod traversal;
mod word;

pub use diagram::{CrossingState, ResolvedDiagram};
pub use gaps::{classify, split_blocks, Block, DiagramClass, GapProfile, GapTally};
pub use moves::{apply_move, markov_variants, rotate, stabilize, MarkovVariant, Move};
pub use perm::StrandPermutation;
pub(crate) use traversal::Walker;
pub use traversal::{
    arrival_role, classify_crossings, natural_traversal, CrossingKind, Encounter, Role, Side, TraversalReport, Visit,
};
pub use word::{parse_braid, BraidLetter, BraidWord, Sign};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("zero generator index in token {token:?}")]
    ZeroGenerator { token: String },
    #[error("invalid token {token:?}: expected a nonzero integer")]
    BadToken { token: String },
    #[error("{strands} strands is too few for token {token:?}; need at least {needed}")]
    TooFewStrands { strands: usize, needed: usize, token: String },
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("generator σ_{gap} does not exist on {strands} strands")]
    GapOutOfRange { gap: usize, strands: usize },
    #[error("expected {expected} crossing states, found {found}")]
    StateLength { expected: usize, found: usize },
}

impl BraidWord {
    /// `p(D)`: where each strand label ends up, in standard form.
    pub fn permutation(&self) -> StrandPermutation {
        StrandPermutation::from_swaps(self.strands(), self.letters().iter().map(|l| l.gap))
    }

    pub fn gap_profile(&self) -> GapProfile {
        GapProfile::of(self)
    }

    pub fn classify(&self) -> DiagramClass {
        classify(self)
    }
}
