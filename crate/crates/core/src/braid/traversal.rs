//! Natural traversal of a closed braid.
//!
//! Components are walked in pivot order. A strand is followed from the top
//! of its column to the bottom, then the closure arc returns the walker to
//! the top of the column it ended in. At a letter `σ_g` the walker, if it
//! stands in column `g` or `g + 1`, either swaps columns (the crossing is
//! present) or stays (the crossing is smoothed).
//!
//! Over/under convention, braid oriented downward: at a positive crossing
//! the strand arriving in column `g + 1` passes over; at a negative crossing
//! the strand arriving in column `g` passes over.

use serde::Serialize;

use super::{BraidWord, CrossingState, ResolvedDiagram, Sign};

/// Which column of the gap the walker occupies when it reaches a letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    /// Column `g`.
    Left,
    /// Column `g + 1`.
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Role {
    Over,
    Under,
}

/// Role of the arm arriving on `side` at a crossing of the given sign.
pub fn arrival_role(sign: Sign, side: Side) -> Role {
    match (sign, side) {
        (Sign::Positive, Side::Right) | (Sign::Negative, Side::Left) => Role::Over,
        _ => Role::Under,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Visit {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Encounter {
    pub letter: usize,
    pub visit: Visit,
    pub side: Side,
    /// Role of the arriving arm under the letter's sign in the base word.
    pub original_role: Role,
    pub state: CrossingState,
    /// Index of the component (in pivot order) being walked.
    pub component: usize,
}

impl Encounter {
    /// Role of the arriving arm in the diagram as resolved; `None` if smoothed.
    pub fn effective_role(&self) -> Option<Role> {
        match self.state {
            CrossingState::Kept => Some(self.original_role),
            CrossingState::Flipped => Some(match self.original_role {
                Role::Over => Role::Under,
                Role::Under => Role::Over,
            }),
            CrossingState::Smoothed => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraversalReport {
    pub events: Vec<Encounter>,
    /// Labels (top columns) of each component, in walking order.
    pub components: Vec<Vec<usize>>,
}

impl TraversalReport {
    pub fn first_visits(&self) -> impl Iterator<Item = &Encounter> {
        self.events.iter().filter(|e| e.visit == Visit::First)
    }
}

/// Incremental walker over a closed braid.
///
/// The walker only needs a crossing's state when it passes through it, so
/// callers may decide states lazily at first visits. This is what lets the
/// admissible-partition search and the `U′` construction prune or choose
/// as they walk.
#[derive(Debug, Clone)]
pub(crate) struct Walker {
    column: usize,
    next_letter: usize,
    pivot: usize,
    top_seen: Vec<bool>,
    visits: Vec<u8>,
    components: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Arrival {
    pub letter: usize,
    pub side: Side,
    pub first: bool,
}

impl Walker {
    pub fn new(word: &BraidWord) -> Self {
        let n = word.strands();
        let mut top_seen = vec![false; n + 1];
        top_seen[1] = true;
        Self { column: 1, next_letter: 0, pivot: 1, top_seen, visits: vec![0; word.len()], components: vec![vec![1]] }
    }

    pub fn column(&self) -> usize {
        self.column
    }

    pub fn component_index(&self) -> usize {
        self.components.len() - 1
    }

    pub fn into_components(self) -> Vec<Vec<usize>> {
        self.components
    }

    /// Walk to the next letter the walker meets, or `None` once every
    /// component has been closed.
    pub fn advance(&mut self, word: &BraidWord) -> Option<Arrival> {
        let letters = word.letters();
        loop {
            if self.next_letter == letters.len() {
                // Bottom of column `self.column`: follow the closure arc.
                if self.column == self.pivot {
                    let next = (1..=word.strands()).find(|&l| !self.top_seen[l])?;
                    self.pivot = next;
                    self.column = next;
                    self.components.push(vec![next]);
                } else {
                    self.components.last_mut().expect("open component").push(self.column);
                }
                self.top_seen[self.column] = true;
                self.next_letter = 0;
                continue;
            }
            let g = letters[self.next_letter].gap;
            if self.column == g || self.column == g + 1 {
                let side = if self.column == g { Side::Left } else { Side::Right };
                let first = self.visits[self.next_letter] == 0;
                return Some(Arrival { letter: self.next_letter, side, first });
            }
            self.next_letter += 1;
        }
    }

    /// Pass the letter just returned by [`Walker::advance`].
    pub fn pass(&mut self, word: &BraidWord, smoothed: bool) {
        let i = self.next_letter;
        let g = word.letters()[i].gap;
        if !smoothed {
            self.column = if self.column == g { g + 1 } else { g };
        }
        self.visits[i] += 1;
        self.next_letter += 1;
    }
}

pub fn natural_traversal(d: &ResolvedDiagram) -> TraversalReport {
    let word = d.base();
    let mut walker = Walker::new(word);
    let mut events = Vec::with_capacity(2 * word.len());
    while let Some(arrival) = walker.advance(word) {
        let state = d.state(arrival.letter);
        events.push(Encounter {
            letter: arrival.letter,
            visit: if arrival.first { Visit::First } else { Visit::Second },
            side: arrival.side,
            original_role: arrival_role(word.letters()[arrival.letter].sign, arrival.side),
            state,
            component: walker.component_index(),
        });
        walker.pass(word, state == CrossingState::Smoothed);
    }
    TraversalReport { events, components: walker.into_components() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CrossingKind {
    Descending,
    Ascending,
}

/// Classify each non-smoothed crossing by comparing the return-order ranks
/// of its over- and under-strand labels in the diagram's own permutation.
pub fn classify_crossings(d: &ResolvedDiagram) -> Vec<Option<CrossingKind>> {
    let perm = d.permutation();
    let mut at_column: Vec<usize> = (1..=d.strands()).collect();
    let mut out = Vec::with_capacity(d.base().len());
    for (i, letter) in d.base().letters().iter().enumerate() {
        let Some(sign) = d.effective_sign(i) else {
            out.push(None);
            continue;
        };
        let g = letter.gap;
        let (left, right) = (at_column[g - 1], at_column[g]);
        let (over, under) = match sign {
            Sign::Positive => (right, left),
            Sign::Negative => (left, right),
        };
        out.push(Some(if perm.precedes(over, under) { CrossingKind::Descending } else { CrossingKind::Ascending }));
        at_column.swap(g - 1, g);
    }
    out
}
