//! Invariants read off the HOMFLY polynomial of a closed braid: the
//! Morton–Frank–Williams window, braid-index certificates for reduced
//! alternating braids together with their witness leaves, and the
//! Alexander polynomial.

use serde::{Deserialize, Serialize};

use crate::braid::{split_blocks, BraidWord, CrossingState, DiagramClass, ResolvedDiagram, Walker};
use crate::poly::{LaurentPoly1, LaurentPoly2, PolyError};
use crate::resolver::{homfly, is_tree_leaf, leaf_membership_test, Mode};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("a-span {0} is odd")]
    OddSpan(i32),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MfwReport {
    /// Highest a-degree `E`.
    pub max_a: i32,
    /// Lowest a-degree `e`.
    pub min_a: i32,
    pub span: i32,
    /// `span / 2 + 1`, a lower bound on the braid index.
    pub lower_bound: i32,
    pub strands: usize,
    pub writhe: i64,
    /// `[1 - n - w, n - 1 - w]`, the window every a-degree must lie in.
    pub window: (i64, i64),
    pub within_window: bool,
}

pub fn mfw_from(word: &BraidWord, p: &LaurentPoly2) -> Result<MfwReport, InvariantError> {
    let deg = p.a_degrees()?;
    if deg.span % 2 != 0 {
        return Err(InvariantError::OddSpan(deg.span));
    }
    let (n, w) = (word.strands() as i64, word.writhe());
    let window = (1 - n - w, n - 1 - w);
    Ok(MfwReport {
        max_a: deg.max,
        min_a: deg.min,
        span: deg.span,
        lower_bound: deg.span / 2 + 1,
        strands: word.strands(),
        writhe: w,
        window,
        within_window: window.0 <= deg.min as i64 && deg.max as i64 <= window.1,
    })
}

pub fn mfw_bounds(word: &BraidWord) -> Result<MfwReport, InvariantError> {
    mfw_from(word, &homfly(word, Mode::Descending))
}

fn require_positive_leading(word: &BraidWord) -> Result<DiagramClass, InvariantError> {
    let class = word.classify();
    if !class.is_reduced_alternating_non_split() {
        return Err(InvariantError::Precondition(format!(
            "[{}] is not a reduced, non-split alternating braid",
            word.to_line()
        )));
    }
    if !class.positive_leading {
        return Err(InvariantError::Precondition(format!("[{}] is not positive-leading", word.to_line())));
    }
    Ok(class)
}

/// First kept, last flipped and everything between smoothed in the gaps of
/// one parity; every crossing in gaps of the other parity smoothed.
fn keep_first_flip_last(word: &BraidWord, kept_parity: usize) -> ResolvedDiagram {
    let profile = word.gap_profile();
    let mut states = vec![CrossingState::Smoothed; word.len()];
    for (idx, tally) in profile.gaps.iter().enumerate() {
        let g = idx + 1;
        if g % 2 != kept_parity {
            continue;
        }
        if let (Some(&first), Some(&last)) = (tally.positions.first(), tally.positions.last()) {
            states[first] = CrossingState::Kept;
            states[last] = CrossingState::Flipped;
        }
    }
    ResolvedDiagram::new(word.clone(), states).expect("one state per letter")
}

/// `U*`: smooth every odd-gap crossing; in each even gap keep the first
/// crossing, flip the last and smooth the rest.
pub fn construct_u_star(word: &BraidWord) -> Result<ResolvedDiagram, InvariantError> {
    require_positive_leading(word)?;
    Ok(keep_first_flip_last(word, 0))
}

/// `V*`: keep the first and flip the last crossing of each odd gap, smooth
/// all other crossings.
pub fn construct_v_star(word: &BraidWord) -> Result<ResolvedDiagram, InvariantError> {
    require_positive_leading(word)?;
    Ok(keep_first_flip_last(word, 1))
}

/// Letter of `positions` met last when walking down cyclically from just
/// below `after`.
fn cyclic_last(positions: &[usize], after: usize) -> Option<usize> {
    positions.iter().copied().filter(|&p| p < after).max().or_else(|| positions.iter().copied().max())
}

/// `U′`: a descending leaf with one component and `c - n + 1` smoothings.
///
/// Built by walking the diagram and deciding each crossing at its first
/// visit. The walker pushes right one gap at a time: in an odd gap it
/// smooths until the last crossing it will meet there and flips that one;
/// in an even gap it keeps the first crossing it meets. Every other
/// crossing met for the first time is smoothed.
pub fn construct_u_prime(word: &BraidWord) -> Result<ResolvedDiagram, InvariantError> {
    require_positive_leading(word)?;
    let n = word.strands();
    let profile = word.gap_profile();
    let mut decided: Vec<Option<CrossingState>> = vec![None; word.len()];
    let mut walker = Walker::new(word);
    let mut frontier = 1;
    let mut designated = profile.gap(1).positions.last().copied();
    while let Some(arrival) = walker.advance(word) {
        let letter = arrival.letter;
        let state = match decided[letter] {
            Some(s) => s,
            None => {
                let g = word.letters()[letter].gap;
                let pushing = frontier < n && walker.column() == frontier && g == frontier;
                let s = if !pushing {
                    CrossingState::Smoothed
                } else if g % 2 == 1 {
                    if designated == Some(letter) {
                        frontier += 1;
                        CrossingState::Flipped
                    } else {
                        CrossingState::Smoothed
                    }
                } else {
                    frontier += 1;
                    if g + 1 < n {
                        designated = cyclic_last(&profile.gap(g + 1).positions, letter);
                    }
                    CrossingState::Kept
                };
                decided[letter] = Some(s);
                s
            }
        };
        walker.pass(word, state == CrossingState::Smoothed);
    }
    let states: Vec<CrossingState> = decided
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| InvariantError::Inconsistent("walk left a crossing unvisited".into()))?;
    let diagram = ResolvedDiagram::new(word.clone(), states).expect("one state per letter");
    let expected_t = word.len() + 1 - n;
    if !leaf_membership_test(word, diagram.states())
        || diagram.components() != 1
        || diagram.smoothed_count() != expected_t
    {
        return Err(InvariantError::Inconsistent(format!(
            "U′ construction for [{}] produced {} (γ = {}, t = {}, expected t = {expected_t})",
            word.to_line(),
            diagram.state_string(),
            diagram.components(),
            diagram.smoothed_count()
        )));
    }
    Ok(diagram)
}

/// A resolved diagram offered as evidence, with its leaf statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Word the states refer to (the mirror image for negative-leading blocks).
    pub word: String,
    pub states: String,
    pub gamma: usize,
    pub t: usize,
    pub t_neg: usize,
    /// Whether the diagram is a leaf of the tree it is claimed for.
    pub is_leaf: bool,
}

impl Witness {
    fn of(d: &ResolvedDiagram, mode: Mode) -> Self {
        Self {
            word: d.base().to_line(),
            states: d.state_string(),
            gamma: d.components(),
            t: d.smoothed_count(),
            t_neg: d.smoothed_negative_count(),
            is_leaf: is_tree_leaf(d.base(), d.states(), mode),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCertificate {
    pub first_column: usize,
    pub strands: usize,
    pub writhe: i64,
    pub class: DiagramClass,
    pub max_a: i32,
    pub min_a: i32,
    /// Witnesses were built on the mirror image (negative-leading block).
    pub mirrored: bool,
    pub u_star: Option<Witness>,
    pub v_star: Option<Witness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The braid index equals this number.
    Certified(usize),
    /// Only the MFW lower bound is known.
    BoundOnly(i32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidIndexCertificate {
    pub verdict: Verdict,
    pub max_a: i32,
    pub min_a: i32,
    pub mfw_lower_bound: i32,
    /// Per-block evidence; empty unless certified.
    pub blocks: Vec<BlockCertificate>,
}

fn certify_block(block: &BraidWord, first_column: usize) -> Result<BlockCertificate, InvariantError> {
    let class = block.classify();
    let (n, w) = (block.strands() as i64, block.writhe());
    let deg = homfly(block, Mode::Descending).a_degrees()?;
    if deg.max as i64 != n - 1 - w || deg.min as i64 != 1 - n - w {
        return Err(InvariantError::Inconsistent(format!(
            "block [{}] is reduced alternating but E = {}, e = {} (expected {}, {})",
            block.to_line(),
            deg.max,
            deg.min,
            n - 1 - w,
            1 - n - w
        )));
    }
    let (mirrored, u_star, v_star) = if block.is_empty() {
        (false, None, None)
    } else {
        let mirrored = class.negative_leading;
        let source = if mirrored { block.mirror() } else { block.clone() };
        let u = construct_u_star(&source)?;
        let v = construct_v_star(&source)?;
        (mirrored, Some(Witness::of(&u, Mode::Descending)), Some(Witness::of(&v, Mode::Ascending)))
    };
    Ok(BlockCertificate {
        first_column,
        strands: block.strands(),
        writhe: w,
        class,
        max_a: deg.max,
        min_a: deg.min,
        mirrored,
        u_star,
        v_star,
    })
}

pub fn certificate_from(word: &BraidWord, p: &LaurentPoly2) -> Result<BraidIndexCertificate, InvariantError> {
    let mfw = mfw_from(word, p)?;
    let blocks = split_blocks(word);
    let qualifies = blocks.iter().all(|b| {
        let class = b.word.classify();
        class.alternating && class.reduced
    });
    if !qualifies {
        return Ok(BraidIndexCertificate {
            verdict: Verdict::BoundOnly(mfw.lower_bound),
            max_a: mfw.max_a,
            min_a: mfw.min_a,
            mfw_lower_bound: mfw.lower_bound,
            blocks: Vec::new(),
        });
    }
    let certs = blocks.iter().map(|b| certify_block(&b.word, b.first_column)).collect::<Result<Vec<_>, _>>()?;
    let n = word.strands() as i32;
    if mfw.lower_bound != n {
        return Err(InvariantError::Inconsistent(format!(
            "[{}] qualifies for certification but a-span/2 + 1 = {} != {n}",
            word.to_line(),
            mfw.lower_bound
        )));
    }
    Ok(BraidIndexCertificate {
        verdict: Verdict::Certified(certs.iter().map(|c| c.strands).sum()),
        max_a: mfw.max_a,
        min_a: mfw.min_a,
        mfw_lower_bound: mfw.lower_bound,
        blocks: certs,
    })
}

/// Certify the braid index when every empty-gap block is alternating with
/// at least two crossings per gap; otherwise report the MFW bound.
pub fn braid_index_certificate(word: &BraidWord) -> Result<BraidIndexCertificate, InvariantError> {
    certificate_from(word, &homfly(word, Mode::Descending))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderReport {
    /// `Δ` in `s = x^{1/2}`, the representative produced by substitution.
    pub delta: LaurentPoly1,
    pub leading_coeff: i64,
    pub leading_is_unit: bool,
}

pub fn alexander_from(p: &LaurentPoly2) -> Result<AlexanderReport, InvariantError> {
    let delta = p.substitute_alexander()?;
    let leading_coeff = delta.leading_coeff();
    Ok(AlexanderReport { delta, leading_coeff, leading_is_unit: leading_coeff.abs() == 1 })
}

pub fn alexander(word: &BraidWord) -> Result<AlexanderReport, InvariantError> {
    alexander_from(&homfly(word, Mode::Descending))
}

#[cfg(test)]
mod tests {
    use super::*;
    use CrossingState::*;

    fn w(strands: usize, t: &[i64]) -> BraidWord {
        BraidWord::from_tokens(strands, t)
    }

    #[test]
    fn mfw_examples() {
        let r = mfw_bounds(&w(2, &[1, 1, 1])).unwrap();
        assert_eq!((r.max_a, r.min_a, r.span, r.lower_bound), (-2, -4, 2, 2));
        let r = mfw_bounds(&w(3, &[1, -2, 1, -2])).unwrap();
        assert_eq!((r.max_a, r.min_a, r.span, r.lower_bound), (2, -2, 4, 3));
        for n in 1..=5 {
            let r = mfw_bounds(&w(n, &[])).unwrap();
            assert_eq!((r.span, r.lower_bound), (2 * (n as i32 - 1), n as i32));
            assert!(r.within_window);
        }
    }

    #[test]
    fn certificate_examples() {
        let c = braid_index_certificate(&w(3, &[1, -2, 1, -2])).unwrap();
        assert_eq!(c.verdict, Verdict::Certified(3));
        assert_eq!(braid_index_certificate(&w(2, &[1, 1, 1])).unwrap().verdict, Verdict::Certified(2));
        let c = braid_index_certificate(&w(3, &[1, 1, -2])).unwrap();
        assert!(matches!(c.verdict, Verdict::BoundOnly(_)));
        assert!(c.blocks.is_empty());
    }

    #[test]
    fn certificate_sums_blocks() {
        let c = braid_index_certificate(&w(3, &[1, 1, 1])).unwrap();
        assert_eq!(c.verdict, Verdict::Certified(3));
        assert_eq!(c.blocks.len(), 2);
        let c = braid_index_certificate(&w(5, &[1, 1, -3, 4, -3, 4])).unwrap();
        assert_eq!(c.verdict, Verdict::Certified(5));
        assert!(c.blocks[1].mirrored);
    }

    #[test]
    fn u_star_examples() {
        let u = construct_u_star(&w(3, &[1, -2, 1, -2])).unwrap();
        assert_eq!(u.states(), &[Smoothed, Kept, Smoothed, Flipped]);
        assert_eq!((u.components(), u.smoothed_count(), u.smoothed_negative_count()), (3, 2, 0));
        assert!(leaf_membership_test(u.base(), u.states()));
        let u = construct_u_star(&w(2, &[1, 1, 1])).unwrap();
        assert_eq!(u.states(), &[Smoothed; 3]);
        assert_eq!((u.components(), u.smoothed_count()), (2, 3));
        assert!(construct_u_star(&w(3, &[1, 2, 1, 2])).is_err());
    }

    #[test]
    fn v_star_examples() {
        let v = construct_v_star(&w(3, &[1, -2, 1, -2])).unwrap();
        assert_eq!(v.states(), &[Kept, Smoothed, Flipped, Smoothed]);
        assert_eq!(v.components(), 3);
        let v = construct_v_star(&w(2, &[1, 1, 1])).unwrap();
        assert_eq!(v.states(), &[Kept, Smoothed, Flipped]);
        assert_eq!(v.components(), 2);
        assert!(is_tree_leaf(v.base(), v.states(), Mode::Ascending));
        assert!(construct_v_star(&w(2, &[])).is_err());
    }

    #[test]
    fn u_prime_examples() {
        let u = construct_u_prime(&w(2, &[1, 1, 1])).unwrap();
        assert_eq!(u.states(), &[Smoothed, Smoothed, Flipped]);
        let u = construct_u_prime(&w(3, &[1, -2, 1, -2])).unwrap();
        assert_eq!((u.components(), u.smoothed_count()), (1, 2));
        assert!(construct_u_prime(&w(3, &[1, 2, 1, 2])).is_err());
    }

    #[test]
    fn alexander_examples() {
        let r = alexander(&w(2, &[1, 1, 1])).unwrap();
        assert_eq!(r.delta.to_string(), "s^2 - 1 + s^-2");
        assert!(r.leading_is_unit);
        let r = alexander(&w(3, &[1, -2, 1, -2])).unwrap();
        assert_eq!(r.delta.to_string(), "-s^2 + 3 - s^-2");
        assert_eq!(r.leading_coeff, -1);
        let r = alexander(&w(2, &[1, 1])).unwrap();
        assert_eq!(r.delta.to_string(), "s - s^-1");
        assert_eq!(r.leading_coeff, 1);
    }
}
