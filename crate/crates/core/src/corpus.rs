//! Word generators for the self-test corpus.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::braid::{BraidLetter, BraidWord, Sign};

/// Every word on `strands` strands with exactly `len` letters, in
/// lexicographic order of tokens `-(n-1) .. -1, 1 .. n-1`.
pub fn words_of_length(strands: usize, len: usize) -> Vec<BraidWord> {
    let alphabet: Vec<BraidLetter> =
        (1..strands).rev().map(BraidLetter::negative).chain((1..strands).map(BraidLetter::positive)).collect();
    if len > 0 && alphabet.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; len];
    loop {
        let letters = digits.iter().map(|&d| alphabet[d]).collect();
        out.push(BraidWord::new(strands, letters).expect("alphabet fits the strands"));
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < alphabet.len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// All words with `1 ..= max_strands` strands and at most `max_crossings` letters.
pub fn exhaustive(max_strands: usize, max_crossings: usize) -> Vec<BraidWord> {
    (1..=max_strands).flat_map(|n| (0..=max_crossings).flat_map(move |len| words_of_length(n, len))).collect()
}

/// A uniformly random word: strands in `1 ..= max_strands`, length in
/// `0 ..= max_crossings` (0 when there is only one strand).
pub fn random_word<R: Rng>(rng: &mut R, max_strands: usize, max_crossings: usize) -> BraidWord {
    let n = rng.gen_range(1..=max_strands.max(1));
    let len = if n == 1 { 0 } else { rng.gen_range(0..=max_crossings) };
    let letters = (0..len)
        .map(|_| {
            let gap = rng.gen_range(1..n);
            let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
            BraidLetter::new(gap, sign)
        })
        .collect();
    BraidWord::new(n, letters).expect("gaps drawn below the strand count")
}

/// A reduced, non-split alternating word on `n >= 2` strands: each gap gets
/// a count from `per_gap`, odd gaps carry `odd_sign` and even gaps the
/// opposite, and the letters are shuffled.
pub fn random_alternating<R: Rng>(
    rng: &mut R,
    n: usize,
    per_gap: std::ops::RangeInclusive<usize>,
    odd_sign: Sign,
) -> BraidWord {
    assert!(n >= 2 && *per_gap.start() >= 2, "need at least one gap with two crossings");
    let mut letters = Vec::new();
    for g in 1..n {
        let sign = if g % 2 == 1 { odd_sign } else { odd_sign.flipped() };
        let count = rng.gen_range(per_gap.clone());
        letters.extend(std::iter::repeat_n(BraidLetter::new(g, sign), count));
    }
    letters.shuffle(rng);
    BraidWord::new(n, letters).expect("gaps below the strand count")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exhaustive_counts() {
        assert_eq!(words_of_length(1, 0).len(), 1);
        assert_eq!(words_of_length(1, 2).len(), 0);
        assert_eq!(words_of_length(3, 2).len(), 16);
        // 1 + (1 + 2 + 4) + (1 + 4 + 16)
        assert_eq!(exhaustive(3, 2).len(), 29);
    }

    #[test]
    fn alternating_words_qualify() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..=5 {
            let w = random_alternating(&mut rng, n, 2..=4, Sign::Positive);
            let c = w.classify();
            assert!(c.is_reduced_alternating_non_split() && c.positive_leading, "{}", w.to_line());
        }
    }
}
