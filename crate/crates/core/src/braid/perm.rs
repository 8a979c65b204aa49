use std::fmt;

/// The strand permutation `p(D)` of a braid in standard cycle form.
///
/// Labels and columns are 1-based. Each cycle starts with its minimum (the
/// pivot label) and cycles are sorted by pivot. Reading the cycles left to
/// right gives the return order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandPermutation {
    images: Vec<usize>,
    cycles: Vec<Vec<usize>>,
    rank: Vec<usize>,
}

impl StrandPermutation {
    /// `images[label - 1]` is the bottom column reached by the strand starting at `label`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut label = start;
            while !seen[label] {
                seen[label] = true;
                cycle.push(label);
                label = images[label - 1];
            }
            cycles.push(cycle);
        }
        let mut rank = vec![0; n + 1];
        for (pos, &label) in cycles.iter().flatten().enumerate() {
            rank[label] = pos;
        }
        Self { images, cycles, rank }
    }

    /// Track the strands through a sequence of adjacent transpositions.
    pub fn from_swaps(strands: usize, gaps: impl IntoIterator<Item = usize>) -> Self {
        let mut at_column: Vec<usize> = (1..=strands).collect();
        for g in gaps {
            at_column.swap(g - 1, g);
        }
        let mut images = vec![0; strands];
        for (col, &label) in at_column.iter().enumerate() {
            images[label - 1] = col + 1;
        }
        Self::from_images(images)
    }

    pub fn strands(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, label: usize) -> usize {
        self.images[label - 1]
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.cycles.iter().map(|c| c[0]).collect()
    }

    pub fn return_order(&self) -> Vec<usize> {
        self.cycles.iter().flatten().copied().collect()
    }

    /// Position of `label` in the return order, starting at 0.
    pub fn rank(&self, label: usize) -> usize {
        self.rank[label]
    }

    /// `a ◁ b` in the return order.
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.rank(a) < self.rank(b)
    }
}

impl fmt::Display for StrandPermutation {
    /// Standard form, e.g. `(1 4)(2)(3 5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            let body: Vec<String> = cycle.iter().map(|l| l.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    #[test]
    fn running_example_standard_form() {
        let w = BraidWord::from_tokens(5, &[-1, 3, -2, -4, -4, -4, 1, -3]);
        let p = w.permutation();
        assert_eq!(p.cycles(), &[vec![1, 4], vec![2], vec![3, 5]]);
        assert_eq!(p.to_string(), "(1 4)(2)(3 5)");
        assert_eq!(p.return_order(), vec![1, 4, 2, 3, 5]);
        assert_eq!(p.pivots(), vec![1, 2, 3]);
        assert!(p.precedes(4, 2));
    }

    #[test]
    fn identity_on_empty_word() {
        let p = BraidWord::empty(3).unwrap().permutation();
        assert_eq!(p.to_string(), "(1)(2)(3)");
        assert_eq!(p.return_order(), vec![1, 2, 3]);
        assert_eq!(p.cycle_count(), 3);
    }

    #[test]
    fn rank_is_bijection() {
        let p = StrandPermutation::from_images(vec![3, 1, 2, 5, 4]);
        let mut ranks: Vec<usize> = (1..=5).map(|l| p.rank(l)).collect();
        ranks.sort();
        assert_eq!(ranks, vec![0, 1, 2, 3, 4]);
        assert_eq!(p.to_string(), "(1 3 2)(4 5)");
    }
}
