mod common;

use std::collections::BTreeSet;

use common::{arb_nonempty_word, arb_word, word};
use homfly::braid::CrossingState;
use homfly::checks::{check_leaf_law, check_markov, check_mirror, check_skein, trivial_link, Evaluator};
use homfly::resolver::{enumerate_leaves, homfly, homfly_parallel, is_tree_leaf, leaf_statistics, Mode};
use proptest::prelude::*;

fn all_states(len: usize) -> Vec<Vec<CrossingState>> {
    let choices = [CrossingState::Kept, CrossingState::Flipped, CrossingState::Smoothed];
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |&c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn leaf_law_holds(w in arb_word(5, 9)) {
        prop_assert!(check_leaf_law(&w).is_ok());
    }

    #[test]
    fn skein_relation_holds(w in arb_nonempty_word(4, 7)) {
        prop_assert!(check_skein(&Evaluator::honest(), &w).is_ok());
    }

    #[test]
    fn markov_invariance(w in arb_word(4, 7), seed in any::<u64>()) {
        prop_assert!(check_markov(&Evaluator::honest(), &w, seed, 10).is_ok());
    }

    #[test]
    fn mirror_identity(w in arb_word(4, 8)) {
        prop_assert!(check_mirror(&Evaluator::honest(), &w).is_ok());
    }

    #[test]
    fn parallel_equals_sequential(w in arb_word(4, 10)) {
        for mode in [Mode::Descending, Mode::Ascending] {
            prop_assert_eq!(homfly_parallel(&w, mode), homfly(&w, mode));
        }
    }

    #[test]
    fn leaves_are_distinct_and_members(w in arb_word(4, 9)) {
        for mode in [Mode::Descending, Mode::Ascending] {
            let mut seen = BTreeSet::new();
            for leaf in enumerate_leaves(&w, mode) {
                prop_assert!(is_tree_leaf(&w, &leaf.states, mode));
                prop_assert!(seen.insert(leaf.states.clone()));
            }
            prop_assert_eq!(leaf_statistics(&w, mode).leaf_count, seen.len());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The single-walk membership test accepts exactly the enumerated leaves
    /// among all `3^c` state vectors.
    #[test]
    fn membership_matches_enumeration(w in arb_word(4, 8)) {
        for mode in [Mode::Descending, Mode::Ascending] {
            let leaves: BTreeSet<Vec<CrossingState>> = enumerate_leaves(&w, mode).map(|l| l.states).collect();
            let accepted: BTreeSet<Vec<CrossingState>> =
                all_states(w.len()).into_iter().filter(|s| is_tree_leaf(&w, s, mode)).collect();
            prop_assert_eq!(accepted, leaves);
        }
    }
}

#[test]
fn trivial_links_in_both_trees() {
    for n in 1..=6 {
        let w = homfly::braid::BraidWord::empty(n).unwrap();
        assert_eq!(homfly(&w, Mode::Descending), trivial_link(n));
        assert_eq!(homfly(&w, Mode::Ascending), trivial_link(n));
    }
}

#[test]
fn single_crossing_trees() {
    let pos = word(2, &[1]);
    let desc: Vec<_> = enumerate_leaves(&pos, Mode::Descending).map(|l| l.states).collect();
    assert_eq!(desc.len(), 2);
    assert!(desc.contains(&vec![CrossingState::Flipped]));
    assert!(desc.contains(&vec![CrossingState::Smoothed]));
    let asc: Vec<_> = enumerate_leaves(&pos, Mode::Ascending).map(|l| l.states).collect();
    assert_eq!(asc, vec![vec![CrossingState::Kept]]);
}
