//! Acceptance gate: every criterion with its tolerance and time limit.
//!
//! Run with `cargo test -p homfly --test acceptance -- --nocapture` to see
//! one PASS/FAIL line per criterion.

mod common;

use std::time::{Duration, Instant};

use common::poly;
use homfly::braid::{BraidWord, Sign};
use homfly::checks::{
    check_alternating_law, check_bijections, check_leaf_law, check_markov, check_methods, check_mfw, check_mirror,
    check_skein, check_witnesses, trivial_link, Evaluator,
};
use homfly::corpus::{random_alternating, random_word, words_of_length};
use homfly::invariants::{alexander, braid_index_certificate, mfw_bounds, Verdict};
use homfly::resolver::{homfly, homfly_parallel, Mode};
use homfly::Method;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20240601;

/// All 2- and 3-strand words with at most 6 crossings, then 500 random
/// words with at most 8 crossings on at most 4 strands.
fn corpus() -> Vec<BraidWord> {
    let mut words: Vec<BraidWord> =
        (2..=3).flat_map(|n| (0..=6).flat_map(move |len| words_of_length(n, len))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..500 {
        words.push(random_word(&mut rng, 4, 8));
    }
    words
}

/// 200 positive-leading reduced alternating words, `n = 2..=5` in turn,
/// each gap holding 2–4 crossings.
fn alternating_words() -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    (0..200).map(|i| random_alternating(&mut rng, 2 + i % 4, 2..=4, Sign::Positive)).collect()
}

type Outcome = Result<String, String>;

fn over_each<F>(words: &[BraidWord], mut f: F) -> Result<usize, String>
where
    F: FnMut(&BraidWord) -> Result<usize, homfly::checks::Failure>,
{
    let mut total = 0;
    for w in words {
        total += f(w).map_err(|e| e.to_string())?;
    }
    Ok(total)
}

fn criterion_1() -> Outcome {
    for n in 1..=6 {
        let w = BraidWord::empty(n).unwrap();
        for m in Method::ALL {
            let p = m.compute(&w);
            if p != trivial_link(n) {
                return Err(format!("n = {n}, {m}: {p}"));
            }
        }
    }
    Ok("n = 1..6, four methods".into())
}

fn criterion_2() -> Outcome {
    let fixtures = [
        (common::word(2, &[1, 1]), poly("a^-1*z + a^-1*z^-1 - a^-3*z^-1")),
        (common::word(2, &[1, 1, 1]), poly("-a^-4 + 2*a^-2 + a^-2*z^2")),
        (common::word(3, &[1, -2, 1, -2]), poly("a^2 + a^-2 - 1 - z^2")),
    ];
    for (w, expected) in &fixtures {
        for m in Method::ALL {
            let p = m.compute(w);
            if &p != expected {
                return Err(format!("[{}] {m}: {p}, expected {expected}", w.to_line()));
            }
        }
    }
    Ok("Hopf, trefoil, figure-eight".into())
}

fn criterion_3(words: &[BraidWord]) -> Outcome {
    let ev = Evaluator::honest();
    let n = over_each(words, |w| check_methods(&ev, w).map(|_| 1))?;
    Ok(format!("{n} words"))
}

fn criterion_4(words: &[BraidWord]) -> Outcome {
    let leaves = over_each(words, check_leaf_law)?;
    Ok(format!("{leaves} leaves, 0 violations"))
}

fn criterion_5(words: &[BraidWord]) -> Outcome {
    let ev = Evaluator::honest();
    let letters = over_each(words, |w| check_skein(&ev, w))?;
    Ok(format!("{letters} letters"))
}

fn criterion_6(words: &[BraidWord]) -> Outcome {
    let ev = Evaluator::honest();
    let variants = over_each(words, |w| check_markov(&ev, w, SEED, 20))?;
    over_each(words, |w| check_mirror(&ev, w))?;
    Ok(format!("{variants} variants, {} mirrors", words.len()))
}

fn criterion_7(words: &[BraidWord]) -> Outcome {
    let n = over_each(words, |w| check_mfw(w, &homfly(w, Mode::Descending)))?;
    Ok(format!("{n} polynomials in window"))
}

fn criterion_8(alt: &[BraidWord]) -> Outcome {
    over_each(alt, check_alternating_law)?;
    for w in alt {
        let n = w.strands();
        let r = mfw_bounds(w).map_err(|e| e.to_string())?;
        let cert = braid_index_certificate(w).map_err(|e| e.to_string())?;
        if r.span as usize != 2 * (n - 1) || cert.verdict != Verdict::Certified(n) {
            return Err(format!("[{}]: span {}, {:?}", w.to_line(), r.span, cert.verdict));
        }
    }
    Ok(format!("{} words, n = 2..5", alt.len()))
}

fn criterion_9(alt: &[BraidWord]) -> Outcome {
    let leaves = over_each(alt, check_witnesses)?;
    Ok(format!("{} words, {leaves} leaves scanned", alt.len()))
}

fn criterion_10(alt: &[BraidWord]) -> Outcome {
    for w in alt {
        let r = alexander(w).map_err(|e| e.to_string())?;
        if !r.leading_is_unit {
            return Err(format!("[{}]: Δ = {}", w.to_line(), r.delta));
        }
    }
    let fig8 = alexander(&common::word(3, &[1, -2, 1, -2])).map_err(|e| e.to_string())?;
    if fig8.delta.to_string() != "-s^2 + 3 - s^-2" {
        return Err(format!("figure-eight Δ = {}", fig8.delta));
    }
    Ok(format!("{} unit leading coefficients; figure-eight exact", alt.len()))
}

fn criterion_11(words: &[BraidWord]) -> Outcome {
    let pairs = over_each(words, check_bijections)?;
    Ok(format!("{} words, {pairs} leaf/partition pairs", words.len()))
}

fn criterion_12() -> Outcome {
    let w = common::word(4, &[1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2]);
    assert_eq!((w.len(), w.strands()), (14, 4));
    let start = Instant::now();
    let p = check_methods(&Evaluator::honest(), &w).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        return Err(format!("four methods took {elapsed:.2?}"));
    }
    if p != common::oracle(&w) {
        return Err(format!("disagrees with the trace oracle: {p}"));
    }
    for mode in [Mode::Descending, Mode::Ascending] {
        let par = homfly_parallel(&w, mode);
        if par != p || par.to_string() != p.to_string() {
            return Err(format!("{mode:?}: parallel {par} differs from sequential {p}"));
        }
    }
    Ok(format!("four methods in {elapsed:.2?}; parallel identical"))
}

#[test]
fn acceptance() {
    let words = corpus();
    let alt = alternating_words();
    type Criterion<'a> = (u32, Option<u64>, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        (1, Some(1), Box::new(criterion_1)),
        (2, Some(1), Box::new(criterion_2)),
        (3, Some(120), Box::new(|| criterion_3(&words))),
        (4, None, Box::new(|| criterion_4(&words))),
        (5, None, Box::new(|| criterion_5(&words))),
        (6, Some(300), Box::new(|| criterion_6(&words))),
        (7, None, Box::new(|| criterion_7(&words))),
        (8, Some(120), Box::new(|| criterion_8(&alt))),
        (9, None, Box::new(|| criterion_9(&alt))),
        (10, None, Box::new(|| criterion_10(&alt))),
        (11, None, Box::new(|| criterion_11(&words))),
        (12, Some(60), Box::new(criterion_12)),
    ];
    let mut failed = Vec::new();
    for (id, limit, run) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(secs)) = (&outcome, limit) {
            if elapsed >= Duration::from_secs(secs) {
                outcome = Err(format!("took {elapsed:.2?}, limit {secs}s"));
            }
        }
        match outcome {
            Ok(detail) => println!("criterion {id:>2}: PASS  {detail} ({elapsed:.2?})"),
            Err(detail) => {
                println!("criterion {id:>2}: FAIL  {detail} ({elapsed:.2?})");
                failed.push(id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
