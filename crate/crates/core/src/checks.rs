//! Property checks shared by `verify`, `selftest` and the test suites.
//!
//! Each check returns `Ok` with a count of what it examined, or a
//! [`Failure`] carrying a one-line command that reproduces it.

use std::fmt;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{
    classify_crossings, markov_variants, BraidWord, CrossingKind, CrossingState, ResolvedDiagram, Sign,
};
use crate::corpus;
use crate::invariants::{alexander_from, certificate_from, construct_u_prime, construct_u_star, mfw_from, Verdict};
use crate::jaeger::{check_bijection, Variant};
use crate::method::Method;
use crate::poly::LaurentPoly2;
use crate::resolver::{enumerate_leaves, homfly, is_tree_leaf, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub word: String,
    pub detail: String,
    /// Command line that reproduces the failure.
    pub reproducer: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} failed on [{}]: {}\n  reproduce: {}", self.check, self.word, self.detail, self.reproducer)
    }
}

fn quoted(word: &BraidWord) -> String {
    format!("\"{}\" --strands {}", word, word.strands())
}

fn failure(check: &str, word: &BraidWord, detail: String, reproducer: String) -> Failure {
    Failure { check: check.to_string(), word: word.to_line(), detail, reproducer }
}

/// Polynomial source for the checks. The corrupted evaluator perturbs the
/// descending method so harnesses can prove they notice wrong answers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Evaluator {
    corrupt: bool,
}

impl Evaluator {
    pub fn honest() -> Self {
        Self { corrupt: false }
    }

    #[doc(hidden)]
    pub fn corrupted() -> Self {
        Self { corrupt: true }
    }

    pub fn homfly(&self, word: &BraidWord, method: Method) -> LaurentPoly2 {
        let p = method.compute(word);
        if self.corrupt && method == Method::Descending {
            p + LaurentPoly2::term(1, 1, word.len() as i32 + 1)
        } else {
            p
        }
    }
}

/// All four methods agree; returns the common polynomial.
pub fn check_methods(ev: &Evaluator, word: &BraidWord) -> Result<LaurentPoly2, Failure> {
    let reference = ev.homfly(word, Method::Descending);
    for m in &Method::ALL[1..] {
        let p = ev.homfly(word, *m);
        if p != reference {
            return Err(failure(
                "four-method equality",
                word,
                format!("descending gives {reference}, {m} gives {p}"),
                format!("homfly compute {} --method all", quoted(word)),
            ));
        }
    }
    Ok(reference)
}

/// `((a − a⁻¹) z⁻¹)^{n−1}`, the polynomial of the `n`-component trivial link.
pub fn trivial_link(n: usize) -> LaurentPoly2 {
    let delta = LaurentPoly2::term(1, -1, 1) - LaurentPoly2::term(1, -1, -1);
    delta.pow(n as u32 - 1)
}

/// Empty words close to trivial links. Non-empty words are skipped.
pub fn check_trivial_link(ev: &Evaluator, word: &BraidWord) -> Result<usize, Failure> {
    if !word.is_empty() {
        return Ok(0);
    }
    let p = ev.homfly(word, Method::Descending);
    let expected = trivial_link(word.strands());
    if p != expected {
        return Err(failure(
            "trivial link",
            word,
            format!("got {p}, expected {expected}"),
            format!("homfly compute {} --method all", quoted(word)),
        ));
    }
    Ok(1)
}

/// `γ − w = n` at every descending leaf and `γ + w = n` at every ascending
/// leaf. Returns the number of leaves checked.
pub fn check_leaf_law(word: &BraidWord) -> Result<usize, Failure> {
    let n = word.strands() as i64;
    let mut leaves = 0;
    for mode in [Mode::Descending, Mode::Ascending] {
        for leaf in enumerate_leaves(word, mode) {
            leaves += 1;
            let gamma = leaf.gamma as i64;
            let lhs = match mode {
                Mode::Descending => gamma - leaf.writhe,
                Mode::Ascending => gamma + leaf.writhe,
            };
            if lhs != n {
                let states: String = leaf.states.iter().map(|s| s.symbol()).collect();
                return Err(failure(
                    "leaf law",
                    word,
                    format!("{mode:?} leaf {states} has γ = {}, w = {}", leaf.gamma, leaf.writhe),
                    format!("homfly analyze {}", quoted(word)),
                ));
            }
        }
    }
    Ok(leaves)
}

/// `a·P(D₊) − a⁻¹·P(D₋) = z·P(D₀)` at every letter.
pub fn check_skein(ev: &Evaluator, word: &BraidWord) -> Result<usize, Failure> {
    let a = LaurentPoly2::term(1, 0, 1);
    let a_inv = LaurentPoly2::term(1, 0, -1);
    let z = LaurentPoly2::term(1, 1, 0);
    for i in 0..word.len() {
        let plus = ev.homfly(&word.with_sign(i, Sign::Positive), Method::Descending);
        let minus = ev.homfly(&word.with_sign(i, Sign::Negative), Method::Descending);
        let zero = ev.homfly(&word.without_letter(i), Method::Descending);
        let lhs = &a * &plus - &a_inv * &minus;
        let rhs = &z * &zero;
        if lhs != rhs {
            return Err(failure(
                "skein relation",
                word,
                format!("at letter {}: aP+ - a^-1 P- = {lhs}, zP0 = {rhs}", i + 1),
                format!("homfly verify {} --moves skein", quoted(word)),
            ));
        }
    }
    Ok(word.len())
}

/// Seeded Markov-equivalent variants all share the polynomial. On failure
/// the variant with the fewest moves is reported.
pub fn check_markov(ev: &Evaluator, word: &BraidWord, seed: u64, samples: usize) -> Result<usize, Failure> {
    let reference = ev.homfly(word, Method::Descending);
    let worst = markov_variants(word, seed, samples)
        .into_iter()
        .filter_map(|v| {
            let p = ev.homfly(&v.word, Method::Descending);
            (p != reference).then_some((v, p))
        })
        .min_by_key(|(v, _)| v.moves.len());
    match worst {
        None => Ok(samples),
        Some((v, p)) => Err(failure(
            "Markov invariance",
            word,
            format!("variant {v} gives {p}, original gives {reference}"),
            format!("homfly compute {} --method descending", quoted(&v.word)),
        )),
    }
}

/// `P(mirror) = P(−z, a⁻¹)`.
pub fn check_mirror(ev: &Evaluator, word: &BraidWord) -> Result<usize, Failure> {
    let p = ev.homfly(word, Method::Descending);
    let m = ev.homfly(&word.mirror(), Method::Descending);
    let expected = p.mirror_image();
    if m != expected {
        return Err(failure(
            "mirror identity",
            word,
            format!("P(mirror) = {m}, P(-z, 1/a) = {expected}"),
            format!("homfly verify {} --moves mirror", quoted(word)),
        ));
    }
    Ok(1)
}

/// Tree leaves and admissible partitions match, both variants.
pub fn check_bijections(word: &BraidWord) -> Result<usize, Failure> {
    let mut pairs = 0;
    for variant in [Variant::Standard, Variant::Dual] {
        let report = check_bijection(word, variant);
        if !report.holds() {
            return Err(failure(
                "leaf/partition bijection",
                word,
                format!("{variant:?}: {}", report.mismatches.join("; ")),
                format!("homfly verify {} --moves bijection", quoted(word)),
            ));
        }
        pairs += report.leaves;
    }
    Ok(pairs)
}

/// The a-degrees lie in `[1 − n − w, n − 1 − w]`.
pub fn check_mfw(word: &BraidWord, p: &LaurentPoly2) -> Result<usize, Failure> {
    let report = mfw_from(word, p)
        .map_err(|e| failure("MFW window", word, e.to_string(), format!("homfly analyze {}", quoted(word))))?;
    if !report.within_window || report.lower_bound as usize > word.strands() {
        return Err(failure(
            "MFW window",
            word,
            format!("a-degrees [{}, {}] outside {:?}", report.min_a, report.max_a, report.window),
            format!("homfly analyze {}", quoted(word)),
        ));
    }
    Ok(1)
}

/// Traversal-based crossing kinds agree with the label comparison: the
/// unresolved diagram is a descending leaf exactly when every crossing is
/// descending.
pub fn check_crossing_kinds(word: &BraidWord) -> Result<usize, Failure> {
    let d = ResolvedDiagram::unresolved(word.clone());
    let kinds = classify_crossings(&d);
    for (mode, kind) in [(Mode::Descending, CrossingKind::Descending), (Mode::Ascending, CrossingKind::Ascending)] {
        let by_walk = is_tree_leaf(word, d.states(), mode);
        let by_labels = kinds.iter().all(|k| *k == Some(kind));
        if by_walk != by_labels {
            return Err(failure(
                "crossing classification",
                word,
                format!("{mode:?}: traversal says {by_walk}, labels say {by_labels}"),
                format!("homfly analyze {}", quoted(word)),
            ));
        }
    }
    Ok(word.len())
}

/// For a reduced, non-split alternating word: `E = n − 1 − w`,
/// `e = 1 − n − w`, span `2(n − 1)`, certified braid index `n` (also for the
/// mirror), and a unit leading Alexander coefficient.
pub fn check_alternating_law(word: &BraidWord) -> Result<usize, Failure> {
    let fail = |detail: String| failure("alternating law", word, detail, format!("homfly analyze {}", quoted(word)));
    let (n, w) = (word.strands() as i64, word.writhe());
    let p = homfly(word, Mode::Descending);
    let mfw = mfw_from(word, &p).map_err(|e| fail(e.to_string()))?;
    if mfw.max_a as i64 != n - 1 - w || mfw.min_a as i64 != 1 - n - w || mfw.span as i64 != 2 * (n - 1) {
        return Err(fail(format!("E = {}, e = {}, span = {}", mfw.max_a, mfw.min_a, mfw.span)));
    }
    for (label, cert) in
        [("word", certificate_from(word, &p)), ("mirror", certificate_from(&word.mirror(), &p.mirror_image()))]
    {
        match cert {
            Ok(c) if c.verdict == Verdict::Certified(word.strands()) => {}
            Ok(c) => return Err(fail(format!("{label} certificate {:?}", c.verdict))),
            Err(e) => return Err(fail(format!("{label} certificate: {e}"))),
        }
    }
    let alex = alexander_from(&p).map_err(|e| fail(e.to_string()))?;
    if !alex.leading_is_unit {
        return Err(fail(format!("Alexander {} has leading coefficient {}", alex.delta, alex.leading_coeff)));
    }
    Ok(1)
}

/// `U*` is a descending leaf with `γ = n` and the only leaf whose odd gaps
/// are fully smoothed and whose even gaps keep exactly two crossings; `U′`
/// is a leaf with `γ = 1`, `t = c − n + 1`, and no connected leaf smooths
/// more. Exhaustive over the leaf stream; expects a positive-leading word.
pub fn check_witnesses(word: &BraidWord) -> Result<usize, Failure> {
    let fail = |detail: String| failure("witnesses", word, detail, format!("homfly analyze {}", quoted(word)));
    let n = word.strands();
    let u_star = construct_u_star(word).map_err(|e| fail(e.to_string()))?;
    if !is_tree_leaf(word, u_star.states(), Mode::Descending) || u_star.components() != n {
        return Err(fail(format!("U* = {} is not a leaf with γ = n", u_star.state_string())));
    }
    let u_prime = construct_u_prime(word).map_err(|e| fail(e.to_string()))?;
    let t_prime = word.len() + 1 - n;

    let mut matching = Vec::new();
    let mut leaves = 0;
    for leaf in enumerate_leaves(word, Mode::Descending) {
        leaves += 1;
        let shape_matches = (1..n).all(|g| {
            let present = word
                .letters()
                .iter()
                .zip(&leaf.states)
                .filter(|(l, s)| l.gap == g && **s != CrossingState::Smoothed)
                .count();
            present == if g % 2 == 1 { 0 } else { 2 }
        });
        if shape_matches {
            matching.push(leaf.states.clone());
        }
        if leaf.gamma == 1 && leaf.t > t_prime {
            let states: String = leaf.states.iter().map(|s| s.symbol()).collect();
            return Err(fail(format!("connected leaf {states} has t = {} > {t_prime}", leaf.t)));
        }
    }
    if matching != [u_star.states().to_vec()] {
        return Err(fail(format!("{} leaves match the U* shape, expected exactly U*", matching.len())));
    }
    if u_prime.components() != 1 || u_prime.smoothed_count() != t_prime {
        return Err(fail(format!("U′ = {} has γ = {}", u_prime.state_string(), u_prime.components())));
    }
    Ok(leaves)
}

/// `σ₁⁻¹` is a descending leaf obeying the leaf law and `σ₁` closes to the
/// unknot with `P = 1`. A failure means the over/under convention is broken.
pub fn check_conventions() -> Result<(), String> {
    let neg = BraidWord::from_tokens(2, &[-1]);
    let pos = BraidWord::from_tokens(2, &[1]);
    let kinds = classify_crossings(&ResolvedDiagram::unresolved(neg.clone()));
    if kinds != [Some(CrossingKind::Descending)] {
        return Err(format!("σ1^-1 classified as {kinds:?}, expected descending"));
    }
    check_leaf_law(&neg).map_err(|f| f.to_string())?;
    let leaves: Vec<_> = enumerate_leaves(&neg, Mode::Descending).collect();
    if leaves.len() != 1 || leaves[0].states != [CrossingState::Kept] {
        return Err("σ1^-1 is not its own descending tree".into());
    }
    let p = homfly(&pos, Mode::Descending);
    if p != LaurentPoly2::one() {
        return Err(format!("P(closure of σ1) = {p}, expected 1"));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelftestConfig {
    pub max_crossings: usize,
    pub max_strands: usize,
    pub samples: usize,
    pub seed: u64,
    /// Markov variants drawn per corpus word.
    pub variants: usize,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        Self { max_crossings: 8, max_strands: 4, samples: 500, seed: 1, variants: 20 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    /// Units examined (leaves, letters, variants, ...).
    pub checks: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestSummary {
    pub corpus: usize,
    pub alternating: usize,
    pub suites: Vec<SuiteResult>,
    pub elapsed: Duration,
}

impl SelftestSummary {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }
}

/// Exhaustive words for `strands ≤ min(N, 3)`, `crossings ≤ min(C, 6)`, then
/// `samples` random words within `N` strands and `C` crossings.
pub fn selftest_corpus(cfg: &SelftestConfig) -> Vec<BraidWord> {
    let mut words = corpus::exhaustive(cfg.max_strands.min(3), cfg.max_crossings.min(6));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples {
        words.push(corpus::random_word(&mut rng, cfg.max_strands, cfg.max_crossings));
    }
    words
}

/// Reduced alternating words that fit the configuration: `n` ranges over
/// `2 ..= min(N, 5)` with `2(n − 1) ≤ C`, gaps hold 2–4 crossings, and the
/// total stays within `C`.
pub fn alternating_corpus(cfg: &SelftestConfig) -> Vec<BraidWord> {
    let strand_counts: Vec<usize> =
        (2..=cfg.max_strands.min(5)).filter(|&n| 2 * (n - 1) <= cfg.max_crossings).collect();
    if strand_counts.is_empty() || cfg.samples == 0 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    let count = cfg.samples.min(200);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = strand_counts[out.len() % strand_counts.len()];
        let sign = if out.len() % 2 == 0 { Sign::Positive } else { Sign::Negative };
        let word = corpus::random_alternating(&mut rng, n, 2..=4, sign);
        if word.len() <= cfg.max_crossings {
            out.push(word);
        } else {
            let minimal = corpus::random_alternating(&mut rng, n, 2..=2, sign);
            out.push(minimal);
        }
    }
    out
}

fn run_suite<F>(name: &'static str, words: &[BraidWord], check: F) -> SuiteResult
where
    F: Fn(&BraidWord) -> Result<usize, Failure> + Sync,
{
    let start = Instant::now();
    let outcomes: Vec<Result<usize, Failure>> = words.par_iter().map(&check).collect();
    let mut checks = 0;
    let mut failures = Vec::new();
    for o in outcomes {
        match o {
            Ok(k) => checks += k,
            Err(f) => failures.push(f),
        }
    }
    SuiteResult { name, cases: words.len(), checks, failures, elapsed: start.elapsed() }
}

pub fn run_selftest(cfg: &SelftestConfig, ev: &Evaluator) -> SelftestSummary {
    let start = Instant::now();
    let words = selftest_corpus(cfg);
    let alternating = alternating_corpus(cfg);
    let positive_alternating: Vec<BraidWord> =
        alternating.iter().map(|w| if w.classify().negative_leading { w.mirror() } else { w.clone() }).collect();
    let suites = vec![
        run_suite("trivial links", &words, |w| check_trivial_link(ev, w)),
        run_suite("four-method equality", &words, |w| check_methods(ev, w).map(|_| 4)),
        run_suite("leaf law", &words, check_leaf_law),
        run_suite("skein relation", &words, |w| check_skein(ev, w)),
        run_suite("MFW window", &words, |w| check_mfw(w, &ev.homfly(w, Method::Descending))),
        run_suite("bijection", &words, check_bijections),
        run_suite("Markov invariance", &words, |w| check_markov(ev, w, cfg.seed, cfg.variants)),
        run_suite("mirror identity", &words, |w| check_mirror(ev, w)),
        run_suite("alternating law", &alternating, check_alternating_law),
        run_suite("witnesses", &positive_alternating, check_witnesses),
    ];
    SelftestSummary { corpus: words.len(), alternating: alternating.len(), suites, elapsed: start.elapsed() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conventions_hold() {
        check_conventions().unwrap();
    }

    #[test]
    fn honest_checks_pass_on_fixtures() {
        let ev = Evaluator::honest();
        for w in [BraidWord::from_tokens(2, &[1, 1, 1]), BraidWord::from_tokens(3, &[1, -2, 1, -2])] {
            check_methods(&ev, &w).unwrap();
            check_leaf_law(&w).unwrap();
            check_skein(&ev, &w).unwrap();
            check_markov(&ev, &w, 7, 10).unwrap();
            check_mirror(&ev, &w).unwrap();
            check_bijections(&w).unwrap();
            check_crossing_kinds(&w).unwrap();
            check_alternating_law(&w).unwrap();
            check_witnesses(&w).unwrap();
        }
    }

    #[test]
    fn corrupted_evaluator_is_caught() {
        let ev = Evaluator::corrupted();
        let w = BraidWord::from_tokens(2, &[1, 1, 1]);
        let f = check_methods(&ev, &w).unwrap_err();
        assert!(f.reproducer.contains("--method all"));
        assert!(check_mirror(&ev, &w).is_err());
        assert!(check_skein(&ev, &w).is_err());
    }

    #[test]
    fn small_selftest_passes() {
        let cfg = SelftestConfig { max_crossings: 4, max_strands: 3, samples: 20, seed: 5, variants: 5 };
        let summary = run_selftest(&cfg, &Evaluator::honest());
        assert!(summary.passed(), "{:#?}", summary.suites);
        assert_eq!(summary.corpus, corpus::exhaustive(3, 4).len() + 20);
    }
}
