//! Shared test helpers, including an independent HOMFLY oracle.
//!
//! The oracle represents a braid in the Hecke algebra, where
//! `g² = z a⁻¹ g + a⁻²` and `g⁻¹ = a² g − a z`, and evaluates a Markov trace
//! with `tr(x ⊗ 1) = δ tr(x)`, `δ = (a − a⁻¹) z⁻¹`, and `tr(x g_n) = tr(x)`.
//! Both relations encode `a P₊ − a⁻¹ P₋ = z P₀`, so the trace of a closed
//! braid is its HOMFLY polynomial. It shares no code with the crate: its
//! polynomials are plain maps `(z, a) -> coeff`.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use homfly::braid::{BraidLetter, BraidWord, Sign};
use homfly::poly::LaurentPoly2;
use proptest::prelude::*;

pub type Poly = BTreeMap<(i32, i32), i64>;

fn add_into(acc: &mut Poly, p: &Poly, scale: &Poly) {
    for (&(z1, a1), &c1) in p {
        for (&(z2, a2), &c2) in scale {
            let e = acc.entry((z1 + z2, a1 + a2)).or_insert(0);
            *e += c1 * c2;
            if *e == 0 {
                acc.remove(&(z1 + z2, a1 + a2));
            }
        }
    }
}

fn mono(c: i64, z: i32, a: i32) -> Poly {
    BTreeMap::from([((z, a), c)])
}

fn one() -> Poly {
    mono(1, 0, 0)
}

fn delta() -> Poly {
    BTreeMap::from([((-1, 1), 1), ((-1, -1), -1)])
}

/// Hecke algebra element: one-line permutation -> coefficient.
type Element = HashMap<Vec<usize>, Poly>;

fn push(el: &mut Element, perm: Vec<usize>, coeff: &Poly, scale: &Poly) {
    let slot = el.entry(perm.clone()).or_default();
    add_into(slot, coeff, scale);
    if slot.is_empty() {
        el.remove(&perm);
    }
}

/// `x · g_i` (0-based `i` swaps positions `i, i+1`).
fn right_mul(x: &Element, i: usize) -> Element {
    let mut out = Element::new();
    for (w, c) in x {
        let mut ws = w.clone();
        ws.swap(i, i + 1);
        if w[i] < w[i + 1] {
            push(&mut out, ws, c, &one());
        } else {
            push(&mut out, w.clone(), c, &mono(1, 1, -1));
            push(&mut out, ws, c, &mono(1, 0, -2));
        }
    }
    out
}

/// `x · g_i⁻¹ = a² x g_i − a z x`.
fn right_mul_inv(x: &Element, i: usize) -> Element {
    let mut out = Element::new();
    for (w, c) in right_mul(x, i) {
        push(&mut out, w, &c, &mono(1, 0, 2));
    }
    for (w, c) in x {
        push(&mut out, w.clone(), c, &mono(-1, 1, 1));
    }
    out
}

/// `g_i · x` (0-based `i` swaps values `i, i+1`).
fn left_mul(x: &Element, i: usize) -> Element {
    let mut out = Element::new();
    for (w, c) in x {
        let pi = w.iter().position(|&v| v == i).unwrap();
        let pj = w.iter().position(|&v| v == i + 1).unwrap();
        let mut sw = w.clone();
        sw.swap(pi, pj);
        if pi < pj {
            push(&mut out, sw, c, &one());
        } else {
            push(&mut out, w.clone(), c, &mono(1, 1, -1));
            push(&mut out, sw, c, &mono(1, 0, -2));
        }
    }
    out
}

struct Trace {
    memo: HashMap<Vec<usize>, Poly>,
}

impl Trace {
    fn basis(&mut self, w: &[usize]) -> Poly {
        if let Some(p) = self.memo.get(w) {
            return p.clone();
        }
        let n = w.len();
        let result = if n == 1 {
            one()
        } else {
            let k = w.iter().position(|&v| v == n - 1).unwrap();
            let mut u: Vec<usize> = w.to_vec();
            u.remove(k);
            if k == n - 1 {
                let mut acc = Poly::new();
                add_into(&mut acc, &self.basis(&u), &delta());
                acc
            } else {
                // T_w = T_u g_{n-2} … g_k; cycle the tail to the front and
                // drop g_{n-2} by the Markov property.
                let mut x: Element = HashMap::from([(u, one())]);
                for j in k..n - 2 {
                    x = left_mul(&x, j);
                }
                self.element(&x)
            }
        };
        self.memo.insert(w.to_vec(), result.clone());
        result
    }

    fn element(&mut self, x: &Element) -> Poly {
        let mut acc = Poly::new();
        for (w, c) in x {
            let t = self.basis(w);
            add_into(&mut acc, &t, c);
        }
        acc
    }
}

/// HOMFLY polynomial of the closure of `tokens` on `strands` strands.
pub fn oracle_homfly(strands: usize, tokens: &[i64]) -> Poly {
    let mut x: Element = HashMap::from([((0..strands).collect(), one())]);
    for &t in tokens {
        let i = t.unsigned_abs() as usize - 1;
        x = if t > 0 { right_mul(&x, i) } else { right_mul_inv(&x, i) };
    }
    Trace { memo: HashMap::new() }.element(&x)
}

pub fn to_map(p: &LaurentPoly2) -> Poly {
    p.terms().map(|(e, c)| ((e.z, e.a), c)).collect()
}

pub fn from_map(p: &Poly) -> LaurentPoly2 {
    p.iter().map(|(&(z, a), &c)| LaurentPoly2::term(c, z, a)).sum()
}

pub fn oracle(word: &BraidWord) -> LaurentPoly2 {
    from_map(&oracle_homfly(word.strands(), &word.tokens()))
}

pub fn word(strands: usize, tokens: &[i64]) -> BraidWord {
    BraidWord::from_tokens(strands, tokens)
}

pub fn poly(text: &str) -> LaurentPoly2 {
    text.parse().expect("valid polynomial literal")
}

/// Braid words with `1..=max_strands` strands and `0..=max_len` letters.
pub fn arb_word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (1..=max_strands).prop_flat_map(move |n| {
        let len = if n == 1 { 0..=0 } else { 0..=max_len };
        let letter = (1..n.max(2), any::<bool>())
            .prop_map(|(g, pos)| BraidLetter::new(g, if pos { Sign::Positive } else { Sign::Negative }));
        proptest::collection::vec(letter, len)
            .prop_map(move |letters| BraidWord::new(n, letters).expect("letters drawn in range"))
    })
}

/// Words on at least two strands with at least one letter.
pub fn arb_nonempty_word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    arb_word(max_strands, max_len).prop_filter("needs a crossing", |w| !w.is_empty())
}

/// Positive-leading reduced alternating words with 2–4 crossings per gap.
pub fn arb_alternating(max_strands: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(|n| {
        proptest::collection::vec(2usize..=4, n - 1).prop_flat_map(move |counts| {
            let letters: Vec<BraidLetter> = counts
                .iter()
                .enumerate()
                .flat_map(|(i, &c)| {
                    let g = i + 1;
                    let sign = if g % 2 == 1 { Sign::Positive } else { Sign::Negative };
                    std::iter::repeat_n(BraidLetter::new(g, sign), c)
                })
                .collect();
            Just(letters).prop_shuffle().prop_map(move |ls| BraidWord::new(n, ls).expect("gaps in range"))
        })
    })
}

/// Sparse polynomials with small exponents and coefficients.
pub fn arb_poly() -> impl Strategy<Value = LaurentPoly2> {
    proptest::collection::vec((-50i64..=50, -4i32..=4, -4i32..=4), 0..6)
        .prop_map(|terms| terms.into_iter().map(|(c, z, a)| LaurentPoly2::term(c, z, a)).sum())
}
