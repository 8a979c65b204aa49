use std::fmt;

use serde::{Deserialize, Serialize};

use super::BraidError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// One generator `σ_gap^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidLetter {
    pub gap: usize,
    pub sign: Sign,
}

impl BraidLetter {
    pub fn new(gap: usize, sign: Sign) -> Self {
        Self { gap, sign }
    }

    pub fn positive(gap: usize) -> Self {
        Self::new(gap, Sign::Positive)
    }

    pub fn negative(gap: usize) -> Self {
        Self::new(gap, Sign::Negative)
    }

    /// Signed integer token: `gap` or `-gap`.
    pub fn token(self) -> i64 {
        self.gap as i64 * self.sign.value()
    }
}

/// A braid diagram on `strands` strands, letters in top-to-bottom order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<BraidLetter>,
    strands: usize,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if let Some(bad) = letters.iter().find(|l| l.gap == 0 || l.gap >= strands) {
            return Err(BraidError::GapOutOfRange { gap: bad.gap, strands });
        }
        Ok(Self { letters, strands })
    }

    /// Build from signed tokens; panics on an invalid combination.
    /// Intended for literals in tests and examples.
    pub fn from_tokens(strands: usize, tokens: &[i64]) -> Self {
        let letters = tokens
            .iter()
            .map(|&t| {
                let sign = if t > 0 { Sign::Positive } else { Sign::Negative };
                BraidLetter::new(t.unsigned_abs() as usize, sign)
            })
            .collect();
        Self::new(strands, letters).expect("valid braid literal")
    }

    pub fn empty(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn tokens(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.token()).collect()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.value()).sum()
    }

    pub fn mirror(&self) -> Self {
        let letters = self.letters.iter().map(|l| BraidLetter::new(l.gap, l.sign.flipped())).collect();
        Self { letters, strands: self.strands }
    }

    /// Same letters with one letter's sign replaced.
    pub fn with_sign(&self, index: usize, sign: Sign) -> Self {
        let mut out = self.clone();
        out.letters[index].sign = sign;
        out
    }

    /// Same strands with one letter deleted (the closed braid with that crossing smoothed).
    pub fn without_letter(&self, index: usize) -> Self {
        let mut out = self.clone();
        out.letters.remove(index);
        out
    }

    /// Batch-line form `n;tokens`.
    pub fn to_line(&self) -> String {
        format!("{};{}", self.strands, self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", letter.token())?;
        }
        Ok(())
    }
}

fn is_token(tok: &str) -> bool {
    let digits = tok.strip_prefix('-').unwrap_or(tok);
    let mut chars = digits.chars();
    matches!(chars.next(), Some('1'..='9')) && chars.all(|c| c.is_ascii_digit())
}

/// Parse whitespace/comma separated nonzero integers; `k` is `σ_k`, `-k` is
/// `σ_k^{-1}`. The strand count defaults to `max|k| + 1` (1 for the empty word).
pub fn parse_braid(text: &str, strands_override: Option<usize>) -> Result<BraidWord, BraidError> {
    let mut letters = Vec::new();
    for tok in text.split([' ', '\t', ',']).filter(|t| !t.is_empty()) {
        if tok == "0" || tok == "-0" {
            return Err(BraidError::ZeroGenerator { token: tok.to_string() });
        }
        if !is_token(tok) {
            return Err(BraidError::BadToken { token: tok.to_string() });
        }
        let value: i64 = tok.parse().map_err(|_| BraidError::BadToken { token: tok.to_string() })?;
        let gap = usize::try_from(value.unsigned_abs()).map_err(|_| BraidError::BadToken { token: tok.to_string() })?;
        let sign = if value > 0 { Sign::Positive } else { Sign::Negative };
        letters.push(BraidLetter::new(gap, sign));
    }
    let widest = letters.iter().max_by_key(|l| l.gap);
    let needed = widest.map_or(1, |l| l.gap + 1);
    let strands = match strands_override {
        Some(0) => return Err(BraidError::NoStrands),
        Some(n) if n < needed => {
            let token = widest.map_or_else(String::new, |l| l.token().to_string());
            return Err(BraidError::TooFewStrands { strands: n, needed, token });
        }
        Some(n) => n,
        None => needed,
    };
    BraidWord::new(strands, letters)
}
