//! Exact sparse Laurent polynomials with integer coefficients.
//!
//! [`LaurentPoly2`] lives in `Z[z, z^-1, a, a^-1]` and carries HOMFLY values.
//! [`LaurentPoly1`] lives in `Z[s, s^-1]`, where `s` stands for `x^{1/2}`; it
//! carries Alexander polynomials.
//!
//! Coefficients are `i64` and every operation is checked. The `checked_*`
//! methods report overflow as [`PolyError::Overflow`]; the operator impls
//! panic on it instead of wrapping.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("integer overflow in polynomial arithmetic")]
    Overflow,
    #[error("degree extremes are undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("substitution left a residual z^-1 factor; input is not a HOMFLY value")]
    InexactDivision,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

const OVERFLOW: &str = "coefficient overflow in polynomial arithmetic";

/// Exponent pair of a bivariate monomial `z^z * a^a`.
///
/// The derived order is the canonical term order: z-degree ascending, then
/// a-degree descending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exponent {
    pub z: i32,
    pub a: i32,
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.z.cmp(&other.z).then(other.a.cmp(&self.a))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Extreme a-degrees of a nonzero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ADegrees {
    pub max: i32,
    pub min: i32,
    pub span: i32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<Exponent, i64>,
}

fn checked_exp(x: i32, y: i32) -> Result<i32, PolyError> {
    x.checked_add(y).ok_or(PolyError::Overflow)
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(1, 0, 0)
    }

    /// The single term `coeff * z^z_deg * a^a_deg`.
    pub fn term(coeff: i64, z_deg: i32, a_deg: i32) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(Exponent { z: z_deg, a: a_deg }, coeff);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, z_deg: i32, a_deg: i32) -> i64 {
        self.terms.get(&Exponent { z: z_deg, a: a_deg }).copied().unwrap_or(0)
    }

    /// Terms as `(exponent, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, i64)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, *c))
    }

    fn add_term(&mut self, e: Exponent, c: i64) -> Result<(), PolyError> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot = slot.checked_add(c).ok_or(PolyError::Overflow)?;
        if *slot == 0 {
            self.terms.remove(&e);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_neg(&self) -> Result<Self, PolyError> {
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms() {
            terms.insert(e, c.checked_neg().ok_or(PolyError::Overflow)?);
        }
        Ok(Self { terms })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let e = Exponent { z: checked_exp(e1.z, e2.z)?, a: checked_exp(e1.a, e2.a)? };
                out.add_term(e, c1.checked_mul(c2).ok_or(PolyError::Overflow)?)?;
            }
        }
        Ok(out)
    }

    /// Multiply by the monomial `coeff * z^dz * a^da`.
    pub fn scale_monomial(&self, dz: i32, da: i32, coeff: i64) -> Result<Self, PolyError> {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            let e = Exponent { z: checked_exp(e.z, dz)?, a: checked_exp(e.a, da)? };
            out.add_term(e, c.checked_mul(coeff).ok_or(PolyError::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn checked_pow(&self, k: u32) -> Result<Self, PolyError> {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn pow(&self, k: u32) -> Self {
        self.checked_pow(k).expect(OVERFLOW)
    }

    /// `(E, e, E - e)`: the maximal and minimal a-degree and the a-span.
    pub fn a_degrees(&self) -> Result<ADegrees, PolyError> {
        let max = self.terms.keys().map(|e| e.a).max().ok_or(PolyError::ZeroPolynomial)?;
        let min = self.terms.keys().map(|e| e.a).min().ok_or(PolyError::ZeroPolynomial)?;
        Ok(ADegrees { max, min, span: max - min })
    }

    /// Image under `z -> -z, a -> a^-1`, the value of the mirror link.
    pub fn mirror_image(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            let c = if e.z.rem_euclid(2) == 1 { -c } else { c };
            out.add_term(Exponent { z: e.z, a: -e.a }, c).expect(OVERFLOW);
        }
        out
    }

    /// Specialize to the Alexander polynomial: `a = 1`, `z = s - s^-1`.
    ///
    /// Negative z-powers are cleared by multiplying through with
    /// `(s - s^-1)^m` and dividing back exactly at the end.
    pub fn substitute_alexander(&self) -> Result<LaurentPoly1, PolyError> {
        let mut by_z: BTreeMap<i32, i64> = BTreeMap::new();
        for (e, c) in self.terms() {
            let slot = by_z.entry(e.z).or_insert(0);
            *slot = slot.checked_add(c).ok_or(PolyError::Overflow)?;
        }
        by_z.retain(|_, c| *c != 0);
        let Some(&min_z) = by_z.keys().next() else {
            return Ok(LaurentPoly1::zero());
        };
        let shift = (-min_z).max(0);
        let u = LaurentPoly1::from_terms([(1, 1), (-1, -1)]);
        let mut numerator = LaurentPoly1::zero();
        for (&k, &c) in &by_z {
            let power = u.checked_pow((k + shift) as u32)?;
            numerator = numerator.checked_add(&power.checked_scale(c)?)?;
        }
        for _ in 0..shift {
            numerator = numerator.div_exact(&u)?;
        }
        Ok(numerator)
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mut factors = Vec::new();
            push_power(&mut factors, "a", e.a);
            push_power(&mut factors, "z", e.z);
            write_signed_term(f, i == 0, c, &factors)?;
        }
        Ok(())
    }
}

fn push_power(factors: &mut Vec<String>, var: &str, k: i32) {
    match k {
        0 => {}
        1 => factors.push(var.to_string()),
        _ => factors.push(format!("{var}^{k}")),
    }
}

fn write_signed_term(f: &mut fmt::Formatter<'_>, first: bool, c: i64, factors: &[String]) -> fmt::Result {
    let magnitude = c.unsigned_abs();
    match (first, c < 0) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if factors.is_empty() {
        write!(f, "{magnitude}")
    } else if magnitude == 1 {
        f.write_str(&factors.join("*"))
    } else {
        write!(f, "{magnitude}*{}", factors.join("*"))
    }
}

/// Split `text` into signed terms. A sign directly after `^` belongs to an
/// exponent, not to a term boundary.
fn split_terms(text: &str) -> Result<Vec<(bool, String)>, PolyError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(PolyError::Parse("empty input".into()));
    }
    let mut out = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    let mut prev: Option<char> = None;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if !current.is_empty() {
                out.push((negative, std::mem::take(&mut current)));
            } else if prev.is_some() {
                return Err(PolyError::Parse(format!("dangling sign in {text:?}")));
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
        prev = Some(ch);
    }
    if current.is_empty() {
        return Err(PolyError::Parse(format!("trailing sign in {text:?}")));
    }
    out.push((negative, current));
    Ok(out)
}

fn parse_factor_power(factor: &str, var: char) -> Option<Result<i32, PolyError>> {
    let rest = factor.strip_prefix(var)?;
    if rest.is_empty() {
        return Some(Ok(1));
    }
    let exp = rest.strip_prefix('^')?;
    Some(exp.parse::<i32>().map_err(|_| PolyError::Parse(format!("bad exponent in {factor:?}"))))
}

impl FromStr for LaurentPoly2 {
    type Err = PolyError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut out = Self::zero();
        for (negative, body) in split_terms(text)? {
            let mut coeff: i64 = if negative { -1 } else { 1 };
            let (mut z, mut a) = (0i32, 0i32);
            for factor in body.split('*') {
                if let Some(k) = parse_factor_power(factor, 'a') {
                    a = checked_exp(a, k?)?;
                } else if let Some(k) = parse_factor_power(factor, 'z') {
                    z = checked_exp(z, k?)?;
                } else {
                    let n: i64 = factor.parse().map_err(|_| PolyError::Parse(format!("bad factor {factor:?}")))?;
                    coeff = coeff.checked_mul(n).ok_or(PolyError::Overflow)?;
                }
            }
            out.add_term(Exponent { z, a }, coeff)?;
        }
        Ok(out)
    }
}

/// One entry of the JSON form `[{"a": .., "z": .., "c": ..}, ..]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub a: i32,
    pub z: i32,
    pub c: i64,
}

impl Serialize for LaurentPoly2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> = self.terms().map(|(e, c)| JsonTerm { a: e.a, z: e.z, c }).collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(deserializer)?;
        let mut out = Self::zero();
        for t in terms {
            out.add_term(Exponent { z: t.z, a: t.a }, t.c).map_err(serde::de::Error::custom)?;
        }
        Ok(out)
    }
}

macro_rules! forward_binop {
    ($ty:ty, $trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                self.$checked(rhs).expect(OVERFLOW)
            }
        }
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$checked(&rhs).expect(OVERFLOW)
            }
        }
        impl $trait<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$checked(rhs).expect(OVERFLOW)
            }
        }
    };
}

forward_binop!(LaurentPoly2, Add, add, checked_add);
forward_binop!(LaurentPoly2, Sub, sub, checked_sub);
forward_binop!(LaurentPoly2, Mul, mul, checked_mul);
forward_binop!(LaurentPoly1, Add, add, checked_add);
forward_binop!(LaurentPoly1, Mul, mul, checked_mul);

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> Self {
        self.checked_neg().expect(OVERFLOW)
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        self.checked_neg().expect(OVERFLOW)
    }
}

impl Sum for LaurentPoly2 {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

/// Laurent polynomial in one variable `s`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly1 {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c).expect(OVERFLOW);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i32) -> i64 {
        self.terms.get(&k).copied().unwrap_or(0)
    }

    /// Terms `(exponent, coefficient)` by descending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().rev().map(|(k, c)| (*k, *c))
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// Coefficient of the highest power of `s`, or 0 for the zero polynomial.
    pub fn leading_coeff(&self) -> i64 {
        self.terms.values().next_back().copied().unwrap_or(0)
    }

    fn add_term(&mut self, k: i32, c: i64) -> Result<(), PolyError> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(k).or_insert(0);
        *slot = slot.checked_add(c).ok_or(PolyError::Overflow)?;
        if *slot == 0 {
            self.terms.remove(&k);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c)?;
        }
        Ok(out)
    }

    pub fn checked_scale(&self, c: i64) -> Result<Self, PolyError> {
        let mut out = Self::zero();
        for (k, v) in self.terms() {
            out.add_term(k, v.checked_mul(c).ok_or(PolyError::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = Self::zero();
        for (k1, c1) in self.terms() {
            for (k2, c2) in other.terms() {
                out.add_term(checked_exp(k1, k2)?, c1.checked_mul(c2).ok_or(PolyError::Overflow)?)?;
            }
        }
        Ok(out)
    }

    pub fn checked_pow(&self, k: u32) -> Result<Self, PolyError> {
        let mut out = Self::from_terms([(0, 1)]);
        for _ in 0..k {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }

    /// Exact quotient by a divisor whose leading coefficient is a unit.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (Some(d_top), Some(d_bottom)) = (divisor.max_degree(), divisor.min_degree()) else {
            return Err(PolyError::InexactDivision);
        };
        let lead = divisor.leading_coeff();
        if lead.abs() != 1 {
            return Err(PolyError::InexactDivision);
        }
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        let floor = self.min_degree().unwrap_or(0);
        while let Some(top) = rem.max_degree() {
            if top - (d_top - d_bottom) < floor {
                break;
            }
            let c = rem.coeff(top) * lead;
            let shift = top - d_top;
            quotient.add_term(shift, c)?;
            for (k, v) in divisor.terms() {
                rem.add_term(k + shift, -(v.checked_mul(c).ok_or(PolyError::Overflow)?))?;
            }
        }
        if rem.is_zero() {
            Ok(quotient)
        } else {
            Err(PolyError::InexactDivision)
        }
    }
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms().enumerate() {
            let mut factors = Vec::new();
            push_power(&mut factors, "s", k);
            write_signed_term(f, i == 0, c, &factors)?;
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly1 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            s: i32,
            c: i64,
        }
        let terms: Vec<Term> = self.terms().map(|(s, c)| Term { s, c }).collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly1 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            s: i32,
            c: i64,
        }
        let mut out = Self::zero();
        for t in Vec::<Term>::deserialize(deserializer)? {
            out.add_term(t.s, t.c).map_err(serde::de::Error::custom)?;
        }
        Ok(out)
    }
}
