//! Exact coefficient arithmetic: arbitrary-precision rationals, sparse
//! Laurent polynomials in `q`, and the field Q(q) of rational functions,
//! together with the q-bracket, q-factorial and Gaussian binomial
//! constructors that everything else is built from.
//!
//! All values are immutable after construction and every operation is pure.
//!
//! Wire formats (these must round-trip bit-exactly):
//! - Laurent polynomial text: terms sorted by ascending exponent, e.g.
//!   `-1*q^-2 + 2 + 1*q^3`.
//! - Rational function text: `( <num> ) / ( <den> )`.
//! - JSON: `{"num": [[exp, "p/q"], ...], "den": [[exp, "p/q"], ...]}` with
//!   exponents ascending.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::{Error, Result};

/// Arbitrary-precision rational number. Always reduced, denominator positive,
/// zero is 0/1; the backing type maintains these invariants on construction.
pub type Rational = num_rational::BigRational;

/// `n` as a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a [`Rational`]. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// A sparse Laurent polynomial in `q` with rational coefficients.
///
/// Exponents may be negative; no zero coefficients are stored. Sparse
/// exponent storage is used because exponents grow quadratically in the
/// enumeration parameters.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, rat(1))
    }

    /// The monomial `coeff * q^exp`. A zero coefficient yields the zero polynomial.
    pub fn monomial(exp: i64, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, rat(1))
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, rat(1))
    }

    /// `1 - q^m`. The zero polynomial when `m == 0`.
    pub fn one_minus_q_pow(m: i64) -> Self {
        &Self::one() - &Self::q_pow(m)
    }

    /// Builds a polynomial from arbitrary (exponent, coefficient) pairs,
    /// summing duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in iter {
            if c.is_zero() {
                continue;
            }
            let entry = terms.entry(e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        Self { terms }
    }

    /// Builds a polynomial with integer coefficients, e.g. from signed
    /// enumeration counts.
    pub fn from_integer_terms<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        Self::from_terms(iter.into_iter().map(|(e, c)| (e, rat(c))))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Lowest exponent; `None` for the zero polynomial.
    pub fn low(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent; `None` for the zero polynomial.
    pub fn high(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Multiplies by `q^e`.
    pub fn shifted(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    /// Exact substitution `q := v`. Negative exponents at `v == 0` are a pole.
    pub fn eval(&self, v: &Rational) -> Result<Rational> {
        if v.is_zero() && self.low().is_some_and(|l| l < 0) {
            return Err(Error::Pole(v.to_string()));
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rat(v, *e)?;
        }
        Ok(acc)
    }

    /// Canonical text form: ascending exponents, every coefficient printed
    /// with an explicit `*q^exp` except the constant term.
    pub fn to_canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                if *e == 0 {
                    c.to_string()
                } else {
                    format!("{c}*q^{e}")
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Parses the canonical text form produced by [`Self::to_canonical_text`].
    pub fn from_canonical_text(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut terms = Vec::new();
        for part in s.split(" + ") {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            let (coef_str, exp) = match part.split_once("*q^") {
                Some((c, e)) => {
                    let exp: i64 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {part:?}")))?;
                    (c, exp)
                }
                None => (part, 0),
            };
            let coeff = Rational::from_str(coef_str)
                .map_err(|_| Error::Parse(format!("bad coefficient in {part:?}")))?;
            terms.push((exp, coeff));
        }
        Ok(Self::from_terms(terms))
    }

    /// JSON wire form: `[[exp, "p/q"], ...]`, exponents ascending.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| json!([e, c.to_string()]))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("expected array of [exp, coeff] pairs".into()))?;
        let mut terms = Vec::with_capacity(arr.len());
        for pair in arr {
            let pair = pair
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Parse("expected [exp, coeff] pair".into()))?;
            let e = pair[0]
                .as_i64()
                .ok_or_else(|| Error::Parse("exponent must be an integer".into()))?;
            let c = pair[1]
                .as_str()
                .ok_or_else(|| Error::Parse("coefficient must be a string".into()))?;
            let c = Rational::from_str(c)
                .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms))
    }

    /// Human-oriented form: unit coefficients elided, `-` used as separator.
    fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => out.push_str(&mag.to_string()),
                (1, true) => out.push('q'),
                (1, false) => out.push_str(&format!("{mag}*q")),
                (_, true) => out.push_str(&format!("q^{e}")),
                (_, false) => out.push_str(&format!("{mag}*q^{e}")),
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_text())
    }
}

fn pow_rat(v: &Rational, e: i64) -> Result<Rational> {
    if e == 0 {
        return Ok(Rational::one());
    }
    if v.is_zero() {
        return if e > 0 {
            Ok(Rational::zero())
        } else {
            Err(Error::Pole(v.to_string()))
        };
    }
    let mut base = if e > 0 { v.clone() } else { v.recip() };
    let mut e = e.unsigned_abs();
    let mut acc = Rational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    Ok(acc)
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(*e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPolynomial { terms }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1 + e2;
                let entry = terms.entry(e).or_insert_with(Rational::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        LaurentPolynomial { terms }
    }
}

// ---------------------------------------------------------------------------
// Dense ordinary-polynomial helpers used for gcd and exact division. These
// operate on coefficient vectors in ascending degree with a nonzero leading
// coefficient (except for the zero polynomial, the empty vector).

fn to_dense(p: &LaurentPolynomial) -> (i64, Vec<Rational>) {
    match p.low() {
        None => (0, Vec::new()),
        Some(low) => {
            let high = p.high().unwrap();
            let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
            for (e, c) in &p.terms {
                coeffs[(e - low) as usize] = c.clone();
            }
            (low, coeffs)
        }
    }
}

fn from_dense(shift: i64, coeffs: &[Rational]) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (shift + i as i64, c.clone())),
    )
}

fn dense_trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Exact Euclidean division of dense polynomials over Q. Returns (quot, rem).
fn dense_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem: Vec<Rational> = a.to_vec();
    dense_trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    let lead = b.last().unwrap();
    while rem.len() >= b.len() {
        let d = rem.len() - b.len();
        let c = rem.last().unwrap() / lead;
        quot[d] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let idx = d + i;
            let v = &rem[idx] - &(bc * &c);
            rem[idx] = v;
        }
        dense_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    dense_trim(&mut quot);
    (quot, rem)
}

/// Clears denominators and divides out the integer content; returns the
/// primitive integer coefficient vector with the same roots.
fn dense_primitive_int(a: &[Rational]) -> Vec<BigInt> {
    use num_integer::Integer;
    if a.is_empty() {
        return Vec::new();
    }
    let mut lcm = BigInt::one();
    for c in a {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = a.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if content.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &content).collect()
}

/// Primitive polynomial remainder sequence gcd over Z; result is primitive
/// with positive leading coefficient.
fn int_poly_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    use num_integer::Integer;
    loop {
        if b.is_empty() {
            if a.last().is_some_and(|c| c.is_negative()) {
                a = a.into_iter().map(|c| -c).collect();
            }
            return a;
        }
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        // fraction-free pseudo-remainder of a by b
        let lead = b.last().unwrap().clone();
        let mut rem = a.clone();
        while rem.len() >= b.len() {
            let d = rem.len() - b.len();
            let top = rem.last().unwrap().clone();
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            for (i, bc) in b.iter().enumerate() {
                rem[d + i] -= bc * &top;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        // primitive part keeps coefficient growth in check
        let mut content = BigInt::zero();
        for c in &rem {
            content = content.gcd(c);
        }
        if !content.is_zero() {
            rem = rem.into_iter().map(|c| c / &content).collect();
        }
        a = b;
        b = rem;
    }
}

fn dense_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let g = int_poly_gcd(dense_primitive_int(a), dense_primitive_int(b));
    g.into_iter().map(Rational::from_integer).collect()
}

// ---------------------------------------------------------------------------

/// An element of Q(q) in canonical form.
///
/// Canonical form: the gcd of numerator and denominator is removed, the
/// denominator is an ordinary polynomial (lowest exponent 0) and is monic,
/// so its leading coefficient is 1 > 0; the numerator carries any remaining
/// power-of-q shift. Equality of canonical forms is structural, and
/// construction through any public operation canonicalizes, so
/// canonicalization is idempotent by design.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    /// Builds `num / den` in canonical form. Errors if `den` is zero.
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(Self {
                num: LaurentPolynomial::zero(),
                den: LaurentPolynomial::one(),
            });
        }
        let (nlow, ncoeffs) = to_dense(&num);
        let (dlow, dcoeffs) = to_dense(&den);
        let shift = nlow - dlow;
        let g = dense_gcd(&ncoeffs, &dcoeffs);
        let (mut n, mut d) = if g.len() > 1 {
            let (nq, nr) = dense_divrem(&ncoeffs, &g);
            let (dq, dr) = dense_divrem(&dcoeffs, &g);
            debug_assert!(nr.is_empty() && dr.is_empty(), "gcd must divide exactly");
            (nq, dq)
        } else {
            (ncoeffs, dcoeffs)
        };
        let lead = d.last().expect("nonzero denominator").clone();
        if !lead.is_one() {
            for c in n.iter_mut() {
                *c /= &lead;
            }
            for c in d.iter_mut() {
                *c /= &lead;
            }
        }
        Ok(Self {
            num: from_dense(shift, &n),
            den: from_dense(0, &d),
        })
    }

    pub fn from_laurent(p: LaurentPolynomial) -> Self {
        Self {
            num: p,
            den: LaurentPolynomial::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_laurent(LaurentPolynomial::monomial(0, c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `q^exp` as a rational function.
    pub fn q_pow(exp: i64) -> Self {
        Self::from_laurent(LaurentPolynomial::q_pow(exp))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    /// The polynomial content when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPolynomial> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.recip()?.pow(-e);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Exact substitution `q := v`. Errors when the denominator vanishes at
    /// `v`, or when `v == 0` hits a negative power of q.
    pub fn eval_at(&self, v: &Rational) -> Result<Rational> {
        let d = self.den.eval(v)?;
        if d.is_zero() {
            return Err(Error::Pole(v.to_string()));
        }
        Ok(self.num.eval(v)? / d)
    }

    pub fn to_canonical_text(&self) -> String {
        format!(
            "( {} ) / ( {} )",
            self.num.to_canonical_text(),
            self.den.to_canonical_text()
        )
    }

    pub fn from_canonical_text(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix("( ")
            .and_then(|t| t.strip_suffix(" )"))
            .ok_or_else(|| Error::Parse(format!("bad rational function text {s:?}")))?;
        let (n, d) = inner
            .split_once(" ) / ( ")
            .ok_or_else(|| Error::Parse(format!("bad rational function text {s:?}")))?;
        Self::new(
            LaurentPolynomial::from_canonical_text(n)?,
            LaurentPolynomial::from_canonical_text(d)?,
        )
    }

    /// JSON wire form `{"num": ..., "den": ...}`.
    pub fn to_json(&self) -> Value {
        json!({"num": self.num.to_json(), "den": self.den.to_json()})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let num = v
            .get("num")
            .ok_or_else(|| Error::Parse("missing \"num\"".into()))?;
        let den = v
            .get("den")
            .ok_or_else(|| Error::Parse("missing \"den\"".into()))?;
        Self::new(
            LaurentPolynomial::from_json(num)?,
            LaurentPolynomial::from_json(den)?,
        )
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "( {} ) / ( {} )", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_text())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("denominator product is nonzero")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("denominator product is nonzero")
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    /// Panics on a zero divisor; use [`RationalFunction::checked_div`] to get
    /// an error instead.
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("zero divisor")
    }
}

impl RationalFunction {
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

// ---------------------------------------------------------------------------
// q-brackets, q-factorials and Gaussian binomials.

/// The q-bracket `(1 - q^m) / (1 - q^t)`.
///
/// The base-`t` form takes the pre-multiplied exponent, so a bracket of a
/// half-integral argument `x` in base q² is requested as `qbracket(2x, 2)`
/// and every exponent stays integral. With `t == 1` this is the ordinary
/// bracket `[m;q] = 1 + q + ... + q^{m-1}`; when `t | m` the result reduces
/// to a Laurent polynomial.
pub fn qbracket(m: i64, t: i64) -> RationalFunction {
    assert!(t >= 1, "qbracket base must be positive");
    RationalFunction::new(
        LaurentPolynomial::one_minus_q_pow(m),
        LaurentPolynomial::one_minus_q_pow(t),
    )
    .expect("1 - q^t is nonzero for t >= 1")
}

/// The q-factorial `[a;q^t]_n = prod_{i=0}^{n-1} qbracket(a + i*t, t)`
/// (arguments pre-multiplied by the base as in [`qbracket`]).
/// The empty product (`n == 0`) is 1.
pub fn qfac(a: i64, n: i64, t: i64) -> RationalFunction {
    assert!(n >= 0, "qfac length must be non-negative");
    let mut acc = RationalFunction::one();
    for i in 0..n {
        acc = &acc * &qbracket(a + i * t, t);
    }
    acc
}

/// The Gaussian binomial coefficient: `[n-k+1;q]_k / [1;q]_k` for
/// `0 <= k <= n` and exactly 0 otherwise.
pub fn qbinom(n: i64, k: i64) -> RationalFunction {
    if k < 0 || n < 0 || k > n {
        return RationalFunction::zero();
    }
    qfac(n - k + 1, k, 1)
        .checked_div(&qfac(1, k, 1))
        .expect("[1;q]_k is nonzero")
}

/// Exact substitution `q := v` into a rational function.
pub fn eval_q_at(f: &RationalFunction, v: &Rational) -> Result<Rational> {
    f.eval_at(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_integer_terms(terms.iter().copied())
    }

    fn rf(terms: &[(i64, i64)]) -> RationalFunction {
        RationalFunction::from_laurent(lp(terms))
    }

    #[test]
    fn qbracket_examples() {
        assert!(qbracket(0, 1).is_zero());
        assert_eq!(qbracket(3, 1), rf(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(qbracket(-2, 1), rf(&[(-2, -1), (-1, -1)]));
        // (1 - q^5)/(1 - q^2): check by clearing the denominator.
        let b = qbracket(5, 2);
        let lhs = &b * &rf(&[(0, 1), (2, -1)]);
        assert_eq!(lhs, rf(&[(0, 1), (5, -1)]));
    }

    #[test]
    fn qfac_examples() {
        assert!(qfac(2, 0, 1).is_one());
        assert_eq!(qfac(1, 2, 1), rf(&[(0, 1), (1, 1)]));
        // [2;q][3;q][4;q] against a direct polynomial-multiplication oracle.
        let direct = &(&lp(&[(0, 1), (1, 1)]) * &lp(&[(0, 1), (1, 1), (2, 1)]))
            * &lp(&[(0, 1), (1, 1), (2, 1), (3, 1)]);
        assert_eq!(qfac(2, 3, 1), RationalFunction::from_laurent(direct));
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom(2, 1), rf(&[(0, 1), (1, 1)]));
        assert!(qbinom(3, 5).is_zero());
        assert!(qbinom(3, -1).is_zero());
        assert!(qbinom(-2, 0).is_zero());
        // [3;q][4;q] / ([1;q][2;q]) expanded by hand.
        assert_eq!(qbinom(4, 2), rf(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)]));
    }

    #[test]
    fn qbinom_symmetry_and_pascal() {
        for n in 0..=10i64 {
            for k in 0..=n {
                assert_eq!(qbinom(n, k), qbinom(n, n - k));
            }
        }
        for n in 1..=10i64 {
            for k in 1..=n {
                let rhs = &qbinom(n - 1, k - 1) + &(&RationalFunction::q_pow(k) * &qbinom(n - 1, k));
                assert_eq!(qbinom(n, k), rhs, "pascal failed at n={n} k={k}");
            }
        }
    }

    #[test]
    fn bracket_reflection() {
        // [z;q]_n = [-z-n+1;q]_n * (-1)^n * q^{n*z + n(n-1)/2}
        for n in 0..=6i64 {
            for z in -8..=8i64 {
                let lhs = qfac(z, n, 1);
                let sign = if n % 2 == 0 { 1 } else { -1 };
                let rhs = &(&qfac(-z - n + 1, n, 1) * &RationalFunction::from_int(sign))
                    * &RationalFunction::q_pow(n * z + n * (n - 1) / 2);
                assert_eq!(lhs, rhs, "reflection failed at z={z} n={n}");
            }
        }
    }

    #[test]
    fn field_ops() {
        let one_plus_q = rf(&[(0, 1), (1, 1)]);
        let one_minus_q = rf(&[(0, 1), (1, -1)]);
        assert_eq!(&one_plus_q * &one_minus_q, rf(&[(0, 1), (2, -1)]));

        let x = qbracket(7, 2);
        assert!((&x / &x).is_one());

        assert_eq!(
            &qbracket(6, 1) / &qbracket(3, 1),
            rf(&[(0, 1), (3, 1)]),
            "[6]/[3] = 1 + q^3"
        );

        assert!(RationalFunction::one()
            .checked_div(&RationalFunction::zero())
            .is_err());
    }

    #[test]
    fn canonical_form_is_stable() {
        // The same value constructed along different routes has an identical
        // representation: monic ordinary denominator, shift on the numerator.
        let a = RationalFunction::new(lp(&[(-3, 2), (0, 2)]), lp(&[(1, 4)])).unwrap();
        let b = &(&rf(&[(-4, 1), (-1, 1)]) * &rf(&[(0, 1)])) * &rf(&[(0, 1)]).pow(1).unwrap();
        let b = &b * &RationalFunction::from_rational(ratio(1, 2));
        assert_eq!(a, b);
        assert_eq!(a.denominator().low(), Some(0));
        assert!(a
            .denominator()
            .coeff(a.denominator().high().unwrap())
            .is_one());

        let again = RationalFunction::new(a.numerator().clone(), a.denominator().clone()).unwrap();
        assert_eq!(a, again, "canonicalization is idempotent");
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_q_at(&rf(&[(0, 1), (1, 1), (2, 1)]), &rat(1)).unwrap(), rat(3));
        assert_eq!(eval_q_at(&qbracket(0, 1), &ratio(7, 3)).unwrap(), rat(0));
        assert_eq!(eval_q_at(&qbinom(4, 2), &rat(2)).unwrap(), rat(35));
        // pole detection
        let f = RationalFunction::new(lp(&[(0, 1)]), lp(&[(0, 1), (1, -1)])).unwrap();
        assert!(matches!(f.eval_at(&rat(1)), Err(Error::Pole(_))));
        let g = RationalFunction::from_laurent(lp(&[(-1, 1)]));
        assert!(matches!(g.eval_at(&rat(0)), Err(Error::Pole(_))));
    }

    #[test]
    fn eval_commutes_with_arithmetic() {
        let xs = [qbracket(5, 1), qbinom(4, 2), qbracket(-3, 2)];
        let v = ratio(3, 2);
        for a in &xs {
            for b in &xs {
                assert_eq!(
                    eval_q_at(&(a * b), &v).unwrap(),
                    eval_q_at(a, &v).unwrap() * eval_q_at(b, &v).unwrap()
                );
                assert_eq!(
                    eval_q_at(&(a + b), &v).unwrap(),
                    eval_q_at(a, &v).unwrap() + eval_q_at(b, &v).unwrap()
                );
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let p = lp(&[(-2, -1), (0, 2), (3, 1)]);
        assert_eq!(p.to_canonical_text(), "-1*q^-2 + 2 + 1*q^3");
        assert_eq!(
            LaurentPolynomial::from_canonical_text(&p.to_canonical_text()).unwrap(),
            p
        );
        let f = RationalFunction::new(p, lp(&[(0, 2), (1, 2)])).unwrap();
        assert_eq!(
            RationalFunction::from_canonical_text(&f.to_canonical_text()).unwrap(),
            f
        );
        assert_eq!(
            LaurentPolynomial::from_canonical_text("0").unwrap(),
            LaurentPolynomial::zero()
        );
    }

    #[test]
    fn json_round_trip() {
        let f = &qbinom(4, 2) / &qbracket(3, 2);
        let v = f.to_json();
        assert_eq!(RationalFunction::from_json(&v).unwrap(), f);
        let text = serde_json::to_string(&v).unwrap();
        let v2: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&v2).unwrap(), text);
    }

    #[test]
    fn json_wire_form_is_frozen() {
        // golden bytes: pinned so neither the wire format nor the canonical
        // form (the 1+q factor cancels here) can drift
        let f = RationalFunction::new(lp(&[(-2, -1), (0, 2), (3, 1)]), lp(&[(0, 2), (1, 2)]))
            .unwrap();
        assert_eq!(
            serde_json::to_string(&f.to_json()).unwrap(),
            r#"{"den":[[0,"1"]],"num":[[-2,"-1/2"],[-1,"1/2"],[0,"1/2"],[1,"-1/2"],[2,"1/2"]]}"#
        );
        assert_eq!(
            f.to_canonical_text(),
            "( -1/2*q^-2 + 1/2*q^-1 + 1/2 + -1/2*q^1 + 1/2*q^2 ) / ( 1 )"
        );
    }

    #[test]
    fn pretty_display() {
        assert_eq!(rf(&[(0, 1), (2, 1)]).to_string(), "1 + q^2");
        assert_eq!(rf(&[(2, 1)]).to_string(), "q^2");
        assert_eq!(lp(&[(-2, -1), (-1, -1)]).to_string(), "-q^-2 - q^-1");
        assert_eq!(lp(&[(1, 3)]).to_string(), "3*q");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn small_laurent() -> impl Strategy<Value = LaurentPolynomial> {
            proptest::collection::vec((-4i64..=4, -3i64..=3), 0..5)
                .prop_map(LaurentPolynomial::from_integer_terms)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            /// Canonical forms are scale-invariant and idempotent, and
            /// structural equality agrees with cross-multiplication.
            #[test]
            fn canonical_form(num in small_laurent(), den in small_laurent(),
                              scale in small_laurent()) {
                prop_assume!(!den.is_zero());
                prop_assume!(!scale.is_zero());
                let f = RationalFunction::new(num.clone(), den.clone()).unwrap();
                let scaled =
                    RationalFunction::new(&num * &scale, &den * &scale).unwrap();
                prop_assert_eq!(&f, &scaled);
                // cross-multiplication on the raw pairs
                prop_assert_eq!(
                    &(f.numerator() * &den),
                    &(&num * f.denominator())
                );
                let again =
                    RationalFunction::new(f.numerator().clone(), f.denominator().clone())
                        .unwrap();
                prop_assert_eq!(&f, &again);
                prop_assert_eq!(f.denominator().low().unwrap(), 0);
                prop_assert!(f
                    .denominator()
                    .coeff(f.denominator().high().unwrap())
                    .is_one());
            }

            /// Evaluation is a ring homomorphism wherever it is defined.
            #[test]
            fn eval_is_homomorphic(a in small_laurent(), b in small_laurent()) {
                let v = ratio(5, 3);
                let (fa, fb) = (
                    RationalFunction::from_laurent(a),
                    RationalFunction::from_laurent(b),
                );
                prop_assert_eq!(
                    (&fa * &fb).eval_at(&v).unwrap(),
                    fa.eval_at(&v).unwrap() * fb.eval_at(&v).unwrap()
                );
                prop_assert_eq!(
                    (&fa + &fb).eval_at(&v).unwrap(),
                    fa.eval_at(&v).unwrap() + fb.eval_at(&v).unwrap()
                );
            }
        }
    }
}
