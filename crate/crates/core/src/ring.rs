//! Exact scalars, the commutative-ring interface shared by every coefficient
//! type in the crate, Laurent polynomials in `z`, and determinants.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `"p/q"`, or `"p"` when integral.
pub fn format_rat(q: &Rat) -> String {
    q.to_string()
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rat {
    Rat::from_integer((1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k)))
}

pub fn binomial(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rat::from_integer(acc)
}

/// A commutative Q-algebra with elements that know their own ambient ring.
///
/// Elements such as [`crate::EPoly`] carry a truncation order, so the additive
/// and multiplicative identities are produced from an existing element.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Rat) -> Self;

    fn negated(&self) -> Self {
        self.scaled(&-Rat::one())
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn from_rat_like(&self, c: &Rat) -> Self {
        self.one_like().scaled(c)
    }

    fn pow(&self, k: u32) -> Self {
        (0..k).fold(self.one_like(), |acc, _| acc.times(self))
    }
}

impl Ring for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Rat) -> Self {
        self * c
    }
    fn negated(&self) -> Self {
        -self
    }
}

pub(crate) fn sign_rat(negative: bool) -> Rat {
    if negative {
        -Rat::one()
    } else {
        Rat::one()
    }
}

pub(crate) fn alternating(k: usize) -> Rat {
    sign_rat(k % 2 == 1)
}

/// Finite Laurent polynomial `sum c_k z^k` over a coefficient ring.
///
/// The `zero` prototype fixes the coefficient ring (and its truncation order)
/// even when no terms are stored.
#[derive(Clone, PartialEq)]
pub struct Laurent<T: Ring> {
    terms: BTreeMap<i64, T>,
    zero: T,
}

impl<T: Ring> Laurent<T> {
    pub fn zero(proto: &T) -> Self {
        Laurent {
            terms: BTreeMap::new(),
            zero: proto.zero_like(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, c: T) -> Self {
        let mut out = Self::zero(&c);
        out.add_term(exp, c);
        out
    }

    pub fn from_terms(proto: &T, terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut out = Self::zero(proto);
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, exp: i64, c: T) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&exp) {
            Some(old) => old.plus(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(exp, sum);
        }
    }

    pub fn coeff(&self, exp: i64) -> T {
        self.terms
            .get(&exp)
            .cloned()
            .unwrap_or_else(|| self.zero.clone())
    }

    pub fn coeff_ref(&self, exp: i64) -> Option<&T> {
        self.terms.get(&exp)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn proto(&self) -> &T {
        &self.zero
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
            zero: self.zero.clone(),
        }
    }

    /// Drops every term with exponent outside `lo..=hi`.
    pub fn window(&self, lo: i64, hi: i64) -> Self {
        Laurent {
            terms: self
                .terms
                .range(lo..=hi)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
            zero: self.zero.clone(),
        }
    }

    pub fn scale_by(&self, c: &T) -> Self {
        let mut out = Self::zero(&self.zero);
        for (e, v) in &self.terms {
            out.add_term(*e, v.times(c));
        }
        out
    }

    pub fn map<U: Ring>(&self, proto: &U, f: impl Fn(&T) -> U) -> Laurent<U> {
        let mut out = Laurent::zero(proto);
        for (e, v) in &self.terms {
            out.add_term(*e, f(v));
        }
        out
    }
}

impl<T: Ring> fmt::Debug for Laurent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<T: Ring> Ring for Laurent<T> {
    fn zero_like(&self) -> Self {
        Self::zero(&self.zero)
    }
    fn one_like(&self) -> Self {
        Self::constant(self.zero.one_like())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.zero);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a + b, x.times(y));
            }
        }
        out
    }
    fn scaled(&self, c: &Rat) -> Self {
        let mut out = Self::zero(&self.zero);
        for (e, v) in &self.terms {
            out.add_term(*e, v.scaled(c));
        }
        out
    }
}

/// Determinant by Laplace expansion along rows, memoizing minors by the set of
/// columns still available. The matrix must be square with at most 63 columns;
/// `one` supplies the value of the empty determinant.
pub fn determinant<T: Ring>(matrix: &[Vec<T>], one: &T) -> T {
    let n = matrix.len();
    assert!(
        matrix.iter().all(|row| row.len() == n),
        "matrix must be square"
    );
    assert!(n < 64, "matrix too large for bitmask minors");
    let mut memo: HashMap<u64, T> = HashMap::new();
    minor(matrix, 0, (1u64 << n) - 1, one, &mut memo)
}

fn minor<T: Ring>(m: &[Vec<T>], row: usize, cols: u64, one: &T, memo: &mut HashMap<u64, T>) -> T {
    if row == m.len() {
        return one.clone();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = one.zero_like();
    let mut sign_negative = false;
    for c in 0..m.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let sub = minor(m, row + 1, cols & !(1 << c), one, memo);
            let term = entry.times(&sub);
            acc = if sign_negative {
                acc.minus(&term)
            } else {
                acc.plus(&term)
            };
        }
        sign_negative = !sign_negative;
    }
    memo.insert(cols, acc.clone());
    acc
}

pub(crate) fn is_negative(q: &Rat) -> bool {
    q.is_negative()
}
