use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ring::{format_rat, is_negative, parse_rat, Rat, Ring};

/// Element of `B_r = Q[e_1, ..., e_r]`, stored as a sparse map from exponent
/// vectors of length exactly `r` to nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EPoly {
    r: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl EPoly {
    pub fn zero(r: usize) -> Self {
        EPoly {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(r: usize) -> Self {
        Self::constant(r, Rat::one())
    }

    pub fn constant(r: usize, c: Rat) -> Self {
        Self::monomial(r, vec![0; r], c)
    }

    /// The generator `e_i`; `e_0 = 1` and `e_i = 0` for `i > r`.
    pub fn e(i: usize, r: usize) -> Self {
        if i == 0 {
            return Self::one(r);
        }
        if i > r {
            return Self::zero(r);
        }
        let mut exps = vec![0; r];
        exps[i - 1] = 1;
        Self::monomial(r, exps, Rat::one())
    }

    /// `(-1)^i e_i`.
    pub fn signed_e(i: usize, r: usize) -> Self {
        let e = Self::e(i, r);
        if i % 2 == 1 {
            e.negated()
        } else {
            e
        }
    }

    /// Monomial `c * prod e_k^{exps[k-1]}`. Shorter exponent vectors are padded;
    /// nonzero exponents past `r` make the monomial vanish.
    pub fn monomial(r: usize, mut exps: Vec<u32>, c: Rat) -> Self {
        let mut out = Self::zero(r);
        if exps.iter().skip(r).any(|&a| a > 0) {
            return out;
        }
        exps.resize(r, 0);
        out.add_term(exps, c);
        out
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        let mut key = exps.to_vec();
        key.resize(self.r, 0);
        self.terms.get(&key).cloned().unwrap_or_else(Rat::zero)
    }

    /// Graded degree with `deg e_i = i`; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|ex| {
                ex.iter()
                    .enumerate()
                    .map(|(i, &a)| (i + 1) * a as usize)
                    .sum()
            })
            .max()
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        debug_assert_eq!(exps.len(), self.r);
        if Zero::is_zero(&c) {
            return;
        }
        let sum = match self.terms.remove(&exps) {
            Some(old) => old + c,
            None => c,
        };
        if !Zero::is_zero(&sum) {
            self.terms.insert(exps, sum);
        }
    }

    /// Evaluates at rational values `e_i = values[i-1]`, which specializes the
    /// generic coefficients to a concrete operator.
    pub fn evaluate(&self, values: &[Rat]) -> Rat {
        assert!(values.len() >= self.r, "need a value for every e_i");
        let mut acc = Rat::zero();
        for (exps, c) in &self.terms {
            let mut t = c.clone();
            for (i, &a) in exps.iter().enumerate() {
                for _ in 0..a {
                    t *= &values[i];
                }
            }
            acc += t;
        }
        acc
    }
}

impl Ring for EPoly {
    fn zero_like(&self) -> Self {
        Self::zero(self.r)
    }
    fn one_like(&self) -> Self {
        Self::one(self.r)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r, "EPoly truncation mismatch");
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
    fn times(&self, other: &Self) -> Self {
        assert_eq!(self.r, other.r, "EPoly truncation mismatch");
        let mut out = Self::zero(self.r);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let exps = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(exps, x * y);
            }
        }
        out
    }
    fn scaled(&self, c: &Rat) -> Self {
        if Zero::is_zero(c) {
            return self.zero_like();
        }
        EPoly {
            r: self.r,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }
}

pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, var: char, exps: &[u32]) -> fmt::Result {
    let mut first = true;
    for (i, &a) in exps.iter().enumerate() {
        if a == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{var}{}", i + 1)?;
        if a > 1 {
            write!(f, "^{a}")?;
        }
    }
    Ok(())
}

pub(crate) fn write_sum<'a, K: 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a K, &'a Rat)>,
    is_unit: impl Fn(&K) -> bool,
    mut basis: impl FnMut(&mut fmt::Formatter<'_>, &K) -> fmt::Result,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        let neg = is_negative(c);
        let abs = if neg { -c.clone() } else { c.clone() };
        match (first, neg) {
            (true, true) => write!(f, "-")?,
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
            (true, false) => {}
        }
        first = false;
        if is_unit(k) {
            write!(f, "{abs}")?;
        } else {
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            basis(f, k)?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // highest degree first reads more naturally
        write_sum(
            f,
            self.terms.iter().rev(),
            |k: &Vec<u32>| k.iter().all(|&a| a == 0),
            |f, k| write_monomial(f, 'e', k),
        )
    }
}

impl fmt::Debug for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EPoly[r={}]({self})", self.r)
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct WireTerm {
    pub exps: Vec<u32>,
    pub coeff: String,
}

#[derive(Serialize, Deserialize)]
struct WireEPoly {
    r: usize,
    terms: Vec<WireTerm>,
}

impl Serialize for EPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        WireEPoly {
            r: self.r,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| WireTerm {
                    exps: k.clone(),
                    coeff: format_rat(v),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = WireEPoly::deserialize(d)?;
        let mut out = EPoly::zero(w.r);
        for t in w.terms {
            if t.exps.len() > w.r && t.exps[w.r..].iter().any(|&a| a > 0) {
                return Err(serde::de::Error::custom(format!(
                    "exponent vector {:?} exceeds r = {}",
                    t.exps, w.r
                )));
            }
            let c = parse_rat(&t.coeff).map_err(serde::de::Error::custom)?;
            out = out.plus(&EPoly::monomial(w.r, t.exps, c));
        }
        Ok(out)
    }
}
