use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::epoly::write_sum;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::ring::{format_rat, parse_rat, Rat, Ring};

/// Element of `B_r` in the Schur basis: `sum c_λ Δ_λ(H_r)` over partitions
/// with at most `r` parts. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SchurVector {
    r: usize,
    terms: BTreeMap<Partition, Rat>,
}

impl SchurVector {
    pub fn zero(r: usize) -> Self {
        SchurVector {
            r,
            terms: BTreeMap::new(),
        }
    }

    /// `Δ_∅ = 1`.
    pub fn one(r: usize) -> Self {
        Self::constant(r, Rat::one())
    }

    pub fn constant(r: usize, c: Rat) -> Self {
        let mut v = Self::zero(r);
        v.push(Partition::empty(), c);
        v
    }

    /// The basis class `Δ_λ(H_r)`. Partitions longer than `r` are rejected.
    pub fn basis(lambda: Partition, r: usize) -> Result<Self> {
        Self::from_terms(r, [(lambda, Rat::one())])
    }

    /// `h_n = Δ_{(n)}`, zero for negative `n`.
    pub fn h(n: i64, r: usize) -> Self {
        match n {
            n if n < 0 => Self::zero(r),
            0 => Self::one(r),
            _ if r == 0 => Self::zero(r),
            n => Self::basis(Partition::row(n as usize), r).expect("one row fits when r >= 1"),
        }
    }

    pub fn from_terms(r: usize, terms: impl IntoIterator<Item = (Partition, Rat)>) -> Result<Self> {
        let mut v = Self::zero(r);
        for (lambda, c) in terms {
            if lambda.length() > r {
                return Err(Error::LengthExceedsTruncation {
                    partition: lambda,
                    r,
                });
            }
            v.push(lambda, c);
        }
        Ok(v)
    }

    /// Adds `c Δ_λ`, silently dropping partitions longer than `r` since those
    /// classes vanish in `B_r`. Only for use where that vanishing is intended.
    pub(crate) fn push_truncating(&mut self, lambda: Partition, c: Rat) {
        if lambda.length() <= self.r {
            self.push(lambda, c);
        }
    }

    fn push(&mut self, lambda: Partition, c: Rat) {
        debug_assert!(lambda.length() <= self.r);
        if Zero::is_zero(&c) {
            return;
        }
        let sum = match self.terms.remove(&lambda) {
            Some(old) => old + c,
            None => c,
        };
        if !Zero::is_zero(&sum) {
            self.terms.insert(lambda, sum);
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rat {
        self.terms.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    /// True when every basis class has weight `w`.
    pub fn is_homogeneous_of_weight(&self, w: usize) -> bool {
        self.terms.keys().all(|l| l.weight() == w)
    }

    /// Exact product in `B_r`, via the e-monomial coordinates.
    pub fn mult(&self, other: &SchurVector) -> Result<SchurVector> {
        if self.r != other.r {
            return Err(Error::TruncationMismatch {
                left: self.r,
                right: other.r,
            });
        }
        let p = super::schur_to_epoly(self).times(&super::schur_to_epoly(other));
        Ok(super::epoly_to_schur(&p))
    }
}

impl Ring for SchurVector {
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
        assert_eq!(self.r, other.r, "SchurVector truncation mismatch");
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.push(k.clone(), v.clone());
        }
        out
    }
    fn times(&self, other: &Self) -> Self {
        self.mult(other).expect("SchurVector truncation mismatch")
    }
    fn scaled(&self, c: &Rat) -> Self {
        if Zero::is_zero(c) {
            return self.zero_like();
        }
        SchurVector {
            r: self.r,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }
}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(
            f,
            self.terms.iter().rev(),
            |k: &Partition| k.is_empty(),
            |f, k| write!(f, "S({k})"),
        )
    }
}

impl fmt::Debug for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurVector[r={}]({self})", self.r)
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct WireSchur {
    r: usize,
    terms: Vec<WireTerm>,
}

impl Serialize for SchurVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WireSchur {
            r: self.r,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| WireTerm {
                    partition: k.clone(),
                    coeff: format_rat(v),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = WireSchur::deserialize(d)?;
        let terms = w
            .terms
            .into_iter()
            .map(|t| Ok((t.partition, parse_rat(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        SchurVector::from_terms(w.r, terms).map_err(serde::de::Error::custom)
    }
}
