//! Integer partitions and the vertical-strip combinatorics behind the Pieri rule.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored, so the empty partition is the only partition of weight 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Normalizes `parts` by stripping trailing zeros. Fails on any strictly
    /// increasing adjacent pair.
    pub fn new(parts: &[usize]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts.to_vec()));
        }
        let len = parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        Ok(Partition {
            parts: parts[..len].to_vec(),
        })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to exactly `n` entries (`n >= length`).
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// `(λ_1 + 1, ..., λ_r + 1)`, padding with zeros to `r` parts first.
    pub fn add_column(&self, r: usize) -> Partition {
        Partition::from_sorted(self.padded(r).into_iter().map(|p| p + 1).collect())
    }

    /// All partitions of `n` with at most `max_len` parts, in lexicographic
    /// descending order.
    pub fn all_of_weight(n: usize, max_len: usize) -> Vec<Partition> {
        fn go(
            rest: usize,
            cap: usize,
            slots: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if rest == 0 {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=cap.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with weight at most `max_weight` and at most `max_len` parts.
    pub fn all_up_to(max_weight: usize, max_len: usize) -> Vec<Partition> {
        (0..=max_weight)
            .flat_map(|n| Self::all_of_weight(n, max_len))
            .collect()
    }
}

/// Every `μ = λ + (i_1, ..., i_r)` with `i_j ∈ {0, 1}`, `Σ i_j = i`, that is
/// again a partition. Results are distinct and sorted lexicographically
/// descending; the list is empty when `i > r`.
pub fn add_vertical_strip(lambda: &Partition, i: usize, r: usize) -> Vec<Partition> {
    if i > r {
        return Vec::new();
    }
    let base = lambda.padded(r);
    let mut out = Vec::new();
    for_each_subset(r, i, &mut |chosen| {
        let mut mu = base.clone();
        for &j in chosen {
            mu[j] += 1;
        }
        if mu.windows(2).all(|w| w[0] >= w[1]) {
            out.push(Partition::from_sorted(mu));
        }
    });
    canonical_order(out)
}

/// Every `μ` with `λ_j - μ_j ∈ {0, 1}` and total removal `i`.
pub fn remove_vertical_strip(lambda: &Partition, i: usize) -> Vec<Partition> {
    let base = lambda.parts().to_vec();
    let mut out = Vec::new();
    for_each_subset(base.len(), i, &mut |chosen| {
        let mut mu = base.clone();
        for &j in chosen {
            mu[j] -= 1;
        }
        if mu.windows(2).all(|w| w[0] >= w[1]) {
            out.push(Partition::from_sorted(mu));
        }
    });
    canonical_order(out)
}

fn canonical_order(mut v: Vec<Partition>) -> Vec<Partition> {
    v.sort_by(|a, b| b.cmp(a));
    v.dedup();
    v
}

fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for j in start..n {
            if n - j < k - cur.len() {
                break;
            }
            cur.push(j);
            go(j + 1, n, k, cur, f);
            cur.pop();
        }
    }
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), f);
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,2,1"`; `"0"` and `""` give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("invalid partition {s:?}")))?;
        Partition::new(&parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
