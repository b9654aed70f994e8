//! The `r = ∞` picture: `B_∞ = Q[h_1, h_2, ...]` with free generators, the
//! derivations `∂/∂x_j h_n = h_{n-j}`, and the vertex operators
//! `exp(±D(1/z))` with `D(1/z) = sum_{n>=1} (1/(n z^n)) ∂/∂x_n`.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::boson::{jacobi_trudi, WireTerm};
use crate::error::{Error, Result};
use crate::partition::{remove_vertical_strip, Partition};
use crate::ring::{alternating, format_rat, parse_rat, rat, rat_frac, Laurent, Rat, Ring};
use crate::series::{from_json_via_serde, json_via_serde, log_unit_series, SeriesCoeff, TSeries};

/// Polynomial in `h_1, ..., h_M`, stored as exponent vectors of length `M`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HPoly {
    m: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl HPoly {
    pub fn zero(m: usize) -> Self {
        HPoly {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, Rat::one())
    }

    pub fn constant(m: usize, c: Rat) -> Self {
        let mut p = Self::zero(m);
        p.add_term(vec![0; m], c);
        p
    }

    /// The generator `h_n`; `h_0 = 1` and `h_n = 0` for `n < 0`.
    pub fn h(n: i64, m: usize) -> Result<Self> {
        if n < 0 {
            return Ok(Self::zero(m));
        }
        if n == 0 {
            return Ok(Self::one(m));
        }
        let n = n as usize;
        if n > m {
            return Err(Error::InsufficientIndexBound {
                needed: n,
                bound: m,
            });
        }
        let mut exps = vec![0; m];
        exps[n - 1] = 1;
        let mut p = Self::zero(m);
        p.add_term(exps, Rat::one());
        Ok(p)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
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
}

impl Ring for HPoly {
    fn zero_like(&self) -> Self {
        Self::zero(self.m)
    }
    fn one_like(&self) -> Self {
        Self::one(self.m)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "HPoly index bound mismatch");
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
    fn times(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "HPoly index bound mismatch");
        let mut out = Self::zero(self.m);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.iter().zip(b).map(|(p, q)| p + q).collect(), x * y);
            }
        }
        out
    }
    fn scaled(&self, c: &Rat) -> Self {
        if Zero::is_zero(c) {
            return self.zero_like();
        }
        HPoly {
            m: self.m,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::boson::write_sum(
            f,
            self.terms.iter().rev(),
            |k: &Vec<u32>| k.iter().all(|&a| a == 0),
            |f, k| crate::boson::write_monomial(f, 'h', k),
        )
    }
}

impl fmt::Debug for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPoly[M={}]({self})", self.m)
    }
}

#[derive(Serialize, Deserialize)]
struct WireHPoly {
    m: usize,
    terms: Vec<WireTerm>,
}

impl Serialize for HPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WireHPoly {
            m: self.m,
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

impl<'de> Deserialize<'de> for HPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = WireHPoly::deserialize(d)?;
        let mut out = HPoly::zero(w.m);
        for t in w.terms {
            if t.exps.len() > w.m && t.exps[w.m..].iter().any(|&a| a > 0) {
                return Err(serde::de::Error::custom(format!(
                    "exponent vector {:?} exceeds M = {}",
                    t.exps, w.m
                )));
            }
            let mut exps = t.exps;
            exps.resize(w.m, 0);
            out.add_term(exps, parse_rat(&t.coeff).map_err(serde::de::Error::custom)?);
        }
        Ok(out)
    }
}

impl SeriesCoeff for HPoly {
    const RING: &'static str = "hpoly";
    fn to_json(&self) -> serde_json::Value {
        json_via_serde(self)
    }
    fn from_json(v: &serde_json::Value) -> Result<Self> {
        from_json_via_serde(v)
    }
}

/// `∂p/∂x_j`, from `∂h_n/∂x_j = h_{n-j}` and the product rule.
pub fn x_derive(j: usize, p: &HPoly) -> HPoly {
    assert!(j >= 1, "x-derivations are indexed from 1");
    let m = p.m;
    let mut out = HPoly::zero(m);
    for (exps, c) in &p.terms {
        for k in 0..m {
            let a = exps[k];
            if a == 0 {
                continue;
            }
            let n = k + 1;
            if n < j {
                continue;
            }
            let mut e = exps.clone();
            e[k] -= 1;
            if n > j {
                e[n - j - 1] += 1;
            }
            out.add_term(e, c * rat(a as i64));
        }
    }
    out
}

/// One application of `D(1/z)` to a Laurent polynomial, dropping exponents
/// below `-z_order`.
fn d_one_over_z(l: &Laurent<HPoly>, z_order: usize) -> Laurent<HPoly> {
    let mut out = l.zero_like();
    for (e, c) in l.terms() {
        for i in 1..=c.m {
            let exp = e - i as i64;
            if exp < -(z_order as i64) {
                break;
            }
            out.add_term(exp, x_derive(i, c).scaled(&rat_frac(1, i as i64)));
        }
    }
    out
}

/// `exp(sign · D(1/z)) p` through `z^{-z_order}`. Sign `-1` gives `G_∞(z)`
/// and `+1` gives `G_∞^∨(z)`.
pub fn exp_vertex(sign: i32, p: &HPoly, z_order: usize) -> Laurent<HPoly> {
    assert!(sign == 1 || sign == -1, "sign must be ±1");
    let s = rat(sign as i64);
    let mut term = Laurent::constant(p.clone());
    if p.is_zero() {
        return Laurent::zero(p);
    }
    let mut total = term.clone();
    for k in 1..=z_order {
        term = d_one_over_z(&term, z_order).scaled(&(s.clone() * rat_frac(1, k as i64)));
        if term.is_zero() {
            break;
        }
        total = total.plus(&term);
    }
    total
}

/// `exp(±D(1/z))` extended `Q[z^{-1}]`-linearly to a Laurent polynomial.
pub fn exp_vertex_linear(sign: i32, l: &Laurent<HPoly>, z_order: usize) -> Laurent<HPoly> {
    let mut out = l.zero_like();
    for (k, c) in l.terms() {
        out = out.plus(&exp_vertex(sign, c, z_order).shift(k));
    }
    out.window(-(z_order as i64), i64::MAX)
}

/// Ring-homomorphism property of `exp(±D(1/z))` on `p·q`, through `z^{-z_order}`.
pub fn check_ring_hom(sign: i32, p: &HPoly, q: &HPoly, z_order: usize) -> bool {
    let lhs = exp_vertex(sign, &p.times(q), z_order);
    let rhs = exp_vertex(sign, p, z_order)
        .times(&exp_vertex(sign, q, z_order))
        .window(-(z_order as i64), i64::MAX);
    lhs == rhs
}

/// The sequence `n ↦ h_n` in `B_∞` with index bound `m`. Fails past `m`.
fn h_checked(n: i64, m: usize) -> HPoly {
    HPoly::h(n, m).expect("index bound checked by the caller")
}

/// `Δ_λ` as a polynomial in the free `h`'s.
pub fn schur_h(lambda: &Partition, m: usize) -> Result<HPoly> {
    let needed = lambda.part(0) + lambda.length().saturating_sub(1);
    if needed > m {
        return Err(Error::InsufficientIndexBound { needed, bound: m });
    }
    Ok(jacobi_trudi(
        lambda,
        &|n: i64| h_checked(n, m),
        lambda.length(),
    ))
}

/// `exp(-D(1/z)) Δ_λ` against the strip formula with no cap on the number
/// of rows, through `z^{-z_order}`.
pub fn schur_vs_exp(lambda: &Partition, m: usize, z_order: usize) -> Result<bool> {
    let needed = lambda.weight() + lambda.length();
    if m < needed {
        return Err(Error::InsufficientIndexBound { needed, bound: m });
    }
    let lhs = exp_vertex(-1, &schur_h(lambda, m)?, z_order);
    let mut rhs = Laurent::zero(&HPoly::zero(m));
    for j in 0..=lambda.length().min(z_order) {
        for mu in remove_vertical_strip(lambda, j) {
            rhs.add_term(-(j as i64), schur_h(&mu, m)?.scaled(&alternating(j)));
        }
    }
    Ok(lhs == rhs)
}

/// `x_n` in `B_∞`, from `sum h_n t^n = exp(sum x_n t^n)`.
pub fn x_of_h(n: usize, m: usize) -> Result<HPoly> {
    assert!(n >= 1, "x_n is defined for n >= 1");
    if n > m {
        return Err(Error::InsufficientIndexBound {
            needed: n,
            bound: m,
        });
    }
    let hs: Vec<HPoly> = (0..=n as i64).map(|k| h_checked(k, m)).collect();
    Ok(log_unit_series(&hs).swap_remove(n))
}

/// `u_j = sum_k h_{k+j} t^k/k!` over `B_∞`.
pub fn u_gen_infinite(j: i64, order: usize, m: usize) -> Result<TSeries<HPoly>> {
    let top = j + order as i64;
    if top > m as i64 {
        return Err(Error::InsufficientIndexBound {
            needed: top as usize,
            bound: m,
        });
    }
    Ok(TSeries::new(
        (0..=order as i64).map(|k| h_checked(k + j, m)).collect(),
    ))
}

fn dx(phi: &TSeries<HPoly>, j: usize) -> TSeries<HPoly> {
    phi.map_coeffs(|c| x_derive(j, c))
}

/// Hirota bilinear KP expression
/// `φφ_1111 - 4φ_1φ_111 + 3φ_11² + 3φφ_22 - 3φ_2² + 4φ_1φ_3 - 4φφ_13`,
/// where subscript `k` is the derivative in `x_{kn}`.
pub fn kp_residual_of(phi: &TSeries<HPoly>, n: usize) -> TSeries<HPoly> {
    let d1 = |s: &TSeries<HPoly>| dx(s, n);
    let d2 = |s: &TSeries<HPoly>| dx(s, 2 * n);
    let d3 = |s: &TSeries<HPoly>| dx(s, 3 * n);
    let p1 = d1(phi);
    let p11 = d1(&p1);
    let p111 = d1(&p11);
    let p1111 = d1(&p111);
    let p2 = d2(phi);
    let p22 = d2(&p2);
    let p3 = d3(phi);
    let p13 = d1(&p3);
    let prod = |a: &TSeries<HPoly>, b: &TSeries<HPoly>, c: i64| {
        a.product(b)
            .expect("same order")
            .map_coeffs(|x| x.scaled(&rat(c)))
    };
    let terms = [
        prod(phi, &p1111, 1),
        prod(&p1, &p111, -4),
        prod(&p11, &p11, 3),
        prod(phi, &p22, 3),
        prod(&p2, &p2, -3),
        prod(&p1, &p3, 4),
        prod(phi, &p13, -4),
    ];
    let zero = TSeries::zero(&phi.coeffs()[0], phi.order());
    terms
        .iter()
        .fold(zero, |acc, t| acc.plus(t).expect("same order"))
}

/// The KP residual on `u_j` with derivatives in `x_n, x_{2n}, x_{3n}`.
pub fn kp_residual(j: i64, n: usize, order: usize, m: usize) -> Result<TSeries<HPoly>> {
    Ok(kp_residual_of(&u_gen_infinite(j, order, m)?, n))
}

/// `u_0` with its `t²/2!` coefficient replaced by `h_1²`, which is not a solution.
pub fn corrupted_u0(order: usize, m: usize) -> Result<TSeries<HPoly>> {
    let u = u_gen_infinite(0, order, m)?;
    let mut coeffs = u.coeffs().to_vec();
    if coeffs.len() > 2 {
        let h1 = h_checked(1, m);
        coeffs[2] = h1.times(&h1);
    }
    Ok(TSeries::new(coeffs))
}
