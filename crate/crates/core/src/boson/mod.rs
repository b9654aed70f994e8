//! The bosonic Fock space `B_r = Q[e_1, ..., e_r]`.
//!
//! Elements live in two coordinate systems: [`EPoly`] (monomials in the
//! `e_i`, where multiplication is cheap) and [`SchurVector`] (the basis of
//! Schur determinants `Δ_λ(H_r)`, where the vertex operators act). The
//! conversions [`epoly_to_schur`] and [`schur_to_epoly`] are the only bridge.
//!
//! The complete classes `h_n` are the coefficients of `1 / E_r(t)` where
//! `E_r(t) = 1 - e_1 t + ... + (-1)^r e_r t^r`, and satisfy
//! `h_n = sum_{i=1}^r (-1)^{i-1} e_i h_{n-i}` with `h_0 = 1`, `h_{<0} = 0`.

mod epoly;
mod schur;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

pub use epoly::EPoly;
#[allow(unused_imports)]
pub(crate) use epoly::{write_monomial, write_sum, WireTerm};
pub use schur::SchurVector;

use crate::partition::{add_vertical_strip, Partition};
use crate::ring::{determinant, Laurent, Ring};
use crate::series::log_unit_series;

/// A bilateral sequence `n ↦ a_n` used as the entries of a Schur determinant.
/// Every sequence in this crate is of h-type: `a_0 = 1` and `a_n = 0` for `n < 0`.
pub trait BilateralSeq<T> {
    fn at(&self, n: i64) -> T;
}

impl<T, F: Fn(i64) -> T> BilateralSeq<T> for F {
    fn at(&self, n: i64) -> T {
        self(n)
    }
}

/// The sequence `H_r = (h_n)` with values in `B_r`.
#[derive(Clone, Copy, Debug)]
pub struct HSeq {
    pub r: usize,
}

impl BilateralSeq<EPoly> for HSeq {
    fn at(&self, n: i64) -> EPoly {
        h_of_e(n, self.r)
    }
}

fn h_cache() -> &'static Mutex<HashMap<usize, Vec<EPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<EPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `h_n` as a polynomial in `e_1, ..., e_r`.
pub fn h_of_e(n: i64, r: usize) -> EPoly {
    if n < 0 {
        return EPoly::zero(r);
    }
    let n = n as usize;
    let mut cache = h_cache().lock().expect("h cache poisoned");
    let hs = cache.entry(r).or_insert_with(|| vec![EPoly::one(r)]);
    while hs.len() <= n {
        let m = hs.len();
        let mut next = EPoly::zero(r);
        for i in 1..=r.min(m) {
            // (-1)^{i-1} e_i h_{m-i}
            let term = EPoly::signed_e(i, r).negated().times(&hs[m - i]);
            next = next.plus(&term);
        }
        hs.push(next);
    }
    hs[n].clone()
}

/// `x_n` as a polynomial in `e_1, ..., e_r`, read off from the logarithm of
/// the series `H_r(t) = sum h_n t^n`.
pub fn x_of_e(n: usize, r: usize) -> EPoly {
    assert!(n >= 1, "x_n is defined for n >= 1");
    let hs: Vec<EPoly> = (0..=n as i64).map(|k| h_of_e(k, r)).collect();
    log_unit_series(&hs).swap_remove(n)
}

/// Schur determinant `det(a_{λ_j - j + i})` of size `max(r, ℓ(λ))`.
///
/// For h-type sequences padding the matrix beyond `ℓ(λ)` does not change the
/// value, so the size only matters for partitions longer than `r`.
pub fn jacobi_trudi<T: Ring>(lambda: &Partition, seq: &impl BilateralSeq<T>, r: usize) -> T {
    let n = r.max(lambda.length());
    let parts = lambda.padded(n);
    let one = seq.at(0);
    let matrix: Vec<Vec<T>> = (1..=n as i64)
        .map(|i| {
            (1..=n as i64)
                .map(|j| seq.at(parts[(j - 1) as usize] as i64 - j + i))
                .collect()
        })
        .collect();
    determinant(&matrix, &one)
}

/// Pieri rule: `e_i · Δ_λ = sum of Δ_μ` over vertical strips `μ / λ` of size
/// `i` with at most `r` rows. Zero when `i > r`.
pub fn pieri(i: usize, v: &SchurVector) -> SchurVector {
    let r = v.r();
    let mut out = SchurVector::zero(r);
    if i > r {
        return out;
    }
    for (lambda, c) in v.terms() {
        for mu in add_vertical_strip(lambda, i, r) {
            out.push_truncating(mu, c.clone());
        }
    }
    out
}

type MonomialCache = Mutex<HashMap<(usize, Vec<u32>), SchurVector>>;

fn monomial_cache() -> &'static MonomialCache {
    static CACHE: OnceLock<MonomialCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn monomial_to_schur(r: usize, exps: &[u32]) -> SchurVector {
    let key = (r, exps.to_vec());
    if let Some(v) = monomial_cache().lock().expect("cache poisoned").get(&key) {
        return v.clone();
    }
    let mut v = SchurVector::one(r);
    for (k, &a) in exps.iter().enumerate() {
        for _ in 0..a {
            v = pieri(k + 1, &v);
        }
    }
    monomial_cache()
        .lock()
        .expect("cache poisoned")
        .insert(key, v.clone());
    v
}

/// Schur-basis coordinates of an e-polynomial, by letting each monomial act
/// on `Δ_∅` through repeated Pieri steps.
pub fn epoly_to_schur(p: &EPoly) -> SchurVector {
    let mut out = SchurVector::zero(p.r());
    for (exps, c) in p.terms() {
        out = out.plus(&monomial_to_schur(p.r(), exps).scaled(c));
    }
    out
}

fn basis_cache() -> &'static Mutex<HashMap<(usize, Partition), EPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, Partition), EPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Δ_λ(H_r)` as an e-polynomial.
pub fn schur_class_in_e(lambda: &Partition, r: usize) -> EPoly {
    let key = (r, lambda.clone());
    if let Some(p) = basis_cache().lock().expect("cache poisoned").get(&key) {
        return p.clone();
    }
    let p = jacobi_trudi(lambda, &HSeq { r }, r);
    basis_cache()
        .lock()
        .expect("cache poisoned")
        .insert(key, p.clone());
    p
}

/// e-monomial coordinates of a Schur vector, expanding each class by
/// Jacobi–Trudi over `H_r`.
pub fn schur_to_epoly(v: &SchurVector) -> EPoly {
    let mut out = EPoly::zero(v.r());
    for (lambda, c) in v.terms() {
        out = out.plus(&schur_class_in_e(lambda, v.r()).scaled(c));
    }
    out
}

/// Ring product in `B_r`; fails when the truncation orders differ.
pub fn mult(a: &SchurVector, b: &SchurVector) -> crate::Result<SchurVector> {
    a.mult(b)
}

/// The partial sum `E_i(z) = 1 - e_1 z + ... + (-1)^i e_i z^i`.
pub fn elementary_partial(i: usize, r: usize) -> Laurent<EPoly> {
    let proto = EPoly::zero(r);
    Laurent::from_terms(
        &proto,
        (0..=i.min(r)).map(|k| (k as i64, EPoly::signed_e(k, r))),
    )
}

/// `E_r(z)` itself.
pub fn e_series(r: usize) -> Laurent<EPoly> {
    elementary_partial(r, r)
}

/// `H_r(z) = sum_{n=0}^{order} h_n z^n`, the truncation of `1 / E_r(z)`.
pub fn h_series(r: usize, order: usize) -> Laurent<EPoly> {
    let proto = EPoly::zero(r);
    Laurent::from_terms(&proto, (0..=order as i64).map(|n| (n, h_of_e(n, r))))
}
