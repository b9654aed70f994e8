//! The vertex operators `Γ_r(z)`, `Γ_r^∨(z)` and their polynomial parts
//! `G_r(z)`, `G_r^∨(z)` acting on `B_r`.
//!
//! Every operator has at least two independent implementations: a strip or
//! determinant formula on the bosonic side, and wedge straightening on the
//! fermionic side. The test suite checks that they agree.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::boson::{
    e_series, epoly_to_schur, h_of_e, h_series, jacobi_trudi, schur_class_in_e, schur_to_epoly,
    EPoly, SchurVector,
};
use crate::error::Result;
use crate::fermion::{sigma_boson, straighten, x_contract, x_wedge, WedgeMonomial, WedgeVector};
use crate::partition::{remove_vertical_strip, Partition};
use crate::ring::{alternating, determinant, Laurent, Rat, Ring};

/// Laurent polynomial in `z` with coefficients in `B_r` (Schur basis).
pub type LaurentBoson = Laurent<SchurVector>;

fn boson_zero(r: usize) -> SchurVector {
    SchurVector::zero(r)
}

fn to_schur(l: &Laurent<EPoly>, r: usize) -> LaurentBoson {
    l.map(&boson_zero(r), epoly_to_schur)
}

fn to_epoly(l: &LaurentBoson) -> Laurent<EPoly> {
    l.map(&EPoly::zero(l.proto().r()), schur_to_epoly)
}

/// Applies a `B_r`-linear map termwise to a Laurent polynomial, treating `z`
/// as a scalar.
pub fn extend_linear(l: &LaurentBoson, f: impl Fn(&SchurVector) -> LaurentBoson) -> LaurentBoson {
    let mut out = l.zero_like();
    for (k, v) in l.terms() {
        out = out.plus(&f(v).shift(k));
    }
    out
}

fn linear_on_basis(v: &SchurVector, f: impl Fn(&Partition) -> LaurentBoson) -> LaurentBoson {
    let mut out = Laurent::zero(&boson_zero(v.r()));
    for (lambda, c) in v.terms() {
        out = out.plus(&f(lambda).scaled(c));
    }
    out
}

/// `G_r(z) Δ_λ = sum_j (-1)^j z^{-j} Δ_{λ - (vertical strip of size j)}`.
pub fn g(v: &SchurVector) -> LaurentBoson {
    let r = v.r();
    linear_on_basis(v, |lambda| {
        let mut out = Laurent::zero(&boson_zero(r));
        for j in 0..=lambda.length() {
            let mut coeff = boson_zero(r);
            for mu in remove_vertical_strip(lambda, j) {
                coeff =
                    coeff.plus(&SchurVector::basis(mu, r).expect("removing boxes keeps ℓ <= r"));
            }
            out.add_term(-(j as i64), coeff.scaled(&alternating(j)));
        }
        out
    })
}

fn z_inv(c: EPoly, k: i64) -> Laurent<EPoly> {
    Laurent::monomial(-k, c)
}

/// `Δ_λ(G_r(z) H_r)`: the Schur determinant over `n ↦ h_n - h_{n-1}/z`.
pub fn g_twisted(v: &SchurVector) -> LaurentBoson {
    let r = v.r();
    let seq = |n: i64| z_inv(h_of_e(n, r), 0).plus(&z_inv(h_of_e(n - 1, r), 1).negated());
    linear_on_basis(v, |lambda| to_schur(&jacobi_trudi(lambda, &seq, r), r))
}

/// `Δ_λ(G_r^∨(z) H_r)`: the Schur determinant over `n ↦ sum_{i=0}^n h_{n-i} z^{-i}`.
pub fn g_vee(v: &SchurVector) -> LaurentBoson {
    let r = v.r();
    let seq = |n: i64| {
        let mut acc = Laurent::zero(&EPoly::zero(r));
        for i in 0..=n {
            acc = acc.plus(&z_inv(h_of_e(n - i, r), i));
        }
        acc
    };
    linear_on_basis(v, |lambda| to_schur(&jacobi_trudi(lambda, &seq, r), r))
}

/// `Γ_r(z) v = G_r(z) v / E_r(z)`, exact through `z^order`. Every exponent
/// below `-ℓ(λ)` is absent.
pub fn gamma(v: &SchurVector, order: usize) -> LaurentBoson {
    let r = v.r();
    let gv = to_epoly(&g(v));
    let depth = (-gv.min_exp().unwrap_or(0)).max(0) as usize;
    let prod = gv
        .times(&h_series(r, order + depth))
        .window(i64::MIN, order as i64);
    to_schur(&prod, r)
}

/// `Γ_r^∨(z) v = (E_r(z) / z) G_r^∨(z) v`, a finite Laurent polynomial.
pub fn gamma_vee(v: &SchurVector) -> LaurentBoson {
    let r = v.r();
    let prod = e_series(r).shift(-1).times(&to_epoly(&g_vee(v)));
    to_schur(&prod, r)
}

/// `Γ_r^∨(z) Δ_λ` from a single determinant: first row `z^{j-1-λ_j}`, remaining
/// rows `h_{λ_j - j + i}` for `i = 2..r`, plus `(-1)^r z^r Δ_{λ+(1^r)}`, all over `z`.
pub fn gamma_vee_det(lambda: &Partition, r: usize) -> Result<LaurentBoson> {
    SchurVector::basis(lambda.clone(), r)?;
    let parts = lambda.padded(r);
    let mut matrix: Vec<Vec<Laurent<EPoly>>> = Vec::with_capacity(r);
    matrix.push(
        (0..r)
            .map(|j| Laurent::monomial(j as i64 - parts[j] as i64, EPoly::one(r)))
            .collect(),
    );
    for i in 2..=r as i64 {
        matrix.push(
            (1..=r as i64)
                .map(|j| Laurent::constant(h_of_e(parts[(j - 1) as usize] as i64 - j + i, r)))
                .collect(),
        );
    }
    let det = determinant(&matrix, &Laurent::constant(EPoly::one(r)));
    let shifted = schur_class_in_e(&lambda.add_column(r), r).scaled(&alternating(r));
    let total = det.plus(&Laurent::monomial(r as i64, shifted)).shift(-1);
    Ok(to_schur(&total, r))
}

fn sigma_family(
    family: impl IntoIterator<Item = (i64, WedgeVector<Rat>)>,
    r: usize,
) -> Result<LaurentBoson> {
    let mut out = Laurent::zero(&boson_zero(r));
    for (k, w) in family {
        out.add_term(k, sigma_boson(&w)?);
    }
    Ok(out)
}

/// `Γ_r(z) Δ_λ` by straightening `X(z) ∧ Φ_{-1,λ}` through `z^order`.
pub fn fermionic_gamma(lambda: &Partition, r: usize, order: usize) -> Result<LaurentBoson> {
    sigma_family(x_wedge(lambda, r, -(r as i64), order as i64)?, r)
}

/// `Γ_r^∨(z) Δ_λ` by contracting `Φ_{1,λ}` against `X^∨(z)`.
pub fn fermionic_gamma_vee(lambda: &Partition, r: usize) -> Result<LaurentBoson> {
    sigma_family(x_contract(lambda, r)?, r)
}

/// `G∘G^∨` and `G^∨∘G`, both extended `Q[z^{-1}]`-linearly, return `v`.
pub fn check_inverse(v: &SchurVector) -> bool {
    let id = Laurent::constant(v.clone());
    let id = if v.is_zero() { Laurent::zero(v) } else { id };
    extend_linear(&g_vee(v), g) == id && extend_linear(&g(v), g_vee) == id
}

fn h_product(indices: &[usize], r: usize) -> SchurVector {
    indices.iter().fold(SchurVector::one(r), |acc, &i| {
        acc.times(&SchurVector::h(i as i64, r))
    })
}

/// `op(h_{i_1} ⋯ h_{i_s}) = op(h_{i_1}) ⋯ op(h_{i_s})`.
pub fn multiplicative_for(
    op: impl Fn(&SchurVector) -> LaurentBoson,
    indices: &[usize],
    r: usize,
) -> bool {
    let lhs = op(&h_product(indices, r));
    let rhs = indices
        .iter()
        .fold(Laurent::constant(SchurVector::one(r)), |acc, &i| {
            acc.times(&op(&SchurVector::h(i as i64, r)))
        });
    lhs == rhs
}

/// Multiplicativity of both `G_r(z)` and `G_r^∨(z)` on a product of `h`'s.
pub fn check_multiplicative(indices: &[usize], r: usize) -> bool {
    multiplicative_for(g, indices, r) && multiplicative_for(g_vee, indices, r)
}

fn row_indices(lambda: &Partition, r: usize) -> Vec<i64> {
    (0..r).map(|p| lambda.part(p) as i64 - p as i64).collect()
}

/// Wedges `(sum_a c_a u_{k_0 - a} z^{-a}) ∧ ... ∧ Φ_{-r}` summed over the
/// choices `a` of every row, with per-row coefficient `coeff(a)`.
fn row_transform(
    lambda: &Partition,
    r: usize,
    max_shift: impl Fn(i64) -> i64,
    coeff: impl Fn(i64) -> Rat,
) -> Result<LaurentBoson> {
    let rows = row_indices(lambda, r);
    let tail = WedgeMonomial::vacuum(-(r as i64), r);
    let mut out = Laurent::zero(&boson_zero(r));
    let bounds: Vec<i64> = rows.iter().map(|&k| max_shift(k)).collect();
    let mut shift = vec![0i64; r];
    loop {
        let c = shift
            .iter()
            .fold(Rat::from_integer(1.into()), |acc, &a| acc * coeff(a));
        let head: Vec<i64> = rows.iter().zip(&shift).map(|(k, a)| k - a).collect();
        let mut w = WedgeVector::zero(r, &Rat::from_integer(0.into()));
        w.add_signed(straighten(&head, &tail), &c);
        out.add_term(-shift.iter().sum::<i64>(), sigma_boson(&w)?);
        let mut pos = 0;
        while pos < r {
            shift[pos] += 1;
            if shift[pos] <= bounds[pos] {
                break;
            }
            shift[pos] = 0;
            pos += 1;
        }
        if pos == r {
            return Ok(out);
        }
    }
}

/// `G_r(z) Δ_λ · Φ_0` against `G̃u_{λ_1} ∧ G̃u_{λ_2 - 1} ∧ ... ∧ Φ_{-r}` with
/// `G̃u_j = u_j - u_{j-1}/z`.
pub fn gtilde_det_check(lambda: &Partition, r: usize) -> Result<bool> {
    let v = SchurVector::basis(lambda.clone(), r)?;
    let wedge = row_transform(lambda, r, |_| 1, alternating_i)?;
    Ok(wedge == g(&v))
}

/// The same for `G̃^∨u_j = sum_{i>=0} u_{j-i} z^{-i}` against `G_r^∨(z) Δ_λ`.
/// Shifts that push an index into the tail vanish, which keeps the sum finite.
pub fn gtilde_vee_det_check(lambda: &Partition, r: usize) -> Result<bool> {
    let v = SchurVector::basis(lambda.clone(), r)?;
    let wedge = row_transform(
        lambda,
        r,
        |k| (k + r as i64 - 1).max(0),
        |_| Rat::from_integer(1.into()),
    )?;
    Ok(wedge == g_vee(&v))
}

fn alternating_i(a: i64) -> Rat {
    alternating(a as usize)
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    zexp: i64,
    value: SchurVector,
}

#[derive(Serialize, Deserialize)]
struct WireLaurent {
    r: usize,
    terms: Vec<WireTerm>,
}

impl Serialize for Laurent<SchurVector> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WireLaurent {
            r: self.proto().r(),
            terms: self
                .terms()
                .map(|(zexp, v)| WireTerm {
                    zexp,
                    value: v.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Laurent<SchurVector> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = WireLaurent::deserialize(d)?;
        let mut out = Laurent::zero(&boson_zero(w.r));
        for t in w.terms {
            if t.value.r() != w.r {
                return Err(serde::de::Error::custom(
                    "coefficient r differs from series r",
                ));
            }
            out.add_term(t.zexp, t.value);
        }
        Ok(out)
    }
}
