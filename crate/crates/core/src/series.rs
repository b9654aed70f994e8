//! Truncated exponential generating series `φ = sum_{n<=N} a_n t^n/n!`, the
//! derivative `D = d/dt`, the universal solutions `u_j`, the linear forms `U_k`,
//! and the generic operator `D^r - e_1 D^{r-1} + ... + (-1)^r e_r`.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::boson::{h_of_e, EPoly};
use crate::error::{Error, Result};
use crate::ring::{binomial, format_rat, parse_rat, Rat, Ring};

/// Coefficient rings a [`TSeries`] can be serialized over.
pub trait SeriesCoeff: Ring {
    const RING: &'static str;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl SeriesCoeff for Rat {
    const RING: &'static str = "rat";
    fn to_json(&self) -> Value {
        Value::String(format_rat(self))
    }
    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => parse_rat(s),
            Value::Number(n) => parse_rat(&n.to_string()),
            _ => Err(Error::Parse(format!("expected a rational, got {v}"))),
        }
    }
}

pub(crate) fn json_via_serde<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serialization into a Value cannot fail")
}

pub(crate) fn from_json_via_serde<T: DeserializeOwned>(v: &Value) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::Parse(e.to_string()))
}

impl SeriesCoeff for EPoly {
    const RING: &'static str = "epoly";
    fn to_json(&self) -> Value {
        json_via_serde(self)
    }
    fn from_json(v: &Value) -> Result<Self> {
        from_json_via_serde(v)
    }
}

/// `sum_{n=0}^{N} a_n t^n / n!` with exactly `N + 1` stored coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct TSeries<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> TSeries<C> {
    /// Panics if `coeffs` is empty: a series always stores `a_0`.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least a_0");
        TSeries { coeffs }
    }

    pub fn zero(proto: &C, order: usize) -> Self {
        TSeries {
            coeffs: vec![proto.zero_like(); order + 1],
        }
    }

    /// `t^j / j!` truncated at `t^order`.
    pub fn t_power(proto: &C, j: usize, order: usize) -> Self {
        let mut s = Self::zero(proto, order);
        if j <= order {
            s.coeffs[j] = proto.one_like();
        }
        s
    }

    /// The truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// `a_n`, and zero for `n < 0`.
    pub fn coeff(&self, n: i64) -> C {
        if n < 0 {
            self.coeffs[0].zero_like()
        } else {
            self.coeffs[n as usize].clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    /// Drops the coefficients beyond `t^order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::TruncationExhausted {
                order: self.order(),
                needed: order,
            });
        }
        Ok(TSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// `D^k φ`, truncated at `N - k`.
    pub fn derive(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::TruncationExhausted {
                order: self.order(),
                needed: k,
            });
        }
        Ok(TSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    pub fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        TSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale_by(&self, c: &C) -> Self {
        self.map_coeffs(|a| a.times(c))
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(TSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.plus(b))
                .collect(),
        })
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        self.plus(&other.map_coeffs(Ring::negated))
    }

    /// Product of divided-power series: `(φψ)_n = sum_k C(n,k) a_k b_{n-k}`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = (0..=self.order())
            .map(|n| {
                (0..=n).fold(self.coeffs[0].zero_like(), |acc, k| {
                    acc.plus(
                        &self.coeffs[k]
                            .times(&other.coeffs[n - k])
                            .scaled(&binomial(n, k)),
                    )
                })
            })
            .collect();
        Ok(TSeries { coeffs })
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::TruncationExhausted {
                order: self.order().min(other.order()),
                needed: self.order().max(other.order()),
            });
        }
        Ok(())
    }
}

impl<C: SeriesCoeff> Serialize for TSeries<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_json::json!({
            "N": self.order(),
            "ring": C::RING,
            "coeffs": self.coeffs.iter().map(SeriesCoeff::to_json).collect::<Vec<_>>(),
        })
        .serialize(s)
    }
}

impl<'de, C: SeriesCoeff> Deserialize<'de> for TSeries<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct Wire {
            #[serde(rename = "N")]
            n: usize,
            ring: String,
            coeffs: Vec<Value>,
        }
        let w = Wire::deserialize(d)?;
        if w.ring != C::RING {
            return Err(D::Error::custom(format!(
                "expected ring {:?}, found {:?}",
                C::RING,
                w.ring
            )));
        }
        if w.coeffs.len() != w.n + 1 {
            return Err(D::Error::custom(format!(
                "expected {} coefficients, found {}",
                w.n + 1,
                w.coeffs.len()
            )));
        }
        let coeffs = w
            .coeffs
            .iter()
            .map(C::from_json)
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(TSeries { coeffs })
    }
}

/// Logarithm of an ordinary power series `1 + a_1 t + a_2 t^2 + ...`, returned
/// as `[0, x_1, x_2, ...]` with the same length as the input.
pub fn log_unit_series<T: Ring>(a: &[T]) -> Vec<T> {
    assert!(
        !a.is_empty() && a[0] == a[0].one_like(),
        "series must start with 1"
    );
    let mut x: Vec<T> = vec![a[0].zero_like()];
    for n in 1..a.len() {
        // n x_n = n a_n - sum_{k=1}^{n-1} k x_k a_{n-k}
        let mut acc = a[n].scaled(&Rat::from_integer(n.into()));
        for k in 1..n {
            acc = acc.minus(&x[k].times(&a[n - k]).scaled(&Rat::from_integer(k.into())));
        }
        x.push(acc.scaled(&Rat::new(1.into(), n.into())));
    }
    x
}

/// `u_j = sum_n h_{n+j} t^n / n!` over `B_r`, truncated at `t^order`.
pub fn u_gen(j: i64, r: usize, order: usize) -> TSeries<EPoly> {
    TSeries {
        coeffs: (0..=order as i64).map(|n| h_of_e(n + j, r)).collect(),
    }
}

fn check_ring(phi: &TSeries<EPoly>, r: usize) -> Result<()> {
    let found = phi.coeffs[0].r();
    if found != r {
        return Err(Error::TruncationMismatch {
            left: found,
            right: r,
        });
    }
    Ok(())
}

/// `U_k(φ) = a_k - e_1 a_{k-1} + ... + (-1)^r e_r a_{k-r}`.
pub fn u_form(k: usize, phi: &TSeries<EPoly>, r: usize) -> Result<EPoly> {
    check_ring(phi, r)?;
    if k > phi.order() {
        return Err(Error::TruncationExhausted {
            order: phi.order(),
            needed: k,
        });
    }
    let mut acc = phi.coeffs[k].clone();
    for i in 1..=r.min(k) {
        acc = acc.plus(&EPoly::signed_e(i, r).times(&phi.coeffs[k - i]));
    }
    Ok(acc)
}

/// The generic operator applied to `φ`: coefficient `n` of the result is
/// `U_{n+r}(φ)`, and the truncation drops to `N - r`.
pub fn apply_odo(phi: &TSeries<EPoly>, r: usize) -> Result<TSeries<EPoly>> {
    check_ring(phi, r)?;
    if phi.order() < r {
        return Err(Error::TruncationExhausted {
            order: phi.order(),
            needed: r,
        });
    }
    let coeffs = (0..=phi.order() - r)
        .map(|n| u_form(n + r, phi, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(TSeries { coeffs })
}

/// Kernel membership at the stored truncation: every computable `U_{n+r}` vanishes.
pub fn is_in_kernel(phi: &TSeries<EPoly>, r: usize) -> Result<bool> {
    Ok(apply_odo(phi, r)?.is_zero())
}

/// The coordinates `(U_0(φ), ..., U_{r-1}(φ))` of a kernel element in the
/// basis `u_0, u_{-1}, ..., u_{-r+1}`.
pub fn cauchy_decompose(phi: &TSeries<EPoly>, r: usize) -> Result<Vec<EPoly>> {
    if !is_in_kernel(phi, r)? {
        return Err(Error::NotInKernel {
            r,
            order: phi.order(),
        });
    }
    (0..r).map(|i| u_form(i, phi, r)).collect()
}

/// `sum_i c_i u_{-i}` truncated at `t^order`.
pub fn combine_u_basis(coeffs: &[EPoly], r: usize, order: usize) -> TSeries<EPoly> {
    coeffs
        .iter()
        .enumerate()
        .fold(TSeries::zero(&EPoly::zero(r), order), |acc, (i, c)| {
            acc.plus(&u_gen(-(i as i64), r, order).scale_by(c))
                .expect("same truncation order")
        })
}

/// Coefficients `c_i` with `t^j/j! = sum_{i=0}^{r} c_i u_{-j-i}`; they are
/// `c_i = (-1)^i e_i` independently of `j`.
pub fn t_power_in_u_basis(_j: usize, r: usize) -> Vec<EPoly> {
    (0..=r).map(|i| EPoly::signed_e(i, r)).collect()
}
