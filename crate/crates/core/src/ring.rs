//! Minimal algebraic traits used to share code between polynomial rings and
//! exact scalar fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A commutative ring whose elements know how to produce their own zero and
/// one. Scalars of a cyclotomic field carry their field context, so there is
/// no global `zero()`.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn from_i64_like(&self, value: i64) -> Self {
        let one = self.one_like();
        let mut acc = self.zero_like();
        let mut base = if value < 0 { -one } else { one };
        let mut k = value.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.add_ref(&base);
            }
            base = base.add_ref(&base);
            k >>= 1;
        }
        acc
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut result = self.one_like();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul_ref(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_ref(&base);
            }
        }
        result
    }
}

/// Multiplicative order of a field element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(k) => Some(k),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

/// An exact field of characteristic zero.
pub trait Field: Ring + fmt::Display + Send + Sync {
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Least `k >= 1` with `self^k = 1`, or infinite. `None` for zero.
    fn order(&self) -> Option<Order>;

    /// Embeds a rational number in the same field.
    fn from_rational_like(&self, r: &num_rational::BigRational) -> Self;

    /// Serialized form for reports.
    fn to_json(&self) -> serde_json::Value;

    /// `self^e` for any integer exponent; panics on `0^e` with `e < 0`.
    fn powi(&self, exp: i64) -> Self {
        if exp >= 0 {
            self.pow(exp as u64)
        } else {
            self.inv()
                .expect("negative power of zero")
                .pow(exp.unsigned_abs())
        }
    }

    /// `true` iff the two elements live in compatible contexts.
    fn same_context(&self, other: &Self) -> bool;
}

/// `(k)_x = 1 + x + ... + x^(k-1)`, with `(0)_x = 0`.
pub fn q_integer<R: Ring>(k: u64, x: &R) -> R {
    let mut acc = x.zero_like();
    let mut power = x.one_like();
    for _ in 0..k {
        acc = acc.add_ref(&power);
        power = power.mul_ref(x);
    }
    acc
}
