//! The rational function field `Q(t)`, `t` transcendental.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use super::upoly::QPoly;
use crate::ring::{Field, Order, Ring};

/// `t^shift * num / den` in canonical form: `num` and `den` have nonzero
/// constant terms, `den` is monic, and the two are coprime. Zero is stored
/// as `num = 0, den = 1, shift = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    shift: i64,
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            shift: 0,
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_rational(BigRational::one())
    }

    pub fn from_rational(c: BigRational) -> Self {
        RatFunc::new(0, QPoly::constant(c), QPoly::one())
    }

    pub fn from_i64(c: i64) -> Self {
        RatFunc::from_rational(BigRational::from_integer(c.into()))
    }

    /// `t^e`.
    pub fn t_pow(e: i64) -> Self {
        RatFunc {
            shift: e,
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    /// `t^shift * num / den`, brought to canonical form.
    pub fn new(shift: i64, num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let nz = num.low_zeros();
        let dz = den.low_zeros();
        let mut num = num.shift_down(nz);
        let mut den = den.shift_down(dz);
        let shift = shift + nz as i64 - dz as i64;
        let lead = den.lead().expect("nonzero").clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        if !den.is_constant() && !num.is_constant() {
            let g = num.gcd(&den);
            if !g.is_constant() {
                num = num.div_rem(&g).0;
                den = den.div_rem(&g).0;
            }
        }
        RatFunc { shift, num, den }
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Numerator and denominator as ordinary polynomials, with the power of
    /// `t` moved into one of them.
    pub fn as_fraction(&self) -> (QPoly, QPoly) {
        if self.shift >= 0 {
            (self.num.shift_up(self.shift as usize), self.den.clone())
        } else {
            (self.num.clone(), self.den.shift_up(self.shift.unsigned_abs() as usize))
        }
    }

    fn add_impl(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let base = self.shift.min(other.shift);
        let a = self.num.shift_up((self.shift - base) as usize);
        let b = other.num.shift_up((other.shift - base) as usize);
        if self.den == other.den {
            return RatFunc::new(base, a.add(&b), self.den.clone());
        }
        let num = a.mul(&other.den).add(&b.mul(&self.den));
        RatFunc::new(base, num, self.den.mul(&other.den))
    }

    fn mul_impl(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let shift = self.shift + other.shift;
        if self.den.is_constant() && other.den.is_constant() {
            return RatFunc {
                shift,
                num: self.num.mul(&other.num),
                den: QPoly::one(),
            };
        }
        RatFunc::new(shift, self.num.mul(&other.num), self.den.mul(&other.den))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.as_fraction();
        if den.is_constant() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({den})")
        }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        self.add_impl(&rhs)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self.add_impl(&-rhs)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        self.mul_impl(&rhs)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            shift: self.shift,
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Ring for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero()
    }

    fn one_like(&self) -> Self {
        RatFunc::one()
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.add_impl(other)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_impl(&-other.clone())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }

    fn from_i64_like(&self, value: i64) -> Self {
        RatFunc::from_i64(value)
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::new(-self.shift, self.den.clone(), self.num.clone()))
    }

    /// A nonconstant rational function is never a root of unity, and the
    /// only roots of unity in `Q` are `±1`.
    fn order(&self) -> Option<Order> {
        if self.is_zero() {
            return None;
        }
        if self.shift != 0 || !self.num.is_constant() || !self.den.is_constant() {
            return Some(Order::Infinite);
        }
        let c = self.num.coeff(0);
        Some(if c.is_one() {
            Order::Finite(1)
        } else if (-c).is_one() {
            Order::Finite(2)
        } else {
            Order::Infinite
        })
    }

    fn from_rational_like(&self, r: &BigRational) -> Self {
        RatFunc::from_rational(r.clone())
    }

    fn to_json(&self) -> Value {
        let (num, den) = self.as_fraction();
        let list = |p: &QPoly| p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>();
        json!({ "field": "transcendental", "num": list(&num), "den": list(&den) })
    }

    fn same_context(&self, _other: &Self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        let t = RatFunc::t_pow(1);
        let x = (RatFunc::one() - t.pow(2)) * (RatFunc::one() - t.clone()).inv().unwrap();
        assert_eq!(x, RatFunc::one() + t.clone());
        assert_eq!(t.clone() * t.inv().unwrap(), RatFunc::one());
        let y = RatFunc::t_pow(-3) + RatFunc::t_pow(2);
        assert_eq!(y.to_string(), "(1 + t^5)/(t^3)");
    }

    #[test]
    fn orders() {
        assert_eq!(RatFunc::t_pow(1).order(), Some(Order::Infinite));
        assert_eq!(RatFunc::one().order(), Some(Order::Finite(1)));
        assert_eq!(RatFunc::from_i64(-1).order(), Some(Order::Finite(2)));
        assert_eq!(RatFunc::from_i64(3).order(), Some(Order::Infinite));
        assert_eq!(RatFunc::zero().order(), None);
    }
}
