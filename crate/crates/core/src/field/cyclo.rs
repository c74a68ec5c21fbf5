//! The cyclotomic field `Q(ζ_N)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::upoly::{format_poly, QPoly};
use crate::arith::{divisors, lcm};
use crate::laurent::cyclotomic;
use crate::ring::{Field, Order, Ring};

/// `Q(ζ_N) = Q[x] / Φ_N(x)`. `N = 1` and `N = 2` both give `Q`.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u64,
    modulus: QPoly,
    degree: usize,
    /// `x^(degree + k) mod Φ_N` for `k = 0 .. degree - 1`.
    reductions: Vec<Vec<BigRational>>,
}

impl CyclotomicField {
    /// The field for a given `N >= 1`; instances are shared per `N`.
    pub fn new(order: u64) -> Arc<CyclotomicField> {
        assert!(order >= 1, "cyclotomic order must be positive");
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut guard = cache.lock().expect("field cache poisoned");
        guard
            .entry(order)
            .or_insert_with(|| Arc::new(CyclotomicField::build(order)))
            .clone()
    }

    fn build(order: u64) -> CyclotomicField {
        let phi = cyclotomic(order).expect("order is positive");
        let modulus = QPoly::from_ints(&phi);
        let degree = modulus.degree().expect("nonzero modulus");
        let mut reductions = Vec::with_capacity(degree);
        for k in 0..degree.saturating_sub(1) {
            let r = QPoly::monomial(degree + k, BigRational::one()).div_rem(&modulus).1;
            let mut v = r.coeffs().to_vec();
            v.resize(degree, BigRational::zero());
            reductions.push(v);
        }
        CyclotomicField {
            order,
            modulus,
            degree,
            reductions,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }
}

/// An element of `Q(ζ_N)` as a dense coefficient vector in powers of ζ.
#[derive(Clone)]
pub struct Cyclo {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl Cyclo {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Cyclo {
            field: field.clone(),
            coeffs: vec![BigRational::zero(); field.degree],
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Cyclo::from_rational(field, BigRational::one())
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, r: BigRational) -> Self {
        let mut z = Cyclo::zero(field);
        z.coeffs[0] = r;
        z
    }

    pub fn from_i64(field: &Arc<CyclotomicField>, r: i64) -> Self {
        Cyclo::from_rational(field, BigRational::from_integer(r.into()))
    }

    /// Reduces an arbitrary polynomial in ζ.
    pub fn from_poly(field: &Arc<CyclotomicField>, p: &QPoly) -> Self {
        let r = p.div_rem(&field.modulus).1;
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(field.degree, BigRational::zero());
        Cyclo {
            field: field.clone(),
            coeffs,
        }
    }

    /// `ζ_N^e` for any integer `e`.
    pub fn zeta_pow(field: &Arc<CyclotomicField>, e: i64) -> Self {
        let k = e.rem_euclid(field.order as i64) as usize;
        Cyclo::from_poly(field, &QPoly::monomial(k, BigRational::one()))
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn as_poly(&self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.clone())
    }

    fn check(&self, other: &Cyclo) {
        assert_eq!(
            self.field.order, other.field.order,
            "mixed cyclotomic fields Q(ζ_{}) and Q(ζ_{})",
            self.field.order, other.field.order
        );
    }

    fn mul_impl(&self, other: &Cyclo) -> Cyclo {
        self.check(other);
        let d = self.field.degree;
        let mut wide = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        let mut coeffs: Vec<BigRational> = wide[..d].to_vec();
        for (k, c) in wide[d..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, r) in coeffs.iter_mut().zip(&self.field.reductions[k]) {
                if !r.is_zero() {
                    *slot += c * r;
                }
            }
        }
        Cyclo {
            field: self.field.clone(),
            coeffs,
        }
    }

    fn zip_with(&self, other: &Cyclo, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Cyclo {
        self.check(other);
        Cyclo {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclo {}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[N={}]({})", self.field.order, self)
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.coeffs, "z"))
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: Cyclo) -> Cyclo {
        self.zip_with(&rhs, |a, b| a + b)
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: Cyclo) -> Cyclo {
        self.zip_with(&rhs, |a, b| a - b)
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: Cyclo) -> Cyclo {
        self.mul_impl(&rhs)
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
            field: self.field,
        }
    }
}

impl Ring for Cyclo {
    fn zero_like(&self) -> Self {
        Cyclo::zero(&self.field)
    }

    fn one_like(&self) -> Self {
        Cyclo::one(&self.field)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }

    fn from_i64_like(&self, value: i64) -> Self {
        Cyclo::from_i64(&self.field, value)
    }
}

impl Field for Cyclo {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s) = self.as_poly().half_ext_gcd(&self.field.modulus);
        debug_assert!(g.is_constant());
        Some(Cyclo::from_poly(&self.field, &s))
    }

    /// The torsion of `Q(ζ_N)^×` is `μ_lcm(2, N)`, so an element is a root
    /// of unity iff its `lcm(2, N)`-th power is 1.
    fn order(&self) -> Option<Order> {
        if self.is_zero() {
            return None;
        }
        let bound = lcm(2, self.field.order);
        if !self.pow(bound).is_one() {
            return Some(Order::Infinite);
        }
        let k = divisors(bound)
            .into_iter()
            .find(|&d| self.pow(d).is_one())
            .expect("bound itself works");
        Some(Order::Finite(k))
    }

    fn from_rational_like(&self, r: &BigRational) -> Self {
        Cyclo::from_rational(&self.field, r.clone())
    }

    fn to_json(&self) -> Value {
        json!({
            "field": "cyclotomic",
            "N": self.field.order,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    fn same_context(&self, other: &Self) -> bool {
        self.field.order == other.field.order
    }
}
