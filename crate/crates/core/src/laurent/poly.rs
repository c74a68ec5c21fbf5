//! Integer Laurent polynomials in the variables `p_ij`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::ring::Ring;

/// A Laurent monomial `prod p_ij^e_ij`, with 0-based `(i, j)` keys and no
/// zero exponents stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(BTreeMap<(usize, usize), i64>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    /// The single variable `p_ij` (0-based indices).
    pub fn var(i: usize, j: usize) -> Self {
        Monomial::var_pow(i, j, 1)
    }

    pub fn var_pow(i: usize, j: usize, e: i64) -> Self {
        let mut map = BTreeMap::new();
        if e != 0 {
            map.insert((i, j), e);
        }
        Monomial(map)
    }

    pub fn from_exponents<I: IntoIterator<Item = ((usize, usize), i64)>>(exps: I) -> Self {
        let mut m = Monomial::one();
        for (key, e) in exps {
            m.add_exponent(key, e);
        }
        m
    }

    fn add_exponent(&mut self, key: (usize, usize), e: i64) {
        let slot = self.0.entry(key).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.0.remove(&key);
        }
    }

    pub fn exponent(&self, i: usize, j: usize) -> i64 {
        self.0.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.0.iter().map(|(&k, &e)| (k, e))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.values().all(|&e| e >= 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (&k, &e) in &other.0 {
            out.add_exponent(k, e);
        }
        out
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.pow(-1))
    }

    pub fn pow(&self, k: i64) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(&key, &e)| (key, e * k)).collect())
    }

    /// gcd of the exponents (0 for the identity).
    pub fn exponent_gcd(&self) -> u64 {
        crate::arith::gcd_all(self.0.values().map(|e| e.unsigned_abs()))
    }

    /// Graded lexicographic order: total degree first, then the exponent of
    /// the smallest variable key where the two differ. Compatible with
    /// multiplication, so it is a monomial order on polynomial monomials.
    pub fn graded_cmp(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                let mut keys: Vec<_> = self.0.keys().chain(other.0.keys()).copied().collect();
                keys.sort_unstable();
                keys.dedup();
                for k in keys {
                    let a = self.0.get(&k).copied().unwrap_or(0);
                    let b = other.0.get(&k).copied().unwrap_or(0);
                    match a.cmp(&b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.0
                .iter()
                .map(|(&(i, j), &e)| json!([i + 1, j + 1, e]))
                .collect(),
        )
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (idx, (&(i, j), &e)) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            write!(f, "p[{}][{}]", i + 1, j + 1)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A Laurent polynomial with integer coefficients; zero coefficients are
/// never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        LaurentPoly::term(c, Monomial::one())
    }

    pub fn term<T: Into<BigInt>>(c: T, m: Monomial) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(c.into(), m);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        LaurentPoly::term(1, m)
    }

    pub fn var(i: usize, j: usize) -> Self {
        LaurentPoly::monomial(Monomial::var(i, j))
    }

    fn add_term(&mut self, c: BigInt, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// True iff no exponent is negative, i.e. the element lies in `Z[p_ij]`.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    /// Substitutes a univariate integer polynomial (coefficients from the
    /// constant term up) at a monomial: `sum c_k x^k`.
    pub fn from_univariate(coeffs: &[BigInt], x: &Monomial) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(c.clone(), x.pow(k as i64));
        }
        p
    }

    /// Terms sorted by the graded monomial order, lowest first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.graded_cmp(b.0));
        v
    }

    fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().max_by(|a, b| a.0.graded_cmp(b.0))
    }

    /// Exact division in `Z[p_ij]`. Returns `None` unless both operands are
    /// polynomials and `divisor` divides `self` with a polynomial quotient.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() || !self.is_polynomial() || !divisor.is_polynomial() {
            return None;
        }
        let (dm, dc) = divisor.leading()?;
        let mut remainder = self.clone();
        let mut quotient = LaurentPoly::zero();
        while let Some((rm, rc)) = remainder.leading() {
            let qm = rm.div(dm);
            if !qm.is_polynomial() || !(rc % dc).is_zero() {
                return None;
            }
            let qt = LaurentPoly::term(rc / dc, qm);
            remainder = remainder - &qt * divisor;
            quotient = quotient + qt;
        }
        Some(quotient)
    }

    /// `Some(c * u)` such that `self = c * u * other` with `c = ±1` and `u`
    /// a monomial, if one exists.
    pub fn unit_ratio(&self, other: &LaurentPoly) -> Option<(i8, Monomial)> {
        let (am, ac) = self.leading()?;
        let (bm, bc) = other.leading()?;
        let sign: i8 = if ac == bc {
            1
        } else if *ac == -bc {
            -1
        } else {
            return None;
        };
        let unit = am.div(bm);
        let candidate = LaurentPoly::term(sign as i64, unit.clone()) * other.clone();
        (candidate == *self).then_some((sign, unit))
    }

    /// Canonical text form: terms in graded order, `c*p[i][j]^e*...`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format!("{abs}*{m}"));
            }
        }
        out
    }

    /// JSON form: `[{"coeff": c, "exps": [[i, j, e], ...]}, ...]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(m, c)| {
                    let coeff = match c.to_i64() {
                        Some(v) => json!(v),
                        None => json!(c.to_string()),
                    };
                    json!({ "coeff": coeff, "exps": m.to_json() })
                })
                .collect(),
        )
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        for (m, c) in rhs.terms {
            self.add_term(c, m);
        }
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self + (-rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (am, ac) in &self.terms {
            for (bm, bc) in &rhs.terms {
                out.add_term(ac * bc, am.mul(bm));
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Ring for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero()
    }

    fn one_like(&self) -> Self {
        LaurentPoly::one()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}
