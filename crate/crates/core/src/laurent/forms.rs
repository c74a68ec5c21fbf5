//! Cyclotomic product forms of `P_m`, `A_m` and `1 - Q^j`.
//!
//! Every irreducible factor of `P_m` and `A_m` is `Φ_d(Q_m)` for a divisor
//! `d` of `N(m)`, so both are stored as a sign, a monomial unit and a map
//! `d -> multiplicity`. Expansion to a [`LaurentPoly`] is only needed for
//! cross-checks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde_json::{json, Value};

use super::cases::{classify, p_poly, q_monomial, PmCase};
use super::cyclotomic::cyclotomic;
use super::poly::{LaurentPoly, Monomial};
use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::words::{lyndon_count, DegreeVector};

/// `sign * unit * prod_d Φ_d(base)^mult(d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicProductForm {
    pub base: Monomial,
    pub sign: i8,
    pub unit: Monomial,
    multiplicities: BTreeMap<u64, i64>,
}

impl CyclotomicProductForm {
    pub fn one(base: Monomial) -> Self {
        CyclotomicProductForm {
            base,
            sign: 1,
            unit: Monomial::one(),
            multiplicities: BTreeMap::new(),
        }
    }

    pub fn new(base: Monomial, sign: i8, multiplicities: BTreeMap<u64, i64>) -> Self {
        let mut form = CyclotomicProductForm::one(base);
        form.sign = sign;
        for (d, e) in multiplicities {
            form.bump(d, e);
        }
        form
    }

    /// `1 - base^j = -prod_{d | j} Φ_d(base)`.
    pub fn one_minus_power(base: Monomial, j: u64) -> Self {
        let mults = divisors(j).into_iter().map(|d| (d, 1)).collect();
        CyclotomicProductForm::new(base, -1, mults)
    }

    fn bump(&mut self, d: u64, e: i64) {
        let slot = self.multiplicities.entry(d).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.multiplicities.remove(&d);
        }
    }

    pub fn multiplicity(&self, d: u64) -> i64 {
        self.multiplicities.get(&d).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &BTreeMap<u64, i64> {
        &self.multiplicities
    }

    /// Indices `d` with positive multiplicity.
    pub fn support(&self) -> BTreeSet<u64> {
        self.multiplicities
            .iter()
            .filter(|(_, &e)| e > 0)
            .map(|(&d, _)| d)
            .collect()
    }

    pub fn is_polynomial(&self) -> bool {
        self.multiplicities.values().all(|&e| e >= 0)
    }

    /// Product of the distinct irreducible factors, sign and unit dropped.
    pub fn radical(&self) -> Self {
        let mults = self.support().into_iter().map(|d| (d, 1)).collect();
        CyclotomicProductForm::new(self.base.clone(), 1, mults)
    }

    pub fn pow(&self, k: i64) -> Self {
        let mut out = CyclotomicProductForm::one(self.base.clone());
        out.sign = if k % 2 == 0 { 1 } else { self.sign };
        out.unit = self.unit.pow(k);
        for (&d, &e) in &self.multiplicities {
            out.bump(d, e * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.base, other.base, "forms over different bases");
        let mut out = self.clone();
        out.sign *= other.sign;
        out.unit = out.unit.mul(&other.unit);
        for (&d, &e) in &other.multiplicities {
            out.bump(d, e);
        }
        out
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.pow(-1))
    }

    /// Multiplies out the form; fails on negative multiplicities.
    pub fn expand(&self) -> Result<LaurentPoly> {
        if let Some((&d, _)) = self.multiplicities.iter().find(|(_, &e)| e < 0) {
            return Err(Error::NotPolynomial(d));
        }
        let mut acc = LaurentPoly::term(self.sign as i64, self.unit.clone());
        for (&d, &e) in &self.multiplicities {
            let phi = LaurentPoly::from_univariate(&cyclotomic(d)?, &self.base);
            for _ in 0..e {
                acc = &acc * &phi;
            }
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        let mults: serde_json::Map<String, Value> = self
            .multiplicities
            .iter()
            .map(|(d, e)| (d.to_string(), json!(e)))
            .collect();
        json!({
            "base": self.base.to_string(),
            "sign": self.sign,
            "unit": self.unit.to_string(),
            "multiplicities": mults,
        })
    }
}

impl fmt::Display for CyclotomicProductForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.sign < 0 { "-" } else { "" })?;
        if !self.unit.is_one() {
            write!(f, "{} * ", self.unit)?;
        }
        if self.multiplicities.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .multiplicities
            .iter()
            .map(|(d, e)| {
                if *e == 1 {
                    format!("Phi_{d}(Q)")
                } else {
                    format!("Phi_{d}(Q)^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}

/// Cyclotomic factorization of `P_m`.
pub fn p_factor_form(m: &DegreeVector) -> Result<CyclotomicProductForm> {
    let base = q_monomial(m)?;
    let form = |sign: i8, ds: &[u64]| {
        CyclotomicProductForm::new(base.clone(), sign, ds.iter().map(|&d| (d, 1)).collect())
    };
    Ok(match classify(m)? {
        PmCase::SingleLetter { k, .. } => {
            let ds: Vec<u64> = divisors(k as u64).into_iter().filter(|&d| d > 1).collect();
            form(1, &ds)
        }
        PmCase::OnePlusK { .. } => form(-1, &[1]),
        PmCase::TwoPlusK { k, .. } if k % 2 == 0 => form(1, &[2]),
        PmCase::TwoPlusK { .. } => form(-1, &[1]),
        PmCase::ThreeThree { .. } => form(1, &[3]),
        PmCase::ThreeFour { .. } => form(-1, &[1, 2, 3]),
        PmCase::ThreeSix { .. } => form(-1, &[1, 3, 6]),
        PmCase::FourFour { .. } => form(1, &[2, 4]),
        PmCase::Generic => CyclotomicProductForm::one_minus_power(base, m.big_n()?),
    })
}

/// `A_m` as a ratio of products of `1 - Q_m^(N(m)/k)`, collected into
/// cyclotomic multiplicities. Multiplicities may be negative when `m` is a
/// multiple of a single letter.
pub fn a_form(m: &DegreeVector) -> Result<CyclotomicProductForm> {
    let base = q_monomial(m)?;
    let big_n = m.big_n()?;
    let mut acc = CyclotomicProductForm::one(base.clone());
    let factor = |k: u64| CyclotomicProductForm::one_minus_power(base.clone(), big_n / k);
    for i in m.support() {
        let rest = m.minus_unit(i).expect("i in support");
        for k in divisors(rest.gcd()? as u64) {
            let ell = lyndon_count(&rest.div(k as u32).expect("k divides gcd"))?;
            acc = acc.mul(&factor(k).pow(ell as i64));
        }
    }
    for k in divisors(m.gcd()? as u64) {
        let ell = lyndon_count(&m.div(k as u32).expect("k divides gcd"))?;
        acc = acc.div(&factor(k).pow(ell as i64));
    }
    Ok(acc)
}

/// `A_m / P_m`, both as cyclotomic forms, so signs are kept.
pub fn a_cofactor(m: &DegreeVector) -> Result<CyclotomicProductForm> {
    Ok(a_form(m)?.div(&p_factor_form(m)?))
}

fn require_two_letters(m: &DegreeVector) -> Result<()> {
    if m.nonzero_count() < 2 {
        return Err(Error::NeedsTwoLetters(m.clone()));
    }
    Ok(())
}

/// Checks that `P_m` is the product of the distinct irreducible factors of
/// `A_m`: equal supports, and the expanded radical of `A_m` equals the
/// clause-by-clause `P_m` up to sign and a monomial unit.
pub fn radical_identity_check(m: &DegreeVector) -> Result<bool> {
    require_two_letters(m)?;
    let a = a_form(m)?;
    let p = p_factor_form(m)?;
    if !a.is_polynomial() || p.multiplicities().values().any(|&e| e != 1) {
        return Ok(false);
    }
    if a.support() != p.support() {
        return Ok(false);
    }
    let radical = a.radical().expand()?;
    Ok(p_poly(m)?.unit_ratio(&radical).is_some())
}

/// `P_m` and `P_l` are coprime iff they share no `Φ_d(Q)` factor, which
/// needs `Q_m = Q_l` and intersecting supports.
pub fn coprime_check(m: &DegreeVector, l: &DegreeVector) -> Result<bool> {
    require_two_letters(m)?;
    if l.total() < 2 {
        return Err(Error::DegreeTooSmall(l.clone()));
    }
    if m.n() != l.n() {
        return Err(Error::DimensionMismatch(format!("{m} vs {l}")));
    }
    let pm = p_factor_form(m)?;
    let pl = p_factor_form(l)?;
    let shared = pm.base == pl.base && !pm.support().is_disjoint(&pl.support());
    Ok(!shared)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn dv(v: &[u32]) -> DegreeVector {
        DegreeVector::new(v.to_vec()).unwrap()
    }

    fn mults(form: &CyclotomicProductForm) -> Vec<(u64, i64)> {
        form.multiplicities().iter().map(|(&d, &e)| (d, e)).collect()
    }

    #[test]
    fn one_minus_power_shape() {
        let f = CyclotomicProductForm::one_minus_power(Monomial::var(0, 0), 6);
        assert_eq!(f.sign, -1);
        assert_eq!(mults(&f), vec![(1, 1), (2, 1), (3, 1), (6, 1)]);
        let x = LaurentPoly::var(0, 0);
        assert_eq!(f.expand().unwrap(), LaurentPoly::one() - x.pow(6));
    }

    #[test]
    fn p_forms() {
        let f = p_factor_form(&dv(&[1, 1])).unwrap();
        assert_eq!((f.sign, mults(&f)), (-1, vec![(1, 1)]));
        let f = p_factor_form(&dv(&[2, 3])).unwrap();
        assert_eq!((f.sign, mults(&f)), (-1, vec![(1, 1)]));
        let f = p_factor_form(&dv(&[3, 3])).unwrap();
        assert_eq!((f.sign, mults(&f)), (1, vec![(3, 1)]));
    }

    #[test]
    fn a_forms() {
        // (m)_x / (m-1)_x for a single letter
        let f = a_form(&dv(&[4, 0])).unwrap();
        assert_eq!(mults(&f), vec![(2, 1), (3, -1), (4, 1)]);
        let f = a_form(&dv(&[1, 1])).unwrap();
        assert_eq!(f.expand().unwrap(), LaurentPoly::one() - LaurentPoly::var(0, 1) * LaurentPoly::var(1, 0));
        let f = a_form(&dv(&[3, 4])).unwrap();
        let q = CyclotomicProductForm::one(q_monomial(&dv(&[3, 4])).unwrap()).base;
        let expected = CyclotomicProductForm::one_minus_power(q.clone(), 2)
            .mul(&CyclotomicProductForm::one_minus_power(q, 3));
        assert_eq!(f, expected);
    }

    #[test]
    fn radical_examples() {
        assert!(radical_identity_check(&dv(&[3, 4])).unwrap());
        assert!(radical_identity_check(&dv(&[3, 6])).unwrap());
        assert!(radical_identity_check(&dv(&[2, 2])).unwrap());
        assert!(radical_identity_check(&dv(&[3, 0])).is_err());
    }

    #[test]
    fn explicit_cofactors() {
        // (3,4): 1 - Q;  (3,6): (3)_Q;  (4,4): 1 + Q^2
        let c = a_cofactor(&dv(&[3, 4])).unwrap();
        assert_eq!((c.sign, mults(&c)), (-1, vec![(1, 1)]));
        let c = a_cofactor(&dv(&[3, 6])).unwrap();
        assert_eq!((c.sign, mults(&c)), (1, vec![(3, 1)]));
        let c = a_cofactor(&dv(&[4, 4])).unwrap();
        assert_eq!((c.sign, mults(&c)), (1, vec![(4, 1)]));
    }

    #[test]
    fn coprimality() {
        assert!(!coprime_check(&dv(&[2, 3]), &dv(&[2, 3])).unwrap());
        assert!(coprime_check(&dv(&[2, 3]), &dv(&[1, 3])).unwrap());
        assert!(coprime_check(&dv(&[1, 1]), &dv(&[2, 2])).unwrap());
        assert!(coprime_check(&dv(&[2, 0]), &dv(&[2, 2])).is_err());
    }

    #[test]
    fn negative_multiplicity_does_not_expand() {
        let f = a_form(&dv(&[3, 0])).unwrap();
        assert!(matches!(f.expand(), Err(Error::NotPolynomial(_))));
    }
}
