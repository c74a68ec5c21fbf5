//! Freeness certification, kernel dimensions at minimal degenerate degrees
//! and the diophantine criterion for exponent braidings.
//!
//! Freeness is decided by the nonvanishing of `P_m(q)` for all `m`; this
//! module can only enumerate, so every freeness verdict is bounded by the
//! degree bound (or the search box) it was computed with.

use std::cmp::Reverse;

use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::field::{eval, Cyclo, CyclotomicField, RatFunc};
use crate::laurent::{classify, p_poly, q_monomial, LaurentPoly};
use crate::ring::{Field, Order};
use crate::shuffle::{s1_matrix, symmetrizer_matrix, BraidingMatrix};
use crate::words::{lyndon_count, DegreeVector};

/// `P_m(q)` at one degree.
#[derive(Debug, Clone, Serialize)]
pub struct DegreeValue {
    pub m: DegreeVector,
    pub case: u8,
    pub value: Value,
    pub zero: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    FreeUpTo(u32),
    NotFree,
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Verdict::FreeUpTo(d) => s.serialize_str(&format!("free-up-to-{d}")),
            Verdict::NotFree => s.serialize_str("not-free"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FreenessReport {
    pub degree_bound: u32,
    pub verdict: Verdict,
    /// Minimal degrees with `P_m(q) = 0`.
    pub witnesses: Vec<DegreeVector>,
    pub values: Vec<DegreeValue>,
}

impl FreenessReport {
    pub fn is_free(&self) -> bool {
        matches!(self.verdict, Verdict::FreeUpTo(_))
    }
}

fn check_bound(d: u32) -> Result<()> {
    if d < 2 {
        return Err(Error::DegreeBound(d));
    }
    Ok(())
}

/// `P_m(q)`.
pub fn p_value<F: Field>(m: &DegreeVector, q: &BraidingMatrix<F>) -> Result<F> {
    eval(&p_poly(m)?, q)
}

/// `P_m(q)` for `2 <= |m| <= d`, graded, each grade evaluated in parallel.
fn degree_values<F: Field>(q: &BraidingMatrix<F>, d: u32) -> Result<Vec<(DegreeVector, F)>> {
    let mut out = Vec::new();
    for total in 2..=d {
        let grade = DegreeVector::all_of_total(q.n(), total);
        let values = grade
            .par_iter()
            .map(|m| p_value(m, q).map(|v| (m.clone(), v)))
            .collect::<Result<Vec<_>>>()?;
        out.extend(values);
    }
    Ok(out)
}

/// Zeros that have no zero strictly below them.
fn minimal_zeros<F: Field>(values: &[(DegreeVector, F)]) -> Vec<DegreeVector> {
    let zeros: Vec<&DegreeVector> = values.iter().filter(|(_, v)| v.is_zero()).map(|(m, _)| m).collect();
    zeros
        .iter()
        .filter(|m| !zeros.iter().any(|l| l.below(m)))
        .map(|m| (*m).clone())
        .collect()
}

/// Evaluates `P_m(q)` for every `m` with `2 <= |m| <= d`.
pub fn freeness_check<F: Field>(q: &BraidingMatrix<F>, d: u32) -> Result<FreenessReport> {
    check_bound(d)?;
    let values = degree_values(q, d)?;
    let witnesses = minimal_zeros(&values);
    let verdict = if witnesses.is_empty() {
        Verdict::FreeUpTo(d)
    } else {
        Verdict::NotFree
    };
    let values = values
        .into_iter()
        .map(|(m, v)| {
            Ok(DegreeValue {
                case: classify(&m)?.number(),
                zero: v.is_zero(),
                value: v.to_json(),
                m,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FreenessReport {
        degree_bound: d,
        verdict,
        witnesses,
        values,
    })
}

/// All `m` with `|m| <= d`, `P_m(q) = 0` and `P_l(q) != 0` for `l < m`,
/// `|l| >= 2`.
pub fn minimal_degenerate_degrees<F: Field>(q: &BraidingMatrix<F>, d: u32) -> Result<Vec<DegreeVector>> {
    check_bound(d)?;
    Ok(minimal_zeros(&degree_values(q, d)?))
}

/// The Lyndon-count sums at a degenerate degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct N1N2 {
    pub n1: u64,
    pub n2: u64,
    pub d: u64,
    pub d_prime: u64,
}

fn divisor_sum(v: &DegreeVector, d_prime: u64) -> Result<u64> {
    let mut total = 0;
    for k in divisors(v.gcd()? as u64) {
        if d_prime.is_multiple_of(k) {
            total += lyndon_count(&v.div(k as u32).expect("k divides gcd"))?;
        }
    }
    Ok(total)
}

/// `d = ord(Q_m(q))`, `d' = N(m)/d`, and
/// `n1 = sum_(i: m_i > 0) sum_(k | gcd(m-e_i), k | d') ℓ_((m-e_i)/k)`,
/// `n2 = sum_(k | gcd(m), k | d') ℓ_(m/k)`.
pub fn n1_n2<F: Field>(q: &BraidingMatrix<F>, m: &DegreeVector) -> Result<N1N2> {
    if m.total() < 2 {
        return Err(Error::DegreeTooSmall(m.clone()));
    }
    if !p_value(m, q)?.is_zero() {
        return Err(Error::NotDegenerate(m.clone()));
    }
    let big_n = m.big_n()?;
    let qm = eval(&LaurentPoly::monomial(q_monomial(m)?), q)?;
    let d = match qm.order() {
        Some(Order::Finite(d)) => d,
        _ => return Err(Error::InfiniteOrder(m.clone())),
    };
    if big_n % d != 0 {
        return Err(Error::Invalid(format!(
            "ord(Q_{m}(q)) = {d} does not divide N({m}) = {big_n}"
        )));
    }
    let d_prime = big_n / d;
    let mut n1 = 0;
    for i in m.support() {
        n1 += divisor_sum(&m.minus_unit(i).expect("i in support"), d_prime)?;
    }
    let n2 = divisor_sum(m, d_prime)?;
    Ok(N1N2 { n1, n2, d, d_prime })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub m: DegreeVector,
    pub d: u64,
    pub d_prime: u64,
    pub n1: u64,
    pub n2: u64,
    pub kernel_dim_formula: usize,
    pub kernel_dim_bruteforce: Option<usize>,
    pub relation_dim: Option<usize>,
}

/// Degrees `l < m` with `|l| >= 2`, graded.
fn lower_degrees(m: &DegreeVector) -> Vec<DegreeVector> {
    DegreeVector::graded(m.n(), 2, m.total().saturating_sub(1))
        .into_iter()
        .filter(|l| l.below(m))
        .collect()
}

/// Fails with the first `l < m` (graded order) where `P_l(q) = 0`.
fn check_lower<F: Field>(q: &BraidingMatrix<F>, m: &DegreeVector) -> Result<()> {
    for l in lower_degrees(m) {
        if p_value(&l, q)?.is_zero() {
            return Err(Error::LowerDegenerate {
                degree: m.clone(),
                lower: l,
            });
        }
    }
    Ok(())
}

/// `dim ker ρ(S_(1,|m|-1))|V_m = n1 - n2` at a minimal degenerate degree.
/// `verify` adds the brute-force kernel of the shuffle map, `symmetrizer`
/// the brute-force kernel of the full symmetrizer; a disagreement between a
/// brute-force value and the formula is an error.
pub fn kernel_dim<F: Field>(
    q: &BraidingMatrix<F>,
    m: &DegreeVector,
    verify: bool,
    symmetrizer: bool,
) -> Result<KernelReport> {
    if m.total() < 2 {
        return Err(Error::DegreeTooSmall(m.clone()));
    }
    if m.n() != q.n() {
        return Err(Error::DimensionMismatch(format!("degree {m} for a {}x{} braiding", q.n(), q.n())));
    }
    check_lower(q, m)?;
    let counts = n1_n2(q, m)?;
    let formula = (counts.n1 - counts.n2) as usize;
    let mismatch = |brute: usize| Error::KernelMismatch {
        degree: m.clone(),
        formula,
        brute,
    };
    let kernel_dim_bruteforce = if verify {
        let k = s1_matrix(m.total() as usize - 1, m, q)?.kernel_dim();
        if k != formula {
            return Err(mismatch(k));
        }
        Some(k)
    } else {
        None
    };
    let relation_dim = if symmetrizer {
        let k = symmetrizer_matrix(m, q)?.kernel_dim();
        if k != formula {
            return Err(mismatch(k));
        }
        Some(k)
    } else {
        None
    };
    Ok(KernelReport {
        m: m.clone(),
        d: counts.d,
        d_prime: counts.d_prime,
        n1: counts.n1,
        n2: counts.n2,
        kernel_dim_formula: formula,
        kernel_dim_bruteforce,
        relation_dim,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationDim {
    pub m: DegreeVector,
    pub dim: usize,
}

/// `dim ker ρ(S_m)|V_m` for `2 <= |m| <= d`, by brute force.
pub fn relation_dims<F: Field>(q: &BraidingMatrix<F>, d: u32) -> Result<Vec<RelationDim>> {
    check_bound(d)?;
    DegreeVector::graded(q.n(), 2, d)
        .par_iter()
        .map(|m| {
            Ok(RelationDim {
                m: m.clone(),
                dim: symmetrizer_matrix(m, q)?.kernel_dim(),
            })
        })
        .collect()
}

/// How `q_ij` is obtained from the exponent `a_ij`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExponentMode {
    /// `q_ij = ζ_N^(a_ij)` for a primitive `N`-th root of unity.
    RootOfUnity(u64),
    /// `q_ij = t^(a_ij)` with `t` transcendental.
    Transcendental,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentBraiding {
    pub a: Vec<Vec<i64>>,
    pub mode: ExponentMode,
}

impl ExponentBraiding {
    pub fn new(a: Vec<Vec<i64>>, mode: ExponentMode) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if a.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!("exponent matrix must be {n}x{n}")));
        }
        if mode == ExponentMode::RootOfUnity(0) {
            return Err(Error::Invalid("root of unity order must be positive".into()));
        }
        Ok(ExponentBraiding { a, mode })
    }

    /// `q_11 = q_22 = q^a`, `q_12 = q^(-b)`, `q_21 = 1`, so that
    /// `q_12 q_21 = q^(-b)`.
    pub fn two_parameter(a: i64, b: i64, mode: ExponentMode) -> Result<Self> {
        ExponentBraiding::new(vec![vec![a, -b], vec![0, a]], mode)
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn to_cyclotomic(&self) -> Result<BraidingMatrix<Cyclo>> {
        match self.mode {
            ExponentMode::RootOfUnity(order) => {
                let zeta = Cyclo::zeta_pow(&CyclotomicField::new(order), 1);
                BraidingMatrix::from_exponents(&self.a, &zeta)
            }
            ExponentMode::Transcendental => {
                Err(Error::Invalid("transcendental exponents have no cyclotomic realization".into()))
            }
        }
    }

    pub fn to_transcendental(&self) -> Result<BraidingMatrix<RatFunc>> {
        match self.mode {
            ExponentMode::Transcendental => BraidingMatrix::from_exponents(&self.a, &RatFunc::t_pow(1)),
            ExponentMode::RootOfUnity(_) => Err(Error::RootOfUnityMode),
        }
    }
}

/// `K(m) = sum_(i,j) a_ij m_i m_j` and `λ(m) = sum_i a_ii m_i`.
pub fn k_lambda(a: &ExponentBraiding, m: &DegreeVector) -> Result<(i64, i64)> {
    if m.n() != a.n() {
        return Err(Error::DimensionMismatch(format!("degree {m} for {} letters", a.n())));
    }
    let e = m.entries();
    let mut k = 0;
    let mut lambda = 0;
    for i in 0..a.n() {
        lambda += a.a[i][i] * e[i] as i64;
        for j in 0..a.n() {
            k += a.a[i][j] * e[i] as i64 * e[j] as i64;
        }
    }
    Ok((k, lambda))
}

/// Degrees where `P_m(q) != 0` holds automatically for `q` not a root of
/// unity: `k e_i` (`k >= 2`), `2 e_i + 2k e_j`, `3 e_i + 3 e_j`,
/// `4 e_i + 4 e_j`.
pub fn is_exceptional_degree(m: &DegreeVector) -> Result<bool> {
    if m.total() < 2 {
        return Err(Error::DegreeTooSmall(m.clone()));
    }
    let support = m.support();
    Ok(match support.as_slice() {
        [_] => true,
        &[i, j] => {
            let (x, y) = (m.get(i), m.get(j));
            (x == 2 && y % 2 == 0) || (y == 2 && x % 2 == 0) || (x == y && (x == 3 || x == 4))
        }
        _ => false,
    })
}

/// Every degree in the box `0 <= m_i <= bound`, graded.
pub fn box_degrees(n: usize, bound: u32) -> Vec<DegreeVector> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        out.push(DegreeVector::new(cur.clone()).expect("n >= 1"));
        let Some(pos) = (0..n).rev().find(|&i| cur[i] < bound) else { break };
        cur[pos] += 1;
        for x in cur.iter_mut().skip(pos + 1) {
            *x = 0;
        }
    }
    out.sort_by_key(|m| (m.total(), Reverse(m.entries().to_vec())));
    out
}

/// Non-exceptional `m` in the box with `|m| >= 2` and `K(m) = λ(m)`. An
/// empty result certifies `P_m(t) != 0` for every `m` in the box.
pub fn diophantine_search(a: &ExponentBraiding, bound: u32) -> Result<Vec<DegreeVector>> {
    if a.mode != ExponentMode::Transcendental {
        return Err(Error::RootOfUnityMode);
    }
    let mut out = Vec::new();
    for m in box_degrees(a.n(), bound) {
        if m.total() < 2 || is_exceptional_degree(&m)? {
            continue;
        }
        let (k, lambda) = k_lambda(a, &m)?;
        if k == lambda {
            out.push(m);
        }
    }
    Ok(out)
}
