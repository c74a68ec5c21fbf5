//! The braid-monoid representation on homogeneous components of the tensor
//! algebra of a braided vector space of diagonal type.
//!
//! Matrices act on column vectors: entry `(r, c)` is the coefficient of basis
//! word `r` in the image of basis word `c`. A product of generators
//! `σ_a σ_b` therefore acts by applying `σ_b` first.

use std::collections::HashMap;

use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::field::{eval, Cyclo, CyclotomicField, Matrix};
use crate::laurent::{a_form, full_monomial, q_monomial, Monomial};
use crate::ring::{Field, Order};
use crate::words::{lyndon_count, lyndon_root, words_of_degree, DegreeVector, Word};

/// The matrix `(q_ij)` of a diagonal braiding `c(x_i ⊗ x_j) = q_ij x_j ⊗ x_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct BraidingMatrix<F> {
    n: usize,
    entries: Vec<F>,
    exponents: Option<Vec<Vec<i64>>>,
}

impl<F: Field> BraidingMatrix<F> {
    /// Rejects non-square input, zero entries and mixed field contexts.
    pub fn new(rows: Vec<Vec<F>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!("braiding must be {n}x{n}")));
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if x.is_zero() {
                    return Err(Error::ZeroEntry(i + 1, j + 1));
                }
                if !x.same_context(&rows[0][0]) {
                    return Err(Error::ContextMismatch(format!("entry q[{}][{}]", i + 1, j + 1)));
                }
            }
        }
        Ok(BraidingMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
            exponents: None,
        })
    }

    /// `q_ij = base^(a_ij)`.
    pub fn from_exponents(a: &[Vec<i64>], base: &F) -> Result<Self> {
        let rows = a
            .iter()
            .map(|row| row.iter().map(|&e| base.powi(e)).collect())
            .collect();
        Ok(BraidingMatrix::new(rows)?.with_exponents(a.to_vec()))
    }

    /// Records the exponent presentation alongside the entries.
    pub fn with_exponents(mut self, a: Vec<Vec<i64>>) -> Self {
        self.exponents = Some(a);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `q_ij`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> impl Iterator<Item = &F> {
        self.entries.iter()
    }

    pub fn exponents(&self) -> Option<&[Vec<i64>]> {
        self.exponents.as_deref()
    }

    pub fn one(&self) -> F {
        self.entries[0].one_like()
    }

    pub fn zero(&self) -> F {
        self.entries[0].zero_like()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<Value>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_json()).collect())
            .collect();
        json!({ "n": self.n, "entries": rows, "exponents": self.exponents })
    }
}

/// A random braiding over `Q` with entries `±a/b`, `1 <= a, b <= 9`.
pub fn random_rational_braiding<R: Rng + ?Sized>(n: usize, rng: &mut R) -> BraidingMatrix<Cyclo> {
    let field = CyclotomicField::new(1);
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let num: i64 = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
                    let den: i64 = rng.gen_range(1..=9);
                    let r = num_rational::BigRational::new(num.into(), den.into());
                    Cyclo::from_rational(&field, r)
                })
                .collect()
        })
        .collect();
    BraidingMatrix::new(rows).expect("entries are nonzero")
}

/// A random braiding `q_ij = ζ_N^(a_ij)` with `0 <= a_ij < N`.
pub fn random_cyclotomic_braiding<R: Rng + ?Sized>(
    n: usize,
    order: u64,
    rng: &mut R,
) -> BraidingMatrix<Cyclo> {
    let a: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(0..order as i64)).collect())
        .collect();
    let zeta = Cyclo::zeta_pow(&CyclotomicField::new(order), 1);
    BraidingMatrix::from_exponents(&a, &zeta).expect("roots of unity are nonzero")
}

/// The component `V_m` with its lexicographically sorted word basis.
#[derive(Debug, Clone)]
pub struct HomogeneousComponent {
    degree: DegreeVector,
    basis: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl HomogeneousComponent {
    pub fn new(m: &DegreeVector) -> Self {
        let basis = words_of_degree(m);
        let index = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        HomogeneousComponent {
            degree: m.clone(),
            basis,
            index,
        }
    }

    pub fn degree(&self) -> &DegreeVector {
        &self.degree
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Row-major dump of an operator on this component.
    pub fn dump<F: Field>(&self, matrix: &Matrix<F>) -> Value {
        let rows: Vec<Vec<Value>> = (0..matrix.rows())
            .map(|i| matrix.row(i).iter().map(Field::to_json).collect())
            .collect();
        json!({
            "degree": self.degree,
            "basis": self.basis.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "rows": rows,
        })
    }
}

/// An integer combination of products of the generators `σ_i` (1-based).
/// Each product is stored leftmost generator first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidElement {
    terms: Vec<(i64, Vec<usize>)>,
}

impl BraidElement {
    pub fn zero() -> Self {
        BraidElement { terms: Vec::new() }
    }

    pub fn one() -> Self {
        BraidElement::word(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        BraidElement::word(vec![i])
    }

    pub fn word(generators: Vec<usize>) -> Self {
        BraidElement {
            terms: vec![(1, generators)],
        }
    }

    /// `σ_k σ_(k-1) ⋯ σ_1`.
    pub fn descending(k: usize) -> Self {
        BraidElement::word((1..=k).rev().collect())
    }

    /// `S_(1,k) = 1 + σ_1 + σ_2 σ_1 + ⋯ + σ_k ⋯ σ_1`.
    pub fn s1(k: usize) -> Self {
        (0..=k).fold(BraidElement::zero(), |acc, j| acc.add(&BraidElement::descending(j)))
    }

    /// `1 - σ_k ⋯ σ_1`.
    pub fn cycle(k: usize) -> Self {
        BraidElement::one().sub(&BraidElement::descending(k))
    }

    /// `1 - σ_k ⋯ σ_2 σ_1^2`.
    pub fn cycle2(k: usize) -> Self {
        let mut gens: Vec<usize> = (1..=k).rev().collect();
        if k >= 1 {
            gens.push(1);
        }
        BraidElement::one().sub(&BraidElement::word(gens))
    }

    pub fn terms(&self) -> &[(i64, Vec<usize>)] {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        BraidElement { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> Self {
        BraidElement {
            terms: self.terms.iter().map(|(a, g)| (a * c, g.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, u) in &self.terms {
            for (b, v) in &other.terms {
                let mut g = u.clone();
                g.extend(v);
                terms.push((a * b, g));
            }
        }
        BraidElement { terms }
    }

    /// `τ^s`: every generator index shifted up by `s`.
    pub fn shift(&self, s: usize) -> Self {
        BraidElement {
            terms: self
                .terms
                .iter()
                .map(|(a, g)| (*a, g.iter().map(|i| i + s).collect()))
                .collect(),
        }
    }

    /// Largest generator index used, 0 for scalars.
    pub fn max_generator(&self) -> usize {
        self.terms.iter().flat_map(|(_, g)| g.iter().copied()).max().unwrap_or(0)
    }
}

/// Applies a generator product to a word; returns the image and its scalar.
fn act<F: Field>(generators: &[usize], w: &Word, q: &BraidingMatrix<F>) -> (Word, F) {
    let mut letters = w.0.clone();
    let mut coeff = q.one();
    for &g in generators.iter().rev() {
        let (a, b) = (letters[g - 1], letters[g]);
        coeff = coeff.mul_ref(q.get(a as usize, b as usize));
        letters.swap(g - 1, g);
    }
    (Word(letters), coeff)
}

fn check_alphabet<F>(m: &DegreeVector, q: &BraidingMatrix<F>) -> Result<()> {
    if m.n() != q.n {
        return Err(Error::DimensionMismatch(format!(
            "degree {m} has {} letters but the braiding is {}x{}",
            m.n(),
            q.n,
            q.n
        )));
    }
    Ok(())
}

/// `ρ_(|m|)(x)|V_m`.
pub fn rho<F: Field>(x: &BraidElement, m: &DegreeVector, q: &BraidingMatrix<F>) -> Result<Matrix<F>> {
    check_alphabet(m, q)?;
    let len = m.total() as usize;
    let max = len.saturating_sub(1);
    if x.max_generator() > max {
        return Err(Error::IndexOutOfRange {
            index: x.max_generator(),
            max,
        });
    }
    let comp = HomogeneousComponent::new(m);
    let one = q.one();
    let mut out = Matrix::zeros(comp.dim(), comp.dim(), &one);
    for (c, w) in comp.basis().iter().enumerate() {
        for (a, g) in x.terms() {
            if *a == 0 {
                continue;
            }
            let (image, coeff) = act(g, w, q);
            let r = comp.index_of(&image).expect("braiding preserves degree");
            let value = out.get(r, c).add_ref(&one.from_i64_like(*a).mul_ref(&coeff));
            out.set(r, c, value);
        }
    }
    Ok(out)
}

/// `ρ(σ_i)|V_m`, `1 <= i <= |m| - 1`.
pub fn sigma_matrix<F: Field>(i: usize, m: &DegreeVector, q: &BraidingMatrix<F>) -> Result<Matrix<F>> {
    let max = (m.total() as usize).saturating_sub(1);
    if i == 0 || i > max {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    rho(&BraidElement::generator(i), m, q)
}

/// `ρ(S_(1,k))|V_m`, `0 <= k <= |m| - 1`.
pub fn s1_matrix<F: Field>(k: usize, m: &DegreeVector, q: &BraidingMatrix<F>) -> Result<Matrix<F>> {
    let max = (m.total() as usize).saturating_sub(1);
    if k > max {
        return Err(Error::IndexOutOfRange { index: k, max });
    }
    rho(&BraidElement::s1(k), m, q)
}

/// `ρ(S_m)|V_m` with `S_m = S_(1,M-1) τ(S_(1,M-2)) ⋯ τ^(M-2)(S_(1,1))`,
/// multiplied from the right end.
pub fn symmetrizer_matrix<F: Field>(m: &DegreeVector, q: &BraidingMatrix<F>) -> Result<Matrix<F>> {
    let len = m.total() as usize;
    if len < 2 {
        return Err(Error::DegreeTooSmall(m.clone()));
    }
    let factor = |j: usize| rho(&BraidElement::s1(len - 1 - j).shift(j), m, q);
    let mut acc = factor(len - 2)?;
    for j in (0..len - 2).rev() {
        acc = factor(j)?.mul(&acc)?;
    }
    Ok(acc)
}

/// `(1 - σ_k ⋯ σ_1) S_(1,k) = S_(1,k-1) (1 - σ_k ⋯ σ_2 σ_1^2)` on `V_m`.
pub fn braid_identity_check<F: Field>(k: usize, m: &DegreeVector, q: &BraidingMatrix<F>) -> Result<bool> {
    let max = (m.total() as usize).saturating_sub(1);
    if k == 0 || k > max {
        return Err(Error::IndexOutOfRange { index: k, max });
    }
    let lhs = rho(&BraidElement::cycle(k), m, q)?.mul(&rho(&BraidElement::s1(k), m, q)?)?;
    let rhs = rho(&BraidElement::s1(k - 1), m, q)?.mul(&rho(&BraidElement::cycle2(k), m, q)?)?;
    Ok(lhs == rhs)
}

/// `ρ(1 - σ_(M-1) ⋯ σ_1)|V_m`, `M = |m|`.
pub fn cycle_matrix<F: Field>(m: &DegreeVector, q: &BraidingMatrix<F>) -> Result<Matrix<F>> {
    if m.is_zero() {
        return Err(Error::ZeroDegree);
    }
    rho(&BraidElement::cycle(m.total() as usize - 1), m, q)
}

/// `ρ(1 - σ_(M-1) ⋯ σ_2 σ_1^2)|V_m`.
pub fn cycle2_matrix<F: Field>(m: &DegreeVector, q: &BraidingMatrix<F>) -> Result<Matrix<F>> {
    if m.total() < 2 {
        return Err(Error::DegreeTooSmall(m.clone()));
    }
    rho(&BraidElement::cycle2(m.total() as usize - 1), m, q)
}

/// `Q_m^(N(m)/k)` evaluated at `q`. It is the full monomial of `m` with all
/// exponents divided by `k`, which also makes sense when `|m| = 1`.
fn q_power<F: Field>(m: &DegreeVector, k: u64, q: &BraidingMatrix<F>) -> Result<F> {
    let full = full_monomial(m);
    let scaled = Monomial::from_exponents(full.exponents().map(|(key, e)| (key, e / k as i64)));
    crate::field::eval_monomial(&scaled, q)
}

/// `(k, ℓ_(v/k))` for the divisors `k` of `gcd(v)`.
fn divisor_counts(v: &DegreeVector) -> Result<Vec<(u64, u64)>> {
    divisors(v.gcd()? as u64)
        .into_iter()
        .map(|k| Ok((k, lyndon_count(&v.div(k as u32).expect("k divides gcd"))?)))
        .collect()
}

/// Closed form of `det ρ(1 - σ_(M-1) ⋯ σ_1)|V_m`:
/// `prod_(k | gcd m) (1 - Q_m^(N/k))^(ℓ_(m/k))`.
pub fn cycle_det<F: Field>(m: &DegreeVector, q: &BraidingMatrix<F>) -> Result<F> {
    check_alphabet(m, q)?;
    let one = q.one();
    let mut acc = one.clone();
    for (k, ell) in divisor_counts(m)? {
        let factor = one.sub_ref(&q_power(m, k, q)?);
        acc = acc.mul_ref(&factor.pow(ell));
    }
    Ok(acc)
}

/// Closed form of `det ρ(1 - σ_(M-1) ⋯ σ_2 σ_1^2)|V_m`:
/// `prod_(i: m_i > 0) prod_(k | gcd(m - e_i)) (1 - Q_m^(N/k))^(ℓ_((m-e_i)/k))`.
pub fn cycle2_det<F: Field>(m: &DegreeVector, q: &BraidingMatrix<F>) -> Result<F> {
    check_alphabet(m, q)?;
    if m.total() < 2 {
        return Err(Error::DegreeTooSmall(m.clone()));
    }
    let one = q.one();
    let mut acc = one.clone();
    for i in m.support() {
        let rest = m.minus_unit(i).expect("i in support");
        for (k, ell) in divisor_counts(&rest)? {
            let factor = one.sub_ref(&q_power(m, k, q)?);
            acc = acc.mul_ref(&factor.pow(ell));
        }
    }
    Ok(acc)
}

/// `ord(Q_m(q))` as a finite number, if it is one.
fn q_order<F: Field>(m: &DegreeVector, q: &BraidingMatrix<F>) -> Result<Option<u64>> {
    let value = eval(&crate::laurent::LaurentPoly::monomial(q_monomial(m)?), q)?;
    Ok(value.order().and_then(Order::finite))
}

/// `sum ℓ_(v/k)` over `k | gcd(v)` with `d k | N(m)`.
fn corank_sum(v: &DegreeVector, big_n: u64, d: Option<u64>) -> Result<usize> {
    let Some(d) = d else { return Ok(0) };
    let mut total = 0;
    for (k, ell) in divisor_counts(v)? {
        if big_n.is_multiple_of(d * k) {
            total += ell as usize;
        }
    }
    Ok(total)
}

/// Corank of the first cyclic operator from Lyndon counts and
/// `d = ord(Q_m(q))`.
pub fn cycle_corank<F: Field>(m: &DegreeVector, q: &BraidingMatrix<F>) -> Result<usize> {
    check_alphabet(m, q)?;
    if m.is_zero() {
        return Err(Error::ZeroDegree);
    }
    if m.total() == 1 {
        // The operator is 1 - 1 on a line.
        return Ok(1);
    }
    corank_sum(m, m.big_n()?, q_order(m, q)?)
}

/// Corank of the second cyclic operator.
pub fn cycle2_corank<F: Field>(m: &DegreeVector, q: &BraidingMatrix<F>) -> Result<usize> {
    check_alphabet(m, q)?;
    if m.total() < 2 {
        return Err(Error::DegreeTooSmall(m.clone()));
    }
    let big_n = m.big_n()?;
    let d = q_order(m, q)?;
    let mut total = 0;
    for i in m.support() {
        total += corank_sum(&m.minus_unit(i).expect("i in support"), big_n, d)?;
    }
    Ok(total)
}

/// Action whose orbits decompose `X_m` for the cyclic operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrbitAction {
    /// `i_1 i_2 ⋯ i_M -> i_2 ⋯ i_M i_1`.
    Rotate,
    /// `i_1 i_2 ⋯ i_M -> i_1 i_3 ⋯ i_M i_2`.
    FixFirstRotate,
}

/// The word `lead · lyndon^power` in an orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitRepresentative {
    pub lead: Option<Word>,
    pub lyndon: Word,
    pub power: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub representative: OrbitRepresentative,
    pub words: Vec<Word>,
}

fn step(action: OrbitAction, w: &Word) -> Word {
    match action {
        OrbitAction::Rotate => w.rotate(1),
        OrbitAction::FixFirstRotate => {
            let mut letters = vec![w.0[0]];
            letters.extend(Word(w.0[1..].to_vec()).rotate(1).0);
            Word(letters)
        }
    }
}

/// Orbits of the action on `X_m`, in order of their smallest word.
pub fn orbit_decomposition(m: &DegreeVector, action: OrbitAction) -> Result<Vec<Orbit>> {
    match action {
        OrbitAction::Rotate if m.is_zero() => return Err(Error::ZeroDegree),
        OrbitAction::FixFirstRotate if m.total() < 2 => return Err(Error::DegreeTooSmall(m.clone())),
        _ => {}
    }
    let comp = HomogeneousComponent::new(m);
    let mut seen = vec![false; comp.dim()];
    let mut orbits = Vec::new();
    for (start, w) in comp.basis().iter().enumerate() {
        if seen[start] {
            continue;
        }
        let mut words = Vec::new();
        let mut cur = w.clone();
        loop {
            let idx = comp.index_of(&cur).expect("action preserves degree");
            if seen[idx] {
                break;
            }
            seen[idx] = true;
            words.push(cur.clone());
            cur = step(action, &cur);
        }
        words.sort();
        // The smallest word of a rotation class is a power of a Lyndon word.
        let representative = match action {
            OrbitAction::Rotate => {
                let (lyndon, power) = lyndon_root(&words[0])?;
                OrbitRepresentative {
                    lead: None,
                    lyndon,
                    power,
                }
            }
            OrbitAction::FixFirstRotate => {
                let (lyndon, power) = lyndon_root(&Word(words[0].0[1..].to_vec()))?;
                OrbitRepresentative {
                    lead: Some(Word(vec![words[0].0[0]])),
                    lyndon,
                    power,
                }
            }
        };
        orbits.push(Orbit { representative, words });
    }
    Ok(orbits)
}

/// Checks `det S_(1,M-1)|V_m = f(A_m) prod_(i: m_i > 0) det S_(1,M-2)|V_(m-e_i)`
/// by brute force.
pub fn detshuffle_recursion_check<F: Field>(m: &DegreeVector, q: &BraidingMatrix<F>) -> Result<bool> {
    if m.nonzero_count() < 2 {
        return Err(Error::NeedsTwoLetters(m.clone()));
    }
    let len = m.total() as usize;
    let lhs = s1_matrix(len - 1, m, q)?.det()?;
    let mut rhs = eval(&a_form(m)?.expand()?, q)?;
    for i in m.support() {
        let lower = m.minus_unit(i).expect("i in support");
        rhs = rhs.mul_ref(&s1_matrix(len - 2, &lower, q)?.det()?);
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn dv(v: &[u32]) -> DegreeVector {
        DegreeVector::new(v.to_vec()).unwrap()
    }

    fn rational(rows: &[&[i64]]) -> BraidingMatrix<Cyclo> {
        let f = CyclotomicField::new(1);
        BraidingMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| Cyclo::from_i64(&f, x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn sigma_on_two_letters() {
        let q = rational(&[&[2, 3], &[5, 7]]);
        let s = sigma_matrix(1, &dv(&[1, 1]), &q).unwrap();
        // basis 12, 21: 12 -> q12 21, 21 -> q21 12
        assert_eq!(s.get(1, 0), q.get(0, 1));
        assert_eq!(s.get(0, 1), q.get(1, 0));
        assert!(s.get(0, 0).is_zero() && s.get(1, 1).is_zero());
        assert!(sigma_matrix(2, &dv(&[1, 1]), &q).is_err());
        assert!(sigma_matrix(0, &dv(&[1, 1]), &q).is_err());
    }

    #[test]
    fn shuffle_on_two_letters() {
        let q = rational(&[&[2, 3], &[5, 7]]);
        let s = s1_matrix(1, &dv(&[1, 1]), &q).unwrap();
        assert_eq!(s.det().unwrap(), q.one() - q.get(0, 1).clone() * q.get(1, 0).clone());
        assert_eq!(s1_matrix(0, &dv(&[2, 1]), &q).unwrap(), Matrix::identity(3, &q.one()));
        // (3)_q11 on the line V_(3,0)
        let s = s1_matrix(2, &dv(&[3, 0]), &q).unwrap();
        assert_eq!(*s.get(0, 0), q.one().from_i64_like(1 + 2 + 4));
    }

    #[test]
    fn braid_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let q = random_rational_braiding(3, &mut rng);
        let m = dv(&[1, 1, 1]);
        let s1 = sigma_matrix(1, &m, &q).unwrap();
        let s2 = sigma_matrix(2, &m, &q).unwrap();
        let l = s1.mul(&s2).unwrap().mul(&s1).unwrap();
        let r = s2.mul(&s1).unwrap().mul(&s2).unwrap();
        assert_eq!(l, r);
        let m4 = dv(&[2, 2, 0]);
        let a = sigma_matrix(1, &m4, &q).unwrap();
        let b = sigma_matrix(3, &m4, &q).unwrap();
        assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn symmetrizer_small() {
        let q = rational(&[&[-1, 3], &[5, 7]]);
        let s = symmetrizer_matrix(&dv(&[2, 0]), &q).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.kernel_dim(), 1);
        let m = dv(&[1, 1]);
        assert_eq!(symmetrizer_matrix(&m, &q).unwrap(), s1_matrix(1, &m, &q).unwrap());
        assert!(symmetrizer_matrix(&dv(&[1, 0]), &q).is_err());
    }

    #[test]
    fn identity_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let q2 = random_rational_braiding(2, &mut rng);
        assert!(braid_identity_check(1, &dv(&[1, 1]), &q2).unwrap());
        assert!(braid_identity_check(3, &dv(&[2, 2]), &q2).unwrap());
        let q3 = random_rational_braiding(3, &mut rng);
        assert!(braid_identity_check(2, &dv(&[1, 1, 1]), &q3).unwrap());
        assert!(braid_identity_check(4, &dv(&[2, 2]), &q2).is_err());
    }

    #[test]
    fn cyclic_closed_forms_small() {
        let q = rational(&[&[2, 3], &[5, 7]]);
        let m = dv(&[1, 1]);
        let p = q.one() - q.get(0, 1).clone() * q.get(1, 0).clone();
        assert_eq!(cycle_det(&m, &q).unwrap(), p);
        assert_eq!(cycle_matrix(&m, &q).unwrap().det().unwrap(), p);
        assert_eq!(cycle2_det(&m, &q).unwrap(), p.clone() * p.clone());
        assert_eq!(cycle2_matrix(&m, &q).unwrap().det().unwrap(), p.clone() * p);
        let m = dv(&[3, 0]);
        let expected = q.one() - q.get(0, 0).pow(2);
        assert_eq!(cycle_det(&m, &q).unwrap(), expected);
        assert_eq!(cycle_matrix(&m, &q).unwrap().det().unwrap(), expected);
    }

    #[test]
    fn coranks_small() {
        let q = rational(&[&[-1, 3], &[5, 7]]);
        let m = dv(&[2, 0]);
        assert!(cycle2_det(&m, &q).unwrap().is_zero());
        assert_eq!(cycle2_corank(&m, &q).unwrap(), 1);
        assert_eq!(cycle2_matrix(&m, &q).unwrap().kernel_dim(), 1);

        // Q_(2,2) = p11 p22 (p12 p21)^2 evaluated to -1
        let q = rational(&[&[1, -1], &[1, -1]]);
        let m = dv(&[2, 2]);
        assert_eq!(cycle_corank(&m, &q).unwrap(), 1);
        assert_eq!(cycle_matrix(&m, &q).unwrap().kernel_dim(), 1);
    }

    #[test]
    fn orbits() {
        let o = orbit_decomposition(&dv(&[1, 1]), OrbitAction::Rotate).unwrap();
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].representative.lyndon, Word::parse("12").unwrap());
        assert_eq!(o[0].representative.power, 1);

        let o = orbit_decomposition(&dv(&[2, 2]), OrbitAction::Rotate).unwrap();
        let mut sizes: Vec<usize> = o.iter().map(|x| x.words.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 4]);

        let o = orbit_decomposition(&dv(&[1, 2]), OrbitAction::FixFirstRotate).unwrap();
        let reps: Vec<(String, String, u32)> = o
            .iter()
            .map(|x| {
                let r = &x.representative;
                (r.lead.as_ref().unwrap().to_string(), r.lyndon.to_string(), r.power)
            })
            .collect();
        assert_eq!(reps, vec![("1".into(), "2".into(), 2), ("2".into(), "12".into(), 1)]);
        assert!(orbit_decomposition(&dv(&[1, 0]), OrbitAction::FixFirstRotate).is_err());
    }

    #[test]
    fn recursion_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let q = random_rational_braiding(2, &mut rng);
        for m in [[1, 1], [2, 1], [2, 2]] {
            assert!(detshuffle_recursion_check(&dv(&m), &q).unwrap());
        }
        assert!(detshuffle_recursion_check(&dv(&[3, 0]), &q).is_err());
    }

    #[test]
    fn zero_entry_rejected() {
        let f = CyclotomicField::new(1);
        let rows = vec![
            vec![Cyclo::from_i64(&f, 1), Cyclo::from_i64(&f, 0)],
            vec![Cyclo::from_i64(&f, 1), Cyclo::from_i64(&f, 1)],
        ];
        assert_eq!(BraidingMatrix::new(rows).unwrap_err(), Error::ZeroEntry(1, 2));
    }
}
