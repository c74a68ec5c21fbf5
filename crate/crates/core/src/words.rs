//! Degree vectors, words, Lyndon words and necklaces.
//!
//! Letters are stored 0-based and printed 1-based, so the word `x1 x2` is
//! `Word(vec![0, 1])` and displays as `12`. The lexicographic order is the
//! derived order on the letter vector: a proper prefix is smaller.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::arith::{divisors, gcd_all};
use crate::error::{Error, Result};
use crate::laurent::{classify, PmCase};

/// An element `m` of `N_0^n`.
///
/// The derived `Ord` is the lexicographic order on entries and only serves
/// as a canonical sort key; the componentwise partial order is
/// [`DegreeVector::below_or_eq`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeVector(Vec<u32>);

impl DegreeVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        Ok(DegreeVector(entries))
    }

    pub fn zero(n: usize) -> Self {
        DegreeVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DegreeVector(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// `|m|`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Indices with a nonzero entry.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn nonzero_count(&self) -> usize {
        self.0.iter().filter(|&&x| x > 0).count()
    }

    /// `gcd(m)`, defined for `m != 0`.
    pub fn gcd(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroDegree);
        }
        Ok(gcd_all(self.0.iter().map(|&x| x as u64)) as u32)
    }

    /// `N(m) = gcd{m_i(m_i-1), m_j m_k : j < k}`, defined for `|m| >= 2`.
    pub fn big_n(&self) -> Result<u64> {
        if self.total() < 2 {
            return Err(Error::DegreeTooSmall(self.clone()));
        }
        let m: Vec<u64> = self.0.iter().map(|&x| x as u64).collect();
        let diag = m.iter().map(|&x| x * x.saturating_sub(1));
        let off = (0..m.len()).flat_map(|j| ((j + 1)..m.len()).map(move |k| (j, k)));
        let off: Vec<u64> = off.map(|(j, k)| m[j] * m[k]).collect();
        Ok(gcd_all(diag.chain(off)))
    }

    /// Componentwise partial order `m <= l`. Named apart from
    /// `PartialOrd::le`, which is the lexicographic sort order.
    pub fn below_or_eq(&self, other: &Self) -> bool {
        self.n() == other.n() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Strict partial order: `m <= l` and `m != l`.
    pub fn below(&self, other: &Self) -> bool {
        self.below_or_eq(other) && self != other
    }

    /// `m - e_i`, if `m_i > 0`.
    pub fn minus_unit(&self, i: usize) -> Option<Self> {
        if self.0[i] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[i] -= 1;
        Some(DegreeVector(v))
    }

    pub fn plus_unit(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v[i] += 1;
        DegreeVector(v)
    }

    /// `m / k` when `k` divides every entry.
    pub fn div(&self, k: u32) -> Option<Self> {
        if k == 0 || self.0.iter().any(|&x| x % k != 0) {
            return None;
        }
        Some(DegreeVector(self.0.iter().map(|&x| x / k).collect()))
    }

    /// All degree vectors of length `n` with total exactly `d`, in
    /// lexicographically decreasing order of entries, i.e. `(d,0,..)` first.
    pub fn all_of_total(n: usize, d: u32) -> Vec<Self> {
        fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<DegreeVector>) {
            if prefix.len() + 1 == n {
                prefix.push(d);
                out.push(DegreeVector(prefix.clone()));
                prefix.pop();
                return;
            }
            for first in (0..=d).rev() {
                prefix.push(first);
                rec(n, d - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, d, &mut Vec::with_capacity(n), &mut out);
        }
        out
    }

    /// All `m` with `lo <= |m| <= hi`, graded by total degree.
    pub fn graded(n: usize, lo: u32, hi: u32) -> Vec<Self> {
        (lo..=hi).flat_map(|d| Self::all_of_total(n, d)).collect()
    }

    /// Number of words of this degree, `|m|! / prod m_i!`.
    pub fn multinomial(&self) -> u64 {
        let mut result: u64 = 1;
        let mut seen: u64 = 0;
        for &x in &self.0 {
            for t in 1..=x as u64 {
                seen += 1;
                result = result * seen / t;
            }
        }
        result
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// A finite word over the alphabet `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self, n: usize) -> DegreeVector {
        let mut v = vec![0u32; n];
        for &c in &self.0 {
            v[c as usize] += 1;
        }
        DegreeVector(v)
    }

    /// Cyclic left rotation by `k`: `i_1..i_m -> i_{k+1}..i_m i_1..i_k`.
    pub fn rotate(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let k = k % v.len();
            v.rotate_left(k);
        }
        Word(v)
    }

    /// Parses a string of 1-based digits such as `"1122"`.
    pub fn parse(s: &str) -> Result<Word> {
        s.chars()
            .map(|c| match c.to_digit(10) {
                Some(d) if d >= 1 => Ok(d as u8 - 1),
                _ => Err(Error::Invalid(format!("bad letter {c:?} in word {s:?}"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }

    /// Smallest `p` dividing the length with `w = (w[..p])^(len/p)`.
    pub fn primitive_period(&self) -> usize {
        let len = self.len();
        (1..=len)
            .find(|&p| len.is_multiple_of(p) && (p..len).all(|i| self.0[i] == self.0[i - p]))
            .unwrap_or(0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.0.iter().any(|&c| c >= 9);
        for (i, &c) in self.0.iter().enumerate() {
            if wide && i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{}", c as u32 + 1)?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// True iff `w` is strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let s = w.letters();
    Ok((1..s.len()).all(|i| s < &s[i..]))
}

/// True iff `w` is smaller than or equal to each of its rotations.
pub fn is_necklace(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok((1..w.len()).all(|k| *w <= w.rotate(k)))
}

/// All words of degree `m`, in lexicographic order.
pub fn words_of_degree(m: &DegreeVector) -> Vec<Word> {
    let mut letters: Vec<u8> = Vec::with_capacity(m.total() as usize);
    for (i, &x) in m.entries().iter().enumerate() {
        letters.extend(std::iter::repeat_n(i as u8, x as usize));
    }
    let mut out = vec![Word(letters.clone())];
    while next_permutation(&mut letters) {
        out.push(Word(letters.clone()));
    }
    out
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Visits every Lyndon word of length `len` over `n` letters in increasing
/// lexicographic order (Duval's successor algorithm).
fn for_each_lyndon_of_length(n: usize, len: usize, mut visit: impl FnMut(&[u8])) {
    if n == 0 || len == 0 {
        return;
    }
    let top = (n - 1) as u8;
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == len {
            visit(&w);
        }
        // extend periodically to length len, then strip trailing maximal letters
        let m = w.len();
        while w.len() < len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(c) => *c += 1,
            None => return,
        }
    }
}

/// Sorted list of the Lyndon words of degree exactly `m`.
pub fn lyndon_words(m: &DegreeVector) -> Result<Vec<Word>> {
    if m.is_zero() {
        return Err(Error::ZeroDegree);
    }
    let n = m.n();
    let mut out = Vec::new();
    for_each_lyndon_of_length(n, m.total() as usize, |w| {
        let mut counts = vec![0u32; n];
        for &c in w {
            counts[c as usize] += 1;
        }
        if counts == m.entries() {
            out.push(Word(w.to_vec()));
        }
    });
    Ok(out)
}

type CountTable = HashMap<Vec<u32>, u64>;
type CountCache = Mutex<HashMap<(usize, usize), Arc<CountTable>>>;

fn count_table(n: usize, len: usize) -> Arc<CountTable> {
    static CACHE: OnceLock<CountCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("lyndon cache poisoned").get(&(n, len)) {
        return t.clone();
    }
    let mut table = CountTable::new();
    for_each_lyndon_of_length(n, len, |w| {
        let mut counts = vec![0u32; n];
        for &c in w {
            counts[c as usize] += 1;
        }
        *table.entry(counts).or_insert(0) += 1;
    });
    let table = Arc::new(table);
    cache
        .lock()
        .expect("lyndon cache poisoned")
        .insert((n, len), table.clone());
    table
}

/// `ℓ_m`, the number of Lyndon words of degree `m`.
pub fn lyndon_count(m: &DegreeVector) -> Result<u64> {
    if m.is_zero() {
        return Err(Error::ZeroDegree);
    }
    let table = count_table(m.n(), m.total() as usize);
    Ok(table.get(m.entries()).copied().unwrap_or(0))
}

/// `N_m = sum_{d | gcd(m)} ℓ_{m/d}`.
pub fn necklace_count(m: &DegreeVector) -> Result<u64> {
    let g = m.gcd()?;
    divisors(g as u64)
        .into_iter()
        .map(|d| lyndon_count(&m.div(d as u32).expect("d divides gcd")))
        .sum()
}

/// Splits a necklace `w` into its unique Lyndon root and exponent.
pub fn lyndon_root(w: &Word) -> Result<(Word, u32)> {
    if !is_necklace(w)? {
        return Err(Error::Invalid(format!("{w} is not a necklace")));
    }
    let p = w.primitive_period();
    Ok((Word(w.0[..p].to_vec()), (w.len() / p) as u32))
}

/// Both sides of the Lyndon-count inequality
/// `sum_{k | gcd(m)} ℓ_{m/k} <= sum_{i: m_i > 0} ℓ_{m - e_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LyndonInequality {
    pub lhs: u64,
    pub rhs: u64,
    pub equality: bool,
    /// Equality predicted from the case classification of `P_m`: cases
    /// (2) to (7), except `m = e_s + e_t`.
    pub expected_equality: bool,
}

pub fn lyndon_inequality(m: &DegreeVector) -> Result<LyndonInequality> {
    if m.nonzero_count() < 2 {
        return Err(Error::NeedsTwoLetters(m.clone()));
    }
    let lhs = necklace_count(m)?;
    let rhs = m
        .support()
        .into_iter()
        .map(|i| lyndon_count(&m.minus_unit(i).expect("i in support")))
        .sum::<Result<u64>>()?;
    let case = classify(m)?;
    let pair_of_ones = m.total() == 2;
    let expected_equality = !pair_of_ones
        && !matches!(case, PmCase::SingleLetter { .. } | PmCase::Generic);
    Ok(LyndonInequality {
        lhs,
        rhs,
        equality: lhs == rhs,
        expected_equality,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: &[u32]) -> DegreeVector {
        DegreeVector::new(v.to_vec()).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn lyndon_predicate() {
        assert!(is_lyndon(&w("1")).unwrap());
        assert!(is_lyndon(&w("1122")).unwrap());
        assert!(!is_lyndon(&w("1212")).unwrap());
        assert!(is_lyndon(&w("122")).unwrap());
        assert!(!is_lyndon(&w("11")).unwrap());
        assert!(!is_lyndon(&w("21")).unwrap());
        assert_eq!(is_lyndon(&Word(vec![])), Err(Error::EmptyWord));
    }

    #[test]
    fn prefix_is_smaller() {
        assert!(w("12") < w("121"));
        assert!(w("112") < w("12"));
    }

    #[test]
    fn lyndon_word_lists() {
        assert_eq!(lyndon_words(&dv(&[1, 1])).unwrap(), vec![w("12")]);
        assert_eq!(lyndon_words(&dv(&[1, 0])).unwrap(), vec![w("1")]);
        for k in 2..6 {
            assert!(lyndon_words(&dv(&[k, 0])).unwrap().is_empty());
        }
        assert_eq!(lyndon_words(&dv(&[3, 4])).unwrap().len(), 5);
        assert_eq!(lyndon_words(&dv(&[0, 0])), Err(Error::ZeroDegree));
    }

    #[test]
    fn small_counts() {
        for k in 0..8 {
            assert_eq!(lyndon_count(&dv(&[1, k])).unwrap(), 1);
            assert_eq!(lyndon_count(&dv(&[k, 1])).unwrap(), 1);
        }
        assert_eq!(lyndon_count(&dv(&[2, 4])).unwrap(), 2);
        assert_eq!(lyndon_count(&dv(&[3, 3])).unwrap(), 3);
        assert_eq!(lyndon_count(&dv(&[2, 2])).unwrap(), 1);
        assert_eq!(lyndon_count(&dv(&[5, 0])).unwrap(), 0);
        assert_eq!(lyndon_count(&dv(&[0, 0])), Err(Error::ZeroDegree));
    }

    #[test]
    fn necklaces() {
        assert_eq!(necklace_count(&dv(&[1, 1])).unwrap(), 1);
        assert_eq!(necklace_count(&dv(&[2, 2])).unwrap(), 2);
        assert_eq!(necklace_count(&dv(&[3, 0])).unwrap(), 1);
        assert!(is_necklace(&w("1212")).unwrap());
        assert!(!is_necklace(&w("2112")).unwrap());
        assert_eq!(lyndon_root(&w("1212")).unwrap(), (w("12"), 2));
        assert_eq!(lyndon_root(&w("111")).unwrap(), (w("1"), 3));
    }

    #[test]
    fn arithmetic_invariants() {
        let m = dv(&[3, 4]);
        assert_eq!(m.total(), 7);
        assert_eq!(m.gcd().unwrap(), 1);
        assert_eq!(m.big_n().unwrap(), 6);
        assert_eq!(dv(&[1, 1]).big_n().unwrap(), 1);
        assert_eq!(dv(&[5, 0]).big_n().unwrap(), 20);
        assert_eq!(dv(&[4, 4]).big_n().unwrap(), 4);
        assert_eq!(dv(&[1, 0]).big_n(), Err(Error::DegreeTooSmall(dv(&[1, 0]))));
        assert_eq!(dv(&[0, 0]).gcd(), Err(Error::ZeroDegree));
        assert!(dv(&[1, 2]).below_or_eq(&dv(&[1, 3])));
        assert!(!dv(&[2, 0]).below_or_eq(&dv(&[1, 3])));
        assert!(dv(&[0, 5]).below(&dv(&[1, 5])) && !dv(&[0, 5]).below(&dv(&[5, 0])));
        assert_eq!(dv(&[3, 4]).multinomial(), 35);
    }

    #[test]
    fn words_enumerated_in_lex_order() {
        let words = words_of_degree(&dv(&[2, 2]));
        let shown: Vec<String> = words.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["1122", "1212", "1221", "2112", "2121", "2211"]);
    }

    #[test]
    fn graded_enumeration() {
        let all = DegreeVector::graded(2, 2, 3);
        let shown: Vec<String> = all.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["(2,0)", "(1,1)", "(0,2)", "(3,0)", "(2,1)", "(1,2)", "(0,3)"]);
    }

    #[test]
    fn inequality_examples() {
        let r = lyndon_inequality(&dv(&[3, 4])).unwrap();
        assert!(r.equality && r.expected_equality);
        let r = lyndon_inequality(&dv(&[1, 1])).unwrap();
        assert_eq!((r.lhs, r.rhs, r.equality), (1, 2, false));
        assert!(!r.expected_equality);
        let r = lyndon_inequality(&dv(&[5, 5])).unwrap();
        assert!(!r.equality && !r.expected_equality);
        assert!(lyndon_inequality(&dv(&[4, 0])).is_err());
    }
}
