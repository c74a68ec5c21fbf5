//! The eight-case family `P_m` and the monomial `Q_m`.

use std::fmt;

use serde::Serialize;

use super::poly::{LaurentPoly, Monomial};
use crate::error::{Error, Result};
use crate::ring::{q_integer, Ring};
use crate::words::DegreeVector;

/// Which clause of the case split for `P_m` applies to a degree. Indices
/// are 0-based.
///
/// The classification is total on `|m| >= 2`. Where two clauses describe
/// the same degree the earlier one wins: `e_i + 2 e_j` is `OnePlusK`, and
/// both clauses give the same polynomial there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum PmCase {
    /// `m = k e_i`, `k >= 2`.
    SingleLetter { i: usize, k: u32 },
    /// `m = e_i + k e_j`.
    OnePlusK { i: usize, j: usize, k: u32 },
    /// `m = 2 e_i + k e_j`, `k >= 2`.
    TwoPlusK { i: usize, j: usize, k: u32 },
    #[serde(rename = "(3,3)")]
    ThreeThree { i: usize, j: usize },
    /// `m = 3 e_i + 4 e_j`.
    #[serde(rename = "(3,4)")]
    ThreeFour { i: usize, j: usize },
    /// `m = 3 e_i + 6 e_j`.
    #[serde(rename = "(3,6)")]
    ThreeSix { i: usize, j: usize },
    #[serde(rename = "(4,4)")]
    FourFour { i: usize, j: usize },
    Generic,
}

impl PmCase {
    /// Number of the clause, 1 to 8.
    pub fn number(&self) -> u8 {
        match self {
            PmCase::SingleLetter { .. } => 1,
            PmCase::OnePlusK { .. } => 2,
            PmCase::TwoPlusK { .. } => 3,
            PmCase::ThreeThree { .. } => 4,
            PmCase::ThreeFour { .. } => 5,
            PmCase::ThreeSix { .. } => 6,
            PmCase::FourFour { .. } => 7,
            PmCase::Generic => 8,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            PmCase::SingleLetter { .. } => "single-letter",
            PmCase::OnePlusK { .. } => "one-plus-k",
            PmCase::TwoPlusK { .. } => "two-plus-k",
            PmCase::ThreeThree { .. } => "(3,3)",
            PmCase::ThreeFour { .. } => "(3,4)",
            PmCase::ThreeSix { .. } => "(3,6)",
            PmCase::FourFour { .. } => "(4,4)",
            PmCase::Generic => "generic",
        }
    }
}

impl fmt::Display for PmCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case ({}) {}", self.number(), self.tag())
    }
}

pub fn classify(m: &DegreeVector) -> Result<PmCase> {
    if m.total() < 2 {
        return Err(Error::DegreeTooSmall(m.clone()));
    }
    let support = m.support();
    match *support.as_slice() {
        [i] => Ok(PmCase::SingleLetter { i, k: m.get(i) }),
        [a, b] => {
            let (x, y) = (m.get(a), m.get(b));
            // orient so that the smaller multiplicity sits at i
            let (i, j) = if x <= y { (a, b) } else { (b, a) };
            let (small, large) = (m.get(i), m.get(j));
            Ok(match (small, large) {
                (1, k) => PmCase::OnePlusK { i, j, k },
                (2, k) => PmCase::TwoPlusK { i, j, k },
                (3, 3) => PmCase::ThreeThree { i: a, j: b },
                (3, 4) => PmCase::ThreeFour { i, j },
                (3, 6) => PmCase::ThreeSix { i, j },
                (4, 4) => PmCase::FourFour { i: a, j: b },
                _ => PmCase::Generic,
            })
        }
        _ => Ok(PmCase::Generic),
    }
}

/// `Q_m = prod p_ii^(m_i(m_i-1)/N) prod_{i<j} (p_ij p_ji)^(m_i m_j / N)`.
pub fn q_monomial(m: &DegreeVector) -> Result<Monomial> {
    let big_n = m.big_n()? as i64;
    Ok(full_monomial(m).scaled_down(big_n))
}

/// `Q_m^N(m)`, i.e. the monomial with exponents `m_i(m_i-1)` and `m_i m_j`.
/// Defined for every `m`; it is the identity when `|m| <= 1`.
pub fn full_monomial(m: &DegreeVector) -> Monomial {
    let n = m.n();
    let mut exps = Vec::new();
    for i in 0..n {
        let mi = m.get(i) as i64;
        exps.push(((i, i), mi * (mi - 1).max(0)));
        for j in (i + 1)..n {
            let e = mi * m.get(j) as i64;
            exps.push(((i, j), e));
            exps.push(((j, i), e));
        }
    }
    Monomial::from_exponents(exps)
}

impl Monomial {
    /// Divides every exponent by `k`; `k` must divide all of them.
    pub(crate) fn scaled_down(&self, k: i64) -> Monomial {
        Monomial::from_exponents(self.exponents().map(|(key, e)| {
            debug_assert_eq!(e % k, 0);
            (key, e / k)
        }))
    }
}

fn v(i: usize, j: usize) -> LaurentPoly {
    LaurentPoly::var(i, j)
}

fn pp(i: usize, j: usize) -> LaurentPoly {
    v(i, j) * v(j, i)
}

/// `P_m`, written out clause by clause.
pub fn p_poly(m: &DegreeVector) -> Result<LaurentPoly> {
    let one = LaurentPoly::one();
    Ok(match classify(m)? {
        PmCase::SingleLetter { i, k } => q_integer(k as u64, &v(i, i)),
        PmCase::OnePlusK { i, j, k } => one - v(j, j).pow(k as u64 - 1) * pp(i, j),
        PmCase::TwoPlusK { i, j, k } => {
            let k = k as u64;
            one + v(j, j).pow(k * (k - 1) / 2) * (-pp(i, j)).pow(k) * v(i, i)
        }
        PmCase::ThreeThree { i, j } => {
            q_integer(3, &(v(i, i).pow(2) * pp(i, j).pow(3) * v(j, j).pow(2)))
        }
        PmCase::ThreeFour { i, j } => {
            (one - v(i, i).pow(2) * pp(i, j).pow(4) * v(j, j).pow(4))
                * q_integer(3, &(v(i, i) * pp(i, j).pow(2) * v(j, j).pow(2)))
        }
        PmCase::ThreeSix { i, j } => {
            (one - v(i, i) * pp(i, j).pow(3) * v(j, j).pow(5))
                * q_integer(3, &(v(i, i).pow(2) * pp(i, j).pow(6) * v(j, j).pow(10)))
        }
        PmCase::FourFour { i, j } => {
            (one.clone() + v(i, i).pow(3) * pp(i, j).pow(4) * v(j, j).pow(3))
                * (one + v(i, i).pow(6) * pp(i, j).pow(8) * v(j, j).pow(6))
        }
        PmCase::Generic => one - LaurentPoly::monomial(full_monomial(m)),
    })
}
