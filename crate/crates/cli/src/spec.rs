//! The braiding input document.
//!
//! ```json
//! {"n": 2, "mode": {"cyclotomic": {"order": 5, "exponents": [[1, 1], [0, 1]]}}}
//! {"n": 2, "mode": {"transcendental": {"exponents": [[2, -1], [0, 2]]}}}
//! {"n": 1, "mode": {"explicit": {"order": 4, "entries": [[["0", "1"]]]}}}
//! ```
//!
//! Explicit entries are coefficient vectors in powers of `ζ_N`; each
//! coefficient is an integer or a string such as `"-3/4"`.

use std::path::Path;

use anyhow::{bail, Context, Result};
use nichols::analyzer::{ExponentBraiding, ExponentMode};
use nichols::field::{Cyclo, CyclotomicField, QPoly, RatFunc};
use nichols::shuffle::BraidingMatrix;
use num_rational::BigRational;
use serde::Deserialize;
use serde_json::Value;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidingSpec {
    pub n: usize,
    pub mode: Mode,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum Mode {
    Cyclotomic {
        order: u64,
        exponents: Vec<Vec<i64>>,
    },
    Transcendental {
        exponents: Vec<Vec<i64>>,
    },
    Explicit {
        #[serde(alias = "N")]
        order: u64,
        entries: Vec<Vec<Vec<Coeff>>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    fn to_rational(&self) -> Result<BigRational> {
        match self {
            Coeff::Int(v) => Ok(BigRational::from_integer((*v).into())),
            Coeff::Text(s) => s
                .trim()
                .parse()
                .with_context(|| format!("bad coefficient {s:?}")),
        }
    }
}

pub enum Braiding {
    Cyclotomic(BraidingMatrix<Cyclo>),
    Transcendental(ExponentBraiding, BraidingMatrix<RatFunc>),
}

impl Braiding {
    pub fn to_json(&self) -> Value {
        match self {
            Braiding::Cyclotomic(q) => q.to_json(),
            Braiding::Transcendental(_, q) => q.to_json(),
        }
    }
}

fn check_square<T>(n: usize, rows: &[Vec<T>], what: &str) -> Result<()> {
    if n == 0 {
        bail!("n must be at least 1");
    }
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        bail!("{what} must be an {n}x{n} matrix");
    }
    Ok(())
}

fn check_order(order: u64) -> Result<()> {
    if order == 0 {
        bail!("root of unity order must be at least 1");
    }
    Ok(())
}

impl BraidingSpec {
    pub fn parse(text: &str) -> Result<BraidingSpec> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<BraidingSpec> {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        BraidingSpec::parse(&text).with_context(|| format!("invalid spec {}", path.display()))
    }

    pub fn build(&self) -> Result<Braiding> {
        match &self.mode {
            Mode::Cyclotomic { order, exponents } => {
                check_square(self.n, exponents, "exponents")?;
                check_order(*order)?;
                let e = ExponentBraiding::new(exponents.clone(), ExponentMode::RootOfUnity(*order))?;
                Ok(Braiding::Cyclotomic(e.to_cyclotomic()?))
            }
            Mode::Transcendental { exponents } => {
                check_square(self.n, exponents, "exponents")?;
                let e = ExponentBraiding::new(exponents.clone(), ExponentMode::Transcendental)?;
                let q = e.to_transcendental()?;
                Ok(Braiding::Transcendental(e, q))
            }
            Mode::Explicit { order, entries } => {
                check_square(self.n, entries, "entries")?;
                check_order(*order)?;
                let field = CyclotomicField::new(*order);
                let rows = entries
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|coeffs| {
                                let c = coeffs.iter().map(Coeff::to_rational).collect::<Result<Vec<_>>>()?;
                                Ok(Cyclo::from_poly(&field, &QPoly::from_coeffs(c)))
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Braiding::Cyclotomic(BraidingMatrix::new(rows)?))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_modes_parse() {
        let specs = [
            r#"{"n":2,"mode":{"cyclotomic":{"order":5,"exponents":[[1,1],[0,1]]}}}"#,
            r#"{"n":2,"mode":{"transcendental":{"exponents":[[2,-1],[0,2]]}}}"#,
            r#"{"n":1,"mode":{"explicit":{"N":4,"entries":[[["0","1"]]]}}}"#,
            r#"{"n":1,"mode":{"explicit":{"order":1,"entries":[[[-1]]]}}}"#,
        ];
        for s in specs {
            BraidingSpec::parse(s).unwrap().build().unwrap();
        }
    }

    #[test]
    fn bad_specs() {
        let zero = r#"{"n":1,"mode":{"explicit":{"order":3,"entries":[[[0, "0/5"]]]}}}"#;
        let err = BraidingSpec::parse(zero).unwrap().build().err().unwrap();
        assert!(err.to_string().contains("entries must be nonzero"));
        let ragged = r#"{"n":2,"mode":{"cyclotomic":{"order":5,"exponents":[[1,1],[0]]}}}"#;
        assert!(BraidingSpec::parse(ragged).unwrap().build().is_err());
        let wrong_n = r#"{"n":3,"mode":{"transcendental":{"exponents":[[1]]}}}"#;
        assert!(BraidingSpec::parse(wrong_n).unwrap().build().is_err());
        let unknown = r#"{"n":1,"mode":{"modular":{"p":3}}}"#;
        assert!(BraidingSpec::parse(unknown).is_err());
        let order0 = r#"{"n":1,"mode":{"cyclotomic":{"order":0,"exponents":[[1]]}}}"#;
        assert!(BraidingSpec::parse(order0).unwrap().build().is_err());
    }
}
