//! Exact scalar fields of characteristic zero and linear algebra over them.
//!
//! Two kinds of field are provided: the cyclotomic fields `Q(ζ_N)`
//! ([`Cyclo`], which with `N = 1` is just `Q`) and the rational function
//! field `Q(t)` ([`RatFunc`]) used for braidings `q_ij = t^a_ij` with `t`
//! not a root of unity.

mod cyclo;
mod matrix;
mod ratfunc;
mod upoly;

pub use cyclo::{Cyclo, CyclotomicField};
pub use matrix::Matrix;
pub use ratfunc::RatFunc;
pub use upoly::QPoly;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial};
use crate::ring::Field;
use crate::shuffle::BraidingMatrix;

/// Evaluates a monomial at `p_ij = q_ij`.
pub fn eval_monomial<F: Field>(m: &Monomial, q: &BraidingMatrix<F>) -> Result<F> {
    let mut acc = q.one();
    for ((i, j), e) in m.exponents() {
        if i >= q.n() || j >= q.n() {
            return Err(Error::DimensionMismatch(format!(
                "variable p[{}][{}] outside a {}x{} braiding",
                i + 1,
                j + 1,
                q.n(),
                q.n()
            )));
        }
        acc = acc.mul_ref(&q.get(i, j).powi(e));
    }
    Ok(acc)
}

/// The evaluation homomorphism `p_ij -> q_ij`.
pub fn eval<F: Field>(poly: &LaurentPoly, q: &BraidingMatrix<F>) -> Result<F> {
    let one = q.one();
    if !q.entries().all(|x| x.same_context(&one)) {
        return Err(Error::ContextMismatch("braiding entries live in different fields".into()));
    }
    let mut acc = one.zero_like();
    for (m, c) in poly.terms() {
        let value = eval_monomial(m, q)?;
        let coeff = one.from_rational_like(&BigRational::from_integer(c.clone()));
        acc = acc.add_ref(&coeff.mul_ref(&value));
    }
    Ok(acc)
}
