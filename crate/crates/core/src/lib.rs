//! Exact computations for Nichols algebras of diagonal type.
//!
//! The crate decides whether a Nichols algebra of diagonal type is free
//! (equal to the tensor algebra) by evaluating the polynomial family `P_m`
//! at a braiding matrix, and computes the dimension of the kernel of the
//! shuffle map at a minimal degenerate degree from Lyndon word counts.
//! Every closed formula is paired with a brute-force matrix computation over
//! an exact field so the two routes can be compared.
//!
//! Module map:
//!
//! * [`words`]: degree vectors, Lyndon words, necklaces and their counts.
//! * [`laurent`]: integer Laurent polynomials in the variables `p_ij`,
//!   the monomial `Q_m`, the polynomials `P_m`, `A_m` and their
//!   cyclotomic factorizations.
//! * [`field`]: exact scalars (cyclotomic numbers and rational functions in
//!   one transcendental) and exact linear algebra.
//! * [`shuffle`]: the braid-monoid representation on homogeneous
//!   components, shuffle operators, the symmetrizer and the cyclic operators
//!   with their closed-form determinants.
//! * [`analyzer`]: freeness certification, kernel dimensions and the
//!   diophantine criterion for exponent braidings.

pub mod analyzer;
pub mod arith;
pub mod error;
pub mod field;
pub mod laurent;
pub mod ring;
pub mod shuffle;
pub mod words;

pub use error::{Error, Result};

/// Default seed for randomized cross-checks: the ASCII bytes of "N1CH".
pub const DEFAULT_SEED: u64 = 0x4E31_4348;
