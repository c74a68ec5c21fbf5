//! Integer Laurent polynomials in `p_ij`, the family `P_m`, the monomial
//! `Q_m`, the quotient `A_m`, and their cyclotomic factorizations.

mod cases;
mod cyclotomic;
mod forms;
mod poly;

pub use cases::{classify, full_monomial, p_poly, q_monomial, PmCase};
pub use cyclotomic::cyclotomic;
pub use forms::{
    a_cofactor, a_form, coprime_check, p_factor_form, radical_identity_check,
    CyclotomicProductForm,
};
pub use poly::{LaurentPoly, Monomial};
