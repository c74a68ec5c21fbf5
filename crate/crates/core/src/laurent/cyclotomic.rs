//! Integer cyclotomic polynomials.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::divisors;
use crate::error::{Error, Result};

/// `Φ_k` as integer coefficients from the constant term up.
///
/// Computed as `(x^k - 1) / prod_{d | k, d < k} Φ_d` by exact division by
/// monic polynomials; results are cached.
pub fn cyclotomic(k: u64) -> Result<Arc<Vec<BigInt>>> {
    if k == 0 {
        return Err(Error::CyclotomicIndex);
    }
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("cyclotomic cache poisoned").get(&k) {
        return Ok(p.clone());
    }
    let mut poly = vec![BigInt::zero(); k as usize + 1];
    poly[0] = -BigInt::one();
    poly[k as usize] = BigInt::one();
    for d in divisors(k) {
        if d < k {
            let phi = cyclotomic(d)?;
            poly = div_monic(&poly, &phi);
        }
    }
    let poly = Arc::new(poly);
    cache
        .lock()
        .expect("cyclotomic cache poisoned")
        .insert(k, poly.clone());
    Ok(poly)
}

/// Quotient of `num` by a monic `den`; the remainder is assumed zero.
fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    if rem.len() <= dn {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn known_values() {
        assert_eq!(*cyclotomic(1).unwrap(), ints(&[-1, 1]));
        assert_eq!(*cyclotomic(2).unwrap(), ints(&[1, 1]));
        assert_eq!(*cyclotomic(5).unwrap(), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(*cyclotomic(6).unwrap(), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic(12).unwrap(), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(0), Err(Error::CyclotomicIndex));
    }

    #[test]
    fn product_over_divisors_is_x_pow_k_minus_one() {
        for k in 1..=30u64 {
            let mut prod = ints(&[1]);
            for d in divisors(k) {
                let phi = cyclotomic(d).unwrap();
                let mut next = vec![BigInt::zero(); prod.len() + phi.len() - 1];
                for (i, a) in prod.iter().enumerate() {
                    for (j, b) in phi.iter().enumerate() {
                        next[i + j] += a * b;
                    }
                }
                prod = next;
            }
            let mut expected = vec![BigInt::zero(); k as usize + 1];
            expected[0] = BigInt::from(-1);
            expected[k as usize] = BigInt::one();
            assert_eq!(prod, expected, "k = {k}");
            assert_eq!(cyclotomic(k).unwrap().len() as u64 - 1, crate::arith::totient(k));
        }
    }
}
