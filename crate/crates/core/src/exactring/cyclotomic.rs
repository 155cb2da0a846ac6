//! Cyclotomic polynomials `Φ_d(q)`, the irreducible factors of every
//! `[k] = q^k - q^{-k}` denominator that appears in skein evaluations.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::laurent::LaurentQT;

fn cache() -> &'static RwLock<HashMap<u32, Arc<LaurentQT>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<LaurentQT>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Φ_d(q)` as a polynomial in `q`.
pub fn phi(d: u32) -> Arc<LaurentQT> {
    assert!(d >= 1);
    if let Some(p) = cache().read().unwrap().get(&d) {
        return p.clone();
    }
    // q^d - 1 = Π_{e | d} Φ_e(q)
    let mut p = LaurentQT::q_pow(d as i64) - LaurentQT::one();
    for e in divisors(d) {
        if e < d {
            p = p.exact_div(&phi(e)).expect("cyclotomic factor divides q^d - 1");
        }
    }
    let p = Arc::new(p);
    cache().write().unwrap().insert(d, p.clone());
    p
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Euler's totient, the degree of `Φ_d`.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count() as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*phi(1), LaurentQT::q_pow(1) - LaurentQT::one());
        assert_eq!(*phi(2), LaurentQT::q_pow(1) + LaurentQT::one());
        let p4 = LaurentQT::q_pow(2) + LaurentQT::one();
        assert_eq!(*phi(4), p4);
        let p6 = LaurentQT::q_pow(2) - LaurentQT::q_pow(1) + LaurentQT::one();
        assert_eq!(*phi(6), p6);
    }

    #[test]
    fn product_over_divisors() {
        for n in 1..=12u32 {
            let prod = divisors(n)
                .into_iter()
                .fold(LaurentQT::one(), |acc, d| &acc * &*phi(d));
            assert_eq!(prod, LaurentQT::q_pow(n as i64) - LaurentQT::one());
            assert_eq!(divisors(n).iter().map(|d| totient(*d)).sum::<u32>(), n);
        }
    }
}
