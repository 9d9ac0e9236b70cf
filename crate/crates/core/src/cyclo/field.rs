use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, One, Zero};

use super::poly;

/// The cyclotomic field Q(ζ_N), presented as Q[x]/Φ_N(x).
///
/// Fields are interned per conductor, so two handles to the same conductor
/// compare equal and share reduction data.
#[derive(Debug)]
pub struct CycField {
    conductor: u64,
    phi: Vec<BigInt>,
    phi_rat: Vec<BigRational>,
}

impl CycField {
    /// Returns the (shared) field Q(ζ_N). Panics when `conductor == 0`.
    pub fn new(conductor: u64) -> Arc<CycField> {
        assert!(conductor >= 1, "cyclotomic conductor must be positive");
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("field cache poisoned");
        guard
            .entry(conductor)
            .or_insert_with(|| {
                let phi = cyclotomic_polynomial(conductor);
                let phi_rat = phi.iter().map(|c| BigRational::from_integer(c.clone())).collect();
                Arc::new(CycField { conductor, phi, phi_rat })
            })
            .clone()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Φ_N, lowest-degree coefficient first.
    pub fn phi(&self) -> &[BigInt] {
        &self.phi
    }

    pub(crate) fn phi_rational(&self) -> &[BigRational] {
        &self.phi_rat
    }

    /// deg Φ_N, i.e. Euler's totient of N.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// Reduces a coefficient list modulo Φ_N in place and pads it to `degree()`.
    pub(crate) fn reduce(&self, coeffs: &mut Vec<BigRational>) {
        let d = self.degree();
        for i in (d..coeffs.len()).rev() {
            let c = std::mem::take(&mut coeffs[i]);
            if c.is_zero() {
                continue;
            }
            for (j, p) in self.phi.iter().enumerate().take(d) {
                if !p.is_zero() {
                    coeffs[i - d + j] -= &c * p;
                }
            }
        }
        coeffs.resize(d, BigRational::zero());
    }
}

impl PartialEq for CycField {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}

impl Eq for CycField {}

impl std::hash::Hash for CycField {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.conductor.hash(state);
    }
}

impl fmt::Display for CycField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.conductor)
    }
}

/// Φ_N as integer coefficients (lowest degree first), computed by dividing
/// x^N − 1 by Φ_d for every proper divisor d of N.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic_polynomial requires N >= 1");
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n % d == 0) {
        num = poly::int_div_exact(&num, &cyclotomic_polynomial(d))
            .expect("x^N - 1 is divisible by every Phi_d, d | N");
    }
    num
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn degree_is_totient_and_divides() {
        for n in 1..=30u64 {
            let phi = cyclotomic_polynomial(n);
            let totient = (1..=n).filter(|k| num::integer::gcd(*k, n) == 1).count();
            assert_eq!(phi.len() - 1, totient, "N = {n}");
            assert!(phi.last().unwrap().is_one());
            let mut xn = vec![BigInt::zero(); n as usize + 1];
            xn[0] = -BigInt::one();
            xn[n as usize] = BigInt::one();
            assert!(poly::int_div_exact(&xn, &phi).is_some(), "Phi_{n} must divide x^{n}-1");
        }
    }

    #[test]
    fn interned() {
        let a = CycField::new(5);
        let b = CycField::new(5);
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(a.degree(), 4);
    }
}
