use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{BigRational, Integer, One, Zero};

use super::field::CycField;
use super::poly;
use crate::error::{Error, Result};

/// An element of Q(ζ_N) in the power basis 1, ζ, …, ζ^{deg−1}.
///
/// The coefficient vector is always the reduced representative mod Φ_N, so
/// equality and hashing are coordinate-wise.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<CycField>,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    pub fn zero(field: &Arc<CycField>) -> Self {
        CycNum { field: field.clone(), coeffs: vec![BigRational::zero(); field.degree()] }
    }

    pub fn one(field: &Arc<CycField>) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    pub fn from_rational(field: &Arc<CycField>, r: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); field.degree()];
        coeffs[0] = r;
        CycNum { field: field.clone(), coeffs }
    }

    pub fn from_int(field: &Arc<CycField>, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(n.into()))
    }

    /// Builds an element from arbitrary-length coefficients (reduced mod Φ_N).
    pub fn from_coeffs(field: &Arc<CycField>, mut coeffs: Vec<BigRational>) -> Self {
        field.reduce(&mut coeffs);
        CycNum { field: field.clone(), coeffs }
    }

    /// ζ_N^k for any integer k.
    pub fn zeta_pow(field: &Arc<CycField>, k: i64) -> Self {
        let n = field.conductor() as i64;
        let e = k.mod_floor(&n) as usize;
        let mut coeffs = vec![BigRational::zero(); e.max(field.degree()) + 1];
        coeffs[e] = BigRational::one();
        Self::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    fn check_field(&self, other: &CycNum) {
        assert_eq!(
            self.field.conductor(),
            other.field.conductor(),
            "cyclotomic operands live in different fields"
        );
    }

    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.field.degree() == 1 {
            return Ok(Self::from_rational(&self.field, self.coeffs[0].recip()));
        }
        let inv = poly::rat_inverse_mod(&self.coeffs, self.field.phi_rational())
            .ok_or_else(|| Error::InternalInconsistency("nonzero element without inverse".into()))?;
        Ok(Self::from_coeffs(&self.field, inv))
    }

    pub fn div(&self, other: &CycNum) -> Result<CycNum> {
        self.check_field(other);
        Ok(self * &other.inv()?)
    }

    /// Image under Q(ζ_N) → Q(ζ_L), ζ_N ↦ ζ_L^{L/N}.
    pub fn embed(&self, target: u64) -> Result<CycNum> {
        let n = self.conductor();
        if target == 0 || target % n != 0 {
            return Err(Error::IncompatibleConductor { from: n, to: target });
        }
        let big = CycField::new(target);
        if target == n {
            return Ok(self.clone());
        }
        let step = (target / n) as usize;
        let mut coeffs = vec![BigRational::zero(); step * self.coeffs.len().saturating_sub(1) + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        Ok(Self::from_coeffs(&big, coeffs))
    }

    pub fn pow(&self, mut e: u64) -> CycNum {
        let mut base = self.clone();
        let mut acc = CycNum::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.conductor() == other.conductor() && self.coeffs == other.coeffs
    }
}

impl Eq for CycNum {}

impl Hash for CycNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.conductor().hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match i {
                0 => format!("{c}"),
                1 => format!("({c})*z{}", self.conductor()),
                _ => format!("({c})*z{}^{i}", self.conductor()),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        self.check_field(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        CycNum { field: self.field.clone(), coeffs }
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self.check_field(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        CycNum { field: self.field.clone(), coeffs }
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        self.check_field(rhs);
        if self.field.degree() == 1 {
            return CycNum {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let mut prod = poly::rat_mul(&self.coeffs, &rhs.coeffs);
        self.field.reduce(&mut prod);
        CycNum { field: self.field.clone(), coeffs: prod }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn zeta3_products() {
        let f = CycField::new(3);
        let z = CycNum::zeta_pow(&f, 1);
        let one = CycNum::one(&f);
        // (1 + ζ) ζ = ζ + ζ² = −1
        assert_eq!(&(&one + &z) * &z, CycNum::from_int(&f, -1));
        // ζ² = −1 − ζ
        assert_eq!(CycNum::zeta_pow(&f, 2), &(-&one) - &z);
    }

    #[test]
    fn zeta4_inverse() {
        let f = CycField::new(4);
        let z = CycNum::zeta_pow(&f, 1);
        assert_eq!(z.inv().unwrap(), -&z);
        assert_eq!(CycNum::zero(&f).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn phi_vanishes_at_zeta() {
        for n in 1..=24u64 {
            let f = CycField::new(n);
            let z = CycNum::zeta_pow(&f, 1);
            let mut acc = CycNum::zero(&f);
            for (i, c) in f.phi().iter().enumerate() {
                let term = &CycNum::from_rational(&f, BigRational::from_integer(c.clone()))
                    * &z.pow(i as u64);
                acc = &acc + &term;
            }
            assert!(acc.is_zero(), "Phi_{n}(zeta_{n}) != 0");
        }
    }

    #[test]
    fn embeddings() {
        let f2 = CycField::new(2);
        let z2 = CycNum::zeta_pow(&f2, 1);
        assert_eq!(z2.embed(4).unwrap(), CycNum::zeta_pow(&CycField::new(4), 2));
        let r = CycNum::from_rational(&CycField::new(3), q(3, 2));
        assert_eq!(r.embed(12).unwrap(), CycNum::from_rational(&CycField::new(12), q(3, 2)));
        let z3 = CycNum::zeta_pow(&CycField::new(3), 1);
        assert_eq!(z3.embed(6).unwrap(), CycNum::zeta_pow(&CycField::new(6), 2));
        assert_eq!(
            z3.embed(4),
            Err(Error::IncompatibleConductor { from: 3, to: 4 })
        );
    }

    #[test]
    fn division_roundtrip() {
        let f = CycField::new(7);
        let a = CycNum::from_coeffs(&f, vec![q(1, 2), q(-3, 1), q(0, 1), q(5, 7)]);
        let b = CycNum::from_coeffs(&f, vec![q(2, 1), q(1, 1), q(1, 3)]);
        let c = a.div(&b).unwrap();
        assert_eq!(&c * &b, a);
    }
}
