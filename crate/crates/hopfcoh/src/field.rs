//! Exact scalars: residues modulo a prime, or arbitrary-precision rationals.
//!
//! No floating point anywhere. Prime-field scalars are kept as canonical
//! residues in `[0, p)`; rationals as reduced fractions with positive
//! denominator (the normal form `num_rational` maintains).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest prime allowed in exhaustive enumerations. Larger primes are
/// accepted for verification-only work (axiom checks, linear algebra).
pub const MAX_ENUMERATION_PRIME: u64 = 1 << 16;

/// The ground field: `𝔽_p` for a prime `p`, or `ℚ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Field {
    Prime(u64),
    Rational,
}

/// An exact scalar. `Fp` values are canonical residues of the ambient
/// prime field; `Q` values are reduced fractions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp(u64),
    Q(Box<BigRational>),
}

impl Field {
    /// Constructs `𝔽_p`, rejecting non-primes by trial division up to `√p`.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn rational() -> Field {
        Field::Rational
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    /// The characteristic: `p` for prime fields, `0` for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rational => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(0),
            Field::Rational => Scalar::Q(Box::new(BigRational::zero())),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(1),
            Field::Rational => Scalar::Q(Box::new(BigRational::one())),
        }
    }

    /// Embeds a signed integer.
    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            Field::Prime(p) => {
                let p = *p as i128;
                let r = ((n as i128 % p) + p) % p;
                Scalar::Fp(r as u64)
            }
            Field::Rational => Scalar::Q(Box::new(BigRational::from_integer(BigInt::from(n)))),
        }
    }

    /// A reduced fraction `n/d`; only meaningful over the rationals
    /// (over `𝔽_p` it is computed as `n · d⁻¹`).
    pub fn fraction(&self, n: i64, d: i64) -> Result<Scalar> {
        if d == 0 {
            return Err(Error::ZeroInverse);
        }
        match self {
            Field::Prime(_) => {
                let dn = self.from_int(d);
                let inv = self.inv(&dn)?;
                Ok(self.mul(&self.from_int(n), &inv))
            }
            Field::Rational => Ok(Scalar::Q(Box::new(BigRational::new(
                BigInt::from(n),
                BigInt::from(d),
            )))),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            (Field::Rational, Scalar::Q(x), Scalar::Q(y)) => {
                Scalar::Q(Box::new(x.as_ref() + y.as_ref()))
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + p - y) % p),
            (Field::Rational, Scalar::Q(x), Scalar::Q(y)) => {
                Scalar::Q(Box::new(x.as_ref() - y.as_ref()))
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            (Field::Rational, Scalar::Q(x)) => Scalar::Q(Box::new(-x.as_ref())),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (Field::Rational, Scalar::Q(x), Scalar::Q(y)) => {
                Scalar::Q(Box::new(x.as_ref() * y.as_ref()))
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => {
                if *x == 0 {
                    Err(Error::ZeroInverse)
                } else {
                    Ok(Scalar::Fp(mod_inverse(*x, *p)))
                }
            }
            (Field::Rational, Scalar::Q(x)) => {
                if x.is_zero() {
                    Err(Error::ZeroInverse)
                } else {
                    Ok(Scalar::Q(Box::new(x.recip())))
                }
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(x) => *x == 0,
            Scalar::Q(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(x) => *x == 1,
            Scalar::Q(x) => x.is_one(),
        }
    }

    /// Checks that a scalar is in canonical form and belongs to this field.
    pub fn validate(&self, a: &Scalar) -> bool {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => x < p,
            (Field::Rational, Scalar::Q(x)) => {
                // num_rational keeps fractions reduced with positive denominator
                x.denom().is_positive() || x.is_zero()
            }
            _ => false,
        }
    }
}

impl Scalar {
    /// Canonical residue for prime-field scalars.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Fp(x) => Some(*x),
            Scalar::Q(_) => None,
        }
    }
}

// Total order used for canonical representatives and report sorting:
// residue order on prime fields, numeric order on rationals.
impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Fp(a), Scalar::Fp(b)) => a.cmp(b),
            (Scalar::Q(a), Scalar::Q(b)) => a.cmp(b),
            (Scalar::Fp(_), Scalar::Q(_)) => Ordering::Less,
            (Scalar::Q(_), Scalar::Fp(_)) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(x) => write!(f, "{x}"),
            Scalar::Q(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
        }
    }
}

/// Trial division up to `√p`.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Extended Euclid, `a` nonzero mod `p`.
pub fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of non-unit");
    (((t % p as i128) + p as i128) % p as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(65521));
        assert!(!is_prime(1));
        assert!(!is_prime(9));
        assert!(Field::prime(6).is_err());
    }

    #[test]
    fn inverse_examples() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.inv(&f3.one()).unwrap(), f3.one());

        // extended Euclid oracle: 2·3 = 6 ≡ 1 mod 5
        let f5 = Field::prime(5).unwrap();
        let two = f5.from_int(2);
        let inv = f5.inv(&two).unwrap();
        assert_eq!(inv, Scalar::Fp(3));
        assert!(f5.is_one(&f5.mul(&two, &inv)));

        let q = Field::rational();
        let x = q.fraction(3, 4).unwrap();
        assert_eq!(q.inv(&x).unwrap(), q.fraction(4, 3).unwrap());
    }

    #[test]
    fn zero_has_no_inverse() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.inv(&f3.zero()), Err(Error::ZeroInverse));
        let q = Field::rational();
        assert_eq!(q.inv(&q.zero()), Err(Error::ZeroInverse));
    }

    #[test]
    fn all_units_invert() {
        for p in [2u64, 3, 5, 7, 13] {
            let f = Field::prime(p).unwrap();
            for a in 1..p {
                let s = Scalar::Fp(a);
                let inv = f.inv(&s).unwrap();
                assert!(f.is_one(&f.mul(&s, &inv)), "{a} mod {p}");
            }
        }
    }

    #[test]
    fn canonical_forms() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.from_int(-1), Scalar::Fp(2));
        assert_eq!(f3.from_int(7), Scalar::Fp(1));
        assert!(f3.validate(&Scalar::Fp(2)));
        assert!(!f3.validate(&Scalar::Fp(3)));

        let q = Field::rational();
        let half = q.fraction(2, 4).unwrap();
        assert_eq!(half, q.fraction(1, 2).unwrap());
        let neg = q.fraction(1, -2).unwrap();
        assert_eq!(neg, q.fraction(-1, 2).unwrap());
    }
}
