//! Enumeration budgets and affine-subspace parameterizations.
//!
//! Every brute-force search in the crate goes through a [`Limits`] check
//! before iterating, so an oversized search fails predictably instead of
//! running away.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar, MAX_ENUMERATION_PRIME};
use crate::matrix::{vec_add, vec_scale, Matrix, SolveOutcome};

/// Default candidate budget for exhaustive searches.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Enumeration configuration: candidate budget and worker count.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub budget: u64,
    pub threads: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { budget: DEFAULT_BUDGET, threads: 1 }
    }
}

impl Limits {
    pub fn with_budget(budget: u64) -> Limits {
        Limits { budget, ..Limits::default() }
    }

    /// Checks that a scan of `p^free_dims` candidates fits the budget and
    /// that the prime is small enough to enumerate at all.
    pub fn check(&self, field: &Field, free_dims: usize) -> Result<u64> {
        let p = match field {
            Field::Prime(p) => *p,
            Field::Rational => return Err(Error::RationalFieldNotEnumerable),
        };
        if p > MAX_ENUMERATION_PRIME {
            return Err(Error::PrimeTooLargeForEnumeration(p));
        }
        let mut needed: u128 = 1;
        for _ in 0..free_dims {
            needed = needed.saturating_mul(p as u128);
            if needed > self.budget as u128 {
                return Err(Error::EnumerationOverBudget { needed, budget: self.budget });
            }
        }
        Ok(needed as u64)
    }

    /// Checks an explicit candidate count (`base^exponent`) against the
    /// budget, for searches not indexed by field coordinates.
    pub fn check_count(&self, base: u64, exponent: u32) -> Result<u64> {
        let mut needed: u128 = 1;
        for _ in 0..exponent {
            needed = needed.saturating_mul(base as u128);
            if needed > self.budget as u128 {
                return Err(Error::EnumerationOverBudget { needed, budget: self.budget });
            }
        }
        Ok(needed as u64)
    }
}

/// An affine subspace `particular + span(basis)` of a coordinate space,
/// used to restrict searches before they start.
#[derive(Debug, Clone)]
pub struct AffineSpace {
    pub particular: Vec<Scalar>,
    pub basis: Vec<Vec<Scalar>>,
}

impl AffineSpace {
    /// The solution set of `A·x = b`, or `None` when empty.
    pub fn solve(field: &Field, a: &Matrix, b: &[Scalar]) -> Result<Option<AffineSpace>> {
        match a.solve(field, b)? {
            SolveOutcome::Solved { particular, kernel } => {
                Ok(Some(AffineSpace { particular, basis: kernel }))
            }
            SolveOutcome::Unsolvable => Ok(None),
        }
    }

    /// The whole space of the given dimension.
    pub fn full(field: &Field, dim: usize) -> AffineSpace {
        let basis = (0..dim)
            .map(|i| {
                let mut v = vec![field.zero(); dim];
                v[i] = field.one();
                v
            })
            .collect();
        AffineSpace { particular: vec![field.zero(); dim], basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.particular.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The point at the given parameter values.
    pub fn point(&self, field: &Field, params: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(params.len(), self.basis.len());
        let mut out = self.particular.clone();
        for (t, v) in params.iter().zip(&self.basis) {
            if !field.is_zero(t) {
                out = vec_add(field, &out, &vec_scale(field, v, t));
            }
        }
        out
    }
}

/// Lazy iterator over all points of an affine subspace over a prime field.
/// Parameters run in lexicographic order (first parameter slowest); for
/// the full space this is lexicographic coordinate order.
pub struct PointIter<'a> {
    field: &'a Field,
    space: &'a AffineSpace,
    index: u64,
    total: u64,
    p: u64,
    digits: Vec<u64>,
}

impl<'a> PointIter<'a> {
    pub fn new(field: &'a Field, space: &'a AffineSpace, limits: &Limits) -> Result<PointIter<'a>> {
        let total = limits.check(field, space.dim())?;
        let p = field.characteristic();
        Ok(PointIter {
            field,
            space,
            index: 0,
            total,
            p,
            digits: vec![0; space.dim()],
        })
    }
}

impl Iterator for PointIter<'_> {
    type Item = Vec<Scalar>;

    fn next(&mut self) -> Option<Vec<Scalar>> {
        if self.index >= self.total {
            return None;
        }
        crate::fp::decode_digits(self.index, self.p, self.digits.len(), &mut self.digits);
        self.index += 1;
        let params: Vec<Scalar> = self.digits.iter().map(|&d| Scalar::Fp(d)).collect();
        Some(self.space.point(self.field, &params))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_enforced_before_iteration() {
        let f3 = Field::prime(3).unwrap();
        let limits = Limits::with_budget(8);
        let space = AffineSpace::full(&f3, 2);
        match PointIter::new(&f3, &space, &limits) {
            Err(Error::EnumerationOverBudget { needed, budget }) => {
                assert_eq!(needed, 9);
                assert_eq!(budget, 8);
            }
            Err(other) => panic!("expected budget error, got {other:?}"),
            Ok(_) => panic!("expected budget error"),
        }
    }

    #[test]
    fn oversized_primes_not_enumerable() {
        // 65537 is prime but beyond the enumeration bound; it stays
        // usable for verification-only arithmetic
        let f = Field::prime(65537).unwrap();
        let space = AffineSpace::full(&f, 1);
        assert!(matches!(
            PointIter::new(&f, &space, &Limits::default()),
            Err(Error::PrimeTooLargeForEnumeration(65537))
        ));
        assert!(f.is_one(&f.mul(&f.from_int(2), &f.inv(&f.from_int(2)).unwrap())));
    }

    #[test]
    fn rational_fields_not_enumerable() {
        let q = Field::rational();
        let space = AffineSpace::full(&q, 1);
        assert!(matches!(
            PointIter::new(&q, &space, &Limits::default()),
            Err(Error::RationalFieldNotEnumerable)
        ));
    }

    #[test]
    fn full_space_lex_order() {
        let f3 = Field::prime(3).unwrap();
        let space = AffineSpace::full(&f3, 2);
        let pts: Vec<_> = PointIter::new(&f3, &space, &Limits::default())
            .unwrap()
            .collect();
        assert_eq!(pts.len(), 9);
        let mut sorted = pts.clone();
        sorted.sort();
        assert_eq!(pts, sorted);
        assert!(pts.windows(2).all(|w| w[0] != w[1]));
    }
}
