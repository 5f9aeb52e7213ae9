//! The correspondence between series numerators and counting polynomials.
//!
//! A numerator `h(t)` of degree at most `d + 1` determines a rational series
//! `h(t) / (1 - t)^{d+1} = h_0 + sum_{m>=1} g(m) t^m` whose coefficients for
//! `m >= 1` are given by the degree-`d` counting polynomial
//! `g(m) = sum_i h_i C(m + d - i, d)`. This module converts in both
//! directions, expands the series, and provides the stride sieve used by the
//! convolution form of the dilation operator.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::memo;
use crate::poly::{DensePoly, Scalar};
use crate::tables::{binomial, factorial};

/// Integer numerator coefficients `(h_0, ..., h_{d+1})` together with the
/// ambient degree `d`. The same coefficient list denotes different series for
/// different `d`, so `d` travels with the data.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HVector {
    d: usize,
    /// Always stored with length `d + 2`.
    coeffs: Vec<BigInt>,
}

impl HVector {
    /// `coeffs` may list anywhere from 1 to `d + 2` entries; missing entries
    /// are zero. The zero vector is rejected.
    pub fn new(d: usize, coeffs: Vec<BigInt>) -> Result<Self> {
        if d == 0 {
            return Err(Error::precondition("ambient degree d must be positive", None));
        }
        if coeffs.is_empty() || coeffs.len() > d + 2 {
            return Err(Error::precondition(
                format!("expected 1..={} coefficients, got {}", d + 2, coeffs.len()),
                None,
            ));
        }
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::precondition("h-vector must be nonzero", None));
        }
        let mut coeffs = coeffs;
        coeffs.resize(d + 2, BigInt::zero());
        Ok(HVector { d, coeffs })
    }

    pub fn from_i64(d: usize, coeffs: &[i64]) -> Result<Self> {
        HVector::new(d, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `h_i` for `0 <= i <= d + 1`; zero beyond.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// All `d + 2` stored coefficients `(h_0, ..., h_{d+1})`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn degree_at_most_d(&self) -> bool {
        self.coeffs[self.d + 1].is_zero()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn as_poly(&self) -> DensePoly<BigInt> {
        DensePoly::new(self.coeffs.clone())
    }

    /// Cumulative head sum `h_0 + ... + h_i` (clamped at `d + 1`).
    pub fn head_sum(&self, i: usize) -> BigInt {
        self.coeffs.iter().take(i + 1).sum()
    }

    /// Cumulative tail sum `h_{d+1} + h_d + ... + h_{d+1-i}` (`i + 1` terms).
    pub fn tail_sum(&self, i: usize) -> BigInt {
        let d1 = self.d + 1;
        (0..=i.min(d1)).map(|k| self.coeff(d1 - k)).sum()
    }
}

impl fmt::Display for HVector {
    /// Prints `h_0, ..., h_d`, including `h_{d+1}` only when it is nonzero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let upto = if self.coeffs[self.d + 1].is_zero() {
            self.d
        } else {
            self.d + 1
        };
        for i in 0..=upto {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.coeffs[i])?;
        }
        Ok(())
    }
}

/// Counting polynomial `g(m) = g_0 + g_1 m + ... + g_d m^d` with exact
/// rational coefficients, tagged with its ambient degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GPolynomial {
    d: usize,
    poly: DensePoly<BigRational>,
}

impl GPolynomial {
    pub fn new(d: usize, poly: DensePoly<BigRational>) -> Result<Self> {
        if poly.degree().is_some_and(|deg| deg > d) {
            return Err(Error::precondition(
                format!("degree {} exceeds ambient degree {d}", poly.degree().unwrap()),
                None,
            ));
        }
        Ok(GPolynomial { d, poly })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn poly(&self) -> &DensePoly<BigRational> {
        &self.poly
    }

    /// `g_j`, zero beyond the stored degree.
    pub fn coeff(&self, j: usize) -> BigRational {
        self.poly.coeff(j)
    }

    pub fn eval_int(&self, m: &BigInt) -> BigRational {
        self.poly.eval(&BigRational::from_integer(m.clone()))
    }

    /// `g(n m)` as a polynomial in `m`: scales `g_j` by `n^j`.
    pub fn dilate(&self, n: u32) -> GPolynomial {
        let n = BigInt::from(n);
        let mut scale = BigRational::one();
        let coeffs = self
            .poly
            .coeffs()
            .iter()
            .map(|c| {
                let out = c * &scale;
                scale *= BigRational::from_integer(n.clone());
                out
            })
            .collect();
        GPolynomial {
            d: self.d,
            poly: DensePoly::new(coeffs),
        }
    }

    /// `g(-m)` as a polynomial in `m`.
    pub fn reflect(&self) -> GPolynomial {
        let coeffs = self
            .poly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| if j % 2 == 0 { c.clone() } else { -c.clone() })
            .collect();
        GPolynomial {
            d: self.d,
            poly: DensePoly::new(coeffs),
        }
    }
}

impl fmt::Display for GPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..=self.d {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.coeff(j))?;
        }
        Ok(())
    }
}

/// Expand `h(t)/(1-t)^{d+1}` into its counting polynomial
/// `g(m) = sum_{i=0}^{d+1} h_i C(m + d - i, d)`.
///
/// For `deg h <= d` the constant term satisfies `g(0) = h_0`; in general
/// `h_{d+1} = (-1)^d (g(0) - h_0)`.
pub fn h_to_g(h: &HVector) -> GPolynomial {
    let d = h.d();
    let basis = memo::binomial_basis_row(d);
    let mut acc: DensePoly<BigRational> = DensePoly::zero();
    for (i, hi) in h.coeffs().iter().enumerate() {
        if hi.is_zero() {
            continue;
        }
        acc = acc.add(&basis[i].scale(&BigRational::from_integer(hi.clone())));
    }
    GPolynomial { d, poly: acc }
}

/// Invert the transform: recover the degree-at-most-`d` numerator whose
/// series has coefficients `g(m)` for `m >= 1` and `g(0)` at `m = 0`.
///
/// Computed by expanding `(1-t)^{d+1} sum_{m=0}^{d+1} g(m) t^m` and keeping
/// coefficients up to `t^{d+1}`; the top coefficient is a `(d+1)`-st finite
/// difference of a degree-`d` polynomial and therefore vanishes.
pub fn g_to_h(g: &GPolynomial, d: usize) -> Result<HVector> {
    if g.poly.degree().is_some_and(|deg| deg > d) {
        return Err(Error::precondition("deg g exceeds d", None));
    }
    let values: Vec<BigRational> = (0..=d as i64 + 1)
        .map(|m| g.eval_int(&BigInt::from(m)))
        .collect();
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(d + 2);
    for k in 0..=d + 1 {
        let mut acc = BigRational::zero();
        let mut neg = false;
        for j in 0..=k {
            let term = BigRational::from_integer(binomial(d + 1, j)) * &values[k - j];
            if neg {
                acc -= term;
            } else {
                acc += term;
            }
            neg = !neg;
        }
        if !acc.is_integer() {
            return Err(Error::NonIntegerCoefficient {
                index: k,
                value: acc.to_string(),
            });
        }
        coeffs.push(acc.to_integer());
    }
    debug_assert!(coeffs[d + 1].is_zero());
    HVector::new(d, coeffs)
}

/// First `terms` coefficients of `h(t)/(1-t)^{d+1}`. Entry `m` equals `g(m)`
/// for `m >= 1`; entry 0 is `h_0`.
pub fn series_expand(h: &HVector, terms: usize) -> Vec<BigInt> {
    assert!(terms >= 1, "series_expand requires terms >= 1");
    let d = h.d();
    (0..terms)
        .map(|m| {
            let mut acc = BigInt::zero();
            for (i, hi) in h.coeffs().iter().enumerate() {
                if hi.is_zero() || i > m {
                    continue;
                }
                acc += hi * binomial(m - i + d, d);
            }
            acc
        })
        .collect()
}

/// The stride sieve: keep exponents divisible by `n` and divide them by `n`.
pub fn sieve<S: Scalar>(p: &DensePoly<S>, n: u32) -> DensePoly<S> {
    assert!(n >= 1, "sieve requires n >= 1");
    let n = n as usize;
    let coeffs = p.coeffs().iter().step_by(n).cloned().collect();
    DensePoly::new(coeffs)
}

/// `d! g_d` equals the coefficient sum of the numerator.
pub fn leading_identity(h: &HVector, g: &GPolynomial) -> bool {
    let lhs = BigRational::from_integer(factorial(h.d())) * g.coeff(h.d());
    lhs == BigRational::from_integer(h.sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int_poly, rat_poly};

    fn hv(d: usize, coeffs: &[i64]) -> HVector {
        HVector::from_i64(d, coeffs).unwrap()
    }

    #[test]
    fn unit_segment_count() {
        let g = h_to_g(&hv(1, &[1]));
        assert_eq!(g.poly(), &rat_poly(&[(1, 1), (1, 1)]));
    }

    #[test]
    fn reflexive_triangle_counting_polynomial() {
        let g = h_to_g(&hv(2, &[1, 1, 1]));
        assert_eq!(g.poly(), &rat_poly(&[(1, 1), (3, 2), (3, 2)]));
        assert_eq!(
            g.eval_int(&BigInt::from(1)),
            BigRational::from_integer(BigInt::from(4))
        );
    }

    #[test]
    fn standard_simplex_series() {
        for d in 1..=6 {
            let g = h_to_g(&hv(d, &[1]));
            for m in 0..=8u64 {
                assert_eq!(
                    g.eval_int(&BigInt::from(m)),
                    BigRational::from_integer(binomial(m as usize + d, d))
                );
            }
        }
    }

    #[test]
    fn squares_give_eulerian_numerator() {
        // g(m) = m^2 inverts to the coefficients of A_2(t).
        let g = GPolynomial::new(2, rat_poly(&[(0, 1), (0, 1), (1, 1)])).unwrap();
        let h = g_to_h(&g, 2).unwrap();
        assert_eq!(h.coeffs(), hv(2, &[0, 1, 1]).coeffs());
    }

    #[test]
    fn g_to_h_derived_example() {
        // g(m) = 6m^2 + 3m + 1 evaluates to 1, 10, 31, 64 at 0..=3.
        let g = GPolynomial::new(2, rat_poly(&[(1, 1), (3, 1), (6, 1)])).unwrap();
        let h = g_to_h(&g, 2).unwrap();
        assert_eq!(h, hv(2, &[1, 7, 4]));
    }

    #[test]
    fn round_trip_named_example() {
        let h = hv(2, &[1, 7, 4]);
        assert_eq!(g_to_h(&h_to_g(&h), 2).unwrap(), h);
    }

    #[test]
    fn non_integer_inversion_is_an_error() {
        let g = GPolynomial::new(1, rat_poly(&[(0, 1), (1, 2)])).unwrap();
        match g_to_h(&g, 1) {
            Err(Error::NonIntegerCoefficient { .. }) => {}
            other => panic!("expected NonIntegerCoefficient, got {other:?}"),
        }
    }

    #[test]
    fn series_expand_examples() {
        assert_eq!(
            series_expand(&hv(1, &[1]), 4),
            vec![1, 2, 3, 4].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
        assert_eq!(
            series_expand(&hv(2, &[1, 1, 1]), 3),
            vec![1, 4, 10].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
        assert_eq!(
            series_expand(&hv(2, &[1, 7, 4]), 3),
            vec![1, 10, 31].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
    }

    #[test]
    fn sieve_examples() {
        let p = int_poly(&[1, 2, 1]);
        assert_eq!(sieve(&p, 1), p);
        assert_eq!(sieve(&int_poly(&[1, 2, 3, 4]), 2), int_poly(&[1, 3]));
        assert_eq!(
            sieve(&int_poly(&[0, 0, 0, 1, 0, 0, 1]), 3),
            int_poly(&[0, 1, 1])
        );
    }

    /// Long-division oracle: divide the coefficient stream by (1-t), d+1
    /// times. Independent of the binomial-sum path used by series_expand.
    fn series_by_long_division(h: &HVector, terms: usize) -> Vec<BigInt> {
        let mut s: Vec<BigInt> = (0..terms).map(|k| h.coeff(k)).collect();
        for _ in 0..=h.d() {
            let mut acc = BigInt::zero();
            for v in s.iter_mut() {
                acc += v.clone();
                *v = acc.clone();
            }
        }
        s
    }

    #[test]
    fn series_expand_matches_long_division() {
        let cases = [
            hv(1, &[1, 5]),
            hv(2, &[1, 7, 4]),
            hv(3, &[1, 0, 2, 0, 3]),
            hv(4, &[2, -1, 0, 5]),
        ];
        for h in cases {
            let terms = 4 * (h.d() + 1);
            assert_eq!(series_expand(&h, terms), series_by_long_division(&h, terms));
        }
    }

    #[test]
    fn general_degree_constant_term() {
        // h_{d+1} = (-1)^d (g(0) - h_0)
        for (d, coeffs) in [(2usize, vec![1i64, 0, 0, 1]), (3, vec![2, 1, 0, 0, -3]), (2, vec![1, 2, 0, 5])] {
            let h = hv(d, &coeffs);
            let g = h_to_g(&h);
            let sign = BigRational::from_integer(BigInt::from(if d % 2 == 0 { 1 } else { -1 }));
            let expect =
                sign * (g.eval_int(&BigInt::zero()) - BigRational::from_integer(h.coeff(0)));
            assert_eq!(BigRational::from_integer(h.coeff(d + 1)), expect);
        }
    }
}
