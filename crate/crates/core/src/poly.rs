//! Dense univariate polynomials over exact scalars.
//!
//! Coefficients are stored in ascending exponent order with no trailing
//! zeros; the zero polynomial is the empty vector. Degrees stay small
//! throughout the crate, so the dense representation is used everywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Scalar requirements for polynomial arithmetic: an exact commutative ring
/// with decidable equality.
pub trait Scalar:
    Clone + Eq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + fmt::Display
{
}

impl<T> Scalar for T where
    T: Clone + Eq + Zero + One + Neg<Output = T> + Sub<Output = T> + fmt::Display
{
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DensePoly<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> DensePoly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DensePoly::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        DensePoly::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: S, k: usize) -> Self {
        let mut coeffs = vec![S::zero(); k + 1];
        coeffs[k] = c;
        DensePoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        DensePoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        DensePoly::new(out)
    }

    pub fn neg(&self) -> Self {
        DensePoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    /// Exact product; `deg(pq) = deg p + deg q` for nonzero inputs.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let term = a.clone() * b.clone();
                let cur = std::mem::replace(&mut out[i + j], S::zero());
                out[i + j] = cur + term;
            }
        }
        DensePoly::new(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        DensePoly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut exp: usize) -> Self {
        let mut base = self.clone();
        let mut acc = DensePoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return DensePoly::zero();
        }
        let mut coeffs = vec![S::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        DensePoly { coeffs }
    }

    /// `t^bound * p(1/t)`: coefficient `i` of the result is coefficient
    /// `bound - i` of `p`. Requires `deg p <= bound`.
    pub fn reverse_at(&self, bound: usize) -> Self {
        assert!(
            self.degree().map_or(true, |d| d <= bound),
            "reverse_at: degree exceeds bound"
        );
        let coeffs = (0..=bound).map(|i| self.coeff(bound - i)).collect();
        DensePoly::new(coeffs)
    }

    /// Exact division by `1 - t` via prefix sums.
    ///
    /// `h(t) = (1 - t) q(t)` forces `q_k = h_k + q_{k-1}`; the division is
    /// exact iff the total carry `h(1)` vanishes.
    pub fn div_exact_one_minus_t(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(DensePoly::zero());
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut carry = S::zero();
        for c in &self.coeffs {
            carry = carry + c.clone();
            out.push(carry.clone());
        }
        if !carry.is_zero() {
            return Err(Error::InternalRemainder {
                context: "division by 1 - t",
            });
        }
        out.pop();
        Ok(DensePoly::new(out))
    }
}

impl<S: Scalar> fmt::Display for DensePoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl<S: Scalar> Add for &DensePoly<S> {
    type Output = DensePoly<S>;
    fn add(self, rhs: Self) -> DensePoly<S> {
        DensePoly::add(self, rhs)
    }
}

impl<S: Scalar> Sub for &DensePoly<S> {
    type Output = DensePoly<S>;
    fn sub(self, rhs: Self) -> DensePoly<S> {
        DensePoly::sub(self, rhs)
    }
}

impl<S: Scalar> Mul for &DensePoly<S> {
    type Output = DensePoly<S>;
    fn mul(self, rhs: Self) -> DensePoly<S> {
        DensePoly::mul(self, rhs)
    }
}

/// Convenience constructor for integer polynomials.
pub fn int_poly(coeffs: &[i64]) -> DensePoly<BigInt> {
    DensePoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

/// Convenience constructor for rational polynomials from `(num, den)` pairs.
pub fn rat_poly(coeffs: &[(i64, i64)]) -> DensePoly<BigRational> {
    DensePoly::new(
        coeffs
            .iter()
            .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
            .collect(),
    )
}

impl DensePoly<BigInt> {
    pub fn to_rational(&self) -> DensePoly<BigRational> {
        DensePoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        DensePoly::new(coeffs)
    }

    /// Number of trailing zero coefficients (multiplicity of the root 0).
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divide out `t^k`.
    pub fn shift_down(&self, k: usize) -> Self {
        DensePoly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Divide by the positive gcd of the coefficients. Signs are preserved,
    /// which matters for Sturm chains.
    pub fn primitive_part(&self) -> Self {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        DensePoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }
}

impl DensePoly<BigRational> {
    /// Conversion to an integer polynomial; fails if any coefficient has a
    /// nontrivial denominator.
    pub fn to_integer(&self) -> Result<DensePoly<BigInt>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_integer() {
                return Err(Error::NonIntegerCoefficient {
                    index: i,
                    value: c.to_string(),
                });
            }
            out.push(c.to_integer());
        }
        Ok(DensePoly::new(out))
    }

    /// Scale by a positive rational so the result is a primitive integer
    /// polynomial with the same signs.
    pub fn to_primitive_integer(&self) -> DensePoly<BigInt> {
        if self.is_zero() {
            return DensePoly::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        DensePoly::new(ints).primitive_part()
    }

    /// Polynomial division with remainder over the rationals.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot: Vec<BigRational> = Vec::new();
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                let idx = k + j;
                let sub = c * &factor;
                rem[idx] -= sub;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            quot.push(factor);
        }
        quot.reverse();
        (DensePoly::new(quot), DensePoly::new(rem))
    }
}

/// Sign of a rational: -1, 0, or 1.
pub fn sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_binomials() {
        let p = int_poly(&[1, 1]);
        assert_eq!(p.mul(&p), int_poly(&[1, 2, 1]));
    }

    #[test]
    fn product_with_zero_annihilates() {
        let p = int_poly(&[3, 0, 2]);
        assert_eq!(p.mul(&DensePoly::zero()), DensePoly::zero());
        assert_eq!(DensePoly::zero().mul(&p), DensePoly::zero());
    }

    #[test]
    fn geometric_telescope() {
        let p = int_poly(&[1, 1, 1]);
        let q = int_poly(&[1, -1]);
        assert_eq!(p.mul(&q), int_poly(&[1, 0, 0, -1]));
    }

    #[test]
    fn degree_law() {
        let p = int_poly(&[2, 0, 0, 5]);
        let q = int_poly(&[-1, 7]);
        assert_eq!(p.mul(&q).degree(), Some(4));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = DensePoly::new(vec![BigInt::from(1), BigInt::from(0), BigInt::from(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(DensePoly::<BigInt>::new(vec![BigInt::zero()]).is_zero());
    }

    #[test]
    fn division_by_one_minus_t() {
        // 1 + 3t - 3t^2 - t^3 = (1 - t)(1 + 4t + t^2)
        let h = int_poly(&[1, 3, -3, -1]);
        assert_eq!(h.div_exact_one_minus_t().unwrap(), int_poly(&[1, 4, 1]));
        let bad = int_poly(&[1, 1]);
        assert!(bad.div_exact_one_minus_t().is_err());
    }

    #[test]
    fn reversal() {
        let p = int_poly(&[1, 7, 4]);
        assert_eq!(p.reverse_at(3), int_poly(&[0, 4, 7, 1]));
    }

    #[test]
    fn rational_div_rem() {
        let p = rat_poly(&[(2, 1), (-3, 1), (1, 1)]); // (t-1)(t-2)
        let d = rat_poly(&[(-1, 1), (1, 1)]);
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, rat_poly(&[(-2, 1), (1, 1)]));
    }

    #[test]
    fn primitive_part_preserves_sign() {
        let p = int_poly(&[-6, 0, 9]);
        assert_eq!(p.primitive_part(), int_poly(&[-2, 0, 3]));
    }

    #[test]
    fn eval_horner() {
        let p = int_poly(&[1, 7, 4]);
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(31));
    }
}
