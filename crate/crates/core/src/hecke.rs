//! The dilation operator `U_n`, computed by three independent routes.
//!
//! For a numerator `h` of degree at most `d` with counting polynomial `g`,
//! `U_n h` is the numerator whose counting polynomial is `m -> g(nm)`. The
//! three engines are:
//!
//! * definition: substitute `nm` into `g` and invert the series transform;
//! * convolution: `U_n h = E_n(h(t) (1 + t + ... + t^{n-1})^{d+1})` where
//!   `E_n` is the stride sieve;
//! * Eulerian expansion: `U_n h = sum_j g_j A_j(t) (1 - t)^{d-j} n^j`.
//!
//! The definition engine is normative; the other two are verification engines
//! and, for the convolution route, the fastest option for large `n`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::memo;
use crate::poly::DensePoly;
use crate::series::{g_to_h, h_to_g, sieve, HVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnMethod {
    Definition,
    Convolution,
    Eulerian,
}

impl fmt::Display for UnMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnMethod::Definition => write!(f, "definition"),
            UnMethod::Convolution => write!(f, "convolution"),
            UnMethod::Eulerian => write!(f, "eulerian"),
        }
    }
}

/// Result of applying `U_n`: the coefficients `h_0(n), ..., h_d(n)` together
/// with the input and the engine that produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnResult {
    pub input: HVector,
    pub n: u32,
    coeffs: Vec<BigInt>,
    pub method: UnMethod,
}

impl UnResult {
    /// `(h_0(n), ..., h_d(n))`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn d(&self) -> usize {
        self.input.d()
    }

    pub fn sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn as_poly(&self) -> DensePoly<BigInt> {
        DensePoly::new(self.coeffs.clone())
    }

    /// Reinterpret the output as an h-vector with the same ambient degree.
    pub fn to_hvector(&self) -> Result<HVector> {
        HVector::new(self.input.d(), self.coeffs.clone())
    }
}

impl fmt::Display for UnResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn check_input(h: &HVector, n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::precondition("n must be positive", None));
    }
    if !h.degree_at_most_d() {
        // U_n is defined only for numerators of degree at most d.
        return Err(Error::precondition(
            format!("h_{} must be zero (degree at most d required)", h.d() + 1),
            Some(h.d() + 1),
        ));
    }
    Ok(())
}

fn finish(h: &HVector, n: u32, coeffs: Vec<BigInt>, method: UnMethod) -> UnResult {
    let mut coeffs = coeffs;
    coeffs.resize(h.d() + 1, BigInt::zero());
    UnResult {
        input: h.clone(),
        n,
        coeffs,
        method,
    }
}

/// Normative engine: substitute `nm` into the counting polynomial and invert.
pub fn un_definition(h: &HVector, n: u32) -> Result<UnResult> {
    check_input(h, n)?;
    let g = h_to_g(h);
    let dilated = g.dilate(n);
    let out = g_to_h(&dilated, h.d()).map_err(|e| match e {
        // Integrality can only fail through a bug: g(nm) is integer-valued
        // wherever g is.
        Error::NonIntegerCoefficient { .. } => Error::InternalNonInteger {
            context: "definition engine inversion",
        },
        other => other,
    })?;
    Ok(finish(h, n, out.coeffs()[..=h.d()].to_vec(), UnMethod::Definition))
}

/// Convolution engine: one product against the dilation kernel, then the
/// stride sieve.
pub fn un_convolution(h: &HVector, n: u32) -> Result<UnResult> {
    check_input(h, n)?;
    let kernel = memo::kernel_power(n, h.d() + 1);
    let product = h.as_poly().mul(&kernel);
    let sieved = sieve(&product, n);
    let coeffs = (0..=h.d()).map(|i| sieved.coeff(i)).collect();
    Ok(finish(h, n, coeffs, UnMethod::Convolution))
}

/// Eulerian-expansion engine: `sum_j g_j A_j(t) (1-t)^{d-j} n^j`. The
/// rational intermediates must cancel to integers.
pub fn un_eulerian(h: &HVector, n: u32) -> Result<UnResult> {
    check_input(h, n)?;
    let d = h.d();
    let g = h_to_g(h);
    let mut acc: DensePoly<BigRational> = DensePoly::zero();
    let mut npow = BigInt::from(1);
    for j in 0..=d {
        let gj = g.coeff(j);
        if !gj.is_zero() {
            let term = memo::eulerian(j).mul(&memo::one_minus_t_pow(d - j));
            let weight = gj * BigRational::from_integer(npow.clone());
            acc = acc.add(&term.to_rational().scale(&weight));
        }
        npow *= BigInt::from(n);
    }
    let ints = acc.to_integer().map_err(|_| Error::InternalNonInteger {
        context: "eulerian engine cancellation",
    })?;
    let coeffs = (0..=d).map(|i| ints.coeff(i)).collect();
    Ok(finish(h, n, coeffs, UnMethod::Eulerian))
}

pub fn un_by(h: &HVector, n: u32, method: UnMethod) -> Result<UnResult> {
    match method {
        UnMethod::Definition => un_definition(h, n),
        UnMethod::Convolution => un_convolution(h, n),
        UnMethod::Eulerian => un_eulerian(h, n),
    }
}

/// Run all three engines and fail loudly if they disagree.
pub fn un_verified(h: &HVector, n: u32) -> Result<UnResult> {
    let a = un_definition(h, n)?;
    let b = un_convolution(h, n)?;
    let c = un_eulerian(h, n)?;
    if a.coeffs() != b.coeffs() || a.coeffs() != c.coeffs() {
        return Err(Error::EngineDisagreement {
            n,
            detail: format!(
                "h={}, definition={a}, convolution={b}, eulerian={c}",
                h
            ),
        });
    }
    Ok(a)
}

/// Semigroup check: `U_n(U_m h) = U_{nm} h` via the definition engine.
pub fn composition_check(h: &HVector, n: u32, m: u32) -> Result<bool> {
    let inner = un_definition(h, m)?;
    let outer = un_definition(&inner.to_hvector()?, n)?;
    let direct = un_definition(h, n.checked_mul(m).expect("n*m overflow"))?;
    Ok(outer.coeffs() == direct.coeffs())
}

/// `h_1(n) = g(n) - (d + 1)` holds for numerators with `h_0 = 1`.
pub fn h1_identity_check(h: &HVector, n: u32) -> Result<bool> {
    if h.coeff(0) != BigInt::from(1) {
        return Err(Error::precondition("h_0 must equal 1", Some(0)));
    }
    let un = un_definition(h, n)?;
    let g = h_to_g(h);
    let expect =
        g.eval_int(&BigInt::from(n)) - BigRational::from_integer(BigInt::from(h.d() as i64 + 1));
    Ok(BigRational::from_integer(un.coeff(1)) == expect)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int_poly;
    use crate::tables::eulerian_poly;

    fn hv(d: usize, coeffs: &[i64]) -> HVector {
        HVector::from_i64(d, coeffs).unwrap()
    }

    fn all_engines(h: &HVector, n: u32) -> Vec<UnResult> {
        vec![
            un_definition(h, n).unwrap(),
            un_convolution(h, n).unwrap(),
            un_eulerian(h, n).unwrap(),
        ]
    }

    #[test]
    fn identity_dilation() {
        let h = hv(3, &[1, 0, 2, 1]);
        for r in all_engines(&h, 1) {
            assert_eq!(r.coeffs(), &h.coeffs()[..=3]);
        }
    }

    #[test]
    fn reflexive_triangle_doubles_to_1_7_4() {
        let h = hv(2, &[1, 1, 1]);
        for r in all_engines(&h, 2) {
            assert_eq!(r.as_poly(), int_poly(&[1, 7, 4]), "{:?}", r.method);
        }
    }

    #[test]
    fn segment_of_length_three() {
        // (1)(1 + t + t^2)^2 sieved at stride 3 leaves (1, 2).
        let h = hv(1, &[1, 0]);
        let r = un_convolution(&h, 3).unwrap();
        assert_eq!(r.as_poly(), int_poly(&[1, 2]));
    }

    #[test]
    fn eulerian_numerator_is_an_eigenvector() {
        for d in 1..=5usize {
            let a = eulerian_poly(d);
            let h = HVector::new(d, a.coeffs().to_vec()).unwrap();
            for n in 1..=4u32 {
                let expect = a.scale(&BigInt::from(n).pow(d as u32));
                for r in all_engines(&h, n) {
                    assert_eq!(r.as_poly(), expect, "d={d}, n={n}, {:?}", r.method);
                }
            }
        }
    }

    #[test]
    fn engines_agree_on_small_grid() {
        for d in 1..=3usize {
            let mut coeffs = vec![0i64; d + 1];
            coeffs[0] = 1;
            loop {
                let h = HVector::from_i64(d, &coeffs).unwrap();
                for n in 1..=4u32 {
                    let r = un_verified(&h, n).unwrap();
                    assert_eq!(r.coeff(0), h.coeff(0));
                    assert_eq!(r.sum(), BigInt::from(n).pow(d as u32) * h.sum());
                }
                // Odometer over h_1..h_d in {0, 1, 2}.
                let mut k = 1;
                while k <= d && coeffs[k] == 2 {
                    coeffs[k] = 0;
                    k += 1;
                }
                if k > d {
                    break;
                }
                coeffs[k] += 1;
            }
        }
    }

    #[test]
    fn composition_and_h1() {
        assert!(composition_check(&hv(2, &[1, 1, 1]), 2, 3).unwrap());
        assert!(composition_check(&hv(3, &[1, 0, 1, 0]), 2, 2).unwrap());
        assert!(composition_check(&hv(2, &[1, 2, 0]), 1, 1).unwrap());
        assert!(h1_identity_check(&hv(2, &[1, 1, 1]), 2).unwrap());
        assert!(h1_identity_check(&hv(3, &[1]), 5).unwrap());
        assert!(h1_identity_check(&hv(2, &[1, 3, 2]), 1).unwrap());
    }

    #[test]
    fn h1_value_for_simplex() {
        // g(5) = C(8, 3) = 56 for the standard 3-simplex, so h_1(5) = 52.
        let r = un_definition(&hv(3, &[1]), 5).unwrap();
        assert_eq!(r.coeff(1), BigInt::from(52));
        let conv = un_convolution(&hv(3, &[1]), 5).unwrap();
        assert_eq!(conv.coeffs(), r.coeffs());
    }

    #[test]
    fn rejects_degree_d_plus_one() {
        let h = hv(2, &[1, 0, 0, 1]);
        for method in [UnMethod::Definition, UnMethod::Convolution, UnMethod::Eulerian] {
            match un_by(&h, 2, method) {
                Err(Error::PreconditionFailed { .. }) => {}
                other => panic!("expected precondition failure, got {other:?}"),
            }
        }
    }

    #[test]
    fn h0_propagates_when_degree_at_most_d() {
        let h = hv(3, &[2, 1, 0, 1]);
        for n in 1..=5 {
            let r = un_definition(&h, n).unwrap();
            assert_eq!(r.coeff(0), BigInt::from(2));
        }
    }
}
