//! Symmetric decomposition of numerators and its behaviour under dilation.
//!
//! Every integer polynomial `h` of degree at most `d + 1` splits uniquely as
//! `h = a + b` with `a(t) = t^d a(1/t)` and `b(t) = t^{d+1} b(1/t)`. The
//! split is tracked through `U_n` via the product `p = a * kernel` and the
//! sieved components, which yields an exact unimodality certificate for the
//! dilated coefficients.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hecke::{un_convolution, UnResult};
use crate::memo;
use crate::poly::DensePoly;
use crate::seq;
use crate::series::{sieve, HVector};

/// The unique pair `(a, b)` with `a` palindromic of center `d/2` and `b`
/// palindromic of center `(d+1)/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymDecomp {
    pub d: usize,
    pub a: DensePoly<BigInt>,
    pub b: DensePoly<BigInt>,
}

impl SymDecomp {
    pub fn a_coeff(&self, i: usize) -> BigInt {
        self.a.coeff(i)
    }

    pub fn b_coeff(&self, i: usize) -> BigInt {
        self.b.coeff(i)
    }

    /// All of `a_0..a_d` strictly positive.
    pub fn a_positive(&self) -> bool {
        (0..=self.d).all(|i| self.a.coeff(i).is_positive())
    }

    /// All of `a_0..a_d` nonnegative, not all zero.
    pub fn a_nonnegative_nonzero(&self) -> bool {
        !self.a.is_zero() && (0..=self.d).all(|i| !self.a.coeff(i).is_negative())
    }
}

/// Coefficient-sum decomposition:
/// `a_i = h_0 + ... + h_i - h_{d+1} - ... - h_{d+1-i}` and
/// `b_i = -h_0 - ... - h_{i-1} + h_{d+1} + ... + h_{d+1-i}`,
/// so `b_0 = h_{d+1}` and `a_0 = h_0 - h_{d+1}`.
pub fn decompose(h: &HVector) -> SymDecomp {
    let d = h.d();
    let mut a = Vec::with_capacity(d + 1);
    let mut b = Vec::with_capacity(d + 2);
    b.push(h.coeff(d + 1));
    for i in 0..=d {
        a.push(h.head_sum(i) - h.tail_sum(i));
        b.push(h.tail_sum(i + 1) - h.head_sum(i));
    }
    let a = DensePoly::new(a);
    let b = DensePoly::new(b);
    debug_assert_eq!(a.add(&b), h.as_poly());
    SymDecomp { d, a, b }
}

/// Closed-form route: `a(t) = (h(t) - t^{d+1} h(1/t)) / (1 - t)`, with the
/// division required to be exact.
pub fn decompose_closed_form(h: &HVector) -> Result<SymDecomp> {
    let d = h.d();
    let hp = h.as_poly();
    let reversed = hp.reverse_at(d + 1);
    let a = hp.sub(&reversed).div_exact_one_minus_t()?;
    let b = hp.sub(&a);
    Ok(SymDecomp { d, a, b })
}

/// Coefficients of `(1 + t + ... + t^{n-1})^{d+1}`: positive, symmetric and
/// strictly unimodal. The invariants are checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaVector {
    pub n: u32,
    pub d: usize,
    gamma: Vec<BigInt>,
}

impl GammaVector {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.gamma
    }

    /// `gamma_i`, zero outside the stored range (including negative index).
    pub fn value(&self, i: i64) -> BigInt {
        if i < 0 {
            return BigInt::zero();
        }
        self.gamma.get(i as usize).cloned().unwrap_or_else(BigInt::zero)
    }
}

pub fn gamma_coeffs(n: u32, d: usize) -> GammaVector {
    assert!(n >= 1 && d >= 1, "gamma_coeffs requires n >= 1 and d >= 1");
    let kernel = memo::kernel_power(n, d + 1);
    let gamma: Vec<BigInt> = kernel.coeffs().to_vec();
    assert!(seq::is_positive(&gamma), "kernel coefficients must be positive");
    assert!(seq::is_symmetric(&gamma), "kernel coefficients must be symmetric");
    assert!(
        seq::strictly_unimodal(&gamma),
        "kernel coefficients must be strictly unimodal"
    );
    GammaVector { n, d, gamma }
}

/// The dilation-tracked decomposition data for `(h, n)`.
#[derive(Debug, Clone)]
pub struct DilatedDecomp {
    pub n: u32,
    pub d: usize,
    /// `p(t) = a(t) (1 + t + ... + t^{n-1})^{d+1}`.
    pub p: DensePoly<BigInt>,
    pub a_tilde: DensePoly<BigInt>,
    pub b_tilde: DensePoly<BigInt>,
    pub a_prime: DensePoly<BigInt>,
    pub b_prime: DensePoly<BigInt>,
    pub dilated: UnResult,
}

/// Build `p`, the sieved components, and the symmetric components of the
/// dilated numerator. Verifies `a~ + b~ = U_n h` and that `b~` is palindromic
/// with center `(d+1)/2`.
pub fn dilated_decomp(h: &HVector, n: u32) -> Result<DilatedDecomp> {
    if !h.degree_at_most_d() {
        return Err(Error::precondition(
            "dilated decomposition requires degree at most d",
            Some(h.d() + 1),
        ));
    }
    let d = h.d();
    let parts = decompose(h);
    let kernel = memo::kernel_power(n, d + 1);
    let p = parts.a.mul(&kernel);
    let a_tilde = sieve(&p, n);
    let b_tilde = sieve(&parts.b.mul(&kernel), n);
    let dilated = un_convolution(h, n)?;

    assert_eq!(
        a_tilde.add(&b_tilde),
        dilated.as_poly(),
        "sieved components must sum to the dilated numerator"
    );
    assert_eq!(
        b_tilde,
        b_tilde.reverse_at(d + 1),
        "sieved b-component must stay palindromic with center (d+1)/2"
    );

    let prime = decompose(&HVector::new(d, {
        let mut c = dilated.coeffs().to_vec();
        c.resize(d + 2, BigInt::zero());
        c
    })?);
    Ok(DilatedDecomp {
        n,
        d,
        p,
        a_tilde,
        b_tilde,
        a_prime: prime.a,
        b_prime: prime.b,
        dilated,
    })
}

/// Partial-sum formula for the symmetric component of the dilated numerator:
/// `a'_i = p_0 + p_n + ... + p_{in} - p_{n-1} - p_{2n-1} - ... - p_{in-1}`,
/// valid for `0 <= i <= floor(d/2)`.
pub fn aprime_coeff(h: &HVector, n: u32, i: usize) -> Result<BigInt> {
    if i > h.d() / 2 {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: h.d() / 2,
        });
    }
    let parts = decompose(h);
    let kernel = memo::kernel_power(n, h.d() + 1);
    let p = parts.a.mul(&kernel);
    let n = n as usize;
    let mut acc = BigInt::zero();
    for k in 0..=i {
        acc += p.coeff(k * n);
        if k >= 1 {
            acc -= p.coeff(k * n - 1);
        }
    }
    Ok(acc)
}

/// Exact unimodality certificate for the dilated coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodalityGuarantee {
    /// `h_{i+1}(n) > h_{d-i}(n)` for all `0 <= i <= floor(d/2) - 1`,
    /// evaluated exactly.
    pub holds: bool,
    /// The degree-only threshold `n_d`: `d` for even `d`, `(d+1)/2` for odd.
    pub threshold: u32,
    /// Whether `n >= n_d`, i.e. the inequalities are guaranteed rather than
    /// merely observed. A certified instance with `holds = false` would be an
    /// invariant violation.
    pub certified: bool,
    /// First index where the strict inequality fails, when it does.
    pub witness: Option<usize>,
}

/// Degree-only threshold above which strict unimodality of the dilated
/// coefficients is guaranteed for inputs with a positive symmetric component.
pub fn unimodality_threshold(d: usize) -> u32 {
    if d % 2 == 0 {
        d as u32
    } else {
        ((d + 1) / 2) as u32
    }
}

/// Checks the strict cumulative hypothesis
/// `h_0 + ... + h_{i+1} > h_d + ... + h_{d-i}` (equivalently: the symmetric
/// component `a` has positive coefficients), then evaluates
/// `h_{i+1}(n) > h_{d-i}(n)` exactly and reports whether `n` clears the
/// degree-only threshold.
pub fn certified_unimodality(h: &HVector, n: u32) -> Result<UnimodalityGuarantee> {
    if !h.degree_at_most_d() {
        return Err(Error::precondition(
            "certificate requires degree at most d",
            Some(h.d() + 1),
        ));
    }
    let d = h.d();
    if !h.coeff(0).is_positive() {
        return Err(Error::precondition("h_0 must be positive", Some(0)));
    }
    for i in 0..d / 2 {
        // head(i+1) > h_d + ... + h_{d-i}; with h_{d+1} = 0 the right side is
        // tail_sum(i + 1).
        if h.head_sum(i + 1) <= h.tail_sum(i + 1) {
            return Err(Error::precondition(
                format!(
                    "cumulative inequality h_0+..+h_{} > h_{}+..+h_{} fails",
                    i + 1,
                    d,
                    d - i
                ),
                Some(i),
            ));
        }
    }
    debug_assert!(decompose(h).a_positive());

    let un = un_convolution(h, n)?;
    let mut holds = true;
    let mut witness = None;
    for i in 0..d / 2 {
        if un.coeff(i + 1) <= un.coeff(d - i) {
            holds = false;
            witness = Some(i);
            break;
        }
    }
    let threshold = unimodality_threshold(d);
    Ok(UnimodalityGuarantee {
        holds,
        threshold,
        certified: n >= threshold,
        witness,
    })
}
