//! Combinatorial tables: binomial coefficients, Eulerian numbers, Stirling
//! numbers of the first kind, and the binomial basis polynomials used by the
//! series transform. Everything is computed by integer recurrences; no
//! floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::DensePoly;

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// `C(n, k)` for nonnegative `n`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Triangle of Eulerian numbers `A(d', i)` for `1 <= i <= d' <= d`, built
/// from the recurrence `A(d, i) = i A(d-1, i) + (d+1-i) A(d-1, i-1)`.
#[derive(Debug, Clone)]
pub struct EulerianTable {
    d: usize,
    rows: Vec<Vec<BigInt>>,
}

impl EulerianTable {
    pub fn new(d: usize) -> Self {
        assert!(d >= 1, "EulerianTable requires d >= 1");
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(d);
        rows.push(vec![BigInt::one()]);
        for dp in 2..=d {
            let prev = &rows[dp - 2];
            let at = |i: usize| -> BigInt {
                if i >= 1 && i <= dp - 1 {
                    prev[i - 1].clone()
                } else {
                    BigInt::zero()
                }
            };
            let row = (1..=dp)
                .map(|i| BigInt::from(i) * at(i) + BigInt::from(dp + 1 - i) * at(i - 1))
                .collect();
            rows.push(row);
        }
        EulerianTable { d, rows }
    }

    pub fn bound(&self) -> usize {
        self.d
    }

    /// Row `(A(dp, 1), ..., A(dp, dp))`.
    pub fn row(&self, dp: usize) -> &[BigInt] {
        assert!(dp >= 1 && dp <= self.d, "row out of range");
        &self.rows[dp - 1]
    }

    /// `A(dp, i)`, zero outside `1 <= i <= dp`.
    pub fn value(&self, dp: usize, i: usize) -> BigInt {
        if i >= 1 && i <= dp && dp <= self.d {
            self.rows[dp - 1][i - 1].clone()
        } else {
            BigInt::zero()
        }
    }
}

/// Eulerian polynomial `A_d(t) = sum_i A(d,i) t^i`, with `A_0(t) = 1`.
pub fn eulerian_poly(d: usize) -> DensePoly<BigInt> {
    if d == 0 {
        return DensePoly::one();
    }
    let table = EulerianTable::new(d);
    let mut coeffs = vec![BigInt::zero()];
    coeffs.extend(table.row(d).iter().cloned());
    DensePoly::new(coeffs)
}

/// Stirling numbers of the first kind for a fixed `d`: `S_i(d)` is the
/// coefficient of `t^i` in `t (t-1) ... (t-d+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    d: usize,
    s: Vec<BigInt>,
}

impl StirlingTable {
    pub fn d(&self) -> usize {
        self.d
    }

    /// `(S_0(d), ..., S_d(d))`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.s
    }

    pub fn value(&self, i: usize) -> BigInt {
        self.s.get(i).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// Expand `prod_{j=0}^{d-1} (t - j)` one linear factor at a time.
pub fn stirling_first(d: usize) -> StirlingTable {
    assert!(d >= 1, "stirling_first requires d >= 1");
    let mut p = DensePoly::monomial(BigInt::one(), 1); // t - 0
    for j in 1..d {
        let factor = DensePoly::new(vec![BigInt::from(-(j as i64)), BigInt::one()]);
        p = p.mul(&factor);
    }
    let s = (0..=d).map(|i| p.coeff(i)).collect();
    StirlingTable { d, s }
}

/// The binomial basis element `C(m + d - shift, d)` as a polynomial in `m`
/// with rational coefficients; degree `d`, leading coefficient `1/d!`.
pub fn binomial_basis(d: usize, shift: i64) -> DensePoly<BigRational> {
    // Numerator product prod_{j=0}^{d-1} (m + d - shift - j), over d!.
    let mut num: DensePoly<BigInt> = DensePoly::one();
    for j in 0..d as i64 {
        let c = d as i64 - shift - j;
        let factor = DensePoly::new(vec![BigInt::from(c), BigInt::one()]);
        num = num.mul(&factor);
    }
    let den = BigRational::from_integer(factorial(d));
    DensePoly::new(
        num.coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()) / den.clone())
            .collect(),
    )
}
