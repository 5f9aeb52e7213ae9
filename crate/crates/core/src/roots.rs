//! Certified real-root analysis over exact arithmetic.
//!
//! Real roots are counted and isolated with Sturm sequences; every sign is an
//! exact integer computation, so a reported count is a certificate rather
//! than a numerical estimate. Simplicity is certified by `gcd(p, p')` having
//! degree zero, and roots at the origin are factored out exactly beforehand.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::hecke::un_convolution;
use crate::poly::DensePoly;
use crate::series::HVector;
use crate::tables::eulerian_poly;

/// A rational interval bracketing exactly one real root. When `lo == hi` the
/// root is exactly that rational; otherwise the root lies in `(lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// The interval certifies a strictly negative root.
    pub fn strictly_negative(&self) -> bool {
        self.hi.is_negative() || (self.is_point() && self.lo.is_negative())
    }

    /// Upper bound on the distance between a root in `self` and a root in
    /// `other`.
    pub fn distance_bound(&self, other: &Interval) -> BigRational {
        let a = &self.hi - &other.lo;
        let b = &other.hi - &self.lo;
        if a > b {
            a
        } else {
            b
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "[{}]", self.lo)
        } else {
            write!(f, "({},{}]", self.lo, self.hi)
        }
    }
}

/// Default isolation width `2^-20`.
pub fn default_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1u64 << 20))
}

/// Sign of `p(a/b)` via homogeneous integer evaluation (no rational
/// reduction on the hot path).
fn sign_at(p: &DensePoly<BigInt>, x: &BigRational) -> i8 {
    let Some(n) = p.degree() else { return 0 };
    let a = x.numer();
    let b = x.denom();
    let coeffs = p.coeffs();
    let mut acc = coeffs[n].clone();
    let mut bpow = BigInt::one();
    for i in (0..n).rev() {
        bpow *= b;
        acc = acc * a + &coeffs[i] * &bpow;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Signed-remainder chain with each element scaled to a primitive integer
/// polynomial by a positive rational (positive scaling preserves the sign
/// variation count).
struct SturmChain {
    elems: Vec<DensePoly<BigInt>>,
}

impl SturmChain {
    fn new(squarefree: &DensePoly<BigInt>) -> Self {
        let mut elems = vec![squarefree.clone()];
        let deriv = squarefree.derivative();
        if !deriv.is_zero() {
            elems.push(deriv.primitive_part());
        }
        loop {
            let k = elems.len();
            if k < 2 || elems[k - 1].degree().is_none() {
                break;
            }
            if elems[k - 1].degree() == Some(0) {
                break;
            }
            let (_, rem) = elems[k - 2]
                .to_rational()
                .div_rem(&elems[k - 1].to_rational());
            if rem.is_zero() {
                break;
            }
            let next = rem.to_primitive_integer().neg();
            elems.push(next);
        }
        SturmChain { elems }
    }

    /// Number of sign variations at `x`, zeros skipped.
    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.elems {
            let s = sign_at(p, x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }

    fn poly(&self) -> &DensePoly<BigInt> {
        &self.elems[0]
    }
}

fn midpoint(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

/// Rational with the smallest denominator strictly inside `(lo, hi)`, by the
/// continued-fraction construction. Probing this point during refinement
/// guarantees that rational roots are eventually hit exactly: once the
/// bracket is tight enough, the root is the simplest rational it contains.
fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    debug_assert!(lo < hi);
    let zero = BigRational::zero();
    if *lo < zero && zero < *hi {
        return zero;
    }
    if *hi <= zero {
        return -simplest_nonneg(&-hi.clone(), &-lo.clone());
    }
    simplest_nonneg(lo, hi)
}

fn simplest_nonneg(lo: &BigRational, hi: &BigRational) -> BigRational {
    let fl = lo.floor();
    let candidate = &fl + BigRational::one();
    if candidate < *hi {
        return candidate;
    }
    let lo_frac = lo - &fl;
    let hi_frac = hi - &fl;
    let inner = if lo_frac.is_zero() {
        // Interval (0, hi_frac): the simplest element is 1/k for the least
        // k with 1/k < hi_frac.
        let k = (BigRational::one() / &hi_frac).floor() + BigRational::one();
        BigRational::one() / k
    } else {
        let r = simplest_nonneg(
            &(BigRational::one() / &hi_frac),
            &(BigRational::one() / &lo_frac),
        );
        BigRational::one() / r
    };
    fl + inner
}

/// Shrink a one-root interval `(lo, hi]` until it is narrower than `width`
/// and does not strictly contain zero; exact rational roots hit by a
/// midpoint collapse to point intervals.
fn refine(chain: &SturmChain, mut lo: BigRational, mut hi: BigRational, width: &BigRational) -> Interval {
    if sign_at(chain.poly(), &hi) == 0 {
        return Interval::point(hi);
    }
    let zero = BigRational::zero();
    loop {
        let probe = simplest_between(&lo, &hi);
        if sign_at(chain.poly(), &probe) == 0 {
            return Interval::point(probe);
        }
        let narrow = &hi - &lo <= *width;
        let brackets_zero = lo < zero && zero < hi;
        if narrow && !brackets_zero {
            return Interval { lo, hi };
        }
        let mid = if brackets_zero {
            // Push the interval off the origin first.
            zero.clone()
        } else {
            midpoint(&lo, &hi)
        };
        if sign_at(chain.poly(), &mid) == 0 {
            return Interval::point(mid);
        }
        if chain.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

fn isolate(
    chain: &SturmChain,
    lo: BigRational,
    hi: BigRational,
    count: usize,
    width: &BigRational,
    out: &mut Vec<Interval>,
) {
    match count {
        0 => {}
        1 => out.push(refine(chain, lo, hi, width)),
        _ => {
            let mid = midpoint(&lo, &hi);
            let left = chain.count(&lo, &mid);
            isolate(chain, lo, mid.clone(), left, width, out);
            isolate(chain, mid, hi, count - left, width, out);
        }
    }
}

/// Root-radius bound: all complex roots of `p` satisfy
/// `|z| < 1 + max_{j < deg} |p_j / p_deg|`.
pub fn cauchy_bound(p: &DensePoly<BigInt>) -> BigRational {
    let deg = p.degree().expect("cauchy_bound requires a nonzero polynomial");
    assert!(deg >= 1, "cauchy_bound requires degree >= 1");
    let lead = p.leading().unwrap().clone();
    let mut max = BigRational::zero();
    for j in 0..deg {
        let ratio = BigRational::new(p.coeff(j), lead.clone());
        let abs = ratio.abs();
        if abs > max {
            max = abs;
        }
    }
    max + BigRational::one()
}

/// Certified real-root data for an integer polynomial.
#[derive(Debug, Clone)]
pub struct RootReport {
    pub degree: usize,
    /// Number of distinct real roots.
    pub real_root_count: usize,
    /// Number of distinct strictly negative real roots.
    pub negative_root_count: usize,
    pub zero_multiplicity: usize,
    /// Squarefree certificate: `gcd(p, p')` has degree zero.
    pub simple: bool,
    /// Degree-many distinct real roots, all strictly negative.
    pub all_real_simple_negative: bool,
    /// Pairwise disjoint isolating intervals, ascending, one root each.
    pub intervals: Vec<Interval>,
}

pub fn sturm_real_roots(p: &DensePoly<BigInt>) -> RootReport {
    sturm_real_roots_with_width(p, &default_width())
}

pub fn sturm_real_roots_with_width(p: &DensePoly<BigInt>, width: &BigRational) -> RootReport {
    assert!(!p.is_zero(), "sturm_real_roots requires a nonzero polynomial");
    let degree = p.degree().unwrap();
    let zero_multiplicity = p.trailing_zeros();
    let q = p.shift_down(zero_multiplicity);

    if q.degree() == Some(0) {
        // Pure monomial c t^k.
        let intervals = if zero_multiplicity > 0 {
            vec![Interval::point(BigRational::zero())]
        } else {
            Vec::new()
        };
        let count = intervals.len();
        return RootReport {
            degree,
            real_root_count: count,
            negative_root_count: 0,
            zero_multiplicity,
            simple: zero_multiplicity <= 1,
            all_real_simple_negative: false,
            intervals,
        };
    }

    // Squarefree part q / gcd(q, q').
    let q_rat = q.to_rational();
    let mut g0 = q_rat.clone();
    let mut g1 = q.derivative().to_rational();
    while !g1.is_zero() {
        let (_, r) = g0.div_rem(&g1);
        g0 = g1;
        g1 = r;
    }
    let gcd_degree = g0.degree().unwrap_or(0);
    let squarefree_q = if gcd_degree == 0 {
        q.primitive_part()
    } else {
        q_rat.div_rem(&g0).0.to_primitive_integer()
    };
    let simple = zero_multiplicity <= 1 && gcd_degree == 0;

    let chain = SturmChain::new(&squarefree_q);
    let bound = cauchy_bound(&squarefree_q);
    let lo = -bound.clone();
    let total = chain.count(&lo, &bound);
    let negative_root_count = chain.count(&lo, &BigRational::zero());

    let mut intervals = Vec::with_capacity(total + 1);
    isolate(&chain, lo, bound, total, width, &mut intervals);
    if zero_multiplicity > 0 {
        intervals.push(Interval::point(BigRational::zero()));
    }
    intervals.sort_by(|x, y| x.lo.cmp(&y.lo));

    let real_root_count = total + usize::from(zero_multiplicity > 0);
    RootReport {
        degree,
        real_root_count,
        negative_root_count,
        zero_multiplicity,
        simple,
        all_real_simple_negative: simple
            && real_root_count == degree
            && negative_root_count == degree,
        intervals,
    }
}

/// Isolating intervals for the roots `rho_1 < ... < rho_{d-1} < rho_d = 0`
/// of the Eulerian polynomial `A_d(t)`; the zero root is pinned exactly and
/// the remaining intervals are strictly negative.
#[derive(Debug, Clone)]
pub struct EulerianRoots {
    pub d: usize,
    pub intervals: Vec<Interval>,
}

pub fn eulerian_roots(d: usize) -> EulerianRoots {
    eulerian_roots_with_width(d, &default_width())
}

pub fn eulerian_roots_with_width(d: usize, width: &BigRational) -> EulerianRoots {
    assert!(d >= 1, "eulerian_roots requires d >= 1");
    let a = eulerian_poly(d);
    let report = sturm_real_roots_with_width(&a, width);
    assert_eq!(report.real_root_count, d, "A_{d} must have {d} distinct real roots");
    assert_eq!(report.negative_root_count, d - 1);
    let mut intervals = report.intervals;
    // Tighten any non-point interval that still touches zero: the nonzero
    // roots are strictly negative, so bisection moves the endpoint below 0.
    let chain_poly = a.shift_down(1).primitive_part();
    let chain = SturmChain::new(&chain_poly);
    for iv in intervals.iter_mut().take(d - 1) {
        while !iv.is_point() && !iv.hi.is_negative() {
            let refined = refine(&chain, iv.lo.clone(), iv.hi.clone(), &(iv.width() / BigRational::from_integer(BigInt::from(4))));
            *iv = refined;
        }
        assert!(iv.strictly_negative());
    }
    assert!(intervals[d - 1].is_point() && intervals[d - 1].lo.is_zero());
    EulerianRoots { d, intervals }
}

/// One row of an empirical convergence trace.
#[derive(Debug, Clone)]
pub struct TraceEntry {
    /// Root index `i`, 1-based, ascending.
    pub index: usize,
    pub beta: Interval,
    /// Rational upper bound on `|beta_i(n) - rho_i|`.
    pub distance_bound: BigRational,
}

#[derive(Debug, Clone)]
pub enum TraceStatus {
    RealRooted(Vec<TraceEntry>),
    NotRealRooted,
}

#[derive(Debug, Clone)]
pub struct TraceRow {
    pub n: u32,
    pub status: TraceStatus,
}

/// Empirical content of the root-convergence statement: for each `n` in the
/// range, isolate the roots of `U_n h` and bound their distance to the
/// Eulerian roots. Rows where `U_n h` is not real-rooted are marked rather
/// than omitted.
pub fn convergence_trace(
    h: &HVector,
    n_range: std::ops::RangeInclusive<u32>,
) -> Result<Vec<TraceRow>> {
    convergence_trace_with_width(h, n_range, &default_width())
}

pub fn convergence_trace_with_width(
    h: &HVector,
    n_range: std::ops::RangeInclusive<u32>,
    width: &BigRational,
) -> Result<Vec<TraceRow>> {
    let d = h.d();
    let targets = eulerian_roots_with_width(d, width);
    let mut rows = Vec::new();
    for n in n_range {
        let un = un_convolution(h, n)?;
        let poly = un.as_poly();
        if poly.degree() != Some(d) {
            rows.push(TraceRow {
                n,
                status: TraceStatus::NotRealRooted,
            });
            continue;
        }
        let report = sturm_real_roots_with_width(&poly, width);
        if !report.all_real_simple_negative {
            rows.push(TraceRow {
                n,
                status: TraceStatus::NotRealRooted,
            });
            continue;
        }
        let entries = report
            .intervals
            .iter()
            .zip(targets.intervals.iter())
            .enumerate()
            .map(|(k, (beta, rho))| TraceEntry {
                index: k + 1,
                beta: beta.clone(),
                distance_bound: beta.distance_bound(rho),
            })
            .collect();
        rows.push(TraceRow {
            n,
            status: TraceStatus::RealRooted(entries),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int_poly;

    #[test]
    fn complex_quadratic_has_no_real_roots() {
        let report = sturm_real_roots(&int_poly(&[1, 1, 1]));
        assert_eq!(report.real_root_count, 0);
        assert!(report.intervals.is_empty());
        assert!(!report.all_real_simple_negative);
    }

    #[test]
    fn dilated_triangle_roots() {
        let report = sturm_real_roots(&int_poly(&[1, 7, 4]));
        assert_eq!(report.real_root_count, 2);
        assert_eq!(report.negative_root_count, 2);
        assert!(report.simple);
        assert!(report.all_real_simple_negative);
        for iv in &report.intervals {
            assert!(iv.strictly_negative());
            assert!(iv.is_point() || iv.width() <= default_width());
        }
    }

    #[test]
    fn eulerian_cubic_roots() {
        // A_3 = t + 4t^2 + t^3: two negative roots and one zero root.
        let report = sturm_real_roots(&int_poly(&[0, 1, 4, 1]));
        assert_eq!(report.real_root_count, 3);
        assert_eq!(report.negative_root_count, 2);
        assert_eq!(report.zero_multiplicity, 1);
        assert!(report.simple);
        assert!(!report.all_real_simple_negative);
    }

    #[test]
    fn repeated_root_is_not_simple() {
        // (1 + t)^2
        let report = sturm_real_roots(&int_poly(&[1, 2, 1]));
        assert!(!report.simple);
        assert_eq!(report.real_root_count, 1);
        assert_eq!(report.negative_root_count, 1);
    }

    #[test]
    fn exact_rational_roots_are_pinned() {
        // (1 + t)(1 + 2t): roots -1 and -1/2, both binary-rational reachable.
        let report = sturm_real_roots(&int_poly(&[1, 3, 2]));
        assert_eq!(report.real_root_count, 2);
        let exact: Vec<_> = report.intervals.iter().filter(|iv| iv.is_point()).collect();
        assert_eq!(exact.len(), 2);
        assert_eq!(exact[0].lo, BigRational::new(BigInt::from(-1), BigInt::one()));
        assert_eq!(
            exact[1].lo,
            BigRational::new(BigInt::from(-1), BigInt::from(2))
        );
    }

    #[test]
    fn cauchy_bound_examples() {
        assert_eq!(
            cauchy_bound(&int_poly(&[2, -3, 1])),
            BigRational::from_integer(BigInt::from(4))
        );
        assert_eq!(
            cauchy_bound(&int_poly(&[1, 7, 4])),
            BigRational::new(BigInt::from(11), BigInt::from(4))
        );
        assert_eq!(
            cauchy_bound(&int_poly(&[0, 0, 0, 1])),
            BigRational::one()
        );
    }

    #[test]
    fn intervals_lie_inside_cauchy_disc() {
        for coeffs in [[2i64, -3, 1], [-5, 0, 3], [1, 7, 4]] {
            let p = int_poly(&coeffs);
            let bound = cauchy_bound(&p);
            let report = sturm_real_roots(&p);
            for iv in &report.intervals {
                assert!(iv.lo >= -bound.clone() && iv.hi <= bound);
            }
        }
    }

    #[test]
    fn eulerian_roots_small() {
        let r1 = eulerian_roots(1);
        assert_eq!(r1.intervals.len(), 1);
        assert!(r1.intervals[0].is_point() && r1.intervals[0].lo.is_zero());

        let r2 = eulerian_roots(2);
        assert_eq!(r2.intervals.len(), 2);
        assert!(r2.intervals[0].is_point());
        assert_eq!(r2.intervals[0].lo, BigRational::from_integer(BigInt::from(-1)));
        assert!(r2.intervals[1].is_point() && r2.intervals[1].lo.is_zero());
    }

    #[test]
    fn eulerian_roots_cubic_bracket_the_quadratic_roots() {
        // Nonzero roots of A_3 solve t^2 + 4t + 1 = 0.
        let r3 = eulerian_roots(3);
        assert_eq!(r3.intervals.len(), 3);
        let quad = int_poly(&[1, 4, 1]);
        for iv in &r3.intervals[..2] {
            assert!(iv.strictly_negative());
            if iv.is_point() {
                assert_eq!(sign_at(&quad, &iv.lo), 0);
            } else {
                // Sign change across the bracket.
                assert_ne!(sign_at(&quad, &iv.lo), sign_at(&quad, &iv.hi));
            }
        }
    }

    #[test]
    fn eulerian_roots_disjoint_up_to_8() {
        for d in 1..=8 {
            let roots = eulerian_roots(d);
            assert_eq!(roots.intervals.len(), d);
            for w in roots.intervals.windows(2) {
                assert!(w[0].hi <= w[1].lo || (w[0].hi < w[1].hi && w[0].lo < w[1].lo));
                assert!(w[0].hi < w[1].hi);
            }
            for iv in &roots.intervals[..d - 1] {
                assert!(iv.strictly_negative());
            }
        }
    }

    #[test]
    fn convergence_trace_distances_shrink() {
        let h = HVector::from_i64(2, &[1, 1, 1]).unwrap();
        let rows = convergence_trace(&h, 2..=12).unwrap();
        let dist = |row: &TraceRow, i: usize| match &row.status {
            TraceStatus::RealRooted(entries) => entries[i].distance_bound.clone(),
            TraceStatus::NotRealRooted => panic!("expected real-rooted row"),
        };
        for i in 0..2 {
            assert!(dist(&rows[rows.len() - 1], i) < dist(&rows[0], i));
        }
    }

    #[test]
    fn trace_marks_non_real_rooted_rows() {
        // U_1 on the reflexive triangle numerator is 1 + t + t^2.
        let h = HVector::from_i64(2, &[1, 1, 1]).unwrap();
        let rows = convergence_trace(&h, 1..=2).unwrap();
        assert!(matches!(rows[0].status, TraceStatus::NotRealRooted));
        assert!(matches!(rows[1].status, TraceStatus::RealRooted(_)));
    }
}
