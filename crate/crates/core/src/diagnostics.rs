//! Exact inequality and shape diagnostics for numerators and delta-vectors.
//!
//! Every check is an exact integer or rational comparison; there are no
//! tolerance parameters anywhere in this module. Reports carry the exact
//! margin of each comparison so that weak and strict versions of an
//! inequality can be told apart after the fact.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::decomp::decompose;
use crate::error::{Error, Result};
use crate::hecke::{un_convolution, UnResult};
use crate::roots::sturm_real_roots;
use crate::seq;
use crate::series::{h_to_g, HVector};
use crate::tables::{factorial, stirling_first, EulerianTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Holds,
    Fails,
    /// A stated hypothesis of the check does not apply to this input.
    NotApplicable,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Holds => write!(f, "holds"),
            CheckStatus::Fails => write!(f, "fails"),
            CheckStatus::NotApplicable => write!(f, "not-applicable"),
        }
    }
}

/// One named exact comparison. For inequality checks the margin is
/// `lhs - rhs` oriented so that nonnegative means the weak form holds and
/// strictly positive means the strict form holds.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub witness: Option<usize>,
    pub margin: Option<BigRational>,
}

#[derive(Debug, Clone)]
pub struct DiagnosticsReport {
    pub op: &'static str,
    pub checks: Vec<Check>,
}

impl DiagnosticsReport {
    fn new(op: &'static str) -> Self {
        DiagnosticsReport {
            op,
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: String, status: CheckStatus, witness: Option<usize>, margin: Option<BigRational>) {
        self.checks.push(Check {
            name,
            status,
            witness,
            margin,
        });
    }

    fn push_ge(&mut self, name: String, lhs: BigRational, rhs: BigRational, witness: usize) {
        let margin = lhs - rhs;
        let status = if margin.is_negative() {
            CheckStatus::Fails
        } else {
            CheckStatus::Holds
        };
        let w = if status == CheckStatus::Fails {
            Some(witness)
        } else {
            None
        };
        self.push(name, status, w, Some(margin));
    }

    fn push_gt(&mut self, name: String, lhs: BigRational, rhs: BigRational, witness: usize) {
        let margin = lhs - rhs;
        let status = if margin.is_positive() {
            CheckStatus::Holds
        } else {
            CheckStatus::Fails
        };
        let w = if status == CheckStatus::Fails {
            Some(witness)
        } else {
            None
        };
        self.push(name, status, w, Some(margin));
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fails)
    }

    /// All inequality margins strictly positive (weak holds with margin zero
    /// do not count).
    pub fn all_strict(&self) -> bool {
        self.checks.iter().all(|c| match c.status {
            CheckStatus::Fails => false,
            CheckStatus::NotApplicable => true,
            CheckStatus::Holds => c.margin.as_ref().map_or(true, |m| m.is_positive()),
        })
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for DiagnosticsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.op)?;
        for c in &self.checks {
            write!(f, "  {:<40} {}", c.name, c.status)?;
            if let Some(m) = &c.margin {
                write!(f, " (margin {m})")?;
            }
            if let Some(w) = c.witness {
                write!(f, " (witness {w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn rat(i: BigInt) -> BigRational {
    BigRational::from_integer(i)
}

fn require_nonnegative(h: &HVector) -> Result<()> {
    for (i, c) in h.coeffs().iter().enumerate() {
        if c.is_negative() {
            return Err(Error::precondition(
                format!("coefficient h_{i} = {c} is negative"),
                Some(i),
            ));
        }
    }
    Ok(())
}

/// The cumulative hypothesis `h_0 + ... + h_i >= h_{d+1} + ... + h_{d+1-i}`
/// for `0 <= i <= floor(d/2)`, at least one strict. Returns the first
/// violated index, or the strictness flag on success.
fn cumulative_hypothesis(h: &HVector) -> std::result::Result<bool, usize> {
    let mut any_strict = false;
    for i in 0..=h.d() / 2 {
        let diff = h.head_sum(i) - h.tail_sum(i);
        if diff.is_negative() {
            return Err(i);
        }
        if diff.is_positive() {
            any_strict = true;
        }
    }
    Ok(any_strict)
}

/// Coefficient bounds for the counting polynomial of a numerator with
/// nonnegative coefficients: for `1 <= r <= d - 1`,
/// `g_r <= (-1)^{d-r} S_r(d) g_d + (-1)^{d-r-1} h_0 S_{r+1}(d) / (d-1)!`.
pub fn betke_mcmullen_bounds(h: &HVector) -> Result<DiagnosticsReport> {
    require_nonnegative(h)?;
    let d = h.d();
    let g = h_to_g(h);
    let mut report = DiagnosticsReport::new("betke-mcmullen-bounds");
    if d < 2 {
        report.push("bound-range".into(), CheckStatus::NotApplicable, None, None);
        return Ok(report);
    }
    let s = stirling_first(d);
    let fac = rat(factorial(d - 1));
    for r in 1..=d - 1 {
        let sign_a = if (d - r) % 2 == 0 { 1 } else { -1 };
        let rhs = rat(BigInt::from(sign_a) * s.value(r)) * g.coeff(d)
            + rat(BigInt::from(-sign_a) * h.coeff(0) * s.value(r + 1)) / fac.clone();
        report.push_ge(format!("g_{r} <= bound"), rhs, g.coeff(r), r);
    }
    Ok(report)
}

/// Refined bounds on every other coefficient under the cumulative
/// hypothesis: for `1 <= r <= floor((d-1)/2)`,
/// `g_{d-1-2r} <= S_{d-1-2r}(d-1) g_{d-1}
/// - (h_0 - h_{d+1}) S_{d-2r}(d-1) / (d-2)!`.
///
/// The subtracted term carries `(d-2)!` rather than `2(d-2)!`: the symmetric
/// component behind this bound is palindromic, so its top coefficient equals
/// its constant one and contributes a second copy of the correction. With
/// the halved correction the inequality is violated by h = (1,0,0,0,0) at
/// d = 4 (g_1 = 25/12 against 19/12).
pub fn refined_bounds(h: &HVector) -> Result<DiagnosticsReport> {
    let d = h.d();
    match cumulative_hypothesis(h) {
        Err(i) => {
            return Err(Error::precondition(
                format!(
                    "cumulative inequality h_0+..+h_{i} >= h_{}+..+h_{} fails",
                    d + 1,
                    d + 1 - i
                ),
                Some(i),
            ))
        }
        Ok(false) => {
            return Err(Error::precondition(
                "cumulative inequalities hold but none is strict",
                None,
            ))
        }
        Ok(true) => {}
    }
    let mut report = DiagnosticsReport::new("refined-bounds");
    if d < 3 {
        report.push("bound-range".into(), CheckStatus::NotApplicable, None, None);
        return Ok(report);
    }
    let g = h_to_g(h);
    let s = stirling_first(d - 1);
    let denom = rat(factorial(d - 2));
    let a0 = h.coeff(0) - h.coeff(d + 1);
    for r in 1..=(d - 1) / 2 {
        let idx = d - 1 - 2 * r;
        let rhs = rat(s.value(idx)) * g.coeff(d - 1) - rat(&a0 * s.value(d - 2 * r)) / denom.clone();
        report.push_ge(format!("g_{idx} <= bound"), rhs, g.coeff(idx), r);
    }
    Ok(report)
}

/// Lower bounds for the two leading coefficients of the counting polynomial:
/// `g_d >= 1/d!` whenever the coefficient sum is positive, and
/// `g_{d-1} >= 1/(2(d-1)!)` under the cumulative hypothesis, refined to
/// `g_{d-1} >= (d+1)/(2(d-1)!)` when the symmetric component has degree `d`
/// and positive coefficients.
pub fn leading_coeff_bounds(h: &HVector) -> DiagnosticsReport {
    let d = h.d();
    let g = h_to_g(h);
    let mut report = DiagnosticsReport::new("leading-coeff-bounds");

    if h.sum().is_positive() {
        report.push_ge(
            format!("g_{d} >= 1/d!"),
            g.coeff(d),
            BigRational::new(BigInt::one(), factorial(d)),
            d,
        );
    } else {
        report.push(format!("g_{d} >= 1/d!"), CheckStatus::NotApplicable, None, None);
    }

    let sub_name = format!("g_{} >= 1/(2(d-1)!)", d - 1);
    match cumulative_hypothesis(h) {
        Ok(true) => {
            report.push_ge(
                sub_name,
                g.coeff(d - 1),
                BigRational::new(BigInt::one(), BigInt::from(2) * factorial(d - 1)),
                d - 1,
            );
        }
        _ => report.push(sub_name, CheckStatus::NotApplicable, None, None),
    }

    let refined_name = format!("g_{} >= (d+1)/(2(d-1)!)", d - 1);
    if decompose(h).a_positive() {
        report.push_ge(
            refined_name,
            g.coeff(d - 1),
            BigRational::new(BigInt::from(d as i64 + 1), BigInt::from(2) * factorial(d - 1)),
            d - 1,
        );
    } else {
        report.push(refined_name, CheckStatus::NotApplicable, None, None);
    }
    report
}

/// Cumulative inequalities satisfied by polytope delta-vectors:
/// `delta_0 + ... + delta_i >= delta_d + ... + delta_{d+1-i}` for
/// `1 <= i <= floor(d/2)` (the right side has `i` terms). Strict for every
/// polytope delta-vector, since their symmetric components are positive; the
/// report records the exact margin of each so weak holds are visible.
pub fn hibi_inequalities(delta: &HVector) -> Result<DiagnosticsReport> {
    if delta.coeff(0) != BigInt::one() {
        return Err(Error::precondition("delta_0 must equal 1", Some(0)));
    }
    require_nonnegative(delta)?;
    if !delta.degree_at_most_d() {
        return Err(Error::precondition(
            "delta-vector must have degree at most d",
            Some(delta.d() + 1),
        ));
    }
    let d = delta.d();
    let mut report = DiagnosticsReport::new("hibi-inequalities");
    for i in 1..=d / 2 {
        // tail_sum(i) runs from delta_{d+1} (zero here) down to delta_{d+1-i}.
        report.push_ge(
            format!("delta_0+..+delta_{i} >= delta_{d}+..+delta_{}", d + 1 - i),
            rat(delta.head_sum(i)),
            rat(delta.tail_sum(i)),
            i,
        );
    }
    if d / 2 == 0 {
        report.push("range".into(), CheckStatus::NotApplicable, None, None);
    }
    Ok(report)
}

/// Delta-vector inequalities implied by a regular unimodular triangulation:
/// (a) `delta_{i+1} >= delta_{d-i}`, (b) a weakly decreasing tail from index
/// `floor((d+1)/2)`, and (c) `delta_i <= C(delta_1 + i - 1, i)`.
pub fn ahs_inequalities(delta: &HVector) -> DiagnosticsReport {
    let d = delta.d();
    let mut report = DiagnosticsReport::new("ahs-inequalities");
    for i in 0..d / 2 {
        report.push_ge(
            format!("(a) delta_{} >= delta_{}", i + 1, d - i),
            rat(delta.coeff(i + 1)),
            rat(delta.coeff(d - i)),
            i,
        );
    }
    for j in (d + 1) / 2..d {
        report.push_ge(
            format!("(b) delta_{j} >= delta_{}", j + 1),
            rat(delta.coeff(j)),
            rat(delta.coeff(j + 1)),
            j,
        );
    }
    let d1 = delta.coeff(1);
    for i in 0..=d {
        let top = &d1 + BigInt::from(i as i64) - BigInt::one();
        report.push_ge(
            format!("(c) delta_{i} <= C(delta_1+{i}-1, {i})"),
            rat(binomial_big(&top, i)),
            rat(delta.coeff(i)),
            i,
        );
    }
    report
}

/// `C(n, k)` for a big integer `n >= 0` (zero when `n < k`); `C(n, 0) = 1`
/// for any `n`.
fn binomial_big(n: &BigInt, k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    if n < &BigInt::from(k as i64) {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - BigInt::from(j as i64)) / BigInt::from(j as i64 + 1);
    }
    acc
}

/// Shape report for an integer coefficient vector: positivity, strict
/// log-concavity, strict unimodality (with the discovered split index), and
/// the implication between them.
pub fn logconcave_unimodal(v: &[BigInt]) -> DiagnosticsReport {
    let mut report = DiagnosticsReport::new("logconcave-unimodal");
    let positive = seq::is_positive(v);
    report.push(
        "positive".into(),
        if positive { CheckStatus::Holds } else { CheckStatus::Fails },
        None,
        None,
    );
    let lc_violation = seq::log_concavity_violation(v);
    report.push(
        "strictly-log-concave".into(),
        if lc_violation.is_none() { CheckStatus::Holds } else { CheckStatus::Fails },
        lc_violation,
        None,
    );
    let split = seq::strict_unimodal_split(v);
    report.push(
        "strictly-unimodal".into(),
        if split.split.is_some() { CheckStatus::Holds } else { CheckStatus::Fails },
        split.split.or(split.ascent_break),
        None,
    );
    let implication_ok = !(positive && lc_violation.is_none() && split.split.is_none());
    report.push(
        "log-concave-implies-unimodal".into(),
        if implication_ok { CheckStatus::Holds } else { CheckStatus::Fails },
        None,
        None,
    );
    report
}

/// The interlacing chain certificate for `U_n h`, together with the
/// unconditional multiplier bound.
#[derive(Debug, Clone)]
pub struct ChainReport {
    pub n: u32,
    /// `A(d, floor((d+1)/2)) + 1`.
    pub multiplier: BigInt,
    pub dilated: UnResult,
    /// Weak cumulative hypothesis `h_0+..+h_{i+1} >= h_d+..+h_{d-i}`.
    pub hypothesis: DiagnosticsReport,
    /// `h_0 = h_0(n) < h_d(n) < h_1(n) < ... < h_mid(n) < m_d h_d(n)`.
    pub chain: DiagnosticsReport,
    /// `h_i(n) < m_d h_d(n)` for every `i`.
    pub unconditional: DiagnosticsReport,
    /// Smallest integer `M` with `h_i(n) < M h_d(n)` for all `i`, when
    /// `h_d(n) > 0`.
    pub empirical_multiplier: Option<BigInt>,
}

impl ChainReport {
    pub fn chain_holds(&self) -> bool {
        self.chain.all_hold() && self.unconditional.all_hold()
    }
}

/// Multiplier `m_d = A(d, floor((d+1)/2)) + 1` used by the unconditional
/// bound in the interlacing chain.
pub fn chain_multiplier(d: usize) -> BigInt {
    EulerianTable::new(d).value(d, (d + 1) / 2) + BigInt::one()
}

/// Interleaved index order `d, 1, d-1, 2, ...` ending at `floor((d+1)/2)`.
fn chain_order(d: usize) -> Vec<usize> {
    let target = (d + 1) / 2;
    let mut order = Vec::new();
    let (mut l, mut r) = (1, d);
    loop {
        order.push(r);
        if r == target {
            break;
        }
        order.push(l);
        if l == target {
            break;
        }
        l += 1;
        r -= 1;
    }
    order
}

pub fn interlacing_chain(h: &HVector, n: u32) -> Result<ChainReport> {
    let d = h.d();
    let dilated = un_convolution(h, n)?;
    let multiplier = chain_multiplier(d);

    let mut hypothesis = DiagnosticsReport::new("chain-hypothesis");
    hypothesis.push(
        "h_0 = 1".into(),
        if h.coeff(0) == BigInt::one() { CheckStatus::Holds } else { CheckStatus::Fails },
        None,
        None,
    );
    hypothesis.push(
        "coefficients nonnegative".into(),
        if h.is_nonnegative() { CheckStatus::Holds } else { CheckStatus::Fails },
        None,
        None,
    );
    for i in 0..d / 2 {
        hypothesis.push_ge(
            format!("h_0+..+h_{} >= h_{d}+..+h_{}", i + 1, d - i),
            rat(h.head_sum(i + 1)),
            rat(h.tail_sum(i + 1)),
            i,
        );
    }

    let mut chain = DiagnosticsReport::new("interlacing-chain");
    chain.push(
        "h_0(n) = h_0".into(),
        if dilated.coeff(0) == h.coeff(0) { CheckStatus::Holds } else { CheckStatus::Fails },
        None,
        Some(rat(dilated.coeff(0) - h.coeff(0))),
    );
    let order = chain_order(d);
    let mut prev = 0usize;
    for (step, &idx) in order.iter().enumerate() {
        chain.push_gt(
            format!("h_{idx}(n) > h_{prev}(n)"),
            rat(dilated.coeff(idx)),
            rat(dilated.coeff(prev)),
            step,
        );
        prev = idx;
    }
    chain.push_gt(
        format!("m_d h_{d}(n) > h_{prev}(n)"),
        rat(&multiplier * dilated.coeff(d)),
        rat(dilated.coeff(prev)),
        order.len(),
    );

    let mut unconditional = DiagnosticsReport::new("unconditional-multiplier-bound");
    for i in 0..=d {
        unconditional.push_gt(
            format!("h_{i}(n) < m_d h_{d}(n)"),
            rat(&multiplier * dilated.coeff(d)),
            rat(dilated.coeff(i)),
            i,
        );
    }

    let empirical_multiplier = if dilated.coeff(d).is_positive() {
        let max = (0..=d).map(|i| dilated.coeff(i)).max().unwrap();
        Some(max / dilated.coeff(d) + BigInt::one())
    } else {
        None
    };

    Ok(ChainReport {
        n,
        multiplier,
        dilated,
        hypothesis,
        chain,
        unconditional,
        empirical_multiplier,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    RealRooted,
    LogConcave,
    Unimodal,
    Chain,
    HibiStrict,
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Predicate::RealRooted => "real-rooted",
            Predicate::LogConcave => "log-concave",
            Predicate::Unimodal => "unimodal",
            Predicate::Chain => "chain",
            Predicate::HibiStrict => "hibi-strict",
        };
        write!(f, "{s}")
    }
}

/// Evaluate one predicate on `U_n h`.
pub fn predicate_holds(h: &HVector, predicate: Predicate, n: u32) -> Result<bool> {
    let un = un_convolution(h, n)?;
    let coeffs = un.coeffs();
    Ok(match predicate {
        Predicate::RealRooted => {
            // Degree drops (vanishing top coefficients at small n) are
            // tolerated: the predicate asks that the roots the polynomial
            // has are simple, real and negative, and that there is at least
            // one.
            let poly = un.as_poly();
            poly.degree().is_some_and(|deg| deg >= 1)
                && sturm_real_roots(&poly).all_real_simple_negative
        }
        Predicate::LogConcave => seq::is_positive(coeffs) && seq::strictly_log_concave(coeffs),
        Predicate::Unimodal => seq::is_positive(coeffs) && seq::strictly_unimodal(coeffs),
        Predicate::Chain => interlacing_chain(h, n)?.chain_holds(),
        Predicate::HibiStrict => {
            let delta = un.to_hvector()?;
            if delta.coeff(0) != BigInt::one() || !delta.is_nonnegative() {
                false
            } else {
                hibi_inequalities(&delta)?.all_strict()
            }
        }
    })
}

/// Result of a windowed threshold scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    /// Smallest `n` such that the predicate holds for every `n' in
    /// `[n, n_max]`; `None` if it fails at `n_max`.
    pub threshold: Option<u32>,
    /// First `n` at which the predicate holds at all.
    pub first_hold: Option<u32>,
    /// The predicate held somewhere and failed later in the window.
    pub non_monotone: bool,
}

/// Scan `n = 1..=n_max` with exact predicates and report the smallest stable
/// threshold within the window. Stability is windowed: nothing is claimed
/// beyond `n_max`.
pub fn minimal_n_search(h: &HVector, predicate: Predicate, n_max: u32) -> Result<SearchResult> {
    assert!(n_max >= 1, "minimal_n_search requires n_max >= 1");
    let flags: Vec<bool> = (1..=n_max)
        .map(|n| predicate_holds(h, predicate, n))
        .collect::<Result<_>>()?;
    let first_hold = flags.iter().position(|&b| b).map(|i| i as u32 + 1);
    let threshold = if *flags.last().unwrap() {
        let mut start = n_max;
        for n in (1..n_max).rev() {
            if flags[(n - 1) as usize] {
                start = n;
            } else {
                break;
            }
        }
        Some(start)
    } else {
        None
    };
    let non_monotone = match (first_hold, threshold) {
        (Some(f), Some(t)) => f < t,
        (Some(_), None) => true,
        _ => false,
    };
    Ok(SearchResult {
        threshold,
        first_hold,
        non_monotone,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hv(d: usize, coeffs: &[i64]) -> HVector {
        HVector::from_i64(d, coeffs).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn betke_mcmullen_reflexive_triangle() {
        // r = 1: g_1 = 3/2 against bound (-1)S_1(2)(3/2) + S_2(2)/1! = 5/2.
        let report = betke_mcmullen_bounds(&hv(2, &[1, 1, 1])).unwrap();
        assert!(report.all_hold());
        let margin = report.checks[0].margin.clone().unwrap();
        assert_eq!(margin, BigRational::from_integer(BigInt::one()));
    }

    #[test]
    fn betke_mcmullen_simplex_all_degrees() {
        for d in 2..=8 {
            let report = betke_mcmullen_bounds(&hv(d, &[1])).unwrap();
            assert!(report.all_hold(), "d={d}: {report}");
        }
    }

    #[test]
    fn betke_mcmullen_rejects_negative_coefficient() {
        match betke_mcmullen_bounds(&hv(2, &[1, -1, 1])) {
            Err(Error::PreconditionFailed { witness, .. }) => assert_eq!(witness, Some(1)),
            other => panic!("expected precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn refined_bounds_low_degree_not_applicable() {
        let report = refined_bounds(&hv(2, &[1, 1, 1])).unwrap();
        assert_eq!(report.checks.len(), 1);
        assert_eq!(report.checks[0].status, CheckStatus::NotApplicable);
    }

    #[test]
    fn refined_bounds_d3_constant_coefficient() {
        // r = 1 compares g_0 = 1 against S_0(2) g_2 - h_0 S_1(2)/(d-2)! = 1.
        let report = refined_bounds(&hv(3, &[1, 1, 0, 0])).unwrap();
        assert_eq!(report.checks.len(), 1);
        assert_eq!(report.checks[0].status, CheckStatus::Holds);
        assert!(report.checks[0].margin.as_ref().unwrap().is_zero());
    }

    #[test]
    fn refined_bounds_d4() {
        let report = refined_bounds(&hv(4, &[1, 2, 1, 1, 0])).unwrap();
        assert!(report.checks.iter().any(|c| c.status == CheckStatus::Holds));
        assert!(report.all_hold(), "{report}");
        // Simplex numerator: g_1 = 25/12 against 2 g_3 + 3/2 = 28/12.
        let simplex = refined_bounds(&hv(4, &[1])).unwrap();
        assert!(simplex.all_hold(), "{simplex}");
        assert_eq!(
            simplex.checks[0].margin,
            Some(BigRational::new(BigInt::from(1), BigInt::from(4)))
        );
    }

    #[test]
    fn refined_bounds_rejects_violated_hypothesis() {
        match refined_bounds(&hv(2, &[1, 0, 3])) {
            Err(Error::PreconditionFailed { witness, .. }) => assert_eq!(witness, Some(1)),
            other => panic!("expected precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn leading_bounds_examples() {
        let r1 = leading_coeff_bounds(&hv(1, &[1]));
        assert!(r1.all_hold(), "{r1}");
        let r2 = leading_coeff_bounds(&hv(2, &[1, 1, 1]));
        assert!(r2.all_hold(), "{r2}");
        // g_1 = 3/2 >= 1/2 and the refined bound 3/2 >= 3/2 (margin zero).
        let refined = r2.find("g_1 >= (d+1)/(2(d-1)!)").unwrap();
        assert_eq!(refined.status, CheckStatus::Holds);
        assert!(refined.margin.as_ref().unwrap().is_zero());
    }

    #[test]
    fn hibi_reflexive_triangle_strict() {
        let report = hibi_inequalities(&hv(2, &[1, 1, 1])).unwrap();
        assert!(report.all_hold() && report.all_strict(), "{report}");
    }

    #[test]
    fn hibi_simplex_and_palindromic() {
        assert!(hibi_inequalities(&hv(2, &[1])).unwrap().all_hold());
        let r = hibi_inequalities(&hv(2, &[1, 4, 1])).unwrap();
        assert!(r.all_hold() && r.all_strict());
    }

    #[test]
    fn hibi_weak_hold_is_distinguished() {
        // (1, 0, 1): head = 1, tail = 1 at i = 1, so the margin is zero.
        let r = hibi_inequalities(&hv(2, &[1, 0, 1])).unwrap();
        assert!(r.all_hold());
        assert!(!r.all_strict());
    }

    #[test]
    fn ahs_on_nonunimodular_tetrahedron() {
        let report = ahs_inequalities(&hv(3, &[1, 0, 1, 0]));
        let a0 = report.find("(a) delta_1 >= delta_3").unwrap();
        assert_eq!(a0.status, CheckStatus::Holds);
        let c2 = report.find("(c) delta_2 <= C(delta_1+2-1, 2)").unwrap();
        assert_eq!(c2.status, CheckStatus::Fails);
    }

    #[test]
    fn ahs_on_square_and_simplex() {
        assert!(ahs_inequalities(&hv(2, &[1, 1, 0])).all_hold());
        assert!(ahs_inequalities(&hv(4, &[1])).all_hold());
    }

    #[test]
    fn shape_reports() {
        let r = logconcave_unimodal(&big(&[1, 7, 4]));
        assert!(r.all_hold(), "{r}");
        let r = logconcave_unimodal(&big(&[1, 4, 1]));
        assert!(r.find("strictly-log-concave").unwrap().status == CheckStatus::Holds);
        // Twin plateau: unimodal via the split reading, vacuously
        // log-concave, implication intact.
        let r = logconcave_unimodal(&big(&[1, 1]));
        assert_eq!(r.find("strictly-unimodal").unwrap().status, CheckStatus::Holds);
        assert_eq!(r.find("strictly-unimodal").unwrap().witness, Some(0));
        assert_eq!(
            r.find("log-concave-implies-unimodal").unwrap().status,
            CheckStatus::Holds
        );
    }

    #[test]
    fn chain_multipliers() {
        assert_eq!(chain_multiplier(2), BigInt::from(2));
        assert_eq!(chain_multiplier(3), BigInt::from(5));
    }

    #[test]
    fn chain_orders() {
        assert_eq!(chain_order(1), vec![1]);
        assert_eq!(chain_order(2), vec![2, 1]);
        assert_eq!(chain_order(3), vec![3, 1, 2]);
        assert_eq!(chain_order(4), vec![4, 1, 3, 2]);
        assert_eq!(chain_order(5), vec![5, 1, 4, 2, 3]);
    }

    #[test]
    fn chain_on_reflexive_triangle() {
        // 1 < 4 < 7 < 2*4 from U_2(1,1,1) = (1,7,4).
        let report = interlacing_chain(&hv(2, &[1, 1, 1]), 2).unwrap();
        assert!(report.chain_holds(), "{}", report.chain);
        assert_eq!(report.multiplier, BigInt::from(2));
        assert_eq!(report.empirical_multiplier, Some(BigInt::from(2)));
        assert!(report.hypothesis.all_hold());
    }

    #[test]
    fn chain_fails_below_threshold() {
        let report = interlacing_chain(&hv(2, &[1]), 1).unwrap();
        assert!(!report.chain_holds());
        assert!(report.empirical_multiplier.is_none());
    }

    #[test]
    fn minimal_n_search_reflexive_triangle() {
        let r = minimal_n_search(&hv(2, &[1, 1, 1]), Predicate::RealRooted, 10).unwrap();
        assert_eq!(r.threshold, Some(2));
        assert_eq!(r.first_hold, Some(2));
        assert!(!r.non_monotone);
    }

    #[test]
    fn minimal_n_search_d3_finite_thresholds() {
        let h = hv(3, &[1, 0, 1, 0]);
        for p in [
            Predicate::RealRooted,
            Predicate::LogConcave,
            Predicate::Unimodal,
            Predicate::Chain,
            Predicate::HibiStrict,
        ] {
            let r = minimal_n_search(&h, p, 30).unwrap();
            assert!(r.threshold.is_some(), "{p} has no threshold within 30");
        }
    }

    #[test]
    fn minimal_n_search_simplex_logconcave() {
        for d in 2..=6 {
            let r = minimal_n_search(&hv(d, &[1]), Predicate::LogConcave, 24).unwrap();
            assert!(r.threshold.is_some(), "d={d}");
        }
    }
}
