//! Predicates on integer sequences: positivity, symmetry, strict
//! log-concavity and strict unimodality.
//!
//! Strict unimodality uses the split-index reading: there is some `j` with
//! `a_0 < ... < a_j` and `a_{j+1} > ... > a_end`. The pair across the split
//! is not compared, so a single plateau of length two is allowed; this is the
//! reading under which positive strictly log-concave sequences are always
//! strictly unimodal (Eulerian rows for even degree have a central twin
//! peak).

use num_bigint::BigInt;
use num_traits::Signed;

pub fn is_positive(v: &[BigInt]) -> bool {
    !v.is_empty() && v.iter().all(|a| a.is_positive())
}

pub fn is_symmetric(v: &[BigInt]) -> bool {
    let n = v.len();
    (0..n / 2).all(|i| v[i] == v[n - 1 - i])
}

/// First interior index violating `a_i^2 > a_{i-1} a_{i+1}`, if any.
pub fn log_concavity_violation(v: &[BigInt]) -> Option<usize> {
    (1..v.len().saturating_sub(1)).find(|&i| v[i].pow(2) <= &v[i - 1] * &v[i + 1])
}

pub fn strictly_log_concave(v: &[BigInt]) -> bool {
    log_concavity_violation(v).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodalSplit {
    /// Admissible split index, reported at the end of the strict ascent
    /// (the peak).
    pub split: Option<usize>,
    /// First index where the ascent breaks; meaningful on failure.
    pub ascent_break: Option<usize>,
}

/// Search for a split index witnessing strict unimodality.
pub fn strict_unimodal_split(v: &[BigInt]) -> UnimodalSplit {
    if v.is_empty() {
        return UnimodalSplit {
            split: None,
            ascent_break: None,
        };
    }
    let n = v.len();
    // Longest strictly increasing prefix ends at `p`.
    let mut p = 0;
    while p + 1 < n && v[p] < v[p + 1] {
        p += 1;
    }
    // Longest strictly decreasing suffix starts at `s`.
    let mut s = n - 1;
    while s > 0 && v[s - 1] > v[s] {
        s -= 1;
    }
    // A valid split j needs j <= p and j + 1 >= s.
    let lo = s.saturating_sub(1);
    if lo <= p {
        UnimodalSplit {
            split: Some(p),
            ascent_break: None,
        }
    } else {
        UnimodalSplit {
            split: None,
            ascent_break: Some(p + 1),
        }
    }
}

pub fn strictly_unimodal(v: &[BigInt]) -> bool {
    strict_unimodal_split(v).split.is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn log_concavity() {
        assert!(strictly_log_concave(&v(&[1, 7, 4])));
        assert!(strictly_log_concave(&v(&[1, 4, 1])));
        assert_eq!(log_concavity_violation(&v(&[1, 1, 1])), Some(1));
        assert!(strictly_log_concave(&v(&[5]))); // vacuous
    }

    #[test]
    fn unimodality_splits() {
        assert_eq!(strict_unimodal_split(&v(&[1, 7, 4])).split, Some(1));
        assert_eq!(strict_unimodal_split(&v(&[1, 4, 1])).split, Some(1));
        // Twin plateau across the split is allowed.
        assert_eq!(strict_unimodal_split(&v(&[1, 2, 2, 1])).split, Some(1));
        assert_eq!(strict_unimodal_split(&v(&[1, 1])).split, Some(0));
        // Plateau of length three is not.
        assert!(strict_unimodal_split(&v(&[1, 2, 2, 2, 1])).split.is_none());
        assert!(strict_unimodal_split(&v(&[1, 0, 1])).split.is_none());
        // Monotone sequences are unimodal.
        assert!(strictly_unimodal(&v(&[1, 2, 3])));
        assert!(strictly_unimodal(&v(&[3, 2, 1])));
    }

    #[test]
    fn positive_log_concave_implies_unimodal_on_samples() {
        // Deterministic sample sweep over short positive vectors.
        for a in 1..=4i64 {
            for b in 1..=4 {
                for c in 1..=4 {
                    for d in 1..=4 {
                        let seq = v(&[a, b, c, d]);
                        if strictly_log_concave(&seq) && is_positive(&seq) {
                            assert!(strictly_unimodal(&seq), "{seq:?}");
                        }
                    }
                }
            }
        }
    }
}
