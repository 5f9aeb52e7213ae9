//! Desk-scale lattice polytopes: facet enumeration by brute force over
//! vertex subsets, exact lattice-point counts over the integer bounding box,
//! delta-vectors by finite-difference interpolation, and the consistency
//! check `delta_{nP} = U_n delta_P`.
//!
//! Everything is integer arithmetic on `i64` with overflow checks; ambient
//! dimension is capped at 4 and point scans carry a candidate budget.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::hecke::un_definition;
use crate::poly::DensePoly;
use crate::series::{g_to_h, GPolynomial, HVector};
use crate::tables::factorial;

pub const MAX_DIM: usize = 4;

/// Default candidate budget for bounding-box scans.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A facet inequality `normal . x <= offset` with primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

/// Full-dimensional lattice polytope given by vertices, with derived facet
/// inequalities that exactly cut out the convex hull.
#[derive(Debug, Clone)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
    facets: Vec<Facet>,
}

#[derive(Deserialize)]
struct PolytopeFile {
    vertices: Vec<Vec<i64>>,
}

fn checked_dot(a: &[i64], b: &[i64]) -> Result<i64> {
    let mut acc: i64 = 0;
    for (x, y) in a.iter().zip(b) {
        acc = x
            .checked_mul(*y)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// Rank of the rational row span, by exact Gaussian elimination.
fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let lead = m[rank][c].clone();
        for r in rank + 1..m.len() {
            if m[r][c].is_zero() {
                continue;
            }
            let factor = &m[r][c] / &lead;
            for cc in c..cols {
                let sub = &factor * &m[rank][cc];
                m[r][cc] -= sub;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Generalized cross product: integer normal of the hyperplane spanned by
/// `k - 1` row vectors in dimension `k`, via cofactor expansion. Zero vector
/// when the rows are dependent.
fn hyperplane_normal(rows: &[Vec<i64>], k: usize) -> Result<Vec<i64>> {
    fn det(m: &[Vec<i64>]) -> Result<i64> {
        match m.len() {
            0 => Ok(1),
            1 => Ok(m[0][0]),
            2 => m[0][0]
                .checked_mul(m[1][1])
                .and_then(|a| m[0][1].checked_mul(m[1][0]).map(|b| (a, b)))
                .and_then(|(a, b)| a.checked_sub(b))
                .ok_or(Error::Overflow),
            3 => {
                let mut acc: i64 = 0;
                for j in 0..3 {
                    let minor = [
                        [m[1][(j + 1) % 3], m[1][(j + 2) % 3]],
                        [m[2][(j + 1) % 3], m[2][(j + 2) % 3]],
                    ];
                    let sub = minor[0][0]
                        .checked_mul(minor[1][1])
                        .and_then(|a| minor[0][1].checked_mul(minor[1][0]).map(|b| (a, b)))
                        .and_then(|(a, b)| a.checked_sub(b))
                        .ok_or(Error::Overflow)?;
                    acc = m[0][j]
                        .checked_mul(sub)
                        .and_then(|p| acc.checked_add(p))
                        .ok_or(Error::Overflow)?;
                }
                Ok(acc)
            }
            _ => unreachable!("dimension capped at 4"),
        }
    }
    let mut normal = Vec::with_capacity(k);
    for j in 0..k {
        let minor: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let d = det(&minor)?;
        normal.push(if j % 2 == 0 { d } else { -d });
    }
    Ok(normal)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl LatticePolytope {
    /// Ingest a vertex list. Facet inequalities come from exhaustive
    /// enumeration of hyperplanes through `k` affinely independent vertices,
    /// keeping supporting ones with primitive integer normals.
    pub fn from_vertices(vertices: Vec<Vec<i64>>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidInput("need at least 2 vertices".into()));
        }
        let k = vertices[0].len();
        if k == 0 {
            return Err(Error::InvalidInput("vertices must have coordinates".into()));
        }
        if k > MAX_DIM {
            return Err(Error::DimensionTooLarge { dim: k, max: MAX_DIM });
        }
        if vertices.iter().any(|v| v.len() != k) {
            return Err(Error::InvalidInput("vertex list must be rectangular".into()));
        }

        let edges: Vec<Vec<i64>> = vertices[1..]
            .iter()
            .map(|v| (0..k).map(|j| v[j] - vertices[0][j]).collect())
            .collect();
        if rank(&edges) != k {
            return Err(Error::NotFullDimensional);
        }

        let n = vertices.len();
        let mut facets: Vec<Facet> = Vec::new();
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            // Hyperplane through the chosen k vertices, if affinely
            // independent; keep it when it supports the whole vertex set.
            let base = &vertices[subset[0]];
            let rows: Vec<Vec<i64>> = subset[1..]
                .iter()
                .map(|&i| (0..k).map(|j| vertices[i][j] - base[j]).collect())
                .collect();
            let normal = hyperplane_normal(&rows, k)?;
            if normal.iter().any(|&c| c != 0) {
                let offset = checked_dot(&normal, base)?;
                let mut side_le = true;
                let mut side_ge = true;
                for v in &vertices {
                    let d = checked_dot(&normal, v)?;
                    side_le &= d <= offset;
                    side_ge &= d >= offset;
                }
                let oriented = if side_le {
                    Some((normal.clone(), offset))
                } else if side_ge {
                    Some((normal.iter().map(|&c| -c).collect(), -offset))
                } else {
                    None
                };
                if let Some((normal, offset)) = oriented {
                    let g = normal.iter().fold(0i64, |acc, &c| gcd(acc, c));
                    debug_assert!(g > 0 && offset % g == 0);
                    let facet = Facet {
                        normal: normal.iter().map(|&c| c / g).collect(),
                        offset: offset / g,
                    };
                    if !facets.contains(&facet) {
                        facets.push(facet);
                    }
                }
            }

            // Next k-subset in lexicographic order.
            let mut advanced = false;
            for i in (0..k).rev() {
                if subset[i] < i + n - k {
                    subset[i] += 1;
                    for j in i + 1..k {
                        subset[j] = subset[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
        facets.sort();
        Ok(LatticePolytope {
            dim: k,
            vertices,
            facets,
        })
    }

    /// Parse the JSON schema `{"vertices": [[int, ...], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: PolytopeFile = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("polytope JSON: {e}")))?;
        LatticePolytope::from_vertices(file.vertices)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// The dilate `n * P`.
    pub fn scale(&self, n: u32) -> Result<Self> {
        let n = n as i64;
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|&c| c.checked_mul(n).ok_or(Error::Overflow))
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        // Facets scale with the dilate; reuse them rather than re-enumerating.
        let facets = self
            .facets
            .iter()
            .map(|f| {
                Ok(Facet {
                    normal: f.normal.clone(),
                    offset: f.offset.checked_mul(n).ok_or(Error::Overflow)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePolytope {
            dim: self.dim,
            vertices,
            facets,
        })
    }

    fn bounding_box(&self, m: u32) -> Result<Vec<(i64, i64)>> {
        let m = m as i64;
        (0..self.dim)
            .map(|j| {
                let lo = self.vertices.iter().map(|v| v[j]).min().unwrap();
                let hi = self.vertices.iter().map(|v| v[j]).max().unwrap();
                Ok((
                    lo.checked_mul(m).ok_or(Error::Overflow)?,
                    hi.checked_mul(m).ok_or(Error::Overflow)?,
                ))
            })
            .collect()
    }

    fn box_count(bbox: &[(i64, i64)]) -> u64 {
        bbox.iter()
            .map(|&(lo, hi)| (hi - lo + 1) as u64)
            .try_fold(1u64, |acc, w| acc.checked_mul(w))
            .unwrap_or(u64::MAX)
    }

    fn inside(&self, point: &[i64], m: i64) -> Result<bool> {
        for f in &self.facets {
            let lhs = checked_dot(&f.normal, point)?;
            let rhs = f.offset.checked_mul(m).ok_or(Error::Overflow)?;
            if lhs > rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn on_boundary(&self, point: &[i64], m: i64) -> Result<bool> {
        let mut on = false;
        for f in &self.facets {
            let lhs = checked_dot(&f.normal, point)?;
            let rhs = f.offset.checked_mul(m).ok_or(Error::Overflow)?;
            if lhs > rhs {
                return Ok(false);
            }
            on |= lhs == rhs;
        }
        Ok(on)
    }

    /// `#(mP intersect Z^k)` by scanning the integer bounding box of `mP`.
    /// The scan is partitioned over the first coordinate; the result is an
    /// exact sum independent of the partitioning.
    pub fn count_points(&self, m: u32) -> Result<BigInt> {
        self.count_points_with_budget(m, DEFAULT_BUDGET)
    }

    pub fn count_points_with_budget(&self, m: u32, budget: u64) -> Result<BigInt> {
        let bbox = self.bounding_box(m)?;
        if Self::box_count(&bbox) > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        let counts: Vec<Result<u64>> = (bbox[0].0..=bbox[0].1)
            .into_par_iter()
            .map(|x0| {
                let mut count = 0u64;
                let mut point = vec![0i64; self.dim];
                point[0] = x0;
                self.scan_tail(&mut point, 1, m as i64, &bbox, &mut count)?;
                Ok(count)
            })
            .collect();
        let mut total = BigInt::zero();
        for c in counts {
            total += BigInt::from(c?);
        }
        Ok(total)
    }

    fn scan_tail(
        &self,
        point: &mut Vec<i64>,
        coord: usize,
        m: i64,
        bbox: &[(i64, i64)],
        count: &mut u64,
    ) -> Result<()> {
        if coord == self.dim {
            if self.inside(point, m)? {
                *count += 1;
            }
            return Ok(());
        }
        for x in bbox[coord].0..=bbox[coord].1 {
            point[coord] = x;
            self.scan_tail(point, coord + 1, m, bbox, count)?;
        }
        Ok(())
    }

    /// Number of lattice points on the boundary of `mP`.
    pub fn count_boundary_points(&self, m: u32) -> Result<BigInt> {
        let bbox = self.bounding_box(m)?;
        if Self::box_count(&bbox) > DEFAULT_BUDGET {
            return Err(Error::BudgetExceeded {
                budget: DEFAULT_BUDGET,
            });
        }
        let mut point = vec![0i64; self.dim];
        let mut count = 0u64;
        self.scan_boundary(&mut point, 0, m as i64, &bbox, &mut count)?;
        Ok(BigInt::from(count))
    }

    fn scan_boundary(
        &self,
        point: &mut Vec<i64>,
        coord: usize,
        m: i64,
        bbox: &[(i64, i64)],
        count: &mut u64,
    ) -> Result<()> {
        if coord == self.dim {
            if self.on_boundary(point, m)? {
                *count += 1;
            }
            return Ok(());
        }
        for x in bbox[coord].0..=bbox[coord].1 {
            point[coord] = x;
            self.scan_boundary(point, coord + 1, m, bbox, count)?;
        }
        Ok(())
    }
}

/// Nonnegative integer coefficients `(delta_0, ..., delta_d)` of the Ehrhart
/// series numerator, with `delta_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaVector {
    pub d: usize,
    delta: Vec<BigInt>,
}

impl DeltaVector {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.delta
    }

    pub fn to_hvector(&self) -> Result<HVector> {
        HVector::new(self.d, self.delta.clone())
    }

    /// Normalized volume `sum delta_i = d! * leading coefficient`.
    pub fn normalized_volume(&self) -> BigInt {
        self.delta.iter().sum()
    }
}

impl std::fmt::Display for DeltaVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, c) in self.delta.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Interpolate the Ehrhart polynomial from exact counts at `m = 0..=d` by
/// Newton forward differences.
pub fn ehrhart_polynomial(p: &LatticePolytope) -> Result<GPolynomial> {
    ehrhart_polynomial_with_budget(p, DEFAULT_BUDGET)
}

pub fn ehrhart_polynomial_with_budget(p: &LatticePolytope, budget: u64) -> Result<GPolynomial> {
    let d = p.dim();
    let counts: Vec<BigInt> = (0..=d as u32)
        .map(|m| p.count_points_with_budget(m, budget))
        .collect::<Result<_>>()?;
    // Forward differences at 0.
    let mut diffs = counts;
    let mut newton: Vec<BigInt> = Vec::with_capacity(d + 1);
    for _ in 0..=d {
        newton.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    // f(m) = sum_j newton[j] * C(m, j).
    let mut acc: DensePoly<BigRational> = DensePoly::zero();
    let mut basis: DensePoly<BigRational> = DensePoly::one(); // C(m, 0)
    for (j, coef) in newton.iter().enumerate() {
        if j > 0 {
            // C(m, j) = C(m, j-1) * (m - j + 1) / j
            let linear = DensePoly::new(vec![
                BigRational::new(BigInt::from(1i64 - j as i64), BigInt::from(j as i64)),
                BigRational::new(BigInt::one(), BigInt::from(j as i64)),
            ]);
            basis = basis.mul(&linear);
        }
        acc = acc.add(&basis.scale(&BigRational::from_integer(coef.clone())));
    }
    GPolynomial::new(d, acc)
}

/// The delta-vector of `P`: interpolate the Ehrhart polynomial and invert
/// the series transform. Entries must come out as nonnegative integers.
pub fn delta_vector(p: &LatticePolytope) -> Result<DeltaVector> {
    delta_vector_with_budget(p, DEFAULT_BUDGET)
}

pub fn delta_vector_with_budget(p: &LatticePolytope, budget: u64) -> Result<DeltaVector> {
    let d = p.dim();
    let g = ehrhart_polynomial_with_budget(p, budget)?;
    let h = g_to_h(&g, d)?;
    for (i, c) in h.coeffs()[..=d].iter().enumerate() {
        if c.is_negative() {
            return Err(Error::NegativeDelta {
                index: i,
                value: c.to_string(),
            });
        }
    }
    debug_assert!(h.coeff(d + 1).is_zero());
    debug_assert_eq!(h.coeff(0), BigInt::one());
    Ok(DeltaVector {
        d,
        delta: h.coeffs()[..=d].to_vec(),
    })
}

/// `U_n delta_P = delta_{nP}`: the operator result against direct counting.
pub fn dilation_consistency(p: &LatticePolytope, n: u32) -> Result<bool> {
    let delta = delta_vector(p)?;
    let lhs = un_definition(&delta.to_hvector()?, n)?;
    let rhs = delta_vector(&p.scale(n)?)?;
    Ok(lhs.coeffs() == rhs.coeffs())
}

/// For 2-dimensional polytopes: `h_1(n) - h_2(n)` equals the number of
/// boundary lattice points of `nP` minus 3.
pub fn boundary_identity_d2(p: &LatticePolytope, n: u32) -> Result<bool> {
    if p.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            got: p.dim(),
        });
    }
    let delta = delta_vector(p)?;
    let un = un_definition(&delta.to_hvector()?, n)?;
    let boundary = p.count_boundary_points(n)?;
    Ok(un.coeff(1) - un.coeff(2) == boundary - BigInt::from(3))
}

/// Over-determination check: counts at `m = d+1 ..= 2d+2` match the
/// interpolated polynomial.
pub fn interpolation_consistent(p: &LatticePolytope) -> Result<bool> {
    let g = ehrhart_polynomial(p)?;
    for m in p.dim() as u32 + 1..=2 * p.dim() as u32 + 2 {
        let direct = p.count_points(m)?;
        if g.eval_int(&BigInt::from(m)) != BigRational::from_integer(direct) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `sum delta_i = d! * g_d` for the interpolated polynomial.
pub fn volume_identity(p: &LatticePolytope) -> Result<bool> {
    let g = ehrhart_polynomial(p)?;
    let delta = delta_vector(p)?;
    let lhs = BigRational::from_integer(factorial(p.dim())) * g.coeff(p.dim());
    Ok(lhs == BigRational::from_integer(delta.normalized_volume()))
}
