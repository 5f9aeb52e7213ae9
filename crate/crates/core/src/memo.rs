//! Crate-internal memo tables for values that grid sweeps recompute
//! constantly: binomial bases, dilation kernels, Eulerian polynomials and
//! powers of `1 - t`. All cached values are pure data, so sharing them across
//! threads is safe.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::poly::DensePoly;
use crate::tables;

fn cache<K, V>(lock: &'static OnceLock<Mutex<HashMap<K, Arc<V>>>>) -> &'static Mutex<HashMap<K, Arc<V>>>
where
    K: std::hash::Hash + Eq,
{
    lock.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Basis polynomials `C(m + d - i, d)` for `i = 0..=d+1`.
pub(crate) fn binomial_basis_row(d: usize) -> Arc<Vec<DensePoly<BigRational>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<DensePoly<BigRational>>>>>> =
        OnceLock::new();
    let mut map = cache(&CACHE).lock().unwrap();
    map.entry(d)
        .or_insert_with(|| {
            Arc::new(
                (0..=d as i64 + 1)
                    .map(|i| tables::binomial_basis(d, i))
                    .collect(),
            )
        })
        .clone()
}

/// `(1 + t + ... + t^{n-1})^exp`.
pub(crate) fn kernel_power(n: u32, exp: usize) -> Arc<DensePoly<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, usize), Arc<DensePoly<BigInt>>>>> = OnceLock::new();
    let mut map = cache(&CACHE).lock().unwrap();
    map.entry((n, exp))
        .or_insert_with(|| {
            let base = DensePoly::new(vec![BigInt::from(1); n as usize]);
            Arc::new(base.pow(exp))
        })
        .clone()
}

/// `(1 - t)^k`.
pub(crate) fn one_minus_t_pow(k: usize) -> Arc<DensePoly<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DensePoly<BigInt>>>>> = OnceLock::new();
    let mut map = cache(&CACHE).lock().unwrap();
    map.entry(k)
        .or_insert_with(|| {
            let base = DensePoly::new(vec![BigInt::from(1), BigInt::from(-1)]);
            Arc::new(base.pow(k))
        })
        .clone()
}

/// Eulerian polynomial `A_j(t)`.
pub(crate) fn eulerian(j: usize) -> Arc<DensePoly<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DensePoly<BigInt>>>>> = OnceLock::new();
    let mut map = cache(&CACHE).lock().unwrap();
    map.entry(j)
        .or_insert_with(|| Arc::new(tables::eulerian_poly(j)))
        .clone()
}
