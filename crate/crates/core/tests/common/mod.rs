//! Shared helpers for the integration test suites.

use std::path::{Path, PathBuf};

use vlab_core::ehrhart::LatticePolytope;
use vlab_core::series::HVector;

/// Deterministic xorshift64 generator so random corpora are reproducible
/// without an RNG dependency.
pub struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift(seed | 1)
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    /// Uniform-ish value in `lo..=hi`.
    pub fn in_range(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }
}

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../polytopes")
}

/// All bundled polytopes, sorted by file name.
pub fn load_corpus() -> Vec<(String, LatticePolytope)> {
    let mut out = Vec::new();
    let mut entries: Vec<_> = std::fs::read_dir(corpus_dir())
        .expect("bundled polytope corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    entries.sort();
    for path in entries {
        let text = std::fs::read_to_string(&path).unwrap();
        let polytope = LatticePolytope::from_json(&text)
            .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        out.push((
            path.file_stem().unwrap().to_string_lossy().into_owned(),
            polytope,
        ));
    }
    out
}

/// Visit every h-vector with `h_0 = 1`, `h_i in 0..=coeff_max` for
/// `1 <= i <= d`, and `h_{d+1} = 0`.
pub fn for_each_grid_hvector(d: usize, coeff_max: i64, mut f: impl FnMut(&HVector)) {
    let mut coeffs = vec![0i64; d + 1];
    coeffs[0] = 1;
    loop {
        f(&HVector::from_i64(d, &coeffs).unwrap());
        let mut k = 1;
        while k <= d && coeffs[k] == coeff_max {
            coeffs[k] = 0;
            k += 1;
        }
        if k > d {
            return;
        }
        coeffs[k] += 1;
    }
}

/// Collect the grid into a vector (for parallel sweeps).
pub fn grid_hvectors(d: usize, coeff_max: i64) -> Vec<HVector> {
    let mut out = Vec::new();
    for_each_grid_hvector(d, coeff_max, |h| out.push(h.clone()));
    out
}
