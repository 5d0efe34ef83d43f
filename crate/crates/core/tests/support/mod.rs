//! Test-side helpers shared by the integration targets.
#![allow(dead_code)]

pub mod oracle;

use homhopf::linalg::{Field, LinMap, Scalar};

/// Small deterministic generator for exact test data.
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Lcg {
        Lcg(seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407))
    }

    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    /// Uniform in `lo..=hi`.
    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// `m` with `delta` added to entry `(r, c)`.
pub fn bump(m: &LinMap, r: usize, c: usize, delta: i64) -> LinMap {
    let v = m.get(r, c) + &m.field().from_i64(delta);
    m.with_entry(r, c, v)
}

pub fn int_matrix(f: Field, rows: usize, cols: usize, g: &mut Lcg, lo: i64, hi: i64) -> LinMap {
    let mut m = LinMap::zeros(f, rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, f.from_i64(g.int(lo, hi)));
        }
    }
    m
}

pub fn scalars(f: Field, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| f.from_i64(x)).collect()
}
