use std::path::PathBuf;

use xipos_core::ZeroTable64;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn zeros100() -> ZeroTable64 {
    ZeroTable64::from_path(fixture_path("zeros100.txt")).expect("zeros100 fixture loads")
}

#[allow(dead_code)] // used by the acceptance target, not every test file
pub fn zeros1000() -> ZeroTable64 {
    ZeroTable64::from_path(fixture_path("zeros1000.txt")).expect("zeros1000 fixture loads")
}

/// Deterministic uniform sampler for test point generation.
pub struct Sampler(u64);

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler(seed.max(1))
    }

    fn next(&mut self) -> u64 {
        // splitmix64
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from [lo, hi).
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        let u = (self.next() >> 11) as f64 / (1u64 << 53) as f64;
        lo + (hi - lo) * u
    }
}
