//! Deterministic random generator for reproducible experiments.
//!
//! A 64-bit splitmix state drives every random draw in the crate, so a run is
//! a pure function of its seed. Retry seeds (used when a decomposition has to
//! resample) come from re-mixing the seed through the same step function.

use num_complex::Complex64;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Splitmix-style deterministic generator with Box-Muller normal sampling.
#[derive(Debug, Clone)]
pub struct DetRng {
    state: u64,
    spare_normal: Option<f64>,
}

impl DetRng {
    pub fn new(seed: u64) -> Self {
        DetRng { state: seed, spare_normal: None }
    }

    /// Derive an independent seed from `seed`, used for resampling retries.
    pub fn derive_seed(seed: u64) -> u64 {
        mix(seed.wrapping_add(GOLDEN))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform in the half-open interval (0, 1].
    pub fn next_f64(&mut self) -> f64 {
        (((self.next_u64() >> 11) + 1) as f64) * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal via Box-Muller.
    pub fn next_normal(&mut self) -> f64 {
        if let Some(z) = self.spare_normal.take() {
            return z;
        }
        let u1 = self.next_f64();
        let u2 = self.next_f64();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = std::f64::consts::TAU * u2;
        self.spare_normal = Some(r * theta.sin());
        r * theta.cos()
    }

    /// Complex number with independent standard normal real and imaginary parts.
    pub fn next_complex_normal(&mut self) -> Complex64 {
        Complex64::new(self.next_normal(), self.next_normal())
    }
}
