//! Reproducible qutrit state samplers.
//!
//! Every stream is driven by `ChaCha8Rng::seed_from_u64(seed)`. Uniform
//! doubles come from `rand`'s 53-bit `Standard` distribution, and Gaussian
//! pairs from the Box-Muller transform of two such uniforms, so a given
//! `(method, seed, count)` always yields bit-identical output.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::physicality::is_physical;
use crate::state::{extract_params, matmul, Complex, HermitianMatrix3, Matrix3, ParamVector};

/// Attempts allowed per accepted rejection sample.
pub const MAX_REJECTION_ATTEMPTS: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleMethod {
    /// Uniform in the box implied by the purity inequality, kept if physical.
    Rejection,
    /// Normalized complex Gaussian ket.
    Pure,
    /// `G G^H / Tr(G G^H)` for a complex Gaussian `G`.
    HilbertSchmidt,
}

impl SampleMethod {
    pub fn name(self) -> &'static str {
        match self {
            SampleMethod::Rejection => "rejection",
            SampleMethod::Pure => "pure",
            SampleMethod::HilbertSchmidt => "hilbert_schmidt",
        }
    }
}

impl fmt::Display for SampleMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SampleMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rejection" => Ok(SampleMethod::Rejection),
            "pure" => Ok(SampleMethod::Pure),
            "hilbert_schmidt" | "hilbert-schmidt" | "hs" => Ok(SampleMethod::HilbertSchmidt),
            other => Err(Error::InvalidConfig(format!(
                "unknown sampling method {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub method: SampleMethod,
    pub seed: u64,
    pub count: usize,
}

/// A single deterministic stream.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn uniform(&mut self, half_width: f64) -> f64 {
        (2.0 * self.rng.gen::<f64>() - 1.0) * half_width
    }

    /// One complex standard normal (real and imaginary parts each N(0, 1)).
    pub fn complex_normal(&mut self) -> Complex {
        // 1 - U keeps the logarithm argument in (0, 1].
        let u1 = 1.0 - self.rng.gen::<f64>();
        let u2 = self.rng.gen::<f64>();
        let r = (-2.0 * u1.ln()).sqrt();
        let (s, c) = (TAU * u2).sin_cos();
        Complex::new(r * c, r * s)
    }

    pub fn next_rejection(&mut self) -> Result<ParamVector> {
        let xy = (2.0f64 / 3.0).sqrt();
        let rest = (1.0f64 / 3.0).sqrt();
        for _ in 0..MAX_REJECTION_ATTEMPTS {
            let p = ParamVector {
                x: self.uniform(xy),
                y: self.uniform(xy),
                a: self.uniform(rest),
                b: self.uniform(rest),
                alpha1: self.uniform(rest),
                beta1: self.uniform(rest),
                alpha2: self.uniform(rest),
                beta2: self.uniform(rest),
            };
            if is_physical(&p)? {
                return Ok(p);
            }
        }
        Err(Error::SamplerStall(MAX_REJECTION_ATTEMPTS))
    }

    pub fn next_pure_ket(&mut self) -> [Complex; 3] {
        let raw = [0; 3].map(|_| self.complex_normal());
        let norm = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        raw.map(|z| z / norm)
    }

    pub fn next_pure(&mut self) -> Result<ParamVector> {
        let psi = self.next_pure_ket();
        let rows: Matrix3 = [0, 1, 2].map(|j| [0, 1, 2].map(|k| psi[j] * psi[k].conj()));
        extract_params(&HermitianMatrix3::try_from_rows(rows)?)
    }

    pub fn next_ginibre(&mut self) -> Matrix3 {
        [0; 3].map(|_| [0; 3].map(|_| self.complex_normal()))
    }

    pub fn next_hilbert_schmidt(&mut self) -> Result<ParamVector> {
        let g = self.next_ginibre();
        let g_dagger: Matrix3 = [0, 1, 2].map(|j| [0, 1, 2].map(|k| g[k][j].conj()));
        let gg = matmul(&g, &g_dagger);
        let trace: f64 = (0..3).map(|i| gg[i][i].re).sum();
        let rows = gg.map(|row| row.map(|z| z / trace));
        extract_params(&HermitianMatrix3::try_from_rows(rows)?)
    }

    pub fn next(&mut self, method: SampleMethod) -> Result<ParamVector> {
        match method {
            SampleMethod::Rejection => self.next_rejection(),
            SampleMethod::Pure => self.next_pure(),
            SampleMethod::HilbertSchmidt => self.next_hilbert_schmidt(),
        }
    }
}

pub fn sample(config: &SamplerConfig) -> Result<Vec<ParamVector>> {
    if config.count == 0 {
        return Err(Error::InvalidConfig("count must be at least 1".into()));
    }
    let mut sampler = Sampler::new(config.seed);
    (0..config.count)
        .map(|_| sampler.next(config.method))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bloch::{bloch_triple, w_vector};
    use crate::physicality::physicality_report;
    use approx::assert_abs_diff_eq;

    fn cfg(method: SampleMethod, seed: u64, count: usize) -> SamplerConfig {
        SamplerConfig {
            method,
            seed,
            count,
        }
    }

    #[test]
    fn rejection_samples_are_physical() {
        for p in sample(&cfg(SampleMethod::Rejection, 1, 100)).unwrap() {
            assert!(physicality_report(&p).unwrap().physical);
        }
    }

    #[test]
    fn pure_samples_saturate() {
        for p in sample(&cfg(SampleMethod::Pure, 7, 200)).unwrap() {
            let r = physicality_report(&p).unwrap();
            assert_abs_diff_eq!(r.purity, 1.0, epsilon = 1e-12);
            let t = bloch_triple(&p).unwrap();
            assert_abs_diff_eq!(t.u.length, 1.0, epsilon = 1e-9);
            assert_abs_diff_eq!(t.v.length, 1.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn pure_w_matches_ket_populations() {
        let mut kets = Sampler::new(11);
        let params = sample(&cfg(SampleMethod::Pure, 11, 50)).unwrap();
        for p in params {
            let psi = kets.next_pure_ket();
            let w = w_vector(&p).unwrap();
            for (sq, z) in w.squares.iter().zip(psi) {
                assert_abs_diff_eq!(*sq, z.norm_sqr(), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn hilbert_schmidt_samples_are_states() {
        for p in sample(&cfg(SampleMethod::HilbertSchmidt, 3, 200)).unwrap() {
            let r = physicality_report(&p).unwrap();
            assert!(r.eigenvalues.iter().all(|&l| l >= -1e-12));
            assert_abs_diff_eq!(r.eigenvalues.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
            assert!(r.physical);
        }
    }

    #[test]
    fn streams_are_deterministic() {
        for method in [
            SampleMethod::Rejection,
            SampleMethod::Pure,
            SampleMethod::HilbertSchmidt,
        ] {
            let a = sample(&cfg(method, 42, 20)).unwrap();
            let b = sample(&cfg(method, 42, 20)).unwrap();
            let bits = |v: &[ParamVector]| -> Vec<u64> {
                v.iter()
                    .flat_map(|p| p.to_array().map(f64::to_bits))
                    .collect()
            };
            assert_eq!(bits(&a), bits(&b));
            assert_ne!(bits(&a), bits(&sample(&cfg(method, 43, 20)).unwrap()));
        }
    }

    #[test]
    fn zero_count_is_rejected() {
        assert!(matches!(
            sample(&cfg(SampleMethod::Pure, 0, 0)),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn method_names_parse() {
        for m in [
            SampleMethod::Rejection,
            SampleMethod::Pure,
            SampleMethod::HilbertSchmidt,
        ] {
            assert_eq!(m.name().parse::<SampleMethod>().unwrap(), m);
        }
        assert!("bures".parse::<SampleMethod>().is_err());
    }
}
