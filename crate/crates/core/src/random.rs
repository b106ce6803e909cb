//! Seeded sampling of Bloch vectors and unitaries.
//!
//! A seed maps to a ChaCha8 stream via `ChaCha8Rng::seed_from_u64(seed)`.
//! Every sample draws a fixed number of `f64`s from `Rng::gen` in a fixed
//! order, so a seed reproduces the same sequence of trials on any platform:
//!
//! - unit vector: `z ~ U[-1, 1)`, `φ ~ U[0, 2π)`, giving
//!   `(√(1-z²) cos φ, √(1-z²) sin φ, z)` (uniform on the sphere);
//! - unitary: a unit axis `n`, an angle `θ ~ U[0, 2π)` and a global phase
//!   `γ ~ U[0, 2π)`, giving `e^{iγ} (cos(θ/2) 𝟙 − i sin(θ/2) n·σ)`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::pauli::{pauli, Axis, BlochVector, Complex2x2, Unitary2};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn seeded(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn unit_vector(&mut self) -> BlochVector {
        let z: f64 = self.rng.gen::<f64>() * 2.0 - 1.0;
        let phi: f64 = self.rng.gen::<f64>() * TAU;
        let r = (1.0 - z * z).max(0.0).sqrt();
        BlochVector::new(r * phi.cos(), r * phi.sin(), z)
    }

    pub fn angle(&mut self) -> f64 {
        self.rng.gen::<f64>() * TAU
    }

    /// A random axis-angle unitary with a random global phase.
    pub fn unitary(&mut self) -> Unitary2 {
        let axis = self.unit_vector();
        let theta = self.angle();
        let gamma = self.angle();
        let (s, c) = (0.5 * theta).sin_cos();
        let n_sigma = Axis::ALL
            .iter()
            .map(|&a| pauli(a).scale(axis.component(a).into()))
            .fold(Complex2x2::zero(), |acc, m| acc + m);
        let su2 = Complex2x2::identity().scale(c.into()) - n_sigma.scale(Complex64::new(0.0, s));
        Unitary2::new(su2.scale(Complex64::from_polar(1.0, gamma)))
            .expect("axis-angle construction is unitary")
    }
}
