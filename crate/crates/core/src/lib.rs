//! Single-qubit dynamics on the Bloch sphere in the Schrödinger and
//! Heisenberg pictures.
//!
//! - [`pauli`]: complex 2×2 algebra, rotations and the SU(2) → SO(3) adjoint map
//! - [`engine`]: dual-picture evolution of a (state, basis) pair
//! - [`halting`]: the halting machine and the basis-input divergence sweep
//! - [`cli`]: the `bloch-pictures` command-line tool
//!
//! ```
//! use bloch_pictures::{evolve_basis, evolve_state, rotation, Axis, BlochVector};
//!
//! let alpha = 0.4_f64;
//! let u = rotation(Axis::Y, alpha).unwrap();
//! let v = evolve_state(&BlochVector::NORTH, &u).unwrap();
//! let e = evolve_basis(&BlochVector::NORTH, &u).unwrap();
//! assert!((v.x - alpha.sin()).abs() < 1e-12);
//! assert!((e.x + alpha.sin()).abs() < 1e-12);
//! // same expectation either way
//! assert!((BlochVector::NORTH.dot(&v) - e.dot(&BlochVector::NORTH)).abs() < 1e-12);
//! ```

pub mod cli;
pub mod engine;
pub mod error;
pub mod halting;
pub mod output;
pub mod pauli;
pub mod random;

pub use engine::{
    check_picture_consistency, evolve_basis, evolve_frame, evolve_sequence, evolve_state,
    expectation, ConsistencyReport, EvolutionTrace, LabeledGate, Picture, QubitFrame,
};
pub use error::{Error, Result};
pub use halting::{
    divergence, run_consistent_scenario, run_contradiction_sweep, step_machine,
    ConsistentScenarioReport, HaltingMachineState, InputSelector, SweepRecord,
};
pub use pauli::{
    adjoint_of, bloch_from_angles, bloch_to_density, compose, density_to_bloch, pauli, rotation,
    Axis, BlochVector, Complex2x2, DensityMatrix, Rotation3, Unitary2,
};
