//! A halting machine that rotates a system vector by `α` about y while a
//! halt qubit is flipped by σ_x, run in both pictures.
//!
//! With the state vector as input the two pictures agree on every
//! expectation. With the system's basis vector as input, the Schrödinger run
//! rotates it forward to `(sin α, 0, cos α)` and the Heisenberg run rotates it
//! backward to `(−sin α, 0, cos α)`, while the halt qubit flips in both. The
//! two outputs differ by the great-circle angle `arccos(cos 2α)`, which is
//! zero only when `α` is a multiple of π.

use serde::Serialize;

use crate::engine::{evolve_basis, evolve_state, expectation, Picture};
use crate::error::{Error, Result};
use crate::pauli::{rotation, Axis, BlochVector, Unitary2, INPUT_TOL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InputSelector {
    /// The system state `v_s` is the machine's input.
    StateInput,
    /// The system's own basis vector `e_s` is the machine's input.
    BasisInput,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HaltingMachineState {
    system: BlochVector,
    system_basis: BlochVector,
    halt: BlochVector,
    halt_basis: BlochVector,
    halted: bool,
}

impl HaltingMachineState {
    /// All four vectors at `(0, 0, 1)`, not halted.
    pub fn initial() -> Self {
        Self {
            system: BlochVector::NORTH,
            system_basis: BlochVector::NORTH,
            halt: BlochVector::NORTH,
            halt_basis: BlochVector::NORTH,
            halted: false,
        }
    }

    pub fn is_initial(&self) -> bool {
        *self == Self::initial()
    }

    pub fn system(&self) -> BlochVector {
        self.system
    }

    pub fn system_basis(&self) -> BlochVector {
        self.system_basis
    }

    pub fn halt(&self) -> BlochVector {
        self.halt
    }

    pub fn halt_basis(&self) -> BlochVector {
        self.halt_basis
    }

    pub fn halted(&self) -> bool {
        self.halted
    }

    /// `e_h · v_h`: +1 before the flip, −1 after.
    pub fn halt_expectation(&self) -> f64 {
        self.halt_basis.dot(&self.halt)
    }

    /// `e_s · v_s`.
    pub fn system_expectation(&self) -> f64 {
        self.system_basis.dot(&self.system)
    }
}

fn is_flipped(halt_basis: &BlochVector, halt: &BlochVector) -> Result<bool> {
    Ok((expectation(halt_basis, halt)? + 1.0).abs() <= INPUT_TOL)
}

/// One run of the machine on a fresh initial configuration.
pub fn step_machine(
    m: &HaltingMachineState,
    alpha: f64,
    picture: Picture,
    input: InputSelector,
) -> Result<HaltingMachineState> {
    if !m.is_initial() {
        return Err(Error::MachineNotInitial);
    }
    let program = rotation(Axis::Y, alpha)?;
    let flip = Unitary2::pauli_gate(Axis::X);
    let mut next = *m;

    match (input, picture) {
        (InputSelector::StateInput, Picture::Schrodinger) => {
            next.system = evolve_state(&m.system, &program)?;
            next.halt = evolve_state(&m.halt, &flip)?;
        }
        (InputSelector::StateInput, Picture::Heisenberg) => {
            next.system_basis = evolve_basis(&m.system_basis, &program)?;
            next.halt_basis = evolve_basis(&m.halt_basis, &flip)?;
        }
        // The basis vector is what the machine evolves, so it takes the
        // forward rotation here, the same as a state would.
        (InputSelector::BasisInput, Picture::Schrodinger) => {
            next.system_basis = evolve_state(&m.system_basis, &program)?;
            next.halt = evolve_state(&m.halt, &flip)?;
        }
        (InputSelector::BasisInput, Picture::Heisenberg) => {
            next.system_basis = evolve_basis(&m.system_basis, &program)?;
            next.halt_basis = evolve_basis(&m.halt_basis, &flip)?;
        }
    }

    next.halted = is_flipped(&next.halt_basis, &next.halt)?;
    Ok(next)
}

/// Great-circle angle between two unit vectors, in `[0, π]`.
///
/// Evaluated as `atan2(|a × b|, a · b)`, which equals the clamped
/// `arccos(a · b)` but keeps full precision near 0 and π.
pub fn divergence(a: &BlochVector, b: &BlochVector) -> Result<f64> {
    let a = a.ensure_unit()?;
    let b = b.ensure_unit()?;
    Ok(a.cross(&b).norm().atan2(a.dot(&b)))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SweepRecord {
    pub alpha: f64,
    pub schrodinger_output: BlochVector,
    pub heisenberg_output: BlochVector,
    pub divergence_angle: f64,
    pub halted_schrodinger: bool,
    pub halted_heisenberg: bool,
}

/// Basis-input runs in both pictures at one angle.
pub fn contradiction_at(alpha: f64) -> Result<SweepRecord> {
    let fresh = HaltingMachineState::initial();
    let s = step_machine(
        &fresh,
        alpha,
        Picture::Schrodinger,
        InputSelector::BasisInput,
    )?;
    let h = step_machine(
        &fresh,
        alpha,
        Picture::Heisenberg,
        InputSelector::BasisInput,
    )?;
    Ok(SweepRecord {
        alpha,
        schrodinger_output: s.system_basis,
        heisenberg_output: h.system_basis,
        divergence_angle: divergence(&s.system_basis, &h.system_basis)?,
        halted_schrodinger: s.halted,
        halted_heisenberg: h.halted,
    })
}

/// One [`SweepRecord`] per angle, each from fresh machines, in input order.
pub fn run_contradiction_sweep(alphas: &[f64]) -> Result<Vec<SweepRecord>> {
    alphas.iter().map(|&a| contradiction_at(a)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConsistentScenarioReport {
    pub schrodinger_expectation: f64,
    pub heisenberg_expectation: f64,
    pub both_halted: bool,
}

/// State-input runs in both pictures: `e_s·(U v_s U†)` against `(U† e_s U)·v_s`.
pub fn run_consistent_scenario(alpha: f64) -> Result<ConsistentScenarioReport> {
    let fresh = HaltingMachineState::initial();
    let s = step_machine(
        &fresh,
        alpha,
        Picture::Schrodinger,
        InputSelector::StateInput,
    )?;
    let h = step_machine(
        &fresh,
        alpha,
        Picture::Heisenberg,
        InputSelector::StateInput,
    )?;
    Ok(ConsistentScenarioReport {
        schrodinger_expectation: s.system_expectation(),
        heisenberg_expectation: h.system_expectation(),
        both_halted: s.halted && h.halted,
    })
}
