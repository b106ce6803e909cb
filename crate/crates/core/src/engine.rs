//! Dual-picture evolution of a (state, basis) pair.
//!
//! In the Schrödinger picture the state rotates by the adjoint rotation `R`
//! of the gate and the basis stays put. In the Heisenberg picture the state
//! stays put and the basis rotates by `Rᵀ = R⁻¹`. Either way the expectation
//! `e·v` is the same.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pauli::{BlochVector, Rotation3, Unitary2};

/// Default tolerance for comparing expectations across pictures.
pub const CONSISTENCY_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Picture {
    Schrodinger,
    Heisenberg,
}

impl Picture {
    pub const BOTH: [Picture; 2] = [Picture::Schrodinger, Picture::Heisenberg];

    pub fn label(self) -> &'static str {
        match self {
            Picture::Schrodinger => "schrodinger",
            Picture::Heisenberg => "heisenberg",
        }
    }
}

impl fmt::Display for Picture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Picture {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "schrodinger" | "schrödinger" | "s" => Ok(Picture::Schrodinger),
            "heisenberg" | "h" => Ok(Picture::Heisenberg),
            other => Err(format!(
                "unknown picture `{other}` (expected schrodinger or heisenberg)"
            )),
        }
    }
}

/// A state vector together with the observable direction it is measured against.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QubitFrame {
    state: BlochVector,
    basis: BlochVector,
}

impl QubitFrame {
    pub fn new(state: BlochVector, basis: BlochVector) -> Result<Self> {
        Ok(Self {
            state: state.ensure_unit()?,
            basis: basis.ensure_unit()?,
        })
    }

    /// Both vectors at the north pole `(0, 0, 1)`.
    pub fn north() -> Self {
        Self {
            state: BlochVector::NORTH,
            basis: BlochVector::NORTH,
        }
    }

    pub fn state(&self) -> BlochVector {
        self.state
    }

    pub fn basis(&self) -> BlochVector {
        self.basis
    }

    pub fn expectation(&self) -> f64 {
        self.basis.dot(&self.state)
    }
}

/// `U v U†` on a Bloch vector.
pub fn evolve_state(v: &BlochVector, u: &Unitary2) -> Result<BlochVector> {
    let v = v.ensure_unit()?;
    Ok(u.adjoint_rotation().apply(&v))
}

/// `U† e U` on an observable direction: the inverse rotation.
pub fn evolve_basis(e: &BlochVector, u: &Unitary2) -> Result<BlochVector> {
    let e = e.ensure_unit()?;
    Ok(u.adjoint_rotation().transpose().apply(&e))
}

/// `e·v`, unclamped.
pub fn expectation(e: &BlochVector, v: &BlochVector) -> Result<f64> {
    Ok(e.ensure_unit()?.dot(&v.ensure_unit()?))
}

pub fn evolve_frame(frame: &QubitFrame, u: &Unitary2, picture: Picture) -> QubitFrame {
    let r = u.adjoint_rotation();
    match picture {
        Picture::Schrodinger => QubitFrame {
            state: r.apply(&frame.state),
            basis: frame.basis,
        },
        Picture::Heisenberg => QubitFrame {
            state: frame.state,
            basis: r.transpose().apply(&frame.basis),
        },
    }
}

/// Runs `gates` in chronological order and returns the frame after each one.
///
/// For the Heisenberg picture the observable after `k` gates is
/// `(R_k ⋯ R_1)ᵀ e = R_1ᵀ ⋯ R_kᵀ e`. The newest gate sits innermost, next to
/// the original observable, so the running basis is rebuilt from the
/// accumulated rotation rather than rotated again by `R_kᵀ`.
fn frames_along<'a, I>(
    frame: QubitFrame,
    gates: I,
    picture: Picture,
) -> impl Iterator<Item = QubitFrame> + 'a
where
    I: Iterator<Item = &'a Unitary2> + 'a,
{
    let mut accumulated = Rotation3::identity();
    gates.map(move |u| {
        accumulated = *u.adjoint_rotation() * accumulated;
        match picture {
            Picture::Schrodinger => QubitFrame {
                state: accumulated.apply(&frame.state),
                basis: frame.basis,
            },
            Picture::Heisenberg => QubitFrame {
                state: frame.state,
                basis: accumulated.transpose().apply(&frame.basis),
            },
        }
    })
}

/// Final frame after `gates` are applied in order.
pub fn evolve_sequence(frame: &QubitFrame, gates: &[Unitary2], picture: Picture) -> QubitFrame {
    frames_along(*frame, gates.iter(), picture)
        .last()
        .unwrap_or(*frame)
}

#[derive(Clone, Debug, PartialEq)]
pub struct LabeledGate {
    pub label: String,
    pub gate: Unitary2,
}

impl LabeledGate {
    pub fn new(label: impl Into<String>, gate: Unitary2) -> Self {
        Self {
            label: label.into(),
            gate,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceStep {
    pub label: String,
    pub picture: Picture,
    pub state: BlochVector,
    pub basis: BlochVector,
    pub expectation: f64,
}

/// Step-by-step record of one run in one picture.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvolutionTrace {
    pub initial: QubitFrame,
    pub steps: Vec<TraceStep>,
}

impl EvolutionTrace {
    pub fn run(frame: &QubitFrame, gates: &[LabeledGate], picture: Picture) -> Self {
        let steps = frames_along(*frame, gates.iter().map(|g| &g.gate), picture)
            .zip(gates)
            .map(|(after, g)| TraceStep {
                label: g.label.clone(),
                picture,
                state: after.state,
                basis: after.basis,
                expectation: after.expectation(),
            })
            .collect();
        Self {
            initial: *frame,
            steps,
        }
    }

    pub fn final_frame(&self) -> QubitFrame {
        self.steps
            .last()
            .map(|s| QubitFrame {
                state: s.state,
                basis: s.basis,
            })
            .unwrap_or(self.initial)
    }

    pub fn final_expectation(&self) -> f64 {
        self.final_frame().expectation()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConsistencyReport {
    pub schrodinger_expectation: f64,
    pub heisenberg_expectation: f64,
    pub deviation: f64,
    pub consistent: bool,
}

/// Runs `gates` from `frame` in each picture independently and compares the
/// final expectations.
pub fn check_picture_consistency(
    frame: &QubitFrame,
    gates: &[Unitary2],
    tol: f64,
) -> Result<ConsistencyReport> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let s = evolve_sequence(frame, gates, Picture::Schrodinger).expectation();
    let h = evolve_sequence(frame, gates, Picture::Heisenberg).expectation();
    let deviation = (s - h).abs();
    Ok(ConsistencyReport {
        schrodinger_expectation: s,
        heisenberg_expectation: h,
        deviation,
        consistent: deviation <= tol,
    })
}
