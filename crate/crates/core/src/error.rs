use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vector ({x}, {y}, {z}) is not unit-norm (|v| = {norm})")]
    NotUnit { x: f64, y: f64, z: f64, norm: f64 },

    #[error("{name} = {value} is outside [{min}, {max}]")]
    AngleOutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("angle must be finite, got {0}")]
    NonFiniteAngle(f64),

    #[error("matrix is not unitary (max |UU† - 1| = {0:e})")]
    NotUnitary(f64),

    #[error("matrix is not Hermitian (max |ρ - ρ†| = {0:e})")]
    NotHermitian(f64),

    #[error("trace is {0}, expected 1")]
    TraceNotOne(f64),

    #[error("matrix is not positive semidefinite (Bloch radius {0})")]
    NotPositive(f64),

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("halting machine is not in its initial configuration")]
    MachineNotInitial,
}
