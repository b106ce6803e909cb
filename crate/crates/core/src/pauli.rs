//! Complex 2×2 algebra over the Pauli basis.
//!
//! A pure qubit is carried as a unit Bloch vector `v` with density matrix
//! `ρ = ½(𝟙 + v·σ)`. A unitary `U` acts on Bloch vectors through its adjoint
//! rotation
//!
//! ```text
//! R_ij = ½ Tr(σ_i U σ_j U†)
//! ```
//!
//! which is the SO(3) image of `U` and does not depend on its global phase.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for identities evaluated in double precision.
pub const ALGEBRAIC_TOL: f64 = 1e-12;

/// Tolerance for validating caller-supplied vectors and matrices.
pub const INPUT_TOL: f64 = 1e-9;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Axis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "x" => Ok(Axis::X),
            "y" => Ok(Axis::Y),
            "z" => Ok(Axis::Z),
            other => Err(format!("unknown axis `{other}` (expected x, y or z)")),
        }
    }
}

/// A complex 2×2 matrix stored row-major as `[a00, a01, a10, a11]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Complex2x2 {
    pub entries: [Complex64; 4],
}

impl Complex2x2 {
    pub const fn new(a00: Complex64, a01: Complex64, a10: Complex64, a11: Complex64) -> Self {
        Self {
            entries: [a00, a01, a10, a11],
        }
    }

    pub fn from_real(a00: f64, a01: f64, a10: f64, a11: f64) -> Self {
        Self::new(a00.into(), a01.into(), a10.into(), a11.into())
    }

    pub const fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    pub const fn zero() -> Self {
        Self::new(ZERO, ZERO, ZERO, ZERO)
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[2 * row + col]
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let [a, b, c, d] = self.entries;
        Self::new(a.conj(), c.conj(), b.conj(), d.conj())
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0] + self.entries[3]
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            entries: self.entries.map(|a| a * s),
        }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Entrywise deviation of `U U†` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        (*self * self.dagger()).max_abs_diff(&Self::identity())
    }

    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.dagger())
    }
}

impl Add for Complex2x2 {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let mut out = self.entries;
        for (o, r) in out.iter_mut().zip(rhs.entries) {
            *o += r;
        }
        Self { entries: out }
    }
}

impl Sub for Complex2x2 {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        let mut out = self.entries;
        for (o, r) in out.iter_mut().zip(rhs.entries) {
            *o -= r;
        }
        Self { entries: out }
    }
}

impl Mul for Complex2x2 {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let [a, b, c, d] = self.entries;
        let [e, f, g, h] = rhs.entries;
        Self::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    }
}

/// The Pauli matrix for `axis`.
pub fn pauli(axis: Axis) -> Complex2x2 {
    match axis {
        Axis::X => Complex2x2::new(ZERO, ONE, ONE, ZERO),
        Axis::Y => Complex2x2::new(ZERO, -I, I, ZERO),
        Axis::Z => Complex2x2::new(ONE, ZERO, ZERO, -ONE),
    }
}

/// A real 3-vector on (or, for mixed states, inside) the Bloch sphere.
///
/// Used both for states `v` and for observable directions `e`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub const NORTH: BlochVector = BlochVector::new(0.0, 0.0, 1.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn from_array([x, y, z]: [f64; 3]) -> Self {
        Self { x, y, z }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn component(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
            Axis::Z => self.z,
        }
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(&self, other: &Self) -> Self {
        Self::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn is_unit(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    /// Returns `self` if it is unit-norm within [`INPUT_TOL`].
    pub fn ensure_unit(self) -> Result<Self> {
        let norm = self.norm();
        if (norm - 1.0).abs() <= INPUT_TOL {
            Ok(self)
        } else {
            Err(Error::NotUnit {
                x: self.x,
                y: self.y,
                z: self.z,
                norm,
            })
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }
}

impl Neg for BlochVector {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl fmt::Display for BlochVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Unit vector `(sin θ cos φ, sin θ sin φ, cos θ)` with θ ∈ [0, π], φ ∈ [0, 2π].
pub fn bloch_from_angles(theta: f64, phi: f64) -> Result<BlochVector> {
    use std::f64::consts::{PI, TAU};
    check_range("theta", theta, 0.0, PI)?;
    check_range("phi", phi, 0.0, TAU)?;
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    Ok(BlochVector::new(st * cp, st * sp, ct))
}

fn check_range(name: &'static str, value: f64, min: f64, max: f64) -> Result<()> {
    if value.is_finite() && (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(Error::AngleOutOfRange {
            name,
            value,
            min,
            max,
        })
    }
}

/// A real 3×3 matrix acting on Bloch vectors; row-major.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rotation3(pub [[f64; 3]; 3]);

impl Rotation3 {
    pub const fn identity() -> Self {
        Rotation3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    }

    pub fn rows(&self) -> &[[f64; 3]; 3] {
        &self.0
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.0[row][col]
    }

    pub fn apply(&self, v: &BlochVector) -> BlochVector {
        let m = &self.0;
        BlochVector::new(
            m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
        )
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Rotation3(std::array::from_fn(|i| std::array::from_fn(|j| m[j][i])))
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Entrywise deviation of `RᵀR` from the identity.
    pub fn orthogonality_defect(&self) -> f64 {
        (self.transpose() * *self).max_abs_diff(&Rotation3::identity())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl Mul for Rotation3 {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (&self.0, &rhs.0);
        Rotation3(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..3).map(|k| a[i][k] * b[k][j]).sum())
        }))
    }
}

/// A 2×2 unitary together with its cached adjoint rotation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Unitary2 {
    matrix: Complex2x2,
    adjoint_rotation: Rotation3,
}

impl Unitary2 {
    /// Validates unitarity within [`INPUT_TOL`] and caches the adjoint rotation.
    pub fn new(matrix: Complex2x2) -> Result<Self> {
        let adjoint_rotation = adjoint_of(&matrix)?;
        Ok(Self {
            matrix,
            adjoint_rotation,
        })
    }

    pub fn identity() -> Self {
        Self {
            matrix: Complex2x2::identity(),
            adjoint_rotation: Rotation3::identity(),
        }
    }

    /// The Pauli matrix for `axis` as a gate; `pauli_gate(Axis::X)` is the bit flip.
    pub fn pauli_gate(axis: Axis) -> Self {
        Self::from_unitary(pauli(axis))
    }

    // Callers guarantee unitarity.
    fn from_unitary(matrix: Complex2x2) -> Self {
        Self {
            matrix,
            adjoint_rotation: adjoint_rotation_unchecked(&matrix),
        }
    }

    pub fn matrix(&self) -> &Complex2x2 {
        &self.matrix
    }

    pub fn adjoint_rotation(&self) -> &Rotation3 {
        &self.adjoint_rotation
    }

    /// `U†`; its adjoint rotation is the transpose of this one.
    pub fn dagger(&self) -> Self {
        Self {
            matrix: self.matrix.dagger(),
            adjoint_rotation: self.adjoint_rotation.transpose(),
        }
    }

    /// `e^{iγ} U`. The adjoint rotation is recomputed from the new matrix.
    pub fn with_global_phase(&self, gamma: f64) -> Self {
        Self::from_unitary(self.matrix.scale(Complex64::from_polar(1.0, gamma)))
    }
}

/// `R_ij = ½ Tr(σ_i U σ_j U†)` for a unitary `U`.
///
/// Rejects matrices whose `UU†` deviates from the identity by more than
/// [`INPUT_TOL`].
pub fn adjoint_of(matrix: &Complex2x2) -> Result<Rotation3> {
    let defect = matrix.unitarity_defect();
    if defect.is_nan() || defect > INPUT_TOL {
        return Err(Error::NotUnitary(defect));
    }
    Ok(adjoint_rotation_unchecked(matrix))
}

fn adjoint_rotation_unchecked(u: &Complex2x2) -> Rotation3 {
    let u_dag = u.dagger();
    let conjugated = Axis::ALL.map(|j| *u * pauli(j) * u_dag);
    Rotation3(std::array::from_fn(|i| {
        let sigma_i = pauli(Axis::ALL[i]);
        std::array::from_fn(|j| {
            let r = 0.5 * (sigma_i * conjugated[j]).trace();
            debug_assert!(
                r.im.abs() <= 1e-9,
                "adjoint entry has imaginary part {}",
                r.im
            );
            r.re
        })
    }))
}

/// `exp(−i α σ_axis / 2)`.
///
/// For the y axis this is the real matrix
/// `[[cos α/2, −sin α/2], [sin α/2, cos α/2]]`, which takes the north pole to
/// `(sin α, 0, cos α)`.
pub fn rotation(axis: Axis, alpha: f64) -> Result<Unitary2> {
    if !alpha.is_finite() {
        return Err(Error::NonFiniteAngle(alpha));
    }
    let (s, c) = (0.5 * alpha).sin_cos();
    let matrix = match axis {
        Axis::X => Complex2x2::new(c.into(), -I * s, -I * s, c.into()),
        Axis::Y => Complex2x2::from_real(c, -s, s, c),
        Axis::Z => Complex2x2::new(Complex64::new(c, -s), ZERO, ZERO, Complex64::new(c, s)),
    };
    Ok(Unitary2::from_unitary(matrix))
}

/// The gate that applies `first` and then `then`, i.e. the product `then · first`.
pub fn compose(first: &Unitary2, then: &Unitary2) -> Unitary2 {
    Unitary2::from_unitary(then.matrix * first.matrix)
}

/// A single-qubit density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: Complex2x2,
}

impl DensityMatrix {
    pub fn new(matrix: Complex2x2) -> Result<Self> {
        let herm = matrix.hermiticity_defect();
        if herm.is_nan() || herm > INPUT_TOL {
            return Err(Error::NotHermitian(herm));
        }
        let tr = matrix.trace();
        let tr_err = (tr - ONE).norm();
        if tr_err.is_nan() || tr_err > INPUT_TOL {
            return Err(Error::TraceNotOne(tr.re));
        }
        let rho = Self { matrix };
        let radius = density_to_bloch(&rho).norm();
        if radius > 1.0 + INPUT_TOL {
            return Err(Error::NotPositive(radius));
        }
        Ok(rho)
    }

    pub fn matrix(&self) -> &Complex2x2 {
        &self.matrix
    }

    /// `Tr(ρ²)`; 1 for pure states.
    pub fn purity(&self) -> f64 {
        (self.matrix * self.matrix).trace().re
    }
}

/// `½(𝟙 + v·σ)` for a unit Bloch vector.
pub fn bloch_to_density(v: &BlochVector) -> Result<DensityMatrix> {
    let v = v.ensure_unit()?;
    Ok(DensityMatrix {
        matrix: density_unchecked(&v),
    })
}

fn density_unchecked(v: &BlochVector) -> Complex2x2 {
    let half = Complex64::new(0.5, 0.0);
    Complex2x2::new(
        half * (1.0 + v.z),
        half * Complex64::new(v.x, -v.y),
        half * Complex64::new(v.x, v.y),
        half * (1.0 - v.z),
    )
}

/// Components `Tr(ρ σ_i)`. Mixed states map inside the unit ball.
pub fn density_to_bloch(rho: &DensityMatrix) -> BlochVector {
    let [x, y, z] = Axis::ALL.map(|a| (rho.matrix * pauli(a)).trace().re);
    BlochVector::new(x, y, z)
}
