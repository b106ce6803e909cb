//! Acceptance criteria, one pass/fail line each.
//!
//! Run with `cargo test -p bloch-pictures --test acceptance -- --nocapture`
//! to see the report.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, PI, TAU};
use std::process::Command;

use bloch_pictures::halting::{contradiction_at, HaltingMachineState};
use bloch_pictures::random::Sampler;
use bloch_pictures::{
    adjoint_of, bloch_to_density, compose, density_to_bloch, evolve_basis, evolve_state,
    expectation, pauli, rotation, step_machine, Axis, BlochVector, InputSelector, Picture,
    Rotation3, Unitary2,
};
use num_complex::Complex64;

const SEED: u64 = 0x5EED_2024;
const TRIALS: usize = 1000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn worked_grid() -> [f64; 6] {
    [
        FRAC_PI_6,
        FRAC_PI_4,
        FRAC_PI_3,
        FRAC_PI_2,
        PI,
        3.0 * FRAC_PI_2,
    ]
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1_schrodinger_worked_example() -> Outcome {
    let mut worst = 0.0_f64;
    for a in worked_grid() {
        let v = evolve_state(&BlochVector::NORTH, &rotation(Axis::Y, a).unwrap()).unwrap();
        let err = v.max_abs_diff(&BlochVector::new(a.sin(), 0.0, a.cos()));
        worst = worst.max(err);
        check(err <= 1e-12, || format!("α = {a}: got {v}, error {err:e}"))?;
    }
    Ok(format!("max component error {worst:.1e} <= 1e-12"))
}

fn criterion_2_heisenberg_worked_example() -> Outcome {
    let mut worst = 0.0_f64;
    for a in worked_grid() {
        let e = evolve_basis(&BlochVector::NORTH, &rotation(Axis::Y, a).unwrap()).unwrap();
        let err = e.max_abs_diff(&BlochVector::new(-a.sin(), 0.0, a.cos()));
        worst = worst.max(err);
        check(err <= 1e-12, || format!("α = {a}: got {e}, error {err:e}"))?;
    }
    Ok(format!("max component error {worst:.1e} <= 1e-12"))
}

fn criterion_3_picture_equivalence() -> Outcome {
    let mut rng = Sampler::seeded(SEED);
    let mut worst = 0.0_f64;
    for i in 0..TRIALS {
        let (v, e, u) = (rng.unit_vector(), rng.unit_vector(), rng.unitary());
        let s = expectation(&e, &evolve_state(&v, &u).unwrap()).unwrap();
        let h = expectation(&evolve_basis(&e, &u).unwrap(), &v).unwrap();
        let d = (s - h).abs();
        worst = worst.max(d);
        check(d <= 1e-12, || format!("trial {i}: |{s} - {h}| = {d:e}"))?;
    }
    Ok(format!(
        "{TRIALS} trials, max deviation {worst:.1e} <= 1e-12"
    ))
}

fn criterion_4_contradiction_quantification() -> Outcome {
    let n = 360;
    let mut worst = 0.0_f64;
    let mut agreements = 0;
    for i in 0..n {
        let alpha = TAU * i as f64 / n as f64;
        let rec = contradiction_at(alpha).map_err(|e| e.to_string())?;
        let expected = (2.0 * alpha).cos().acos();
        let err = (rec.divergence_angle - expected).abs();
        worst = worst.max(err);
        check(err <= 1e-10, || {
            format!(
                "α = {alpha}: divergence {} vs {expected}",
                rec.divergence_angle
            )
        })?;
        let multiple_of_pi = i % (n / 2) == 0;
        let agrees = rec.divergence_angle <= 1e-9;
        check(agrees == multiple_of_pi, || {
            format!(
                "α = {alpha}: divergence {} (α mod π = 0: {multiple_of_pi})",
                rec.divergence_angle
            )
        })?;
        agreements += agrees as usize;
    }
    Ok(format!(
        "{n} grid points, max error {worst:.1e} <= 1e-10, agreement only at α ∈ {{0, π}} ({agreements} points)"
    ))
}

fn demo_contradiction(alpha: f64) -> Result<bool, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_bloch-pictures"))
        .args(["halting-demo", "--angle", &format!("{alpha:?}")])
        .output()
        .map_err(|e| e.to_string())?;
    check(out.status.success(), || {
        format!("halting-demo exited with {}", out.status)
    })?;
    Ok(String::from_utf8_lossy(&out.stdout).contains("CONTRADICTION"))
}

fn criterion_5_halting_behavior() -> Outcome {
    let init = HaltingMachineState::initial();
    check(init.halt_expectation() == 1.0, || {
        "initial halt expectation is not +1".into()
    })?;
    check(
        adjoint_of(&pauli(Axis::X)).unwrap()
            == Rotation3([[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, -1.0]]),
        || "σ_x adjoint is not diag(1, -1, -1)".into(),
    )?;
    let mut runs = 0;
    for i in 0..36 {
        let alpha = TAU * i as f64 / 36.0;
        for picture in Picture::BOTH {
            for input in [InputSelector::StateInput, InputSelector::BasisInput] {
                let m = step_machine(&init, alpha, picture, input).map_err(|e| e.to_string())?;
                let h = m.halt_expectation();
                check((h + 1.0).abs() <= 1e-12 && m.halted(), || {
                    format!("α = {alpha}, {picture:?}, {input:?}: halt expectation {h}")
                })?;
                runs += 1;
            }
        }
    }
    check(demo_contradiction(FRAC_PI_2)?, || {
        "α = π/2 not flagged".into()
    })?;
    for alpha in [0.0, PI, TAU] {
        check(!demo_contradiction(alpha)?, || {
            format!("α = {alpha} flagged")
        })?;
    }
    Ok(format!(
        "{runs} machine runs flip +1 -> -1; demo flags π/2 and not 0, π, 2π"
    ))
}

fn criterion_6_algebraic_properties() -> Outcome {
    let mut rng = Sampler::seeded(SEED ^ 6);
    let mut worst = [0.0_f64; 5];
    for i in 0..TRIALS {
        let u = rng.unitary();
        let r = adjoint_of(u.matrix()).unwrap();
        let orth = r.orthogonality_defect();
        let det = (r.determinant() - 1.0).abs();

        let gamma = rng.angle();
        let phase = adjoint_of(u.with_global_phase(gamma).matrix())
            .unwrap()
            .max_abs_diff(&r);

        let w = rng.unitary();
        let hom = adjoint_of(compose(&u, &w).matrix())
            .unwrap()
            .max_abs_diff(&(*w.adjoint_rotation() * *u.adjoint_rotation()));

        let v = rng.unit_vector();
        let round = density_to_bloch(&bloch_to_density(&v).unwrap()).max_abs_diff(&v);

        for (slot, val) in worst.iter_mut().zip([orth, det, phase, hom, round]) {
            *slot = slot.max(val);
        }
        check(
            [orth, det, phase, hom, round].iter().all(|&x| x <= 1e-12),
            || {
                format!("case {i}: orth {orth:e}, det {det:e}, phase {phase:e}, hom {hom:e}, roundtrip {round:e}")
            },
        )?;
    }
    Ok(format!(
        "{TRIALS} cases each; max orth {:.1e}, det {:.1e}, phase {:.1e}, homomorphism {:.1e}, roundtrip {:.1e}",
        worst[0], worst[1], worst[2], worst[3], worst[4]
    ))
}

// Brute-force ½Tr(σ_i U σ_j U†) with plain arrays, independent of the crate's algebra.
type M2 = [[Complex64; 2]; 2];

fn mm(a: &M2, b: &M2) -> M2 {
    let mut c = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

fn oracle_adjoint(u: &M2) -> [[f64; 3]; 3] {
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let sigma: [M2; 3] = [
        [[z, one], [one, z]],
        [[z, -i], [i, z]],
        [[one, z], [z, -one]],
    ];
    let u_dag: M2 = [
        [u[0][0].conj(), u[1][0].conj()],
        [u[0][1].conj(), u[1][1].conj()],
    ];
    let mut r = [[0.0; 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            let p = mm(&mm(&mm(&sigma[a], u), &sigma[b]), &u_dag);
            r[a][b] = 0.5 * (p[0][0] + p[1][1]).re;
        }
    }
    r
}

fn criterion_7_oracle_cross_check() -> Outcome {
    let mut worst = 0.0_f64;
    for k in 0..12 {
        let alpha = TAU * k as f64 / 12.0;
        let (s, c) = (alpha / 2.0).sin_cos();
        let explicit: M2 = [
            [Complex64::new(c, 0.0), Complex64::new(-s, 0.0)],
            [Complex64::new(s, 0.0), Complex64::new(c, 0.0)],
        ];
        let oracle = Rotation3(oracle_adjoint(&explicit));
        let u: Unitary2 = rotation(Axis::Y, alpha).unwrap();
        let err = adjoint_of(u.matrix()).unwrap().max_abs_diff(&oracle);
        worst = worst.max(err);
        check(err <= 1e-13, || format!("α = {alpha}: entry error {err:e}"))?;
    }
    Ok(format!("12 angles, max entry error {worst:.1e} <= 1e-13"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 7] = [
        (
            "1 Schrödinger worked example",
            criterion_1_schrodinger_worked_example,
        ),
        (
            "2 Heisenberg worked example",
            criterion_2_heisenberg_worked_example,
        ),
        ("3 picture equivalence", criterion_3_picture_equivalence),
        (
            "4 contradiction quantification",
            criterion_4_contradiction_quantification,
        ),
        ("5 halting behavior", criterion_5_halting_behavior),
        (
            "6 algebraic property suite",
            criterion_6_algebraic_properties,
        ),
        (
            "7 adjoint oracle cross-check",
            criterion_7_oracle_cross_check,
        ),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
