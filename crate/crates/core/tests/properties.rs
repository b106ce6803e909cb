use std::f64::consts::{PI, TAU};

use bloch_pictures::halting::{contradiction_at, run_consistent_scenario};
use bloch_pictures::{
    adjoint_of, bloch_to_density, check_picture_consistency, compose, density_to_bloch,
    evolve_basis, evolve_frame, evolve_sequence, evolve_state, pauli, step_machine, Axis,
    BlochVector, Complex2x2, HaltingMachineState, InputSelector, Picture, QubitFrame, Unitary2,
};
use num_complex::Complex64;
use proptest::prelude::*;

const TOL: f64 = 1e-12;

fn unit_vector() -> impl Strategy<Value = BlochVector> {
    (-1.0f64..=1.0, 0.0f64..TAU).prop_map(|(z, phi)| {
        let r = (1.0 - z * z).sqrt();
        BlochVector::new(r * phi.cos(), r * phi.sin(), z)
    })
}

fn unitary() -> impl Strategy<Value = Unitary2> {
    (unit_vector(), 0.0f64..TAU, 0.0f64..TAU).prop_map(|(n, theta, gamma)| {
        let (s, c) = (0.5 * theta).sin_cos();
        let n_sigma = Axis::ALL
            .iter()
            .map(|&a| pauli(a).scale(n.component(a).into()))
            .fold(Complex2x2::zero(), |acc, m| acc + m);
        let m = Complex2x2::identity().scale(c.into()) - n_sigma.scale(Complex64::new(0.0, s));
        Unitary2::new(m.scale(Complex64::from_polar(1.0, gamma))).unwrap()
    })
}

fn angle_between(a: &BlochVector, b: &BlochVector) -> f64 {
    a.cross(b).norm().atan2(a.dot(b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn adjoint_is_a_rotation(u in unitary(), v in unit_vector()) {
        let r = u.adjoint_rotation();
        prop_assert!(r.orthogonality_defect() <= TOL);
        prop_assert!((r.determinant() - 1.0).abs() <= TOL);
        prop_assert!((r.apply(&v).norm() - 1.0).abs() <= TOL);
    }

    #[test]
    fn adjoint_ignores_global_phase(u in unitary(), gamma in 0.0f64..TAU) {
        let shifted = adjoint_of(u.with_global_phase(gamma).matrix()).unwrap();
        prop_assert!(shifted.max_abs_diff(u.adjoint_rotation()) <= TOL);
    }

    #[test]
    fn adjoint_respects_composition(u in unitary(), w in unitary()) {
        let composed = adjoint_of(compose(&u, &w).matrix()).unwrap();
        let product = *w.adjoint_rotation() * *u.adjoint_rotation();
        prop_assert!(composed.max_abs_diff(&product) <= TOL);
    }

    #[test]
    fn density_roundtrip(v in unit_vector()) {
        let rho = bloch_to_density(&v).unwrap();
        prop_assert!(rho.matrix().hermiticity_defect() <= TOL);
        prop_assert!((rho.matrix().trace() - Complex64::new(1.0, 0.0)).norm() <= TOL);
        prop_assert!((*rho.matrix() * *rho.matrix()).max_abs_diff(rho.matrix()) <= TOL);
        prop_assert!(density_to_bloch(&rho).max_abs_diff(&v) <= TOL);
    }

    #[test]
    fn pictures_agree_on_expectation(v in unit_vector(), e in unit_vector(), u in unitary()) {
        let s = e.dot(&evolve_state(&v, &u).unwrap());
        let h = evolve_basis(&e, &u).unwrap().dot(&v);
        prop_assert!((s - h).abs() <= TOL);
    }

    #[test]
    fn pictures_agree_via_density_traces(v in unit_vector(), e in unit_vector(), u in unitary()) {
        // Tr(ρ' (e·σ)) against Tr(ρ (e'·σ)), straight from the matrices
        let observable = |d: &BlochVector| {
            Axis::ALL
                .iter()
                .map(|&a| pauli(a).scale(d.component(a).into()))
                .fold(Complex2x2::zero(), |acc, m| acc + m)
        };
        let rho = *bloch_to_density(&v).unwrap().matrix();
        let u_m = *u.matrix();
        let rho_evolved = u_m * rho * u_m.dagger();
        let obs_evolved = u_m.dagger() * observable(&e) * u_m;
        let s = (rho_evolved * observable(&e)).trace();
        let h = (rho * obs_evolved).trace();
        prop_assert!((s - h).norm() <= TOL);
        prop_assert!((s.re - e.dot(&evolve_state(&v, &u).unwrap())).abs() <= TOL);
    }

    #[test]
    fn angle_between_frame_vectors_matches(v in unit_vector(), e in unit_vector(), u in unitary()) {
        let frame = QubitFrame::new(v, e).unwrap();
        let s = evolve_frame(&frame, &u, Picture::Schrodinger);
        let h = evolve_frame(&frame, &u, Picture::Heisenberg);
        let (a_s, a_h) = (angle_between(&s.state(), &s.basis()), angle_between(&h.state(), &h.basis()));
        prop_assert!((a_s - a_h).abs() <= TOL);
        prop_assert!((s.state().dot(&s.basis()) - h.state().dot(&h.basis())).abs() <= TOL);
    }

    #[test]
    fn basis_evolution_inverts_state_evolution(v in unit_vector(), u in unitary()) {
        let there = evolve_state(&v, &u).unwrap();
        let back = evolve_basis(&there, &u).unwrap();
        prop_assert!(back.max_abs_diff(&v) <= TOL);
        let dagger_state = evolve_state(&v, &u.dagger()).unwrap();
        prop_assert!(dagger_state.max_abs_diff(&evolve_basis(&v, &u).unwrap()) <= TOL);
    }

    #[test]
    fn sequences_stay_consistent(
        v in unit_vector(),
        e in unit_vector(),
        gates in prop::collection::vec(unitary(), 0..8),
    ) {
        let frame = QubitFrame::new(v, e).unwrap();
        let report = check_picture_consistency(&frame, &gates, 1e-10).unwrap();
        prop_assert!(report.consistent, "{report:?}");
        let s = evolve_sequence(&frame, &gates, Picture::Schrodinger);
        prop_assert_eq!(s.basis(), frame.basis());
        let h = evolve_sequence(&frame, &gates, Picture::Heisenberg);
        prop_assert_eq!(h.state(), frame.state());
    }

    #[test]
    fn divergence_is_folded_double_angle(alpha in -4.0 * PI..4.0 * PI) {
        let r = contradiction_at(alpha).unwrap();
        prop_assert!((0.0..=PI).contains(&r.divergence_angle));
        let wrapped = (2.0 * alpha).rem_euclid(TAU);
        let folded = if wrapped > PI { TAU - wrapped } else { wrapped };
        prop_assert!((r.divergence_angle - folded).abs() <= 1e-10);
        prop_assert!(r.halted_schrodinger && r.halted_heisenberg);
    }

    #[test]
    fn state_input_is_consistent(alpha in -4.0 * PI..4.0 * PI) {
        let r = run_consistent_scenario(alpha).unwrap();
        prop_assert!((r.schrodinger_expectation - r.heisenberg_expectation).abs() <= TOL);
        prop_assert!((r.schrodinger_expectation - alpha.cos()).abs() <= TOL);
        prop_assert!(r.both_halted);
    }

    #[test]
    fn halt_and_system_never_mix(alpha in 0.0f64..TAU) {
        let init = HaltingMachineState::initial();
        let down = BlochVector::new(0.0, 0.0, -1.0);
        for picture in Picture::BOTH {
            for input in [InputSelector::StateInput, InputSelector::BasisInput] {
                let m = step_machine(&init, alpha, picture, input).unwrap();
                // halt vectors only ever move to the south pole; y rotation never touches them
                for h in [m.halt(), m.halt_basis()] {
                    prop_assert!(h == BlochVector::NORTH || h == down);
                }
                // system vectors stay in the x-z plane with no σ_x flip of z sign
                for s in [m.system(), m.system_basis()] {
                    prop_assert_eq!(s.y, 0.0);
                    prop_assert!((s.z - alpha.cos()).abs() <= TOL || s == BlochVector::NORTH);
                }
            }
        }
    }
}
