//! Supplying your own nice error basis, saving it to a basis file and
//! certifying it with the dense-matrix oracle.
//!
//! Run with `cargo run --example custom_error_basis`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use qalgebra::code_analysis::{analyze, random_code};
use qalgebra::io::{parse_basis, write_basis};
use qalgebra::oracle::Oracle;
use qalgebra::PhaseSystem;

fn main() {
    // Rotate the qubit Paulis by a Hadamard and give each one a phase.
    let pauli = PhaseSystem::pauli(2).unwrap();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let hadamard = DMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::new(s, 0.0),
            Complex64::new(s, 0.0),
            Complex64::new(s, 0.0),
            Complex64::new(-s, 0.0),
        ],
    );
    let operators: Vec<_> = pauli
        .operators()
        .iter()
        .enumerate()
        .map(|(i, e)| (&hadamard * e * &hadamard) * Complex64::from_polar(1.0, 0.5 * i as f64))
        .collect();
    let sys = PhaseSystem::from_matrices(2, operators).expect("a nice error basis");

    let file = write_basis(&sys);
    println!("{file}");
    let reloaded = parse_basis(&file).unwrap();

    let report = Oracle::new(&reloaded).verify_basis_axioms().unwrap();
    println!(
        "axioms: {} ({} pairs, max residual {:.1e})",
        if report.passed() { "pass" } else { "FAIL" },
        report.pairs_checked,
        report.max_residual()
    );

    // Code parameters do not depend on which nice error basis is used.
    let code = random_code(2, 3, 2, 9).unwrap();
    let a = analyze(&pauli, &code).unwrap();
    let b = analyze(&reloaded, &code).unwrap();
    println!("Pauli basis:  K={} d={}", a.k, a.d);
    println!("custom basis: K={} d={}", b.k, b.d);

    // Matrices that are not a nice error basis are rejected.
    let mut broken = pauli.operators().to_vec();
    broken[3] = broken[1].clone();
    println!("duplicate operator: {}", PhaseSystem::from_matrices(2, broken).unwrap_err());
}
