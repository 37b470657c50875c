//! Complete, Lee and Hamming weight distributions and the exact enumerator.
//!
//! Run with `cargo run --example weight_enumerators`.

use num_complex::Complex64;
use qalgebra::code_analysis::code_elements;
use qalgebra::enumerators::{complete_distribution, hamming_distribution, lee_distribution, ExactEnumerator};
use qalgebra::{catalog, PhaseSystem};

fn main() {
    let code = catalog::load("qutrit-repetition").unwrap().into_code().unwrap();
    let sys = PhaseSystem::pauli(code.m()).unwrap();
    let (c, c_dual) = code_elements(&sys, &code).unwrap();

    println!("complete distribution of C (counts per group element):");
    for (key, value) in &complete_distribution(&c).terms {
        if value.norm() < 1e-12 {
            continue;
        }
        println!("  {:?} -> {:.3}", key.0, value.re);
    }

    println!("Lee distribution of C' (identity count, then one count per +/- pair):");
    for (key, value) in &lee_distribution(&c_dual).unwrap().terms {
        if value.norm() < 1e-12 {
            continue;
        }
        println!("  {:?} -> {:.3}", key.0, value.re);
    }

    let a = hamming_distribution(&c);
    let b = hamming_distribution(&c_dual);
    println!("Hamming A  = {:?}", a.as_integers(1e-6).map(|(v, _)| v));
    println!("Hamming A' = {:?}", b.as_integers(1e-6).map(|(v, _)| v));

    // The exact enumerator takes one variable per (coordinate, group element).
    let q = sys.group_order();
    let vars: Vec<Complex64> = (0..code.n() * q)
        .map(|i| Complex64::new(0.1 * (i % q) as f64, 0.05 * (i / q) as f64))
        .collect();
    let value = ExactEnumerator::new(&c).evaluate(&vars).unwrap();
    println!("exact enumerator of C at a sample point: {value:.6}");

    // Lee distributions need odd m.
    let qubit = catalog::load("five-qubit").unwrap().into_code().unwrap();
    let (c2, _) = code_elements(&PhaseSystem::pauli(2).unwrap(), &qubit).unwrap();
    println!("Lee on qubits: {}", lee_distribution(&c2).unwrap_err());
}
