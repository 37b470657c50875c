//! The exact, complete, Lee and Hamming MacWilliams identities.
//!
//! Run with `cargo run --example macwilliams_identities`.

use qalgebra::code_analysis::associated_element;
use qalgebra::enumerators::{
    hamming_distribution, hamming_macwilliams, verify_theorem4, verify_theorem6, verify_theorem8,
    verify_theorem9, IdentityReport,
};
use qalgebra::{catalog, PhaseSystem};

fn show(name: &str, r: &IdentityReport) {
    println!(
        "  {name:<9} {:?}: {} (max residual {:.1e}, {} trials)",
        r.identity,
        if r.passed { "pass" } else { "FAIL" },
        r.max_residual,
        r.trials
    );
}

fn main() {
    let seed = 2024;
    for name in catalog::names() {
        let code = catalog::load(name).unwrap().into_code().unwrap();
        let sys = PhaseSystem::pauli(code.m()).unwrap();
        let c = associated_element(&sys, &code).unwrap();
        println!("{name}:");
        show("exact", &verify_theorem4(&sys, &c, 20, seed).unwrap());
        show("complete", &verify_theorem6(&sys, &c, 20, seed).unwrap());
        if code.m() % 2 == 1 {
            show("Lee", &verify_theorem8(&sys, &c, 20, seed).unwrap());
        }
        show("Hamming", &verify_theorem9(&sys, &c).unwrap());
    }

    // The Hamming identity as a direct map from A to A'.
    let code = catalog::load("five-qubit").unwrap().into_code().unwrap();
    let sys = PhaseSystem::pauli(2).unwrap();
    let c = associated_element(&sys, &code).unwrap();
    let a = hamming_distribution(&c);
    let b = hamming_macwilliams(&a, 2, c.mass());
    println!(
        "five-qubit: A = {:?} maps to A' = {:?}",
        a.as_integers(1e-9).unwrap().0,
        b.as_integers(1e-9).unwrap().0
    );
}
