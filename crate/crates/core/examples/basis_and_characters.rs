//! Generalized Pauli bases, their phase tables and the character kernel.
//!
//! Run with `cargo run --example basis_and_characters`.

use qalgebra::{ErrorLabel, GroupElement, PhaseSystem};

fn main() {
    let sys = PhaseSystem::pauli(3).expect("m >= 2");
    let ord = sys.ordering();

    println!("group ordering for m=3 (digit: element):");
    for (digit, g) in ord.elements().iter().enumerate() {
        println!("  {digit}: {g}  (negation at digit {})", ord.neg_digit(digit));
    }

    let x = GroupElement::new(1, 0);
    let z = GroupElement::new(0, 1);
    println!("omega(X, Z) = {:.4}", sys.omega(x, z));
    println!("omega(Z, X) = {:.4}", sys.omega(z, x));
    println!("character chi_Z(X) = {:.4}", sys.character(z, x));

    // Characters of multi-qudit labels are products over coordinates.
    let h = ErrorLabel(vec![z, x]);
    let g = ErrorLabel(vec![x, x]);
    println!("chi_{{{h}}}({g}) = {:.4}", sys.label_character(&h, &g));

    for m in 2..=6 {
        let report = PhaseSystem::pauli(m).unwrap().verify_lemma1();
        println!(
            "m={m}: character row sums vanish off the identity, max residual {:.1e}",
            report.max_residual
        );
    }
}
