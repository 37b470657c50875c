//! Dimension, minimum distance and purity for every built-in code.
//!
//! Run with `cargo run --release --example analyze_catalog`.

use qalgebra::code_analysis::analyze;
use qalgebra::{catalog, PhaseSystem};

fn main() {
    println!("{:<20} {:>2} {:>2} {:>3} {:>2} {:>5}  A / A'", "code", "m", "n", "K", "d", "pure");
    for (name, description) in catalog::entries() {
        let code = catalog::load(name).unwrap().into_code().unwrap();
        let sys = PhaseSystem::pauli(code.m()).unwrap();
        let r = analyze(&sys, &code).unwrap();
        let a = r.primary_distribution.as_integers(1e-6).map(|(v, _)| v);
        let b = r.dual_distribution.as_integers(1e-6).map(|(v, _)| v);
        println!(
            "{name:<20} {:>2} {:>2} {:>3} {:>2} {:>5}  {:?} / {:?}",
            r.m, r.n, r.k, r.d, r.pure, a, b
        );
        println!("  {description}");
    }
}
