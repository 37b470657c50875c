//! Certifying the fast code routines against dense matrices.
//!
//! Run with `cargo run --release --example oracle_certification`.

use qalgebra::code_analysis::{code_elements, random_code};
use qalgebra::oracle::Oracle;
use qalgebra::{catalog, ErrorLabel, PhaseSystem};

fn main() {
    let sys = PhaseSystem::pauli(2).unwrap();
    let oracle = Oracle::new(&sys);

    let xz = ErrorLabel::from_index(9, 2, sys.ordering());
    let op = oracle.build_operator(&xz).unwrap();
    println!("E_{{{xz}}} as a dense matrix:");
    let m = op.matrix();
    for r in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols())
            .map(|c| format!("{:>5.1}", m[(r, c)].re + 0.0))
            .collect();
        println!("  {}", row.join(" "));
    }

    let code = catalog::load("five-qubit").unwrap().into_code().unwrap();
    let (p, k) = oracle.projector(&code).unwrap();
    println!("five-qubit projector: dimension {} rank {k}", p.nrows());

    let (c, c_dual) = code_elements(&sys, &code).unwrap();
    println!(
        "five-qubit: |C - C_dense| = {:.1e}, |C' - C'_dense| = {:.1e}",
        c.max_abs_diff(&oracle.associated_element(&code).unwrap()),
        c_dual.max_abs_diff(&oracle.dual_element(&code).unwrap())
    );

    let code = random_code(2, 4, 3, 1).unwrap();
    let (c, c_dual) = code_elements(&sys, &code).unwrap();
    println!(
        "random [[4, K=3]]: |C - C_dense| = {:.1e}, |C' - C'_dense| = {:.1e}",
        c.max_abs_diff(&oracle.associated_element(&code).unwrap()),
        c_dual.max_abs_diff(&oracle.dual_element(&code).unwrap())
    );

    // The oracle refuses large systems.
    let big = Oracle::with_cap(&sys, 8);
    println!("capped oracle: {}", big.projector(&code).unwrap_err());
}
