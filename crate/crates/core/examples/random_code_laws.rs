//! Laws that hold for every code, checked on seeded random subspaces.
//!
//! Run with `cargo run --release --example random_code_laws`.

use qalgebra::code_analysis::{analyze, check_cs_ordering, code_elements, random_code};
use qalgebra::group_algebra::transform;
use qalgebra::PhaseSystem;

fn main() {
    let (m, n) = (2, 3);
    let sys = PhaseSystem::pauli(m).unwrap();
    for k in [1, 2, 4] {
        for seed in 0..3 {
            let code = random_code(m, n, k, seed).unwrap();
            let (c, c_dual) = code_elements(&sys, &code).unwrap();
            let mass = c.mass().re;
            let dual_gap = transform(&sys, &c).unwrap().element.max_abs_diff(&c_dual);
            let ordering = check_cs_ordering(&sys, &code).unwrap();
            let report = analyze(&sys, &code).unwrap();
            println!(
                "K={k} seed={seed}: m^n/M = {:.6}, c_0 = {:.3}, c'_0 = {:.3}, \
                 |C' - transform(C)| = {dual_gap:.1e}, max c - c' = {:.1e}, d = {}",
                (m.pow(n as u32) as f64) / mass,
                c.coeff(0).re,
                c_dual.coeff(0).re,
                ordering.max_excess,
                report.d
            );
        }
    }
}
