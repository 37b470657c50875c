//! Algebra elements, the ring product and the transform.
//!
//! Run with `cargo run --example group_algebra_transform`.

use num_complex::Complex64;
use qalgebra::group_algebra::{double_transform_scaling_check, transform, transform_naive};
use qalgebra::{AlgebraElement, PhaseSystem};

fn main() {
    let sys = PhaseSystem::pauli(2).unwrap();

    // The identity monomial and the all-ones element are exchanged.
    let unit = AlgebraElement::unit(2, 1).unwrap();
    let t = transform(&sys, &unit).unwrap();
    println!("transform(z^0) = {:?}", re(&t.element));
    let back = transform(&sys, &t.element).unwrap();
    println!("transform(all ones) = {:?}, mass M = {}", re(&back.element), back.source_mass.re);

    // Products add labels.
    let x = AlgebraElement::monomial(2, 1, 2).unwrap();
    let z = AlgebraElement::monomial(2, 1, 1).unwrap();
    println!("z^X * z^Z = {:?}", re(&x.multiply(&z).unwrap()));

    // Fast and naive transforms agree.
    let coeffs: Vec<Complex64> = (0..256)
        .map(|i| Complex64::new((i as f64).sin(), (i as f64 * 0.5).cos()))
        .collect();
    let a = AlgebraElement::from_coeffs(2, 4, coeffs).unwrap();
    let fast = transform(&sys, &a).unwrap();
    let naive = transform_naive(&sys, &a).unwrap();
    println!("n=4: fast vs naive max difference {:.1e}", fast.element.max_abs_diff(&naive.element));

    let scaling = double_transform_scaling_check(&sys, &a).unwrap();
    println!(
        "transforming twice rescales by m^(2n)/(M M'): max residual {:.1e}",
        scaling.max_residual
    );

    // A zero-mass element has no transform.
    let zero = AlgebraElement::zero(2, 1).unwrap();
    println!("zero element: {}", transform(&sys, &zero).unwrap_err());
}

fn re(a: &AlgebraElement) -> Vec<f64> {
    a.coeffs().iter().map(|c| (c.re * 1e9).round() / 1e9).collect()
}
