//! Building stabilizer codes from generators, for any number of levels.
//!
//! Run with `cargo run --release --example stabilizer_codes`.

use qalgebra::code_analysis::{analyze, stabilizer_codewords, stabilizer_group, CodeSpec, Generator};
use qalgebra::{ErrorLabel, GroupElement, PhaseSystem};

/// The cyclic five-qudit code generated by X Z Z^-1 X^-1 I and its shifts.
fn five_qudit(m: usize) -> CodeSpec {
    let pattern = [
        GroupElement::new(1, 0),
        GroupElement::new(0, 1),
        GroupElement::new(0, m - 1),
        GroupElement::new(m - 1, 0),
        GroupElement::IDENTITY,
    ];
    let generators = (0..4)
        .map(|shift| {
            let coords = (0..5).map(|i| pattern[(i + 5 - shift) % 5]).collect();
            Generator::new(ErrorLabel(coords))
        })
        .collect();
    CodeSpec::from_generators(m, 5, generators).unwrap()
}

fn main() {
    for m in [2, 3, 5] {
        let sys = PhaseSystem::pauli(m).unwrap();
        let code = five_qudit(m);
        let group = stabilizer_group(&sys, &code).unwrap();
        let r = analyze(&sys, &code).unwrap();
        println!(
            "m={m}: stabilizer group of size {}, K={} d={} pure={}",
            group.len(),
            r.k,
            r.d,
            r.pure
        );
    }

    // Explicit codewords reproduce the same parameters through the
    // basis-vector route.
    let sys = PhaseSystem::pauli(3).unwrap();
    let words = stabilizer_codewords(&sys, &five_qudit(3)).unwrap();
    let r = analyze(&sys, &words).unwrap();
    println!(
        "m=3 from {} codewords: K={} d={} pure={}",
        words.basis_vectors().unwrap().len(),
        r.k,
        r.d,
        r.pure
    );

    // Generators must commute.
    let bad = CodeSpec::from_generators(
        2,
        1,
        vec![
            Generator::new(ErrorLabel(vec![GroupElement::new(1, 0)])),
            Generator::new(ErrorLabel(vec![GroupElement::new(0, 1)])),
        ],
    )
    .unwrap();
    println!("X and Z together: {}", analyze(&PhaseSystem::pauli(2).unwrap(), &bad).unwrap_err());
}
