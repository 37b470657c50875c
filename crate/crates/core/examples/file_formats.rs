//! Reading and writing code and element files.
//!
//! Run with `cargo run --example file_formats`.

use num_complex::Complex64;
use qalgebra::code_analysis::random_code;
use qalgebra::io::{parse_code, parse_element, parse_input, write_code, write_element, InputFile};
use qalgebra::{catalog, AlgebraElement};

fn main() {
    println!("{}", catalog::source("four-two-two").unwrap());

    let code = random_code(2, 1, 1, 3).unwrap();
    let text = write_code(&code);
    print!("{text}");
    assert_eq!(parse_code(&text).unwrap(), code);

    let el = AlgebraElement::from_coeffs(
        2,
        1,
        vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.1, -1.0 / 3.0),
            Complex64::new(0.0, 0.0),
        ],
    )
    .unwrap();
    let text = write_element(&el);
    print!("\n{text}");
    assert_eq!(parse_element(&text).unwrap().coeffs(), el.coeffs());

    match parse_input("code m=2 n=2 kind=stabilizer\n1,0 1,0\n1,0\n") {
        Ok(InputFile::Code(_)) | Ok(InputFile::Element(_)) => unreachable!(),
        Err(e) => println!("\nmalformed input: {e}"),
    }
}
