//! Group-algebra analysis of quantum error-correcting codes.
//!
//! Every code on `n` systems with `m` levels is mapped to an element of the
//! group algebra over the index group `G^n` of a nice error basis
//! (`G = Z_m x Z_m`). Its transform, the MacWilliams-type dual, carries the
//! rest of the story: the code dimension is `m^n / M` where `M` is the mass
//! of the element, the minimum distance is the smallest weight at which the
//! element and its transform disagree, and the weight enumerators of the two
//! are tied by exact, complete, Lee and Hamming identities.
//!
//! # Layout
//!
//! - [`error_basis`]: generalized Pauli bases, user-supplied bases, phase
//!   tables and characters.
//! - [`group_algebra`]: dense algebra elements, ring operations and the
//!   transform (tensor-kernel fast path plus a naive reference).
//! - [`enumerators`]: complete, Lee and Hamming distributions, the evaluable
//!   exact enumerator and the four identity checks.
//! - [`code_analysis`]: codes given by stabilizer generators or basis
//!   vectors, their associated and dual elements, `K`, `d` and purity.
//! - [`oracle`]: dense-matrix reference implementations for certification.
//! - [`io`] and [`catalog`]: text file formats and the built-in code catalog.
//! - [`cli`]: the command-line front end used by the `qalgebra` binary.
//!
//! # Quick start
//!
//! ```
//! use qalgebra::{catalog, code_analysis, error_basis::PhaseSystem};
//!
//! let sys = PhaseSystem::pauli(2).unwrap();
//! let code = catalog::load("five-qubit").unwrap().into_code().unwrap();
//! let report = code_analysis::analyze(&sys, &code).unwrap();
//! assert_eq!((report.k, report.d, report.pure), (2, 3, true));
//! ```

pub mod catalog;
pub mod cli;
pub mod code_analysis;
pub mod enumerators;
pub mod error_basis;
pub mod group_algebra;
pub mod io;
pub mod oracle;

/// Absolute tolerance for unit phases, identity checks and coefficient
/// comparisons on elements normalized so that the identity coefficient is 1.
pub const TOLERANCE: f64 = 1e-9;

/// A mass at or below this modulus is treated as zero.
pub const MASS_THRESHOLD: f64 = 1e-12;

pub use code_analysis::{AnalysisReport, CodeSpec};
pub use error_basis::{ErrorLabel, GroupElement, GroupOrdering, PhaseSystem};
pub use group_algebra::{AlgebraElement, TransformResult};
