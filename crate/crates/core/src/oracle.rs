//! Brute-force dense-matrix references.
//!
//! Everything here materializes `m^n x m^n` operators and is meant only for
//! certifying the fast paths on small systems. The size cap guards against
//! accidental use at scale.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::code_analysis::{CodeBody, CodeError, CodeSpec};
use crate::error_basis::{index_digits, ErrorLabel, PhaseSystem};
use crate::group_algebra::{AlgebraElement, AlgebraError};
use crate::TOLERANCE;

/// Default cap on the Hilbert-space dimension `m^n`.
pub const DEFAULT_SIZE_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("dimension {dim} exceeds the oracle size cap {cap}")]
    SizeCap { dim: usize, cap: usize },
    #[error("oracle and code use different level counts ({oracle} vs {code})")]
    LevelMismatch { oracle: usize, code: usize },
    #[error("generator {index} cannot be normalized to S^m = I with phase {phase}")]
    GeneratorPhase { index: usize, phase: i64 },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// An explicit `m^n x m^n` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator(pub DMatrix<Complex64>);

impl DenseOperator {
    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    /// Largest entry of `U^dagger U - I`.
    pub fn unitarity_residual(&self) -> f64 {
        let id = DMatrix::<Complex64>::identity(self.dim(), self.dim());
        max_abs(&(self.0.adjoint() * &self.0 - id))
    }
}

fn max_abs(mat: &DMatrix<Complex64>) -> f64 {
    mat.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Dense reference computations over a [`PhaseSystem`].
pub struct Oracle<'a> {
    sys: &'a PhaseSystem,
    cap: usize,
}

impl<'a> Oracle<'a> {
    pub fn new(sys: &'a PhaseSystem) -> Self {
        Oracle {
            sys,
            cap: DEFAULT_SIZE_CAP,
        }
    }

    pub fn with_cap(sys: &'a PhaseSystem, cap: usize) -> Self {
        Oracle { sys, cap }
    }

    fn check_dim(&self, n: usize) -> Result<usize, OracleError> {
        let dim = self
            .sys
            .m()
            .checked_pow(n as u32)
            .unwrap_or(usize::MAX);
        if dim > self.cap {
            return Err(OracleError::SizeCap { dim, cap: self.cap });
        }
        Ok(dim)
    }

    /// `E_{g_1} (x) ... (x) E_{g_n}` with the first factor most significant.
    pub fn build_operator(&self, label: &ErrorLabel) -> Result<DenseOperator, OracleError> {
        self.check_dim(label.len())?;
        let ordering = self.sys.ordering();
        let mut acc = DMatrix::<Complex64>::identity(1, 1);
        for &g in label.coords() {
            acc = acc.kronecker(self.sys.operator(ordering.digit(g)));
        }
        Ok(DenseOperator(acc))
    }

    /// `tr(E_h^dagger E_g^dagger E_h E_g) / m^n`.
    pub fn character(&self, h: &ErrorLabel, g: &ErrorLabel) -> Result<Complex64, OracleError> {
        let dim = self.check_dim(h.len())?;
        let eh = self.build_operator(h)?.0;
        let eg = self.build_operator(g)?.0;
        let product = eh.adjoint() * eg.adjoint() * &eh * &eg;
        Ok(product.trace() / dim as f64)
    }

    /// The code projector `P` and its rank `K`.
    pub fn projector(&self, code: &CodeSpec) -> Result<(DMatrix<Complex64>, usize), OracleError> {
        if code.m() != self.sys.m() {
            return Err(OracleError::LevelMismatch {
                oracle: self.sys.m(),
                code: code.m(),
            });
        }
        let dim = self.check_dim(code.n())?;
        let p = match code.body() {
            CodeBody::BasisVectors(vectors) => {
                let mut p = DMatrix::<Complex64>::zeros(dim, dim);
                for v in vectors {
                    let col = DMatrix::from_column_slice(dim, 1, v);
                    p += &col * col.adjoint();
                }
                p
            }
            CodeBody::Stabilizer(generators) => {
                let m = self.sys.m();
                let id = DMatrix::<Complex64>::identity(dim, dim);
                let mut p = id.clone();
                for (index, generator) in generators.iter().enumerate() {
                    let e = self.build_operator(&generator.label)?.0;
                    let mut power = id.clone();
                    for _ in 0..m {
                        power = &power * &e;
                    }
                    let lambda = power[(0, 0)];
                    let c = match generator.phase {
                        Some(ph) => {
                            let c = Complex64::from_polar(1.0, std::f64::consts::PI * ph as f64 / m as f64);
                            if (c.powi(m as i32) * lambda - 1.0).norm() > TOLERANCE {
                                return Err(OracleError::GeneratorPhase { index, phase: ph });
                            }
                            c
                        }
                        None => Complex64::from_polar(1.0, -lambda.arg() / m as f64),
                    };
                    let s = e * c;
                    let mut sum = DMatrix::<Complex64>::zeros(dim, dim);
                    let mut power = id.clone();
                    for _ in 0..m {
                        sum += &power;
                        power = &power * &s;
                    }
                    p *= sum / Complex64::new(m as f64, 0.0);
                }
                p
            }
        };
        let k = p.trace().re.round() as usize;
        Ok((p, k))
    }

    fn for_all_labels<F>(&self, code: &CodeSpec, mut coeff: F) -> Result<AlgebraElement, OracleError>
    where
        F: FnMut(&DMatrix<Complex64>, &DMatrix<Complex64>, usize) -> Complex64,
    {
        let (p, k) = self.projector(code)?;
        let q = self.sys.group_order();
        let n = code.n();
        let len = q.pow(n as u32);
        let mut coeffs = Vec::with_capacity(len);
        for idx in 0..len {
            let label = ErrorLabel::from_digits(&index_digits(idx, q, n), self.sys.ordering());
            let e = self.build_operator(&label)?.0;
            coeffs.push(coeff(&e, &p, k));
        }
        Ok(AlgebraElement::from_coeffs(code.m(), n, coeffs)?)
    }

    /// `c_g = tr(E_g P^dagger) tr(E_g^dagger P) / K^2` with an explicit projector.
    pub fn associated_element(&self, code: &CodeSpec) -> Result<AlgebraElement, OracleError> {
        self.for_all_labels(code, |e, p, k| {
            let a = (e * p.adjoint()).trace();
            let b = (e.adjoint() * p).trace();
            a * b / (k * k) as f64
        })
    }

    /// `c'_h = (1/K) tr(E_h^dagger P E_h P)`.
    pub fn dual_element(&self, code: &CodeSpec) -> Result<AlgebraElement, OracleError> {
        self.for_all_labels(code, |e, p, k| (e.adjoint() * p * e * p).trace() / k as f64)
    }

    /// Checks the nice error basis axioms on the single-system operators
    /// against the system's own phase table.
    pub fn verify_basis_axioms(&self) -> Result<AxiomReport, OracleError> {
        let m = self.sys.m();
        self.check_dim(1)?;
        let q = self.sys.group_order();
        let ordering = self.sys.ordering();
        let ops = self.sys.operators();
        let id = DMatrix::<Complex64>::identity(m, m);
        let mut failures = Vec::new();

        let identity_residual = max_abs(&(&ops[0] - &id));
        if identity_residual > TOLERANCE {
            failures.push("E_0 is not the identity".to_string());
        }

        let mut unitarity_residual: f64 = 0.0;
        let mut trace_residual: f64 = 0.0;
        for (digit, e) in ops.iter().enumerate() {
            let u = max_abs(&(e.adjoint() * e - &id));
            unitarity_residual = unitarity_residual.max(u);
            let expected = if digit == 0 { m as f64 } else { 0.0 };
            let t = (e.trace() - expected).norm();
            trace_residual = trace_residual.max(t);
            if u > TOLERANCE {
                failures.push(format!("E_{} is not unitary", ordering.element(digit)));
            }
            if t > TOLERANCE {
                failures.push(format!("tr E_{} != {expected}", ordering.element(digit)));
            }
        }

        let mut closure_residual: f64 = 0.0;
        let mut pairs = 0;
        for i in 0..q {
            for j in 0..q {
                pairs += 1;
                let omega = self.sys.omega_digits(i, j);
                let lhs = &ops[i] * &ops[j];
                let rhs = &ops[ordering.add_digits(i, j)] * omega;
                let r = max_abs(&(lhs - rhs)).max((omega.norm() - 1.0).abs());
                closure_residual = closure_residual.max(r);
                if r > TOLERANCE {
                    failures.push(format!(
                        "E_{} E_{} != omega E_(g+h)",
                        ordering.element(i),
                        ordering.element(j)
                    ));
                }
            }
        }

        Ok(AxiomReport {
            m,
            pairs_checked: pairs,
            identity_residual,
            unitarity_residual,
            trace_residual,
            closure_residual,
            failures,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomReport {
    pub m: usize,
    pub pairs_checked: usize,
    pub identity_residual: f64,
    pub unitarity_residual: f64,
    pub trace_residual: f64,
    pub closure_residual: f64,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn max_residual(&self) -> f64 {
        self.identity_residual
            .max(self.unitarity_residual)
            .max(self.trace_residual)
            .max(self.closure_residual)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error_basis::GroupElement;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn identity_label_is_identity() {
        let sys = PhaseSystem::pauli(3).unwrap();
        let oracle = Oracle::new(&sys);
        let op = oracle.build_operator(&ErrorLabel::identity(2)).unwrap();
        assert_eq!(op.0, DMatrix::identity(9, 9));
    }

    #[test]
    fn x_and_x_tensor_z() {
        let sys = PhaseSystem::pauli(2).unwrap();
        let oracle = Oracle::new(&sys);
        let x = oracle
            .build_operator(&ErrorLabel(vec![GroupElement::new(1, 0)]))
            .unwrap();
        assert_eq!(x.0, DMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)]));
        let xz = oracle
            .build_operator(&ErrorLabel(vec![GroupElement::new(1, 0), GroupElement::new(0, 1)]))
            .unwrap();
        assert_eq!(xz.trace(), c(0.0));
        assert!(xz.unitarity_residual() < 1e-12);
        // X (x) Z maps |00> to |10>
        assert_eq!(xz.0[(2, 0)], c(1.0));
        assert!((xz.0[(3, 1)] - c(-1.0)).norm() < 1e-15);
    }

    #[test]
    fn trace_character_qubit() {
        let sys = PhaseSystem::pauli(2).unwrap();
        let oracle = Oracle::new(&sys);
        let h = ErrorLabel(vec![GroupElement::new(0, 1)]);
        let g = ErrorLabel(vec![GroupElement::new(1, 0)]);
        assert!((oracle.character(&h, &g).unwrap() - c(-1.0)).norm() < 1e-12);
        assert!((oracle.character(&ErrorLabel::identity(1), &g).unwrap() - c(1.0)).norm() < 1e-12);
    }

    #[test]
    fn size_cap_enforced() {
        let sys = PhaseSystem::pauli(2).unwrap();
        let oracle = Oracle::new(&sys);
        assert!(matches!(
            oracle.build_operator(&ErrorLabel::identity(9)),
            Err(OracleError::SizeCap { dim: 512, cap: 256 })
        ));
        let small = Oracle::with_cap(&sys, 4);
        assert!(small.build_operator(&ErrorLabel::identity(2)).is_ok());
        assert!(small.build_operator(&ErrorLabel::identity(3)).is_err());
    }

    #[test]
    fn axioms_pass_for_pauli() {
        for m in [2, 3] {
            let sys = PhaseSystem::pauli(m).unwrap();
            let report = Oracle::new(&sys).verify_basis_axioms().unwrap();
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.pairs_checked, m.pow(4));
        }
    }

    #[test]
    fn corrupted_phase_table_flagged() {
        let sys = PhaseSystem::pauli(2).unwrap();
        let mut omega = sys.omega_table().to_vec();
        omega[2 * 4 + 1] = c(-1.0);
        let bad = PhaseSystem::from_raw_parts(2, omega, sys.operators().to_vec()).unwrap();
        let report = Oracle::new(&bad).verify_basis_axioms().unwrap();
        assert!(!report.passed());
        assert!(report.failures.iter().any(|f| f.contains("omega")));
    }

    #[test]
    fn full_space_elements() {
        let sys = PhaseSystem::pauli(2).unwrap();
        let oracle = Oracle::new(&sys);
        let code = CodeSpec::full_space(2, 2).unwrap();
        let assoc = oracle.associated_element(&code).unwrap();
        assert_eq!(assoc.support(1e-12), vec![0]);
        let dual = oracle.dual_element(&code).unwrap();
        assert!(dual.coeffs().iter().all(|x| (x - c(1.0)).norm() < 1e-12));
    }
}
