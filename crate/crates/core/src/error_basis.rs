//! Nice error bases with index group `Z_m x Z_m`.
//!
//! A [`PhaseSystem`] bundles everything downstream code needs from a basis:
//! the fixed ordering of group elements, the phase table `omega[g][h]`
//! defined by `E_g E_h = omega[g][h] E_{g+h}`, the character kernel
//! `kernel[h][g] = omega[h][g] * conj(omega[g][h])`, and the single-system
//! operators themselves (kept as small `m x m` matrices, never tensored up).
//!
//! Group elements are addressed by their *digit*, the position in the
//! [`GroupOrdering`]. All tables are stored by digit.

use std::f64::consts::PI;
use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::TOLERANCE;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BasisError {
    #[error("level count must be at least 2, got {0}")]
    InvalidLevelCount(usize),
    #[error("expected {expected} matrices for m = {m}, found {found}")]
    WrongMatrixCount { m: usize, expected: usize, found: usize },
    #[error("matrix {index} is {rows}x{cols}, expected {m}x{m}")]
    WrongMatrixShape { index: GroupElement, rows: usize, cols: usize, m: usize },
    #[error("matrix {index} is not unitary (residual {residual:.3e})")]
    NonUnitary { index: GroupElement, residual: f64 },
    #[error("E_0 is not the identity (residual {residual:.3e})")]
    IdentityViolation { residual: f64 },
    #[error("tr E_{index} = {trace}, expected {expected}")]
    TraceViolation { index: GroupElement, trace: Complex64, expected: f64 },
    #[error("E_{g} E_{h} is not a unit-modulus multiple of E_{{g+h}} (residual {residual:.3e})")]
    ClosureViolation { g: GroupElement, h: GroupElement, residual: f64 },
    #[error("character sum for h = {h} does not vanish (|sum| = {residual:.3e})")]
    Lemma1Violation { h: GroupElement, residual: f64 },
}

/// An element `(a, b)` of `Z_m x Z_m`; `a` is the X exponent, `b` the Z exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupElement {
    pub a: usize,
    pub b: usize,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { a: 0, b: 0 };

    pub fn new(a: usize, b: usize) -> Self {
        GroupElement { a, b }
    }

    /// Reduces arbitrary integer exponents into `0..m`.
    pub fn reduced(a: i64, b: i64, m: usize) -> Self {
        let m = m as i64;
        GroupElement {
            a: a.rem_euclid(m) as usize,
            b: b.rem_euclid(m) as usize,
        }
    }

    pub fn add(self, other: GroupElement, m: usize) -> Self {
        GroupElement {
            a: (self.a + other.a) % m,
            b: (self.b + other.b) % m,
        }
    }

    pub fn neg(self, m: usize) -> Self {
        GroupElement {
            a: (m - self.a) % m,
            b: (m - self.b) % m,
        }
    }

    pub fn is_identity(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_valid(self, m: usize) -> bool {
        self.a < m && self.b < m
    }

    fn row_major(self, m: usize) -> usize {
        self.a * m + self.b
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// The fixed enumeration `alpha_0 = 0, alpha_1, ..., alpha_{m^2-1}` of the
/// index group.
///
/// For even `m` this is row-major `(a, b)` order. For odd `m` the nonzero
/// elements are paired with their negations: `alpha_1..=alpha_delta` are the
/// lexicographically smaller member of each pair (in row-major order) and
/// `alpha_{m^2-i} = -alpha_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupOrdering {
    m: usize,
    order: Vec<GroupElement>,
    position: Vec<usize>,
    add_table: Vec<usize>,
    neg_table: Vec<usize>,
    lee_delta: Option<usize>,
}

impl GroupOrdering {
    pub fn new(m: usize) -> Result<Self, BasisError> {
        if m < 2 {
            return Err(BasisError::InvalidLevelCount(m));
        }
        let q = m * m;
        let row_major: Vec<GroupElement> = (0..m)
            .flat_map(|a| (0..m).map(move |b| GroupElement::new(a, b)))
            .collect();

        let (order, lee_delta) = if m % 2 == 1 {
            let delta = (q - 1) / 2;
            let mut order = vec![GroupElement::IDENTITY; q];
            let mut next = 1;
            for &g in &row_major[1..] {
                let neg = g.neg(m);
                if g < neg {
                    order[next] = g;
                    order[q - next] = neg;
                    next += 1;
                }
            }
            debug_assert_eq!(next, delta + 1);
            (order, Some(delta))
        } else {
            (row_major, None)
        };

        let mut position = vec![0; q];
        for (digit, g) in order.iter().enumerate() {
            position[g.row_major(m)] = digit;
        }
        let mut add_table = vec![0; q * q];
        for (i, &g) in order.iter().enumerate() {
            for (j, &h) in order.iter().enumerate() {
                add_table[i * q + j] = position[g.add(h, m).row_major(m)];
            }
        }
        let neg_table = order.iter().map(|g| position[g.neg(m).row_major(m)]).collect();

        Ok(GroupOrdering {
            m,
            order,
            position,
            add_table,
            neg_table,
            lee_delta,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Group order `m^2`.
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.order
    }

    pub fn element(&self, digit: usize) -> GroupElement {
        self.order[digit]
    }

    /// Position of `g` in the ordering.
    pub fn digit(&self, g: GroupElement) -> usize {
        self.position[g.row_major(self.m)]
    }

    pub fn add_digits(&self, i: usize, j: usize) -> usize {
        self.add_table[i * self.order.len() + j]
    }

    pub fn neg_digit(&self, i: usize) -> usize {
        self.neg_table[i]
    }

    /// `(m^2 - 1) / 2` for odd `m`, `None` otherwise.
    pub fn lee_delta(&self) -> Option<usize> {
        self.lee_delta
    }
}

/// A label `g = (g_1, ..., g_n)` in `G^n`, naming the operator
/// `E_{g_1} (x) ... (x) E_{g_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ErrorLabel(pub Vec<GroupElement>);

impl ErrorLabel {
    pub fn identity(n: usize) -> Self {
        ErrorLabel(vec![GroupElement::IDENTITY; n])
    }

    pub fn coords(&self) -> &[GroupElement] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of non-identity coordinates.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|g| !g.is_identity()).count()
    }

    pub fn add(&self, other: &ErrorLabel, m: usize) -> ErrorLabel {
        assert_eq!(self.len(), other.len(), "label lengths differ");
        ErrorLabel(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&g, &h)| g.add(h, m))
                .collect(),
        )
    }

    pub fn digits(&self, ordering: &GroupOrdering) -> Vec<usize> {
        self.0.iter().map(|&g| ordering.digit(g)).collect()
    }

    /// Mixed-radix index, coordinate 0 most significant.
    pub fn index(&self, ordering: &GroupOrdering) -> usize {
        let q = ordering.len();
        self.0.iter().fold(0, |acc, &g| acc * q + ordering.digit(g))
    }

    pub fn from_index(index: usize, n: usize, ordering: &GroupOrdering) -> Self {
        ErrorLabel(
            index_digits(index, ordering.len(), n)
                .into_iter()
                .map(|d| ordering.element(d))
                .collect(),
        )
    }

    pub fn from_digits(digits: &[usize], ordering: &GroupOrdering) -> Self {
        ErrorLabel(digits.iter().map(|&d| ordering.element(d)).collect())
    }
}

impl fmt::Display for ErrorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{},{}", g.a, g.b)?;
        }
        Ok(())
    }
}

/// Splits a mixed-radix index into `n` base-`q` digits, most significant first.
pub fn index_digits(mut index: usize, q: usize, n: usize) -> Vec<usize> {
    let mut digits = vec![0; n];
    for slot in digits.iter_mut().rev() {
        *slot = index % q;
        index /= q;
    }
    digits
}

/// The phase data of a nice error basis on one `m`-level system.
#[derive(Debug, Clone)]
pub struct PhaseSystem {
    m: usize,
    ordering: GroupOrdering,
    omega: Vec<Complex64>,
    kernel: Vec<Complex64>,
    operators: Vec<DMatrix<Complex64>>,
    sparse_rows: Vec<Vec<Vec<(usize, Complex64)>>>,
}

fn root_of_unity(k: i64, m: usize) -> Complex64 {
    let k = k.rem_euclid(m as i64);
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64)
}

impl PhaseSystem {
    /// The generalized Pauli basis `E_(a,b) = X^a Z^b` with
    /// `X|j> = |j+1 mod m>` and `Z|j> = w^j |j>`, `w = exp(2 pi i / m)`.
    pub fn pauli(m: usize) -> Result<Self, BasisError> {
        let ordering = GroupOrdering::new(m)?;
        let q = m * m;

        let mut omega = vec![Complex64::new(0.0, 0.0); q * q];
        for (i, g) in ordering.elements().iter().enumerate() {
            for (j, h) in ordering.elements().iter().enumerate() {
                // Z^b X^c = w^{bc} X^c Z^b
                omega[i * q + j] = root_of_unity((g.b * h.a) as i64, m);
            }
        }

        let operators = ordering
            .elements()
            .iter()
            .map(|g| {
                let mut op = DMatrix::zeros(m, m);
                for j in 0..m {
                    op[((j + g.a) % m, j)] = root_of_unity((g.b * j) as i64, m);
                }
                op
            })
            .collect();

        Ok(Self::assemble(ordering, omega, operators))
    }

    /// Validates `m^2` user-supplied unitaries, indexed in [`GroupOrdering`]
    /// order, against the nice error basis axioms and extracts their phase
    /// table.
    pub fn from_matrices(m: usize, matrices: Vec<DMatrix<Complex64>>) -> Result<Self, BasisError> {
        let ordering = GroupOrdering::new(m)?;
        let q = m * m;
        if matrices.len() != q {
            return Err(BasisError::WrongMatrixCount {
                m,
                expected: q,
                found: matrices.len(),
            });
        }
        let identity = DMatrix::<Complex64>::identity(m, m);
        for (digit, e) in matrices.iter().enumerate() {
            let index = ordering.element(digit);
            if e.nrows() != m || e.ncols() != m {
                return Err(BasisError::WrongMatrixShape {
                    index,
                    rows: e.nrows(),
                    cols: e.ncols(),
                    m,
                });
            }
            let residual = max_abs(&(e.adjoint() * e - &identity));
            if residual > TOLERANCE {
                return Err(BasisError::NonUnitary { index, residual });
            }
        }

        let residual = max_abs(&(&matrices[0] - &identity));
        if residual > TOLERANCE {
            return Err(BasisError::IdentityViolation { residual });
        }
        for (digit, e) in matrices.iter().enumerate() {
            let trace = e.trace();
            let expected = if digit == 0 { m as f64 } else { 0.0 };
            if (trace - expected).norm() > TOLERANCE {
                return Err(BasisError::TraceViolation {
                    index: ordering.element(digit),
                    trace,
                    expected,
                });
            }
        }

        let mut omega = vec![Complex64::new(0.0, 0.0); q * q];
        for i in 0..q {
            for j in 0..q {
                let product = &matrices[i] * &matrices[j];
                let target = &matrices[ordering.add_digits(i, j)];
                let phase = (target.adjoint() * &product).trace() / m as f64;
                let residual =
                    max_abs(&(&product - target * phase)).max((phase.norm() - 1.0).abs());
                if residual > TOLERANCE {
                    return Err(BasisError::ClosureViolation {
                        g: ordering.element(i),
                        h: ordering.element(j),
                        residual,
                    });
                }
                omega[i * q + j] = phase;
            }
        }

        let sys = Self::assemble(ordering, omega, matrices);
        let report = sys.verify_lemma1();
        if let Some(&(h, residual)) = report.violations.first() {
            return Err(BasisError::Lemma1Violation { h, residual });
        }
        Ok(sys)
    }

    /// Builds a system from a phase table and operators without checking
    /// either. Used to construct negative controls for the axiom checks.
    pub fn from_raw_parts(
        m: usize,
        omega: Vec<Complex64>,
        operators: Vec<DMatrix<Complex64>>,
    ) -> Result<Self, BasisError> {
        let ordering = GroupOrdering::new(m)?;
        let q = m * m;
        if omega.len() != q * q || operators.len() != q {
            return Err(BasisError::WrongMatrixCount {
                m,
                expected: q,
                found: operators.len(),
            });
        }
        Ok(Self::assemble(ordering, omega, operators))
    }

    fn assemble(
        ordering: GroupOrdering,
        omega: Vec<Complex64>,
        operators: Vec<DMatrix<Complex64>>,
    ) -> Self {
        let m = ordering.m();
        let q = ordering.len();
        let mut kernel = vec![Complex64::new(0.0, 0.0); q * q];
        for h in 0..q {
            for g in 0..q {
                kernel[h * q + g] = omega[h * q + g] * omega[g * q + h].conj();
            }
        }
        let sparse_rows = operators
            .iter()
            .map(|op| {
                (0..m)
                    .map(|r| {
                        (0..m)
                            .filter(|&c| op[(r, c)].norm() > 0.0)
                            .map(|c| (c, op[(r, c)]))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        PhaseSystem {
            m,
            ordering,
            omega,
            kernel,
            operators,
            sparse_rows,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Group order `m^2`.
    pub fn group_order(&self) -> usize {
        self.m * self.m
    }

    pub fn ordering(&self) -> &GroupOrdering {
        &self.ordering
    }

    /// `omega_{gh}` by digits.
    pub fn omega_digits(&self, g: usize, h: usize) -> Complex64 {
        self.omega[g * self.group_order() + h]
    }

    pub fn omega(&self, g: GroupElement, h: GroupElement) -> Complex64 {
        self.omega_digits(self.ordering.digit(g), self.ordering.digit(h))
    }

    /// Flat `m^2 x m^2` phase table, `omega[g * m^2 + h]`.
    pub fn omega_table(&self) -> &[Complex64] {
        &self.omega
    }

    /// Flat `m^2 x m^2` kernel, `kernel[h * m^2 + g] = omega_{hg} conj(omega_{gh})`.
    pub fn kernel(&self) -> &[Complex64] {
        &self.kernel
    }

    pub fn kernel_digits(&self, h: usize, g: usize) -> Complex64 {
        self.kernel[h * self.group_order() + g]
    }

    /// The per-coordinate character value `chi_h(z^g)` for one system.
    pub fn character(&self, h: GroupElement, g: GroupElement) -> Complex64 {
        self.kernel_digits(self.ordering.digit(h), self.ordering.digit(g))
    }

    /// `chi_h(z^g)` on `G^n`: the product of per-coordinate characters.
    pub fn label_character(&self, h: &ErrorLabel, g: &ErrorLabel) -> Complex64 {
        h.coords()
            .iter()
            .zip(g.coords())
            .map(|(&hi, &gi)| self.character(hi, gi))
            .product()
    }

    /// Single-system operator `E_g`, by digit.
    pub fn operator(&self, digit: usize) -> &DMatrix<Complex64> {
        &self.operators[digit]
    }

    pub fn operators(&self) -> &[DMatrix<Complex64>] {
        &self.operators
    }

    /// Nonzero entries of `E_g` grouped by row, by digit.
    pub(crate) fn sparse_rows(&self, digit: usize) -> &[Vec<(usize, Complex64)>] {
        &self.sparse_rows[digit]
    }

    /// The scalar `lambda` with `E_g^m = lambda I`, computed from the phase
    /// table as `prod_{j=1}^{m-1} omega_{g, j g}`.
    pub fn power_phase(&self, digit: usize) -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        let mut multiple = digit;
        for _ in 1..self.m {
            acc *= self.omega_digits(digit, multiple);
            multiple = self.ordering.add_digits(multiple, digit);
        }
        acc
    }

    /// Checks that `sum_g omega_{gh} conj(omega_{hg})` vanishes for every
    /// nonzero `h`.
    pub fn verify_lemma1(&self) -> Lemma1Report {
        let q = self.group_order();
        let mut max_residual: f64 = 0.0;
        let mut violations = Vec::new();
        for h in 1..q {
            let sum: Complex64 = (0..q)
                .map(|g| self.omega_digits(g, h) * self.omega_digits(h, g).conj())
                .sum();
            let residual = sum.norm();
            max_residual = max_residual.max(residual);
            if residual > TOLERANCE {
                violations.push((self.ordering.element(h), residual));
            }
        }
        Lemma1Report {
            m: self.m,
            max_residual,
            violations,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Lemma1Report {
    pub m: usize,
    pub max_residual: f64,
    pub violations: Vec<(GroupElement, f64)>,
}

impl Lemma1Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn max_abs(mat: &DMatrix<Complex64>) -> f64 {
    mat.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn rejects_small_m() {
        assert_eq!(
            PhaseSystem::pauli(1).unwrap_err(),
            BasisError::InvalidLevelCount(1)
        );
        assert!(GroupOrdering::new(0).is_err());
    }

    #[test]
    fn qubit_phases() {
        let sys = PhaseSystem::pauli(2).unwrap();
        let x = GroupElement::new(1, 0);
        let z = GroupElement::new(0, 1);
        assert!(close(sys.omega(x, z), Complex64::new(1.0, 0.0)));
        assert!(close(sys.omega(z, x), Complex64::new(-1.0, 0.0)));
        assert!(close(sys.character(z, x), Complex64::new(-1.0, 0.0)));
    }

    #[test]
    fn qutrit_phases() {
        let sys = PhaseSystem::pauli(3).unwrap();
        let w = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        let g = GroupElement::new(0, 1);
        let h = GroupElement::new(1, 0);
        assert!(close(sys.omega(g, h), w));
        assert!(close(sys.character(h, g), w.conj()));
    }

    #[test]
    fn identity_row_and_column() {
        for m in 2..=5 {
            let sys = PhaseSystem::pauli(m).unwrap();
            for &g in sys.ordering().elements() {
                assert!(close(sys.omega(GroupElement::IDENTITY, g), 1.0.into()));
                assert!(close(sys.omega(g, GroupElement::IDENTITY), 1.0.into()));
                assert!(close(sys.character(g, GroupElement::IDENTITY), 1.0.into()));
            }
        }
    }

    #[test]
    fn kernel_matches_symplectic_form() {
        for m in 2..=5 {
            let sys = PhaseSystem::pauli(m).unwrap();
            for &g in sys.ordering().elements() {
                for &h in sys.ordering().elements() {
                    let exponent = (h.b * g.a) as i64 - (g.b * h.a) as i64;
                    assert!(close(sys.character(h, g), root_of_unity(exponent, m)));
                }
            }
        }
    }

    #[test]
    fn character_row_sums_small_cases() {
        let sys = PhaseSystem::pauli(2).unwrap();
        let h = sys.ordering().digit(GroupElement::new(0, 1));
        let terms: Vec<Complex64> = (0..4)
            .map(|g| sys.omega_digits(g, h) * sys.omega_digits(h, g).conj())
            .collect();
        let sum: Complex64 = terms.iter().sum();
        assert!(sum.norm() < 1e-12);
        for m in 2..=5 {
            let report = PhaseSystem::pauli(m).unwrap().verify_lemma1();
            assert!(report.passed(), "m = {m}: {report:?}");
            assert!(report.max_residual < 1e-9);
        }
        // h = 0 sums to m^2
        let sys = PhaseSystem::pauli(3).unwrap();
        let sum: Complex64 = (0..9).map(|g| sys.kernel_digits(0, g)).sum();
        assert!(close(sum, 9.0.into()));
    }

    #[test]
    fn ordering_even_is_row_major() {
        let ord = GroupOrdering::new(2).unwrap();
        let expected = [(0, 0), (0, 1), (1, 0), (1, 1)];
        for (digit, &(a, b)) in expected.iter().enumerate() {
            assert_eq!(ord.element(digit), GroupElement::new(a, b));
        }
        assert_eq!(ord.lee_delta(), None);
    }

    #[test]
    fn ordering_odd_pairs_negations() {
        for m in [3, 5, 7] {
            let ord = GroupOrdering::new(m).unwrap();
            let q = m * m;
            let delta = ord.lee_delta().unwrap();
            assert_eq!(delta, (q - 1) / 2);
            assert_eq!(ord.element(0), GroupElement::IDENTITY);
            let mut seen: Vec<_> = ord.elements().to_vec();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), q);
            for i in 1..=delta {
                assert_eq!(ord.element(q - i), ord.element(i).neg(m));
                assert!(ord.element(i) < ord.element(q - i));
            }
        }
        let ord = GroupOrdering::new(3).unwrap();
        assert_eq!(ord.element(1), GroupElement::new(0, 1));
        assert_eq!(ord.element(2), GroupElement::new(1, 0));
        assert_eq!(ord.element(8), GroupElement::new(0, 2));
    }

    #[test]
    fn label_index_roundtrip() {
        let ord = GroupOrdering::new(3).unwrap();
        for idx in 0..729 {
            let label = ErrorLabel::from_index(idx, 3, &ord);
            assert_eq!(label.index(&ord), idx);
        }
        let label = ErrorLabel(vec![
            GroupElement::new(1, 0),
            GroupElement::IDENTITY,
            GroupElement::new(2, 2),
        ]);
        assert_eq!(label.weight(), 2);
    }

    #[test]
    fn custom_basis_reproduces_pauli() {
        for m in 2..=4 {
            let pauli = PhaseSystem::pauli(m).unwrap();
            let custom = PhaseSystem::from_matrices(m, pauli.operators().to_vec()).unwrap();
            for (a, b) in pauli.omega_table().iter().zip(custom.omega_table()) {
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn custom_basis_rejections() {
        let pauli = PhaseSystem::pauli(2).unwrap();

        let mut ops = pauli.operators().to_vec();
        ops[0] = ops[3].clone();
        ops[3] = DMatrix::identity(2, 2);
        assert!(matches!(
            PhaseSystem::from_matrices(2, ops),
            Err(BasisError::IdentityViolation { .. })
        ));

        let mut ops = pauli.operators().to_vec();
        ops[2] *= Complex64::new(2.0, 0.0);
        assert!(matches!(
            PhaseSystem::from_matrices(2, ops),
            Err(BasisError::NonUnitary { index, .. }) if index == GroupElement::new(1, 0)
        ));

        let ops = pauli.operators()[..3].to_vec();
        assert!(matches!(
            PhaseSystem::from_matrices(2, ops),
            Err(BasisError::WrongMatrixCount { .. })
        ));

        // The phase gate is unitary but not traceless.
        let mut ops = pauli.operators().to_vec();
        ops[1] = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
        ]));
        let err = PhaseSystem::from_matrices(2, ops).unwrap_err();
        assert!(matches!(err, BasisError::TraceViolation { .. }), "{err}");

        // Swapping two operators breaks closure.
        let mut ops3 = PhaseSystem::pauli(3).unwrap().operators().to_vec();
        ops3.swap(1, 2);
        assert!(matches!(
            PhaseSystem::from_matrices(3, ops3),
            Err(BasisError::ClosureViolation { .. })
        ));
    }

    #[test]
    fn power_phase_qubit_y() {
        let sys = PhaseSystem::pauli(2).unwrap();
        let xz = sys.ordering().digit(GroupElement::new(1, 1));
        assert!(close(sys.power_phase(xz), Complex64::new(-1.0, 0.0)));
        let x = sys.ordering().digit(GroupElement::new(1, 0));
        assert!(close(sys.power_phase(x), Complex64::new(1.0, 0.0)));
    }
}
