//! Dense elements of the group algebra over `G^n` and their transform.
//!
//! Coefficients are stored in a flat array of length `m^(2n)`, indexed by the
//! mixed-radix encoding of a label: coordinate 0 is the most significant digit
//! and each digit is a position in the [`GroupOrdering`].
//!
//! The transform `c'_h = (1/M) sum_g c_g prod_i kernel[h_i][g_i]` factors over
//! coordinates, so the fast path applies the `m^2 x m^2` kernel along one axis
//! at a time. [`transform_naive`] does the double sum directly and exists to
//! certify the fast path.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::error_basis::{index_digits, BasisError, ErrorLabel, GroupOrdering, PhaseSystem};
use crate::{MASS_THRESHOLD, TOLERANCE};

/// Largest coefficient array we are willing to allocate.
pub const MAX_DENSE_LEN: usize = 1 << 26;

const PARALLEL_THRESHOLD: usize = 1 << 14;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("elements have different shapes: (m={}, n={}) vs (m={}, n={})", .left.0, .left.1, .right.0, .right.1)]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("expected {expected} coefficients, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("mass {mass} is zero; the transform is undefined")]
    ZeroMass { mass: Complex64 },
    #[error("system size must be at least 1")]
    EmptySystem,
    #[error("m^(2n) for m={m}, n={n} exceeds the dense storage limit")]
    TooLarge { m: usize, n: usize },
    #[error("element has m={element} but the error basis has m={basis}")]
    BasisMismatch { element: usize, basis: usize },
    #[error(transparent)]
    Basis(#[from] BasisError),
}

/// Number of coefficients `m^(2n)`, or `None` when it exceeds [`MAX_DENSE_LEN`].
pub fn dense_len(m: usize, n: usize) -> Option<usize> {
    (m * m)
        .checked_pow(n as u32)
        .filter(|&len| len <= MAX_DENSE_LEN)
}

/// An element `C = sum_g c_g z^g` of the group algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    m: usize,
    n: usize,
    coeffs: Vec<Complex64>,
    mass: Complex64,
}

impl AlgebraElement {
    pub fn zero(m: usize, n: usize) -> Result<Self, AlgebraError> {
        let len = checked_len(m, n)?;
        Ok(AlgebraElement {
            m,
            n,
            coeffs: vec![Complex64::new(0.0, 0.0); len],
            mass: Complex64::new(0.0, 0.0),
        })
    }

    pub fn from_coeffs(m: usize, n: usize, coeffs: Vec<Complex64>) -> Result<Self, AlgebraError> {
        let len = checked_len(m, n)?;
        if coeffs.len() != len {
            return Err(AlgebraError::WrongLength {
                expected: len,
                found: coeffs.len(),
            });
        }
        let mass = fixed_order_sum(&coeffs);
        Ok(AlgebraElement { m, n, coeffs, mass })
    }

    pub fn from_real(m: usize, n: usize, coeffs: &[f64]) -> Result<Self, AlgebraError> {
        Self::from_coeffs(m, n, coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// The monomial `z^g` for the label at `index`.
    pub fn monomial(m: usize, n: usize, index: usize) -> Result<Self, AlgebraError> {
        let mut el = Self::zero(m, n)?;
        if index >= el.coeffs.len() {
            return Err(AlgebraError::WrongLength {
                expected: el.coeffs.len(),
                found: index + 1,
            });
        }
        el.coeffs[index] = Complex64::new(1.0, 0.0);
        el.mass = Complex64::new(1.0, 0.0);
        Ok(el)
    }

    pub fn monomial_label(m: usize, label: &ErrorLabel) -> Result<Self, AlgebraError> {
        let ordering = GroupOrdering::new(m)?;
        Self::monomial(m, label.len(), label.index(&ordering))
    }

    /// `z^0`, the identity of the algebra.
    pub fn unit(m: usize, n: usize) -> Result<Self, AlgebraError> {
        Self::monomial(m, n, 0)
    }

    /// `sum_g z^g`.
    pub fn all_ones(m: usize, n: usize) -> Result<Self, AlgebraError> {
        let len = checked_len(m, n)?;
        Self::from_coeffs(m, n, vec![Complex64::new(1.0, 0.0); len])
    }

    /// Unit coefficients on `indices`, zero elsewhere.
    pub fn indicator<I: IntoIterator<Item = usize>>(
        m: usize,
        n: usize,
        indices: I,
    ) -> Result<Self, AlgebraError> {
        let mut coeffs = Self::zero(m, n)?.coeffs;
        let len = coeffs.len();
        for i in indices {
            if i >= len {
                return Err(AlgebraError::WrongLength {
                    expected: len,
                    found: i + 1,
                });
            }
            coeffs[i] = Complex64::new(1.0, 0.0);
        }
        Self::from_coeffs(m, n, coeffs)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Group order per coordinate, `m^2`.
    pub fn group_order(&self) -> usize {
        self.m * self.m
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> Complex64 {
        self.coeffs[index]
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Cached `M = sum_g c_g`.
    pub fn mass(&self) -> Complex64 {
        self.mass
    }

    /// Digits of the label at `index`.
    pub fn digits(&self, index: usize) -> Vec<usize> {
        index_digits(index, self.group_order(), self.n)
    }

    /// Hamming weight of the label at `index`.
    pub fn weight_of(&self, index: usize) -> usize {
        let q = self.group_order();
        let mut idx = index;
        let mut weight = 0;
        for _ in 0..self.n {
            if !idx.is_multiple_of(q) {
                weight += 1;
            }
            idx /= q;
        }
        weight
    }

    /// Indices whose coefficient modulus exceeds `tol`.
    pub fn support(&self, tol: f64) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.coeffs[i].norm() > tol)
            .collect()
    }

    pub fn max_abs_diff(&self, other: &AlgebraElement) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    fn check_shape(&self, other: &AlgebraElement) -> Result<(), AlgebraError> {
        if self.m != other.m || self.n != other.n {
            return Err(AlgebraError::ShapeMismatch {
                left: (self.m, self.n),
                right: (other.m, other.n),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_shape(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Self::from_coeffs(self.m, self.n, coeffs)
    }

    pub fn scale(&self, r: Complex64) -> AlgebraElement {
        let coeffs: Vec<Complex64> = self.coeffs.iter().map(|c| r * c).collect();
        let mass = fixed_order_sum(&coeffs);
        AlgebraElement {
            m: self.m,
            n: self.n,
            coeffs,
            mass,
        }
    }

    /// Group convolution: `out[k] = sum_{g+h=k} a_g b_h`.
    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_shape(other)?;
        let ordering = GroupOrdering::new(self.m)?;
        let q = self.group_order();
        let n = self.n;
        let mut out = vec![Complex64::new(0.0, 0.0); self.len()];
        let rhs: Vec<(Vec<usize>, Complex64)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm() != 0.0)
            .map(|(i, &c)| (index_digits(i, q, n), c))
            .collect();
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.norm() == 0.0 {
                continue;
            }
            let g = index_digits(i, q, n);
            for (h, b) in &rhs {
                let k = g
                    .iter()
                    .zip(h)
                    .fold(0, |acc, (&gi, &hi)| acc * q + ordering.add_digits(gi, hi));
                out[k] += a * b;
            }
        }
        Self::from_coeffs(self.m, self.n, out)
    }
}

fn checked_len(m: usize, n: usize) -> Result<usize, AlgebraError> {
    if m < 2 {
        return Err(BasisError::InvalidLevelCount(m).into());
    }
    if n == 0 {
        return Err(AlgebraError::EmptySystem);
    }
    dense_len(m, n).ok_or(AlgebraError::TooLarge { m, n })
}

fn fixed_order_sum(values: &[Complex64]) -> Complex64 {
    values.iter().sum()
}

/// The transform `C'` together with the mass used to normalize it.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformResult {
    pub element: AlgebraElement,
    pub source_mass: Complex64,
}

fn check_basis(sys: &PhaseSystem, a: &AlgebraElement) -> Result<(), AlgebraError> {
    if sys.m() != a.m() {
        return Err(AlgebraError::BasisMismatch {
            element: a.m(),
            basis: sys.m(),
        });
    }
    Ok(())
}

fn check_mass(a: &AlgebraElement) -> Result<Complex64, AlgebraError> {
    let mass = a.mass();
    if mass.norm() <= MASS_THRESHOLD {
        return Err(AlgebraError::ZeroMass { mass });
    }
    Ok(mass)
}

/// Applies a `q x q` matrix (`matrix[row * q + col]`) along every axis of a
/// `q^n` tensor stored coordinate-major.
pub(crate) fn apply_kernel_all_axes(data: &mut [Complex64], q: usize, n: usize, matrix: &[Complex64]) {
    for axis in 0..n {
        let stride = q.pow((n - 1 - axis) as u32);
        let block = q * stride;
        if data.len() >= PARALLEL_THRESHOLD && data.len() / block > 1 {
            data.par_chunks_mut(block)
                .for_each(|chunk| apply_kernel_block(chunk, q, stride, matrix));
        } else if data.len() >= PARALLEL_THRESHOLD && stride > 1 {
            apply_kernel_block_parallel(data, q, stride, matrix);
        } else {
            for chunk in data.chunks_mut(block) {
                apply_kernel_block(chunk, q, stride, matrix);
            }
        }
    }
}

fn apply_kernel_block(chunk: &mut [Complex64], q: usize, stride: usize, matrix: &[Complex64]) {
    let mut column = vec![Complex64::new(0.0, 0.0); q];
    for inner in 0..stride {
        for (g, slot) in column.iter_mut().enumerate() {
            *slot = chunk[g * stride + inner];
        }
        for h in 0..q {
            let row = &matrix[h * q..(h + 1) * q];
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, x) in row.iter().zip(&column) {
                acc += k * x;
            }
            chunk[h * stride + inner] = acc;
        }
    }
}

// Single block (axis 0): split the inner positions across workers instead.
fn apply_kernel_block_parallel(data: &mut [Complex64], q: usize, stride: usize, matrix: &[Complex64]) {
    let input = data.to_vec();
    let mut out = vec![Complex64::new(0.0, 0.0); data.len()];
    // out is filled row-of-kernel by row: each h-slab is contiguous.
    out.par_chunks_mut(stride).enumerate().for_each(|(h, slab)| {
        let row = &matrix[h * q..(h + 1) * q];
        for (inner, slot) in slab.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (g, k) in row.iter().enumerate() {
                acc += k * input[g * stride + inner];
            }
            *slot = acc;
        }
    });
    data.copy_from_slice(&out);
}

/// `chi_h(C) = sum_g c_g chi_h(z^g)` for every `h`, without the `1/M`
/// normalization. This map is linear and its `h = 0` entry equals the mass.
pub fn character_sums(sys: &PhaseSystem, a: &AlgebraElement) -> Result<Vec<Complex64>, AlgebraError> {
    check_basis(sys, a)?;
    let mut data = a.coeffs.clone();
    apply_kernel_all_axes(&mut data, a.group_order(), a.n, sys.kernel());
    Ok(data)
}

/// The transform `C' = (1/M) sum_h chi_h(C) z^h`, fast tensor-kernel path.
pub fn transform(sys: &PhaseSystem, a: &AlgebraElement) -> Result<TransformResult, AlgebraError> {
    check_basis(sys, a)?;
    let mass = check_mass(a)?;
    let mut data = character_sums(sys, a)?;
    let inv = mass.inv();
    data.iter_mut().for_each(|c| *c *= inv);
    Ok(TransformResult {
        element: AlgebraElement::from_coeffs(a.m, a.n, data)?,
        source_mass: mass,
    })
}

/// Reference transform by direct double summation, `O(m^(4n) n)`.
pub fn transform_naive(sys: &PhaseSystem, a: &AlgebraElement) -> Result<TransformResult, AlgebraError> {
    check_basis(sys, a)?;
    let mass = check_mass(a)?;
    let q = a.group_order();
    let n = a.n;
    let labels: Vec<Vec<usize>> = (0..a.len()).map(|i| index_digits(i, q, n)).collect();
    let coeffs: Vec<Complex64> = labels
        .iter()
        .map(|h| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (g, c) in labels.iter().zip(&a.coeffs) {
                let chi: Complex64 = h
                    .iter()
                    .zip(g)
                    .map(|(&hi, &gi)| sys.kernel_digits(hi, gi))
                    .product();
                acc += c * chi;
            }
            acc / mass
        })
        .collect();
    Ok(TransformResult {
        element: AlgebraElement::from_coeffs(a.m, n, coeffs)?,
        source_mass: mass,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingReport {
    pub mass: (f64, f64),
    pub dual_mass: (f64, f64),
    pub max_residual: f64,
    pub passed: bool,
}

/// Checks `transform(transform(A)) = m^(2n) / (M M') * A` elementwise.
pub fn double_transform_scaling_check(
    sys: &PhaseSystem,
    a: &AlgebraElement,
) -> Result<ScalingReport, AlgebraError> {
    let first = transform(sys, a)?;
    let second = transform(sys, &first.element)?;
    let dual_mass = second.source_mass;
    let factor = a.len() as f64 / (first.source_mass * dual_mass);
    let max_residual = second
        .element
        .coeffs
        .iter()
        .zip(&a.coeffs)
        .map(|(got, orig)| (got - factor * orig).norm())
        .fold(0.0, f64::max);
    Ok(ScalingReport {
        mass: (first.source_mass.re, first.source_mass.im),
        dual_mass: (dual_mass.re, dual_mass.im),
        max_residual,
        passed: max_residual <= TOLERANCE,
    })
}
