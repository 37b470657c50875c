//! Weight distributions of algebra elements and the MacWilliams-type
//! identities that relate an element to its transform.
//!
//! The exact enumerator in `n m^2` variables is never expanded; its expansion
//! is the element itself. [`ExactEnumerator`] evaluates it by contracting one
//! coordinate at a time. The exact and complete identities are checked by
//! random evaluation on the complex unit disk, the Lee identity likewise, and
//! the Hamming identity symbolically by binomial expansion.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::error_basis::{index_digits, ErrorLabel, GroupOrdering, PhaseSystem};
use crate::group_algebra::{transform, AlgebraElement, AlgebraError};
use crate::TOLERANCE;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnumeratorError {
    #[error("the Lee enumerator needs an odd number of levels, got m = {0}")]
    EvenM(usize),
    #[error("expected {expected} variables, got {found}")]
    WrongVariableCount { expected: usize, found: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `(s_0, ..., s_{m^2-1})`: how many coordinates equal each `alpha_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Composition(pub Vec<usize>);

/// `(l_0, ..., l_delta)` with `l_i = s_i + s_{m^2-i}` for `i >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LeeKey(pub Vec<usize>);

pub fn composition(label: &ErrorLabel, ordering: &GroupOrdering) -> Composition {
    composition_of_digits(&label.digits(ordering), ordering.len())
}

fn composition_of_digits(digits: &[usize], q: usize) -> Composition {
    let mut counts = vec![0; q];
    for &d in digits {
        counts[d] += 1;
    }
    Composition(counts)
}

pub fn lee_composition(label: &ErrorLabel, ordering: &GroupOrdering) -> Result<LeeKey, EnumeratorError> {
    let delta = ordering
        .lee_delta()
        .ok_or(EnumeratorError::EvenM(ordering.m()))?;
    Ok(lee_from_composition(&composition(label, ordering), delta))
}

fn lee_from_composition(comp: &Composition, delta: usize) -> LeeKey {
    let q = comp.0.len();
    let mut key = vec![0; delta + 1];
    key[0] = comp.0[0];
    for (i, slot) in key.iter_mut().enumerate().skip(1) {
        *slot = comp.0[i] + comp.0[q - i];
    }
    LeeKey(key)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompleteDistribution {
    pub terms: BTreeMap<Composition, Complex64>,
}

impl CompleteDistribution {
    pub fn total(&self) -> Complex64 {
        self.terms.values().sum()
    }

    /// `W(z_0, ..., z_{m^2-1}) = sum_t A(t) prod_j z_j^{t_j}`.
    pub fn evaluate(&self, z: &[Complex64]) -> Result<Complex64, EnumeratorError> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (t, a) in &self.terms {
            if z.len() != t.0.len() {
                return Err(EnumeratorError::WrongVariableCount {
                    expected: t.0.len(),
                    found: z.len(),
                });
            }
            acc += a * monomial(z, &t.0);
        }
        Ok(acc)
    }

    /// Merges `z_{m^2-i}` into `z_i`; `delta` must be `(m^2-1)/2`.
    pub fn to_lee(&self, delta: usize) -> LeeDistribution {
        let mut terms = BTreeMap::new();
        for (t, a) in &self.terms {
            *terms
                .entry(lee_from_composition(t, delta))
                .or_insert(Complex64::new(0.0, 0.0)) += a;
        }
        LeeDistribution { terms, delta }
    }

    /// Sets `z_0 = x` and every other variable to `y`.
    pub fn to_hamming(&self, n: usize) -> HammingDistribution {
        let mut a = vec![Complex64::new(0.0, 0.0); n + 1];
        for (t, c) in &self.terms {
            a[n - t.0[0]] += c;
        }
        HammingDistribution { a }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LeeDistribution {
    pub terms: BTreeMap<LeeKey, Complex64>,
    pub delta: usize,
}

impl LeeDistribution {
    pub fn total(&self) -> Complex64 {
        self.terms.values().sum()
    }

    pub fn evaluate(&self, z: &[Complex64]) -> Result<Complex64, EnumeratorError> {
        if z.len() != self.delta + 1 {
            return Err(EnumeratorError::WrongVariableCount {
                expected: self.delta + 1,
                found: z.len(),
            });
        }
        Ok(self.terms.iter().map(|(t, a)| a * monomial(z, &t.0)).sum())
    }

    pub fn to_hamming(&self, n: usize) -> HammingDistribution {
        let mut a = vec![Complex64::new(0.0, 0.0); n + 1];
        for (t, c) in &self.terms {
            a[n - t.0[0]] += c;
        }
        HammingDistribution { a }
    }
}

/// `A_0, ..., A_n`, the coefficient mass at each Hamming weight.
#[derive(Debug, Clone, PartialEq)]
pub struct HammingDistribution {
    pub a: Vec<Complex64>,
}

impl HammingDistribution {
    pub fn n(&self) -> usize {
        self.a.len() - 1
    }

    pub fn total(&self) -> Complex64 {
        self.a.iter().sum()
    }

    /// `W(x, y) = sum_i A_i x^{n-i} y^i`.
    pub fn evaluate(&self, x: Complex64, y: Complex64) -> Complex64 {
        let n = self.n() as i32;
        self.a
            .iter()
            .enumerate()
            .map(|(i, c)| c * x.powi(n - i as i32) * y.powi(i as i32))
            .sum()
    }

    /// Integer-rounded coefficients when every one is within `tol` of a real
    /// integer, together with the largest rounding residual.
    pub fn as_integers(&self, tol: f64) -> Option<(Vec<i64>, f64)> {
        let mut residual: f64 = 0.0;
        let mut out = Vec::with_capacity(self.a.len());
        for c in &self.a {
            let r = c.re.round();
            let err = (c - Complex64::new(r, 0.0)).norm();
            if err > tol {
                return None;
            }
            residual = residual.max(err);
            out.push(r as i64);
        }
        Some((out, residual))
    }

    pub fn max_abs_diff(&self, other: &HammingDistribution) -> f64 {
        self.a
            .iter()
            .zip(&other.a)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }
}

fn monomial(z: &[Complex64], exponents: &[usize]) -> Complex64 {
    z.iter()
        .zip(exponents)
        .filter(|(_, &e)| e > 0)
        .map(|(zi, &e)| zi.powi(e as i32))
        .product()
}

pub fn complete_distribution(a: &AlgebraElement) -> CompleteDistribution {
    let q = a.group_order();
    let n = a.n();
    let mut terms = BTreeMap::new();
    for (i, c) in a.coeffs().iter().enumerate() {
        if c.norm() == 0.0 {
            continue;
        }
        let comp = composition_of_digits(&index_digits(i, q, n), q);
        *terms.entry(comp).or_insert(Complex64::new(0.0, 0.0)) += c;
    }
    CompleteDistribution { terms }
}

pub fn lee_distribution(a: &AlgebraElement) -> Result<LeeDistribution, EnumeratorError> {
    let ordering = GroupOrdering::new(a.m()).map_err(AlgebraError::from)?;
    let delta = ordering.lee_delta().ok_or(EnumeratorError::EvenM(a.m()))?;
    let q = a.group_order();
    let n = a.n();
    let mut terms = BTreeMap::new();
    for (i, c) in a.coeffs().iter().enumerate() {
        if c.norm() == 0.0 {
            continue;
        }
        let comp = composition_of_digits(&index_digits(i, q, n), q);
        *terms
            .entry(lee_from_composition(&comp, delta))
            .or_insert(Complex64::new(0.0, 0.0)) += c;
    }
    Ok(LeeDistribution { terms, delta })
}

pub fn hamming_distribution(a: &AlgebraElement) -> HammingDistribution {
    let mut dist = vec![Complex64::new(0.0, 0.0); a.n() + 1];
    for (i, c) in a.coeffs().iter().enumerate() {
        dist[a.weight_of(i)] += c;
    }
    HammingDistribution { a: dist }
}

/// The exact enumerator `sum_g c_g prod_i z_{i, g_i}` as an evaluable function.
pub struct ExactEnumerator<'a> {
    element: &'a AlgebraElement,
}

impl<'a> ExactEnumerator<'a> {
    pub fn new(element: &'a AlgebraElement) -> Self {
        ExactEnumerator { element }
    }

    /// `vars[i * m^2 + j]` is `z_{i, j}`.
    pub fn evaluate(&self, vars: &[Complex64]) -> Result<Complex64, EnumeratorError> {
        let q = self.element.group_order();
        let n = self.element.n();
        if vars.len() != n * q {
            return Err(EnumeratorError::WrongVariableCount {
                expected: n * q,
                found: vars.len(),
            });
        }
        // Contract the least significant coordinate first.
        let mut current = self.element.coeffs().to_vec();
        for i in (0..n).rev() {
            let z = &vars[i * q..(i + 1) * q];
            current = current
                .chunks(q)
                .map(|chunk| chunk.iter().zip(z).map(|(c, zi)| c * zi).sum())
                .collect();
        }
        Ok(current[0])
    }
}

/// The substitution `z_r <- sum_s kernel[s][r] z_s` applied to one block of
/// `m^2` variables.
pub fn macwilliams_substitution(sys: &PhaseSystem, z: &[Complex64]) -> Vec<Complex64> {
    let q = sys.group_order();
    (0..q)
        .map(|r| (0..q).map(|s| sys.kernel_digits(s, r) * z[s]).sum())
        .collect()
}

/// The Lee substitution
/// `z_i <- z_0 + sum_{s=1..delta} (kernel[s][i] + conj(kernel[s][i])) z_s`.
pub fn lee_substitution(sys: &PhaseSystem, z: &[Complex64]) -> Result<Vec<Complex64>, EnumeratorError> {
    let delta = sys
        .ordering()
        .lee_delta()
        .ok_or(EnumeratorError::EvenM(sys.m()))?;
    Ok((0..=delta)
        .map(|i| {
            let mut acc = z[0];
            for s in 1..=delta {
                let k = sys.kernel_digits(s, i);
                acc += (k + k.conj()) * z[s];
            }
            acc
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Identity {
    Exact,
    Complete,
    Lee,
    Hamming,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: Identity,
    pub trials: usize,
    pub seed: Option<u64>,
    pub max_residual: f64,
    pub passed: bool,
}

fn relative_residual(lhs: Complex64, rhs: Complex64) -> f64 {
    let diff = (lhs - rhs).norm();
    let scale = lhs.norm().max(rhs.norm());
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

/// A point drawn uniformly from the closed unit disk.
fn disk_point<R: Rng>(rng: &mut R) -> Complex64 {
    let r: f64 = rng.random::<f64>().sqrt();
    let theta: f64 = rng.random::<f64>() * std::f64::consts::TAU;
    Complex64::from_polar(r, theta)
}

fn disk_points(seed: u64, trial: usize, count: usize) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    (0..count).map(|_| disk_point(&mut rng)).collect()
}

fn evaluation_report<F>(
    identity: Identity,
    trials: usize,
    seed: u64,
    mut residual_at: F,
) -> Result<IdentityReport, EnumeratorError>
where
    F: FnMut(usize) -> Result<f64, EnumeratorError>,
{
    let mut max_residual: f64 = 0.0;
    for t in 0..trials {
        max_residual = max_residual.max(residual_at(t)?);
    }
    Ok(IdentityReport {
        identity,
        trials,
        seed: Some(seed),
        max_residual,
        passed: max_residual <= TOLERANCE,
    })
}

/// Exact-enumerator identity
/// `E_{C'}(z) = (1/M) E_C(per-coordinate substitution of z)`.
pub fn verify_theorem4(
    sys: &PhaseSystem,
    a: &AlgebraElement,
    trials: usize,
    seed: u64,
) -> Result<IdentityReport, EnumeratorError> {
    let dual = transform(sys, a)?;
    let mass = dual.source_mass;
    let q = sys.group_order();
    let n = a.n();
    let lhs_enum = ExactEnumerator::new(&dual.element);
    let rhs_enum = ExactEnumerator::new(a);
    evaluation_report(Identity::Exact, trials, seed, |t| {
        let z = disk_points(seed, t, n * q);
        let substituted: Vec<Complex64> = z
            .chunks(q)
            .flat_map(|block| macwilliams_substitution(sys, block))
            .collect();
        let lhs = lhs_enum.evaluate(&z)?;
        let rhs = rhs_enum.evaluate(&substituted)? / mass;
        Ok(relative_residual(lhs, rhs))
    })
}

/// Complete-enumerator identity in `m^2` variables.
pub fn verify_theorem6(
    sys: &PhaseSystem,
    a: &AlgebraElement,
    trials: usize,
    seed: u64,
) -> Result<IdentityReport, EnumeratorError> {
    let dual = transform(sys, a)?;
    let mass = dual.source_mass;
    let lhs_dist = complete_distribution(&dual.element);
    let rhs_dist = complete_distribution(a);
    let q = sys.group_order();
    evaluation_report(Identity::Complete, trials, seed, |t| {
        let z = disk_points(seed, t, q);
        let lhs = lhs_dist.evaluate(&z)?;
        let rhs = rhs_dist.evaluate(&macwilliams_substitution(sys, &z))? / mass;
        Ok(relative_residual(lhs, rhs))
    })
}

/// Lee-enumerator identity; odd `m` only.
pub fn verify_theorem8(
    sys: &PhaseSystem,
    a: &AlgebraElement,
    trials: usize,
    seed: u64,
) -> Result<IdentityReport, EnumeratorError> {
    let delta = sys
        .ordering()
        .lee_delta()
        .ok_or(EnumeratorError::EvenM(sys.m()))?;
    let dual = transform(sys, a)?;
    let mass = dual.source_mass;
    let lhs_dist = lee_distribution(&dual.element)?;
    let rhs_dist = lee_distribution(a)?;
    evaluation_report(Identity::Lee, trials, seed, |t| {
        let z = disk_points(seed, t, delta + 1);
        let lhs = lhs_dist.evaluate(&z)?;
        let rhs = rhs_dist.evaluate(&lee_substitution(sys, &z)?)? / mass;
        Ok(relative_residual(lhs, rhs))
    })
}

/// Coefficients of `(1/M) W_C(x + (m^2-1) y, x - y)` in the basis
/// `x^{n-i} y^i`.
pub fn hamming_macwilliams(dist: &HammingDistribution, m: usize, mass: Complex64) -> HammingDistribution {
    let n = dist.n();
    let q_minus_1 = (m * m - 1) as f64;
    let mut out = vec![Complex64::new(0.0, 0.0); n + 1];
    for (i, ai) in dist.a.iter().enumerate() {
        if ai.norm() == 0.0 {
            continue;
        }
        // (x + (q-1) y)^{n-i} (x - y)^i, coefficients indexed by power of y
        let left = binomial_row(n - i, 1.0, q_minus_1);
        let right = binomial_row(i, 1.0, -1.0);
        for (j, l) in left.iter().enumerate() {
            for (k, r) in right.iter().enumerate() {
                out[j + k] += ai * (l * r);
            }
        }
    }
    let inv = mass.inv();
    HammingDistribution {
        a: out.into_iter().map(|c| c * inv).collect(),
    }
}

/// Coefficients of `(x_coef * x + y_coef * y)^k` by power of `y`.
fn binomial_row(k: usize, x_coef: f64, y_coef: f64) -> Vec<f64> {
    let mut row = vec![1.0];
    for _ in 0..k {
        let mut next = vec![0.0; row.len() + 1];
        for (j, v) in row.iter().enumerate() {
            next[j] += v * x_coef;
            next[j + 1] += v * y_coef;
        }
        row = next;
    }
    row
}

/// Hamming identity, checked coefficient by coefficient.
pub fn verify_theorem9(sys: &PhaseSystem, a: &AlgebraElement) -> Result<IdentityReport, EnumeratorError> {
    let dual = transform(sys, a)?;
    let expected = hamming_macwilliams(&hamming_distribution(a), a.m(), dual.source_mass);
    let got = hamming_distribution(&dual.element);
    let max_residual = got
        .a
        .iter()
        .zip(&expected.a)
        .map(|(g, e)| (g - e).norm() / e.norm().max(1.0))
        .fold(0.0, f64::max);
    Ok(IdentityReport {
        identity: Identity::Hamming,
        trials: 1,
        seed: None,
        max_residual,
        passed: max_residual <= TOLERANCE,
    })
}
