//! Quantum codes as group-algebra elements.
//!
//! A code given by orthonormal basis vectors `v_1..v_K` maps to
//! `c_g = |sum_i <v_i|E_g|v_i>|^2 / K^2`, and its dual element is
//! `c'_h = (1/K) sum_{i,j} |<v_i|E_h|v_j>|^2`. A stabilizer code maps to the
//! indicator of its stabilizer in `G^n`, and its dual to the indicator of the
//! normalizer.
//!
//! Operators `E_g` act on state vectors one tensor factor at a time; the
//! `m^n x m^n` matrices are never formed here.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::enumerators::{hamming_distribution, HammingDistribution};
use crate::error_basis::{BasisError, ErrorLabel, PhaseSystem};
use crate::group_algebra::{dense_len, transform, AlgebraElement, AlgebraError};
use crate::TOLERANCE;

/// Tolerance on `m^n / M` being an integer.
pub const DIMENSION_TOLERANCE: f64 = 1e-6;

const MAX_RANDOM_RETRIES: u64 = 8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CodeError {
    #[error("m^(2n) for m={m}, n={n} exceeds the dense storage limit")]
    TooLarge { m: usize, n: usize },
    #[error("a code needs at least one basis vector")]
    EmptyBasis,
    #[error("{k} basis vectors exceed the space dimension {dim}")]
    TooManyVectors { k: usize, dim: usize },
    #[error("basis vector {index} has length {found}, expected {expected}")]
    WrongVectorLength { index: usize, expected: usize, found: usize },
    #[error("basis vectors {i} and {j} are not orthonormal (<v_i|v_j> = {inner})")]
    NonOrthonormalBasis { i: usize, j: usize, inner: Complex64 },
    #[error("generator {index} has {found} coordinates, expected {expected}")]
    WrongLabelLength { index: usize, expected: usize, found: usize },
    #[error("generator {index} has an exponent outside 0..{m}")]
    InvalidLabel { index: usize, m: usize },
    #[error("generators {i} and {j} do not commute")]
    NonCommutingGenerators { i: usize, j: usize },
    #[error("stabilizer group reached {size} elements, more than the cap {cap}")]
    ClosureOverflow { size: usize, cap: usize },
    #[error("coefficient {index} is {value}, but code elements are real and non-negative")]
    InvalidCoefficient { index: usize, value: Complex64 },
    #[error("generator {index}: phase exponent {phase} does not give an operator with S^m = I")]
    InvalidGeneratorPhase { index: usize, phase: i64 },
    #[error("stabilizer generators fix a space of dimension {found}, expected {expected}")]
    InconsistentStabilizer { expected: usize, found: usize },
    #[error("m^n / M = {value} is not an integer")]
    NonIntegerDimension { value: f64 },
    #[error("K = {k} > 1 but the element and its transform agree everywhere")]
    NoDistance { k: usize },
    #[error("random code generation failed to reach rank {k} after {attempts} attempts")]
    RankDeficient { k: usize, attempts: u64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Basis(#[from] BasisError),
}

/// One stabilizer generator `exp(i pi p / m) E_g`.
///
/// When `phase` is `None` the phase is chosen so that `S^m = I`. For qubits
/// `Y = i X Z` is the label `(1,1)` with phase `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub label: ErrorLabel,
    pub phase: Option<i64>,
}

impl Generator {
    pub fn new(label: ErrorLabel) -> Self {
        Generator { label, phase: None }
    }

    pub fn with_phase(label: ErrorLabel, phase: i64) -> Self {
        Generator {
            label,
            phase: Some(phase),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CodeBody {
    BasisVectors(Vec<Vec<Complex64>>),
    Stabilizer(Vec<Generator>),
}

/// A code on `n` systems with `m` levels.
#[derive(Debug, Clone, PartialEq)]
pub struct CodeSpec {
    m: usize,
    n: usize,
    body: CodeBody,
}

fn state_dim(m: usize, n: usize) -> Result<usize, CodeError> {
    if m < 2 {
        return Err(BasisError::InvalidLevelCount(m).into());
    }
    if n == 0 {
        return Err(AlgebraError::EmptySystem.into());
    }
    dense_len(m, n).ok_or(CodeError::TooLarge { m, n })?;
    Ok(m.pow(n as u32))
}

fn inner(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

impl CodeSpec {
    /// A code spanned by orthonormal vectors of length `m^n`; qudit 0 is the
    /// most significant index digit.
    pub fn from_basis(m: usize, n: usize, vectors: Vec<Vec<Complex64>>) -> Result<Self, CodeError> {
        let dim = state_dim(m, n)?;
        if vectors.is_empty() {
            return Err(CodeError::EmptyBasis);
        }
        if vectors.len() > dim {
            return Err(CodeError::TooManyVectors {
                k: vectors.len(),
                dim,
            });
        }
        for (index, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(CodeError::WrongVectorLength {
                    index,
                    expected: dim,
                    found: v.len(),
                });
            }
        }
        for i in 0..vectors.len() {
            for j in i..vectors.len() {
                let ip = inner(&vectors[i], &vectors[j]);
                let expected = if i == j { 1.0 } else { 0.0 };
                if (ip - expected).norm() > TOLERANCE {
                    return Err(CodeError::NonOrthonormalBasis { i, j, inner: ip });
                }
            }
        }
        Ok(CodeSpec {
            m,
            n,
            body: CodeBody::BasisVectors(vectors),
        })
    }

    pub fn from_generators(m: usize, n: usize, generators: Vec<Generator>) -> Result<Self, CodeError> {
        state_dim(m, n)?;
        for (index, g) in generators.iter().enumerate() {
            if g.label.len() != n {
                return Err(CodeError::WrongLabelLength {
                    index,
                    expected: n,
                    found: g.label.len(),
                });
            }
            if g.label.coords().iter().any(|e| !e.is_valid(m)) {
                return Err(CodeError::InvalidLabel { index, m });
            }
        }
        Ok(CodeSpec {
            m,
            n,
            body: CodeBody::Stabilizer(generators),
        })
    }

    /// The whole space, spanned by the computational basis.
    pub fn full_space(m: usize, n: usize) -> Result<Self, CodeError> {
        let dim = state_dim(m, n)?;
        let vectors = (0..dim)
            .map(|i| {
                let mut v = vec![Complex64::new(0.0, 0.0); dim];
                v[i] = Complex64::new(1.0, 0.0);
                v
            })
            .collect();
        Self::from_basis(m, n, vectors)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn body(&self) -> &CodeBody {
        &self.body
    }

    pub fn basis_vectors(&self) -> Option<&[Vec<Complex64>]> {
        match &self.body {
            CodeBody::BasisVectors(v) => Some(v),
            CodeBody::Stabilizer(_) => None,
        }
    }

    pub fn generators(&self) -> Option<&[Generator]> {
        match &self.body {
            CodeBody::Stabilizer(g) => Some(g),
            CodeBody::BasisVectors(_) => None,
        }
    }

    fn check_system(&self, sys: &PhaseSystem) -> Result<(), CodeError> {
        if sys.m() != self.m {
            return Err(AlgebraError::BasisMismatch {
                element: self.m,
                basis: sys.m(),
            }
            .into());
        }
        Ok(())
    }
}

/// Applies the single-system operator `E_digit` to qudit `axis` of `input`.
pub(crate) fn apply_factor(
    sys: &PhaseSystem,
    digit: usize,
    axis: usize,
    n: usize,
    input: &[Complex64],
    output: &mut [Complex64],
) {
    let m = sys.m();
    let stride = m.pow((n - 1 - axis) as u32);
    let rows = sys.sparse_rows(digit);
    for (in_block, out_block) in input.chunks(m * stride).zip(output.chunks_mut(m * stride)) {
        for (r, entries) in rows.iter().enumerate() {
            let out_row = &mut out_block[r * stride..(r + 1) * stride];
            out_row.iter_mut().for_each(|x| *x = Complex64::new(0.0, 0.0));
            for &(c, v) in entries {
                let in_row = &in_block[c * stride..(c + 1) * stride];
                for (o, x) in out_row.iter_mut().zip(in_row) {
                    *o += v * x;
                }
            }
        }
    }
}

/// `E_g |state>` for a full label.
pub fn apply_label(sys: &PhaseSystem, label: &ErrorLabel, state: &[Complex64]) -> Vec<Complex64> {
    let n = label.len();
    let mut current = state.to_vec();
    let mut scratch = vec![Complex64::new(0.0, 0.0); state.len()];
    for (axis, &g) in label.coords().iter().enumerate() {
        if g.is_identity() {
            continue;
        }
        apply_factor(sys, sys.ordering().digit(g), axis, n, &current, &mut scratch);
        std::mem::swap(&mut current, &mut scratch);
    }
    current
}

/// For every label `g`: `sum_i <v_i|E_g|v_i>` and `sum_{i,j} |<v_i|E_g|v_j>|^2`.
///
/// Labels are enumerated depth-first so that each tensor factor is applied
/// once per prefix; the first coordinate is split across workers.
fn overlap_tables(sys: &PhaseSystem, n: usize, vectors: &[Vec<Complex64>]) -> (Vec<Complex64>, Vec<f64>) {
    let q = sys.group_order();
    let block = q.pow((n - 1) as u32);
    let total = block * q;
    let mut traces = vec![Complex64::new(0.0, 0.0); total];
    let mut frob = vec![0.0; total];

    traces
        .par_chunks_mut(block)
        .zip(frob.par_chunks_mut(block))
        .enumerate()
        .for_each(|(first, (trace_out, frob_out))| {
            let dim = vectors[0].len();
            let mut levels: Vec<Vec<Vec<Complex64>>> =
                vec![vec![vec![Complex64::new(0.0, 0.0); dim]; vectors.len()]; n + 1];
            levels[0] = vectors.to_vec();
            let mut walker = OverlapWalker {
                sys,
                n,
                q,
                vectors,
                trace_out,
                frob_out,
                pos: 0,
            };
            walker.descend(&mut levels, 0, Some(first));
        });
    (traces, frob)
}

struct OverlapWalker<'a> {
    sys: &'a PhaseSystem,
    n: usize,
    q: usize,
    vectors: &'a [Vec<Complex64>],
    trace_out: &'a mut [Complex64],
    frob_out: &'a mut [f64],
    pos: usize,
}

impl OverlapWalker<'_> {
    fn descend(&mut self, levels: &mut [Vec<Vec<Complex64>>], level: usize, only: Option<usize>) {
        if level == self.n {
            let states = &levels[self.n];
            let mut trace = Complex64::new(0.0, 0.0);
            let mut frob = 0.0;
            for (i, v) in self.vectors.iter().enumerate() {
                for (j, w) in states.iter().enumerate() {
                    let ip = inner(v, w);
                    if i == j {
                        trace += ip;
                    }
                    frob += ip.norm_sqr();
                }
            }
            self.trace_out[self.pos] = trace;
            self.frob_out[self.pos] = frob;
            self.pos += 1;
            return;
        }
        let digits: Vec<usize> = match only {
            Some(d) => vec![d],
            None => (0..self.q).collect(),
        };
        for d in digits {
            let (head, tail) = levels.split_at_mut(level + 1);
            let src = &head[level];
            let dst = &mut tail[0];
            for (s, t) in src.iter().zip(dst.iter_mut()) {
                if d == 0 {
                    t.copy_from_slice(s);
                } else {
                    apply_factor(self.sys, d, level, self.n, s, t);
                }
            }
            self.descend(levels, level + 1, None);
        }
    }
}

/// Indices of the subgroup of `G^n` generated by the generator labels.
pub fn stabilizer_group(sys: &PhaseSystem, code: &CodeSpec) -> Result<Vec<usize>, CodeError> {
    code.check_system(sys)?;
    let generators = code.generators().unwrap_or(&[]);
    check_commuting(sys, generators)?;
    let ordering = sys.ordering();
    let q = sys.group_order();
    let n = code.n;
    let total = dense_len(code.m, n).ok_or(CodeError::TooLarge { m: code.m, n })?;
    let cap = code.m.pow(n as u32);
    let gen_digits: Vec<Vec<usize>> = generators.iter().map(|g| g.label.digits(ordering)).collect();

    let mut seen = vec![false; total];
    let mut members = vec![0usize];
    seen[0] = true;
    let mut head = 0;
    while head < members.len() {
        let current = crate::error_basis::index_digits(members[head], q, n);
        head += 1;
        for g in &gen_digits {
            let next = current
                .iter()
                .zip(g)
                .fold(0, |acc, (&a, &b)| acc * q + ordering.add_digits(a, b));
            if !seen[next] {
                seen[next] = true;
                members.push(next);
                if members.len() > cap {
                    return Err(CodeError::ClosureOverflow {
                        size: members.len(),
                        cap,
                    });
                }
            }
        }
    }
    members.sort_unstable();
    Ok(members)
}

fn check_commuting(sys: &PhaseSystem, generators: &[Generator]) -> Result<(), CodeError> {
    for i in 0..generators.len() {
        for j in i + 1..generators.len() {
            let chi = sys.label_character(&generators[i].label, &generators[j].label);
            if (chi - Complex64::new(1.0, 0.0)).norm() > TOLERANCE {
                return Err(CodeError::NonCommutingGenerators { i, j });
            }
        }
    }
    Ok(())
}

/// The element `C` with `c_g = |tr(E_g P)|^2 / K^2`.
pub fn associated_element(sys: &PhaseSystem, code: &CodeSpec) -> Result<AlgebraElement, CodeError> {
    Ok(code_elements(sys, code)?.0)
}

/// The dual element `C'`: `(1/K) sum_{i,j} |<v_i|E_h|v_j>|^2` from basis
/// vectors, or the transform of the stabilizer indicator.
pub fn dual_element(sys: &PhaseSystem, code: &CodeSpec) -> Result<AlgebraElement, CodeError> {
    Ok(code_elements(sys, code)?.1)
}

/// Both `C` and `C'`, sharing one pass over the error basis for vector input.
pub fn code_elements(sys: &PhaseSystem, code: &CodeSpec) -> Result<(AlgebraElement, AlgebraElement), CodeError> {
    code.check_system(sys)?;
    match &code.body {
        CodeBody::BasisVectors(vectors) => {
            let k = vectors.len() as f64;
            let (traces, frob) = overlap_tables(sys, code.n, vectors);
            let assoc = traces
                .iter()
                .map(|t| Complex64::new(t.norm_sqr() / (k * k), 0.0))
                .collect();
            let dual = frob.iter().map(|f| Complex64::new(f / k, 0.0)).collect();
            Ok((
                AlgebraElement::from_coeffs(code.m, code.n, assoc)?,
                AlgebraElement::from_coeffs(code.m, code.n, dual)?,
            ))
        }
        CodeBody::Stabilizer(_) => {
            let members = stabilizer_group(sys, code)?;
            let assoc = AlgebraElement::indicator(code.m, code.n, members)?;
            let dual = transform(sys, &assoc)?.element;
            Ok((assoc, dual))
        }
    }
}

/// Everything the framework extracts from a code.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub pure: bool,
    pub mass: f64,
    pub primary_distribution: HammingDistribution,
    pub dual_distribution: HammingDistribution,
}

pub fn analyze(sys: &PhaseSystem, code: &CodeSpec) -> Result<AnalysisReport, CodeError> {
    let (assoc, dual) = code_elements(sys, code)?;
    analyze_elements(&assoc, &dual)
}

/// Extracts `K`, `d` and purity from an associated element and its dual.
pub fn analyze_elements(assoc: &AlgebraElement, dual: &AlgebraElement) -> Result<AnalysisReport, CodeError> {
    let (m, n) = (assoc.m(), assoc.n());
    for el in [assoc, dual] {
        if let Some((index, &value)) = el
            .coeffs()
            .iter()
            .enumerate()
            .find(|(_, c)| c.im.abs() > TOLERANCE || c.re < -TOLERANCE)
        {
            return Err(CodeError::InvalidCoefficient { index, value });
        }
    }
    let mass = assoc.mass().re;
    let k_float = (m as f64).powi(n as i32) / mass;
    let k_round = k_float.round();
    if !k_float.is_finite() || k_round < 1.0 || (k_float - k_round).abs() > DIMENSION_TOLERANCE {
        return Err(CodeError::NonIntegerDimension { value: k_float });
    }
    let k = k_round as usize;

    let mut d = None;
    for (idx, (c, c_dual)) in assoc.coeffs().iter().zip(dual.coeffs()).enumerate() {
        let w = assoc.weight_of(idx);
        let differs = if k > 1 {
            (c - c_dual).norm() > TOLERANCE
        } else {
            w > 0 && c.norm() > TOLERANCE
        };
        if differs && d.is_none_or(|best| w < best) {
            d = Some(w);
        }
    }
    let d = d.ok_or(CodeError::NoDistance { k })?;

    let primary_distribution = hamming_distribution(assoc);
    let dual_distribution = hamming_distribution(dual);
    let pure = primary_distribution.a[1..d].iter().all(|a| a.re <= TOLERANCE);
    Ok(AnalysisReport {
        m,
        n,
        k,
        d,
        pure,
        mass,
        primary_distribution,
        dual_distribution,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderingReport {
    /// Largest `c_g - c'_g` observed (negative when the ordering is strict).
    pub max_excess: f64,
    pub violations: usize,
    /// Labels where `c'_g` exceeds `c_g` by more than the tolerance.
    pub strict: usize,
    pub passed: bool,
}

/// Checks `c_g <= c'_g + tol` for every label.
pub fn check_cs_ordering(sys: &PhaseSystem, code: &CodeSpec) -> Result<OrderingReport, CodeError> {
    let (assoc, dual) = code_elements(sys, code)?;
    let mut max_excess = f64::NEG_INFINITY;
    let mut violations = 0;
    let mut strict = 0;
    for (c, c_dual) in assoc.coeffs().iter().zip(dual.coeffs()) {
        let excess = c.re - c_dual.re;
        max_excess = max_excess.max(excess);
        if excess > TOLERANCE {
            violations += 1;
        }
        if -excess > TOLERANCE {
            strict += 1;
        }
    }
    Ok(OrderingReport {
        max_excess,
        violations,
        strict,
        passed: violations == 0,
    })
}

/// Gram-Schmidt with one re-orthogonalization pass. Returns `None` when a
/// column is (numerically) dependent on the previous ones.
fn orthonormalize(columns: Vec<Vec<Complex64>>) -> Option<Vec<Vec<Complex64>>> {
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(columns.len());
    for mut v in columns {
        for _ in 0..2 {
            for b in &basis {
                let ip = inner(b, &v);
                v.iter_mut().zip(b).for_each(|(x, y)| *x -= ip * y);
            }
        }
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-8 {
            return None;
        }
        v.iter_mut().for_each(|x| *x /= norm);
        basis.push(v);
    }
    Some(basis)
}

/// A `K`-dimensional code spanned by an orthonormalized, seeded complex
/// Gaussian matrix.
pub fn random_code(m: usize, n: usize, k: usize, seed: u64) -> Result<CodeSpec, CodeError> {
    let dim = state_dim(m, n)?;
    if k == 0 {
        return Err(CodeError::EmptyBasis);
    }
    if k > dim {
        return Err(CodeError::TooManyVectors { k, dim });
    }
    for attempt in 0..MAX_RANDOM_RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt));
        let columns: Vec<Vec<Complex64>> = (0..k)
            .map(|_| {
                (0..dim)
                    .map(|_| {
                        let re: f64 = StandardNormal.sample(&mut rng);
                        let im: f64 = StandardNormal.sample(&mut rng);
                        Complex64::new(re, im)
                    })
                    .collect()
            })
            .collect();
        if let Some(basis) = orthonormalize(columns) {
            return CodeSpec::from_basis(m, n, basis);
        }
    }
    Err(CodeError::RankDeficient {
        k,
        attempts: MAX_RANDOM_RETRIES,
    })
}

/// The scalar `c` with `(c E_g)^m = I`, honoring an explicit phase exponent.
fn generator_phase(sys: &PhaseSystem, index: usize, generator: &Generator) -> Result<Complex64, CodeError> {
    let m = sys.m();
    let lambda: Complex64 = generator
        .label
        .coords()
        .iter()
        .map(|&g| sys.power_phase(sys.ordering().digit(g)))
        .product();
    match generator.phase {
        Some(p) => {
            let c = Complex64::from_polar(1.0, std::f64::consts::PI * p as f64 / m as f64);
            if (c.powi(m as i32) * lambda - 1.0).norm() > TOLERANCE {
                return Err(CodeError::InvalidGeneratorPhase { index, phase: p });
            }
            Ok(c)
        }
        None => Ok(Complex64::from_polar(1.0, -lambda.arg() / m as f64)),
    }
}

/// Orthonormal codewords of a stabilizer code, found by projecting
/// computational basis states onto the joint `+1` eigenspace of the
/// generators.
pub fn stabilizer_codewords(sys: &PhaseSystem, code: &CodeSpec) -> Result<CodeSpec, CodeError> {
    let generators = match code.generators() {
        Some(g) => g,
        None => return Ok(code.clone()),
    };
    let members = stabilizer_group(sys, code)?;
    let dim = state_dim(code.m, code.n)?;
    let expected = dim / members.len();
    if expected * members.len() != dim {
        return Err(CodeError::NonIntegerDimension {
            value: dim as f64 / members.len() as f64,
        });
    }
    let phases = generators
        .iter()
        .enumerate()
        .map(|(i, g)| generator_phase(sys, i, g))
        .collect::<Result<Vec<_>, _>>()?;

    let project = |mut v: Vec<Complex64>| {
        for (g, &c) in generators.iter().zip(&phases) {
            let mut acc = v.clone();
            let mut power = v.clone();
            for _ in 1..code.m {
                power = apply_label(sys, &g.label, &power);
                power.iter_mut().for_each(|x| *x *= c);
                acc.iter_mut().zip(&power).for_each(|(a, p)| *a += p);
            }
            acc.iter_mut().for_each(|x| *x /= code.m as f64);
            v = acc;
        }
        v
    };

    let mut found: Vec<Vec<Complex64>> = Vec::with_capacity(expected);
    for x in 0..dim {
        if found.len() == expected {
            break;
        }
        let mut e = vec![Complex64::new(0.0, 0.0); dim];
        e[x] = Complex64::new(1.0, 0.0);
        let mut v = project(e);
        for _ in 0..2 {
            for b in &found {
                let ip = inner(b, &v);
                v.iter_mut().zip(b).for_each(|(a, y)| *a -= ip * y);
            }
        }
        let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            v.iter_mut().for_each(|a| *a /= norm);
            found.push(v);
        }
    }
    if found.len() != expected {
        return Err(CodeError::InconsistentStabilizer {
            expected,
            found: found.len(),
        });
    }
    CodeSpec::from_basis(code.m, code.n, found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error_basis::GroupElement;

    fn pauli_label(s: &str) -> ErrorLabel {
        ErrorLabel(
            s.chars()
                .map(|ch| match ch {
                    'I' => GroupElement::new(0, 0),
                    'X' => GroupElement::new(1, 0),
                    'Z' => GroupElement::new(0, 1),
                    'Y' => GroupElement::new(1, 1),
                    _ => panic!("bad pauli {ch}"),
                })
                .collect(),
        )
    }

    fn stabilizer(m: usize, gens: &[&str]) -> CodeSpec {
        let n = gens[0].len();
        CodeSpec::from_generators(m, n, gens.iter().map(|s| Generator::new(pauli_label(s))).collect()).unwrap()
    }

    fn five_qubit() -> CodeSpec {
        stabilizer(2, &["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"])
    }

    #[test]
    fn full_space_qubit() {
        let sys = PhaseSystem::pauli(2).unwrap();
        let code = CodeSpec::full_space(2, 1).unwrap();
        let (c, c_dual) = code_elements(&sys, &code).unwrap();
        let expected = [1.0, 0.0, 0.0, 0.0];
        for (got, want) in c.coeffs().iter().zip(expected) {
            assert!((got.re - want).abs() < 1e-12);
        }
        assert!(c_dual.coeffs().iter().all(|x| (x.re - 1.0).abs() < 1e-12));
    }

    #[test]
    fn ket_zero_code() {
        let sys = PhaseSystem::pauli(2).unwrap();
        let code = CodeSpec::from_basis(2, 1, vec![vec![1.0.into(), 0.0.into()]]).unwrap();
        let (c, c_dual) = code_elements(&sys, &code).unwrap();
        // digits: (0,0), (0,1), (1,0), (1,1)
        let expected = [1.0, 1.0, 0.0, 0.0];
        for ((got, dual), want) in c.coeffs().iter().zip(c_dual.coeffs()).zip(expected) {
            assert!((got.re - want).abs() < 1e-12);
            assert!((dual.re - want).abs() < 1e-12);
        }
    }

    #[test]
    fn five_qubit_groups() {
        let sys = PhaseSystem::pauli(2).unwrap();
        let code = five_qubit();
        let stab = stabilizer_group(&sys, &code).unwrap();
        assert_eq!(stab.len(), 16);
        let dual = dual_element(&sys, &code).unwrap();
        let normalizer = dual.support(1e-9);
        assert_eq!(normalizer.len(), 64);
        // normalizer membership = commutes with every generator
        let ord = sys.ordering();
        for idx in 0..dual.len() {
            let h = ErrorLabel::from_index(idx, 5, ord);
            let commutes = code
                .generators()
                .unwrap()
                .iter()
                .all(|g| (sys.label_character(&h, &g.label) - 1.0).norm() < 1e-9);
            assert_eq!(commutes, (dual.coeff(idx).re - 1.0).abs() < 1e-9, "label {h}");
        }
    }

    #[test]
    fn five_qubit_analysis() {
        let sys = PhaseSystem::pauli(2).unwrap();
        let report = analyze(&sys, &five_qubit()).unwrap();
        assert_eq!((report.k, report.d, report.pure), (2, 3, true));
        let (a, _) = report.primary_distribution.as_integers(1e-9).unwrap();
        let (b, _) = report.dual_distribution.as_integers(1e-9).unwrap();
        assert_eq!(a, vec![1, 0, 0, 0, 15, 0]);
        assert_eq!(b, vec![1, 0, 0, 30, 15, 18]);
    }

    #[test]
    fn stabilizer_and_basis_routes_agree() {
        let sys = PhaseSystem::pauli(2).unwrap();
        for code in [five_qubit(), stabilizer(2, &["XXXX", "ZZZZ"])] {
            let words = stabilizer_codewords(&sys, &code).unwrap();
            let (c1, d1) = code_elements(&sys, &code).unwrap();
            let (c2, d2) = code_elements(&sys, &words).unwrap();
            assert!(c1.max_abs_diff(&c2) < 1e-9);
            assert!(d1.max_abs_diff(&d2) < 1e-9);
        }
    }

    #[test]
    fn y_generator_phase() {
        let sys = PhaseSystem::pauli(2).unwrap();
        let bad = CodeSpec::from_generators(2, 1, vec![Generator::with_phase(pauli_label("Y"), 0)]).unwrap();
        assert!(matches!(
            stabilizer_codewords(&sys, &bad),
            Err(CodeError::InvalidGeneratorPhase { index: 0, phase: 0 })
        ));
        // Y = i XZ; its +1 eigenvector is (|0> + i|1>)/sqrt(2)
        let good = CodeSpec::from_generators(2, 1, vec![Generator::with_phase(pauli_label("Y"), 1)]).unwrap();
        let words = stabilizer_codewords(&sys, &good).unwrap();
        let v = &words.basis_vectors().unwrap()[0];
        let ratio = v[1] / v[0];
        assert!((ratio - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn non_commuting_rejected() {
        let sys = PhaseSystem::pauli(2).unwrap();
        let code = stabilizer(2, &["XI", "ZI"]);
        assert_eq!(
            analyze(&sys, &code).unwrap_err(),
            CodeError::NonCommutingGenerators { i: 0, j: 1 }
        );
    }

    #[test]
    fn basis_validation() {
        let half = Complex64::new(0.5, 0.0);
        assert!(matches!(
            CodeSpec::from_basis(2, 1, vec![vec![half, half]]),
            Err(CodeError::NonOrthonormalBasis { i: 0, j: 0, .. })
        ));
        assert!(matches!(
            CodeSpec::from_basis(2, 1, vec![vec![half]]),
            Err(CodeError::WrongVectorLength { .. })
        ));
        assert!(matches!(CodeSpec::from_basis(2, 1, vec![]), Err(CodeError::EmptyBasis)));
        assert!(matches!(
            CodeSpec::from_generators(2, 2, vec![Generator::new(pauli_label("X"))]),
            Err(CodeError::WrongLabelLength { .. })
        ));
    }

    #[test]
    fn full_space_distance_one() {
        let sys = PhaseSystem::pauli(2).unwrap();
        let report = analyze(&sys, &CodeSpec::full_space(2, 2).unwrap()).unwrap();
        assert_eq!((report.k, report.d), (4, 1));
    }

    #[test]
    fn random_code_determinism() {
        let a = random_code(2, 3, 2, 7).unwrap();
        let b = random_code(2, 3, 2, 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_code(2, 3, 2, 8).unwrap());
        assert!(matches!(random_code(2, 1, 3, 0), Err(CodeError::TooManyVectors { .. })));
    }

    #[test]
    fn k_one_code_equal_elements() {
        let sys = PhaseSystem::pauli(3).unwrap();
        let code = random_code(3, 2, 1, 11).unwrap();
        let (c, c_dual) = code_elements(&sys, &code).unwrap();
        assert!(c.max_abs_diff(&c_dual) < 1e-9);
        let report = analyze_elements(&c, &c_dual).unwrap();
        assert_eq!(report.k, 1);
        assert!(report.d >= 1);
    }

    #[test]
    fn apply_label_matches_product() {
        // X Z |1> on one qubit: Z|1> = -|1>, X(-|1>) = -|0>
        let sys = PhaseSystem::pauli(2).unwrap();
        let out = apply_label(&sys, &pauli_label("Y"), &[0.0.into(), 1.0.into()]);
        assert!((out[0] + 1.0).norm() < 1e-12);
        assert!(out[1].norm() < 1e-12);
    }

    #[test]
    fn non_integer_dimension() {
        let a = AlgebraElement::from_real(2, 1, &[1.0, 0.5, 0.0, 0.0]).unwrap();
        assert!(matches!(
            analyze_elements(&a, &a),
            Err(CodeError::NonIntegerDimension { .. })
        ));
    }

    #[test]
    fn no_distance_reported() {
        // mass 2 on n = 2 qubits gives K = 2, but the "dual" is identical
        let mut coeffs = vec![0.0; 16];
        coeffs[0] = 1.0;
        coeffs[1] = 1.0;
        let two = AlgebraElement::from_real(2, 2, &coeffs).unwrap();
        assert!(matches!(
            analyze_elements(&two, &two),
            Err(CodeError::NoDistance { k: 2 })
        ));
    }

    #[test]
    fn rejects_non_code_coefficients() {
        let a = AlgebraElement::from_real(2, 1, &[1.0, -0.5, 0.0, 0.0]).unwrap();
        let ok = AlgebraElement::unit(2, 1).unwrap();
        assert!(matches!(
            analyze_elements(&a, &ok),
            Err(CodeError::InvalidCoefficient { index: 1, .. })
        ));
        let b = AlgebraElement::from_coeffs(2, 1, vec![1.0.into(), Complex64::new(0.0, 0.1), 0.0.into(), 0.0.into()])
            .unwrap();
        assert!(matches!(
            analyze_elements(&ok, &b),
            Err(CodeError::InvalidCoefficient { index: 1, .. })
        ));
    }
}
