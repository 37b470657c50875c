//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Expected values are either the published small-code facts or are
//! recomputed here by independent means (dense matrices, naive sums).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qalgebra::code_analysis::{analyze, check_cs_ordering, code_elements, random_code, AnalysisReport};
use qalgebra::enumerators::{verify_theorem4, verify_theorem6, verify_theorem8, verify_theorem9};
use qalgebra::group_algebra::{double_transform_scaling_check, transform, transform_naive};
use qalgebra::oracle::Oracle;
use qalgebra::{catalog, AlgebraElement, CodeSpec, ErrorLabel, PhaseSystem};

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        passed,
        detail: detail.into(),
    }
}

fn random_element(m: usize, n: usize, seed: u64) -> AlgebraElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = (m * m).pow(n as u32);
    let coeffs = (0..len)
        .map(|_| Complex64::new(rng.random::<f64>() * 2.0 - 1.0, rng.random::<f64>() * 2.0 - 1.0))
        .collect();
    AlgebraElement::from_coeffs(m, n, coeffs).unwrap()
}

/// The seeded random element corpus shared by criteria 3 and 6.
fn element_corpus() -> Vec<AlgebraElement> {
    let shapes = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)];
    (0..100u64)
        .map(|i| {
            let (m, n) = shapes[i as usize % shapes.len()];
            random_element(m, n, 1000 + i)
        })
        .collect()
}

fn catalog_codes() -> Vec<(&'static str, CodeSpec)> {
    catalog::names()
        .into_iter()
        .map(|name| (name, catalog::load(name).unwrap().into_code().unwrap()))
        .collect()
}

fn hamming_integers(r: &AnalysisReport) -> Option<(Vec<i64>, Vec<i64>, f64)> {
    let (a, ra) = r.primary_distribution.as_integers(1e-9)?;
    let (b, rb) = r.dual_distribution.as_integers(1e-9)?;
    Some((a, b, ra.max(rb)))
}

/// Orthonormal codewords taken from the columns of a dense projector.
fn codewords_from_projector(m: usize, n: usize, p: &DMatrix<Complex64>, k: usize) -> CodeSpec {
    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    for col in 0..p.ncols() {
        if basis.len() == k {
            break;
        }
        let mut v: Vec<Complex64> = p.column(col).iter().copied().collect();
        for _ in 0..2 {
            for b in &basis {
                let ip: Complex64 = b.iter().zip(&v).map(|(x, y)| x.conj() * y).sum();
                v.iter_mut().zip(b).for_each(|(x, y)| *x -= ip * y);
            }
        }
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            v.iter_mut().for_each(|x| *x /= norm);
            basis.push(v);
        }
    }
    CodeSpec::from_basis(m, n, basis).unwrap()
}

fn criterion1() -> Verdict {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut ok = true;
    for m in 2..=5 {
        let sys = PhaseSystem::pauli(m).unwrap();
        let axioms = Oracle::new(&sys).verify_basis_axioms().unwrap();
        let lemma = sys.verify_lemma1();
        worst = worst.max(axioms.max_residual()).max(lemma.max_residual);
        ok &= axioms.passed() && lemma.passed();
    }
    let elapsed = start.elapsed();
    ok &= worst < 1e-9 && elapsed < Duration::from_secs(10);
    verdict(ok, format!("m=2..5, max residual {worst:.2e}, {:.3} s", elapsed.as_secs_f64()))
}

fn criterion2() -> Verdict {
    let mut worst: f64 = 0.0;
    let mut pairs = 0;
    for m in [2, 3] {
        let sys = PhaseSystem::pauli(m).unwrap();
        let oracle = Oracle::new(&sys);
        for n in [1, 2] {
            let total = (m * m).pow(n as u32);
            for hi in 0..total {
                let h = ErrorLabel::from_index(hi, n, sys.ordering());
                for gi in 0..total {
                    let g = ErrorLabel::from_index(gi, n, sys.ordering());
                    let dense = oracle.character(&h, &g).unwrap();
                    worst = worst.max((dense - sys.label_character(&h, &g)).norm());
                    pairs += 1;
                }
            }
        }
    }
    verdict(worst < 1e-12, format!("{pairs} pairs, max residual {worst:.2e}"))
}

fn criterion3() -> Verdict {
    let mut worst: f64 = 0.0;
    let mut worst_double: f64 = 0.0;
    let mut double_ok = true;
    let mut count = 0;
    for (m, n) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)] {
        let sys = PhaseSystem::pauli(m).unwrap();
        for i in 0..100u64 {
            let a = random_element(m, n, (m * 10 + n) as u64 * 1000 + i);
            let fast = transform(&sys, &a).unwrap();
            let slow = transform_naive(&sys, &a).unwrap();
            worst = worst.max(fast.element.max_abs_diff(&slow.element));
            let scaling = double_transform_scaling_check(&sys, &a).unwrap();
            worst_double = worst_double.max(scaling.max_residual);
            double_ok &= scaling.passed;
            count += 1;
        }
    }
    verdict(
        worst < 1e-9 && double_ok,
        format!("{count} elements, fast vs naive {worst:.2e}, double transform {worst_double:.2e}"),
    )
}

fn criterion4() -> Verdict {
    let start = Instant::now();
    let sys = PhaseSystem::pauli(2).unwrap();
    let code = catalog::load("five-qubit").unwrap().into_code().unwrap();
    let report = analyze(&sys, &code).unwrap();
    let Some((a, b, residual)) = hamming_integers(&report) else {
        return verdict(false, "distributions are not integral");
    };

    let (p, k) = Oracle::new(&sys).projector(&code).unwrap();
    let words = codewords_from_projector(2, 5, &p, k);
    let (s_assoc, s_dual) = code_elements(&sys, &code).unwrap();
    let (b_assoc, b_dual) = code_elements(&sys, &words).unwrap();
    let path_diff = s_assoc.max_abs_diff(&b_assoc).max(s_dual.max_abs_diff(&b_dual));
    let basis_report = analyze(&sys, &words).unwrap();
    let elapsed = start.elapsed();

    let ok = (report.k, report.d, report.pure) == (2, 3, true)
        && a == [1, 0, 0, 0, 15, 0]
        && b == [1, 0, 0, 30, 15, 18]
        && residual < 1e-9
        && path_diff < 1e-9
        && (basis_report.k, basis_report.d, basis_report.pure) == (2, 3, true)
        && elapsed < Duration::from_secs(5);
    verdict(
        ok,
        format!(
            "K={} d={} pure={} A={a:?} A'={b:?}, rounding {residual:.1e}, paths differ by {path_diff:.1e}, {:.3} s",
            report.k,
            report.d,
            report.pure,
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion5() -> Verdict {
    let start = Instant::now();
    let sys = PhaseSystem::pauli(2).unwrap();
    let four = analyze(&sys, &catalog::load("four-two-two").unwrap().into_code().unwrap()).unwrap();
    let shor = analyze(&sys, &catalog::load("shor").unwrap().into_code().unwrap()).unwrap();
    let elapsed = start.elapsed();
    let four_dual = four.dual_distribution.as_integers(1e-9).map(|(v, _)| v);
    let ok = (four.k, four.d, four.pure) == (4, 2, true)
        && four_dual.as_deref() == Some(&[1, 0, 18, 24, 21][..])
        && (shor.k, shor.d, shor.pure) == (2, 3, false)
        && elapsed < Duration::from_secs(30);
    verdict(
        ok,
        format!(
            "[[4,2,2]] K={} d={} pure={} A'={:?}; Shor K={} d={} pure={}; {:.3} s",
            four.k,
            four.d,
            four.pure,
            four_dual,
            shor.k,
            shor.d,
            shor.pure,
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion6() -> Verdict {
    let mut corpus: Vec<(String, AlgebraElement)> = Vec::new();
    for (name, code) in catalog_codes() {
        let sys = PhaseSystem::pauli(code.m()).unwrap();
        let (assoc, _) = code_elements(&sys, &code).unwrap();
        corpus.push((name.to_string(), assoc));
    }
    for (i, el) in element_corpus().into_iter().enumerate() {
        corpus.push((format!("random #{i}"), el));
    }

    let mut worst = [0.0f64; 4];
    let mut failures = Vec::new();
    for (i, (name, el)) in corpus.iter().enumerate() {
        let sys = PhaseSystem::pauli(el.m()).unwrap();
        let seed = 77 + i as u64;
        let t9 = verify_theorem9(&sys, el).unwrap();
        let t4 = verify_theorem4(&sys, el, 20, seed).unwrap();
        let t6 = verify_theorem6(&sys, el, 20, seed).unwrap();
        for (slot, r) in [(0, &t9), (1, &t4), (2, &t6)] {
            worst[slot] = worst[slot].max(r.max_residual);
            if !r.passed {
                failures.push(format!("{name}: {:?}", r.identity));
            }
        }
        if el.m() == 3 && el.n() <= 2 {
            let t8 = verify_theorem8(&sys, el, 20, seed).unwrap();
            worst[3] = worst[3].max(t8.max_residual);
            if !t8.passed {
                failures.push(format!("{name}: Lee"));
            }
        }
    }
    let detail = format!(
        "{} elements; max residual T9 {:.1e}, T4 {:.1e}, T6 {:.1e}, T8 {:.1e}{}",
        corpus.len(),
        worst[0],
        worst[1],
        worst[2],
        worst[3],
        if failures.is_empty() {
            String::new()
        } else {
            format!("; failures: {}", failures.join(", "))
        }
    );
    verdict(failures.is_empty(), detail)
}

fn criterion7() -> Verdict {
    let (m, n) = (2usize, 3usize);
    let sys = PhaseSystem::pauli(m).unwrap();
    let mut problems = Vec::new();
    let mut worst_eq6: f64 = 0.0;
    let mut worst_cs: f64 = f64::NEG_INFINITY;
    for i in 0..100u64 {
        let k = [1, 2, 4][i as usize % 3];
        let code = random_code(m, n, k, 5000 + i).unwrap();
        let (assoc, dual) = code_elements(&sys, &code).unwrap();
        let mass = assoc.mass();
        if ((m.pow(n as u32) as f64) / mass.re).round() as usize != k || mass.im.abs() > 1e-9 {
            problems.push(format!("#{i}: K law"));
        }
        let one = Complex64::new(1.0, 0.0);
        if (assoc.coeff(0) - one).norm() > 1e-9 || (dual.coeff(0) - one).norm() > 1e-9 {
            problems.push(format!("#{i}: identity coefficients"));
        }
        let cs = check_cs_ordering(&sys, &code).unwrap();
        worst_cs = worst_cs.max(cs.max_excess);
        if !cs.passed {
            problems.push(format!("#{i}: ordering"));
        }
        let diff = transform(&sys, &assoc).unwrap().element.max_abs_diff(&dual);
        worst_eq6 = worst_eq6.max(diff);
        if diff > 1e-9 {
            problems.push(format!("#{i}: dual mismatch {diff:.1e}"));
        }
    }
    verdict(
        problems.is_empty(),
        format!(
            "100 codes, max c-c' {worst_cs:.1e}, dual vs transform {worst_eq6:.1e}{}",
            if problems.is_empty() {
                String::new()
            } else {
                format!("; {}", problems.join(", "))
            }
        ),
    )
}

fn criterion8() -> Verdict {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let sys = PhaseSystem::pauli(2).unwrap();
    let a = random_element(2, 8, 8);
    let (elapsed, len) = pool.install(|| {
        // Warm the caches once, then time a single run.
        let _ = transform(&sys, &a).unwrap();
        let start = Instant::now();
        let t = transform(&sys, &a).unwrap();
        (start.elapsed(), t.element.len())
    });
    verdict(
        elapsed < Duration::from_secs(1) && len == 65_536,
        format!("{len} coefficients in {:.3} s on one thread", elapsed.as_secs_f64()),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 8] = [
        ("basis axioms and character row sums", criterion1),
        ("character agreement", criterion2),
        ("transform correctness", criterion3),
        ("[[5,1,3]] analysis", criterion4),
        ("[[4,2,2]] and Shor analysis", criterion5),
        ("MacWilliams identities", criterion6),
        ("framework laws on random codes", criterion7),
        ("transform performance", criterion8),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        if !v.passed {
            failed += 1;
        }
        println!(
            "{} criterion {}: {name}: {}",
            if v.passed { "PASS" } else { "FAIL" },
            i + 1,
            v.detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
