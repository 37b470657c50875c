//! Command-line front end.
//!
//! [`run`] takes the argument vector and two output sinks and returns the
//! process exit code: 0 on success or a passing check, 1 when a check fails,
//! 2 for usage, input and analysis errors.
//!
//! Inputs are named by a file path, `catalog:<name>` for a built-in code, or
//! `random:<m>,<n>,<K>` for a seeded random code (the seed comes from
//! `--seed`). With `--format machine` every command prints one JSON object
//! with the tool version, the command echo, a SHA-256 digest of the input,
//! the seed and the results. Timings are only included with `--timings`, so
//! the default output is byte-for-byte reproducible.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::catalog;
use crate::code_analysis::{self, AnalysisReport};
use crate::enumerators::{self, HammingDistribution, IdentityReport};
use crate::error_basis::PhaseSystem;
use crate::group_algebra::{self, AlgebraElement};
use crate::io::{self, InputFile};
use crate::oracle::Oracle;

/// Hamming coefficients within this distance of integers print as integers.
pub const INTEGER_TOLERANCE: f64 = 1e-6;

/// Complete and Lee records whose value is smaller than this are omitted.
pub const RECORD_THRESHOLD: f64 = 1e-12;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qalgebra", version, about = "Group-algebra analysis of quantum codes")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Use the nice error basis in FILE instead of the generalized Paulis.
    #[arg(long, value_name = "FILE", global = true)]
    basis: Option<PathBuf>,
    /// Report wall-clock time.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Complete,
    Lee,
    Hamming,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    T4,
    T6,
    T8,
    T9,
    Lemma1,
    Axioms,
    Cs,
    Double,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::T4 => "t4",
            Check::T6 => "t6",
            Check::T8 => "t8",
            Check::T9 => "t9",
            Check::Lemma1 => "lemma1",
            Check::Axioms => "axioms",
            Check::Cs => "cs",
            Check::Double => "double",
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension, minimum distance, purity and Hamming distributions of a code.
    Analyze {
        input: String,
        /// Seed for `random:` inputs.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a weight distribution of C and of its dual C'.
    Enumerate {
        input: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run one identity or consistency check.
    Verify {
        /// Code or element; optional for `lemma1` and `axioms`.
        input: Option<String>,
        #[arg(long, value_enum)]
        identity: Check,
        /// Random evaluation points for t4, t6 and t8.
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Level count for input-free checks.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Transform an element and write the result as an element file.
    Transform {
        input: String,
        /// Output path (default: `<input>.transformed`).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the built-in codes, or print one of them.
    Catalog { name: Option<String> },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

struct Loaded {
    input: InputFile,
    source: String,
    digest: String,
}

struct Outcome {
    text: String,
    results: Value,
    input: Option<(String, String)>,
    seed: Option<u64>,
    passed: bool,
}

impl Outcome {
    fn new(text: String, results: Value) -> Self {
        Outcome {
            text,
            results,
            input: None,
            seed: None,
            passed: true,
        }
    }
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_INPUT_ERROR,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };

    let start = Instant::now();
    let outcome = dispatch(&cli);
    let elapsed = start.elapsed();

    let outcome = match outcome {
        Ok(o) => o,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_INPUT_ERROR;
        }
    };

    match cli.format {
        Format::Text => {
            let _ = write!(out, "{}", outcome.text);
            if cli.timings {
                let _ = writeln!(out, "time: {:.3} ms", elapsed.as_secs_f64() * 1e3);
            }
        }
        Format::Machine => {
            let mut report = json!({
                "tool": "qalgebra",
                "version": env!("CARGO_PKG_VERSION"),
                "command": args.iter().skip(1).collect::<Vec<_>>(),
                "input": outcome.input.as_ref().map(|(source, digest)| json!({
                    "source": source,
                    "sha256": digest,
                })),
                "seed": outcome.seed,
                "passed": outcome.passed,
                "results": outcome.results,
            });
            if cli.timings {
                report["timings"] = json!({ "total_ms": elapsed.as_secs_f64() * 1e3 });
            }
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap_or_default());
        }
    }
    if outcome.passed {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Analyze { input, seed } => {
            let loaded = load(input, *seed)?;
            let sys = basis_for(cli, loaded.input.m())?;
            let mut o = cmd_analyze(&sys, &loaded)?;
            attach(&mut o, &loaded, input, *seed);
            Ok(o)
        }
        Command::Enumerate { input, kind, seed } => {
            let loaded = load(input, *seed)?;
            let sys = basis_for(cli, loaded.input.m())?;
            let mut o = cmd_enumerate(&sys, &loaded, *kind)?;
            attach(&mut o, &loaded, input, *seed);
            Ok(o)
        }
        Command::Verify {
            input,
            identity,
            trials,
            seed,
            m,
        } => cmd_verify(cli, input.as_deref(), *identity, *trials, *seed, *m),
        Command::Transform { input, output } => {
            let loaded = load(input, 0)?;
            let sys = basis_for(cli, loaded.input.m())?;
            let output = match output {
                Some(p) => p.clone(),
                None if Path::new(input).exists() => PathBuf::from(format!("{input}.transformed")),
                None => return Err(Failure("transform needs --output for non-file inputs".into())),
            };
            let mut o = cmd_transform(&sys, loaded.input.clone(), &output)?;
            o.input = Some((loaded.source, loaded.digest));
            Ok(o)
        }
        Command::Catalog { name } => cmd_catalog(name.as_deref()),
    }
}

fn attach(o: &mut Outcome, loaded: &Loaded, spec: &str, seed: u64) {
    o.input = Some((loaded.source.clone(), loaded.digest.clone()));
    if spec.starts_with("random:") {
        o.seed = Some(seed);
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

fn load(spec: &str, seed: u64) -> Result<Loaded, Failure> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        let input = catalog::load(name)?;
        let text = catalog::source(name).unwrap_or_default();
        return Ok(Loaded {
            input,
            source: spec.to_string(),
            digest: sha256_hex(text.as_bytes()),
        });
    }
    if let Some(params) = spec.strip_prefix("random:") {
        let parts: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| Failure(format!("`{spec}`: expected random:<m>,<n>,<K>")))?;
        let [m, n, k] = parts[..] else {
            return Err(Failure(format!("`{spec}`: expected random:<m>,<n>,<K>")));
        };
        let code = code_analysis::random_code(m, n, k, seed)?;
        let digest = sha256_hex(io::write_code(&code).as_bytes());
        return Ok(Loaded {
            input: InputFile::Code(code),
            source: format!("{spec} seed={seed}"),
            digest,
        });
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Failure(format!("{spec}: {e}")))?;
    let input = io::parse_input(&text).map_err(|e| Failure(format!("{spec}: {e}")))?;
    Ok(Loaded {
        input,
        source: spec.to_string(),
        digest: sha256_hex(text.as_bytes()),
    })
}

fn basis_for(cli: &Cli, m: usize) -> Result<PhaseSystem, Failure> {
    let sys = match &cli.basis {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            io::parse_basis(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))?
        }
        None => PhaseSystem::pauli(m)?,
    };
    if sys.m() != m {
        return Err(Failure(format!(
            "basis has m={} but the input has m={m}",
            sys.m()
        )));
    }
    Ok(sys)
}

fn fmt_real(x: f64) -> String {
    if (x - x.round()).abs() < 1e-9 {
        format!("{}", x.round() as i64)
    } else {
        let s = format!("{x:.10}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    }
}

fn fmt_complex(z: Complex64) -> String {
    if z.im.abs() <= 1e-12 * z.re.abs().max(1.0) {
        fmt_real(z.re)
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{}{sign}{}i", fmt_real(z.re), fmt_real(z.im.abs()))
    }
}

fn json_complex(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn fmt_hamming(dist: &HammingDistribution) -> String {
    match dist.as_integers(INTEGER_TOLERANCE) {
        Some((ints, _)) => {
            let parts: Vec<String> = ints.iter().map(|v| v.to_string()).collect();
            format!("({})", parts.join(","))
        }
        None => {
            let parts: Vec<String> = dist.a.iter().map(|&v| fmt_complex(v)).collect();
            format!("({})", parts.join(","))
        }
    }
}

fn json_hamming(dist: &HammingDistribution) -> Value {
    let ints = dist.as_integers(INTEGER_TOLERANCE);
    json!({
        "values": dist.a.iter().map(|&v| json_complex(v)).collect::<Vec<_>>(),
        "integers": ints.as_ref().map(|(v, _)| v.clone()),
        "rounding_residual": ints.as_ref().map(|(_, r)| *r),
    })
}

fn rounding_note(dists: &[&HammingDistribution]) -> Option<f64> {
    let mut worst: f64 = 0.0;
    for d in dists {
        worst = worst.max(d.as_integers(INTEGER_TOLERANCE)?.1);
    }
    Some(worst)
}

/// The pair (C, C') for a code, or an element and its transform.
fn element_pair(
    sys: &PhaseSystem,
    input: &InputFile,
) -> Result<(AlgebraElement, AlgebraElement), Failure> {
    match input {
        InputFile::Code(code) => Ok(code_analysis::code_elements(sys, code)?),
        InputFile::Element(el) => {
            let t = group_algebra::transform(sys, el)?;
            Ok((el.clone(), t.element))
        }
    }
}

fn cmd_analyze(sys: &PhaseSystem, loaded: &Loaded) -> Result<Outcome, Failure> {
    let InputFile::Code(code) = &loaded.input else {
        return Err(Failure("analyze expects a code, not an element".into()));
    };
    let report: AnalysisReport = code_analysis::analyze(sys, code)?;
    let mut text = format!(
        "K={} d={} pure={}; A={}; A'={}\n",
        report.k,
        report.d,
        if report.pure { "yes" } else { "no" },
        fmt_hamming(&report.primary_distribution),
        fmt_hamming(&report.dual_distribution),
    );
    if let Some(r) = rounding_note(&[&report.primary_distribution, &report.dual_distribution]) {
        let _ = writeln!(text, "distributions rounded to integers (max residual {r:.1e})");
    }
    let results = json!({
        "m": report.m,
        "n": report.n,
        "k": report.k,
        "d": report.d,
        "pure": report.pure,
        "mass": report.mass,
        "primary": json_hamming(&report.primary_distribution),
        "dual": json_hamming(&report.dual_distribution),
    });
    Ok(Outcome::new(text, results))
}

fn cmd_enumerate(sys: &PhaseSystem, loaded: &Loaded, kind: Kind) -> Result<Outcome, Failure> {
    let (c, c_dual) = element_pair(sys, &loaded.input)?;
    let mut text = String::new();
    let mut results = serde_json::Map::new();
    for (name, el) in [("C", &c), ("C'", &c_dual)] {
        let mut records: Vec<(Vec<usize>, Complex64)> = match kind {
            Kind::Complete => enumerators::complete_distribution(el)
                .terms
                .into_iter()
                .map(|(k, v)| (k.0, v))
                .collect(),
            Kind::Lee => enumerators::lee_distribution(el)
                .map_err(|e| match e {
                    enumerators::EnumeratorError::EvenM(m) => Failure(format!(
                        "the Lee enumerator needs an odd number of levels, but m={m}"
                    )),
                    other => Failure(other.to_string()),
                })?
                .terms
                .into_iter()
                .map(|(k, v)| (k.0, v))
                .collect(),
            Kind::Hamming => enumerators::hamming_distribution(el)
                .a
                .iter()
                .enumerate()
                .map(|(w, &v)| (vec![w], v))
                .collect(),
        };
        if kind != Kind::Hamming {
            records.retain(|(_, v)| v.norm() >= RECORD_THRESHOLD);
        }
        let _ = writeln!(text, "{name}:");
        for (key, v) in &records {
            let key: Vec<String> = key.iter().map(|k| k.to_string()).collect();
            let _ = writeln!(text, "  [{}] {}", key.join(","), fmt_complex(*v));
        }
        let mut entry = json!({
            "records": records
                .iter()
                .map(|(k, v)| json!({ "key": k, "value": json_complex(*v) }))
                .collect::<Vec<_>>(),
        });
        if kind == Kind::Hamming {
            let dist = enumerators::hamming_distribution(el);
            let label = if name == "C" { "A" } else { "A'" };
            let _ = writeln!(text, "  {label}={}", fmt_hamming(&dist));
            entry["integers"] = json!(dist.as_integers(INTEGER_TOLERANCE).map(|(v, _)| v));
        }
        results.insert(name.to_string(), entry);
    }
    let kind_name = match kind {
        Kind::Complete => "complete",
        Kind::Lee => "lee",
        Kind::Hamming => "hamming",
    };
    results.insert("kind".into(), json!(kind_name));
    Ok(Outcome::new(text, Value::Object(results)))
}

fn identity_outcome(check: Check, report: &IdentityReport) -> Outcome {
    let seed = report
        .seed
        .map_or_else(|| "-".to_string(), |s| s.to_string());
    let text = format!(
        "{}: {} (max residual {:.3e}, trials {}, seed {seed})\n",
        check.name(),
        if report.passed { "pass" } else { "FAIL" },
        report.max_residual,
        report.trials,
    );
    let mut o = Outcome::new(
        text,
        json!({
            "identity": check.name(),
            "passed": report.passed,
            "max_residual": report.max_residual,
            "trials": report.trials,
        }),
    );
    o.passed = report.passed;
    o.seed = report.seed;
    o
}

fn simple_outcome(check: Check, passed: bool, residual: f64, extra: Value) -> Outcome {
    let text = format!(
        "{}: {} (max residual {residual:.3e})\n",
        check.name(),
        if passed { "pass" } else { "FAIL" },
    );
    let mut results = json!({
        "identity": check.name(),
        "passed": passed,
        "max_residual": residual,
    });
    if let (Value::Object(r), Value::Object(e)) = (&mut results, extra) {
        r.extend(e);
    }
    let mut o = Outcome::new(text, results);
    o.passed = passed;
    o
}

fn cmd_verify(
    cli: &Cli,
    input: Option<&str>,
    check: Check,
    trials: usize,
    seed: u64,
    m: Option<usize>,
) -> Result<Outcome, Failure> {
    let loaded = input.map(|spec| load(spec, seed)).transpose()?;

    // Input-free checks on the basis itself.
    if matches!(check, Check::Lemma1 | Check::Axioms) {
        let m = match (&loaded, m, &cli.basis) {
            (Some(l), _, _) => l.input.m(),
            (None, Some(m), _) => m,
            (None, None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
                io::parse_basis(&text)
                    .map_err(|e| Failure(format!("{}: {e}", path.display())))?
                    .m()
            }
            (None, None, None) => {
                return Err(Failure(format!("{} needs --m, --basis or an input", check.name())))
            }
        };
        let sys = basis_for(cli, m)?;
        let mut o = if check == Check::Lemma1 {
            let r = sys.verify_lemma1();
            simple_outcome(
                check,
                r.passed(),
                r.max_residual,
                json!({ "m": m, "violations": r.violations.len() }),
            )
        } else {
            let r = Oracle::new(&sys).verify_basis_axioms()?;
            let mut o = simple_outcome(
                check,
                r.passed(),
                r.max_residual(),
                json!({ "m": m, "pairs_checked": r.pairs_checked, "failures": r.failures }),
            );
            for f in &r.failures {
                let _ = writeln!(o.text, "  {f}");
            }
            o
        };
        if let Some(l) = loaded {
            o.input = Some((l.source, l.digest));
        }
        return Ok(o);
    }

    let loaded = loaded.ok_or_else(|| Failure(format!("{} needs an input", check.name())))?;
    let sys = basis_for(cli, loaded.input.m())?;
    let mut o = match check {
        Check::Cs => {
            let InputFile::Code(code) = &loaded.input else {
                return Err(Failure("cs expects a code, not an element".into()));
            };
            let r = code_analysis::check_cs_ordering(&sys, code)?;
            simple_outcome(
                check,
                r.passed,
                r.max_excess.max(0.0),
                json!({ "violations": r.violations, "strict": r.strict }),
            )
        }
        Check::Double => {
            let el = primary_element(&sys, &loaded.input)?;
            let r = group_algebra::double_transform_scaling_check(&sys, &el)?;
            simple_outcome(check, r.passed, r.max_residual, json!({}))
        }
        Check::T9 => {
            let el = primary_element(&sys, &loaded.input)?;
            identity_outcome(check, &enumerators::verify_theorem9(&sys, &el)?)
        }
        Check::T4 | Check::T6 | Check::T8 => {
            let el = primary_element(&sys, &loaded.input)?;
            let report = match check {
                Check::T4 => enumerators::verify_theorem4(&sys, &el, trials, seed),
                Check::T6 => enumerators::verify_theorem6(&sys, &el, trials, seed),
                _ => enumerators::verify_theorem8(&sys, &el, trials, seed),
            }
            .map_err(|e| match e {
                enumerators::EnumeratorError::EvenM(m) => Failure(format!(
                    "t8 needs an odd number of levels, but m={m}"
                )),
                other => Failure(other.to_string()),
            })?;
            identity_outcome(check, &report)
        }
        Check::Lemma1 | Check::Axioms => unreachable!(),
    };
    o.input = Some((loaded.source, loaded.digest));
    if o.seed.is_none() && input.is_some_and(|s| s.starts_with("random:")) {
        o.seed = Some(seed);
    }
    Ok(o)
}

fn primary_element(sys: &PhaseSystem, input: &InputFile) -> Result<AlgebraElement, Failure> {
    match input {
        InputFile::Code(code) => Ok(code_analysis::associated_element(sys, code)?),
        InputFile::Element(el) => Ok(el.clone()),
    }
}

fn cmd_transform(sys: &PhaseSystem, input: InputFile, output: &Path) -> Result<Outcome, Failure> {
    let el = input
        .into_element()
        .ok_or_else(|| Failure("transform expects an element file".into()))?;
    let t = group_algebra::transform(sys, &el)?;
    let c0 = t.element.coeff(0);
    std::fs::write(output, io::write_element(&t.element))
        .map_err(|e| Failure(format!("{}: {e}", output.display())))?;
    let text = format!(
        "M={} c'_0={}\nwrote {}\n",
        fmt_complex(t.source_mass),
        fmt_complex(c0),
        output.display()
    );
    let results = json!({
        "mass": json_complex(t.source_mass),
        "dual_identity_coefficient": json_complex(c0),
        "output": output.display().to_string(),
    });
    Ok(Outcome::new(text, results))
}

fn cmd_catalog(name: Option<&str>) -> Result<Outcome, Failure> {
    match name {
        None => {
            let mut text = String::new();
            let mut list = Vec::new();
            for (name, description) in catalog::entries() {
                let _ = writeln!(text, "{name:<20} {description}");
                list.push(json!({ "name": name, "description": description }));
            }
            Ok(Outcome::new(text, json!({ "entries": list })))
        }
        Some(name) => {
            catalog::load(name)?;
            let source = catalog::source(name).unwrap_or_default();
            Ok(Outcome::new(
                source.to_string(),
                json!({ "name": name, "source": source }),
            ))
        }
    }
}
