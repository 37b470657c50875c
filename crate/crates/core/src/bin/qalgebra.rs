use std::process::ExitCode;

fn main() -> ExitCode {
    if let Some(threads) = std::env::var("QALGEBRA_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = qalgebra::cli::run(std::env::args(), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code as u8)
}
