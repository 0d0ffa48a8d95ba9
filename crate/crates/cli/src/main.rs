use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use mixhom_cli::{run_job, JobSpec};

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("MIXHOM_THREADS") else { return Ok(()) };
    let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| format!("MIXHOM_THREADS must be a positive integer, got `{v}`"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let spec = JobSpec::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let out = run_job(&spec);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
