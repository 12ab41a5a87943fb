//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::process::ExitCode;

use unfolded_qrm_cli::checks::run_all;
use unfolded_qrm_cli::manifest::Manifest;

fn main() -> ExitCode {
    let manifest = match Manifest::load() {
        Ok(m) => m,
        Err(e) => {
            println!("FAIL [0] manifest: {e}");
            return ExitCode::FAILURE;
        }
    };
    let results = run_all(&manifest);
    for check in &results {
        println!("{}", check.line());
    }
    let failed = results.iter().filter(|c| !c.pass).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
