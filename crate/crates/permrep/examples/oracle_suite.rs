//! Run the full verification suite the way the command-line `verify`
//! subcommand does, printing one line per run: brute-force enumeration
//! cross-checked against every closed form the library exposes.
//!
//!     cargo run --example oracle_suite

use permrep::verify::{run_suite, DEFAULT_BUDGET};

fn main() {
    let n_max = 4;
    let mut total_checks = 0;
    let mut all_pass = true;

    for suite in ["orbit-sizes", "orbit-chars", "decomposition", "identities"] {
        let runs = run_suite(suite, n_max, DEFAULT_BUDGET).unwrap();
        for run in &runs {
            let family = run
                .family
                .map(|f| f.to_string())
                .unwrap_or_else(|| "-".to_string());
            let k = run
                .k
                .map(|k| k.to_string())
                .unwrap_or_else(|| "*".to_string());
            println!(
                "{:<14} family {:<6} n={} k={:<2} {:>6} checks: {}",
                run.suite,
                family,
                run.n,
                k,
                run.checks_run,
                if run.pass() { "ok" } else { "FAILED" }
            );
            for failure in &run.failures {
                println!("    {failure}");
            }
            total_checks += run.checks_run;
            all_pass &= run.pass();
        }
    }

    println!();
    println!(
        "{total_checks} comparisons up to degree {n_max}: {}",
        if all_pass {
            "all agree"
        } else {
            "MISMATCHES FOUND"
        }
    );
    std::process::exit(if all_pass { 0 } else { 1 });
}
