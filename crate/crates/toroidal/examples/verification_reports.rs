//! Running the built-in verification suites programmatically and reading
//! their deterministic JSON reports.
//!
//! ```bash
//! cargo run -p toroidal --example verification_reports
//! ```

use toroidal::harness::{run_suite, RunConfig, SUITE_NAMES};

fn main() -> toroidal::Result<()> {
    println!("available suites: {}\n", SUITE_NAMES.join(", "));

    // a quick pass over the light suites
    for suite in ["delta-identities", "psi-properties", "vandermonde", "integrability"] {
        let mut config = RunConfig::new(suite);
        config.seed = 7;
        let report = run_suite(&config)?;
        println!(
            "{suite}: pass = {}, {} checks, {} exact comparisons",
            report.pass,
            report.checks.len(),
            report.checks.iter().map(|c| c.comparisons).sum::<u64>()
        );
    }

    // reports are plain serde structures; identical config gives an
    // identical report, byte for byte
    let config = RunConfig::new("delta-identities");
    let a = run_suite(&config)?.to_json_string();
    let b = run_suite(&config)?.to_json_string();
    println!("\nreports byte-identical across runs: {}", a == b);

    // one full record, as written by `toroidal verify --out`
    let report = run_suite(&config)?;
    println!("\nfirst record of the delta-identities report:");
    println!("{}", serde_json::to_string_pretty(&report.checks[0]).unwrap());
    Ok(())
}
