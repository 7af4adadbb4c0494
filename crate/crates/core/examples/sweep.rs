//! Every check over the default degree ranges, as the `sweep` command runs it.

use pancake_coxeter::cli::{run_all, SweepConfig};

fn main() {
    let report = run_all(&SweepConfig::default());
    print!("{}", report.to_text());
    std::process::exit(report.exit_code.into());
}
