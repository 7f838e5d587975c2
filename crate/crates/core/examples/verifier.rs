//! Run a verification suite from code and render the JSON report.

use racah_bi::kernel::{Scalar, Symbol};
use racah_bi::verifier::{exit_code, render_report, run_suite, Format, Suite, SuiteConfig};

fn main() {
    let mut config = SuiteConfig {
        suite: Suite::BiStandard,
        format: Format::Json,
        ..SuiteConfig::default()
    };
    config.params.insert(Symbol::RHO1, Scalar::from_int(1));
    config.params.insert(Symbol::RHO2, Scalar::ratio(3, 2));
    let reports = run_suite(&config);
    print!("{}", render_report(&reports, &config));
    eprintln!("exit code {}", exit_code(&reports));
}
