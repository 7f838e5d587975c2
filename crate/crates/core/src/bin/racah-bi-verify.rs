use std::process::ExitCode;

use racah_bi::verifier::{emit_report, exit_code, parse_config, run_suite, VerifierError};

fn main() -> ExitCode {
    let config = match parse_config(std::env::args_os(), None) {
        Ok(c) => c,
        Err(VerifierError::Help(text)) => {
            print!("{text}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("racah-bi-verify: {e}");
            return ExitCode::from(2);
        }
    };
    let reports = run_suite(&config);
    if let Err(e) = emit_report(&reports, &config, config.out.as_deref()) {
        eprintln!("racah-bi-verify: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(exit_code(&reports) as u8)
}
