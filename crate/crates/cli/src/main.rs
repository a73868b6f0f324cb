use std::io::{ErrorKind, Write};
use std::process::ExitCode;

use tbk_cli::{configure_threads, parse_command, run_report, CliError, EXIT_ERROR};

fn main() -> ExitCode {
    let threads = std::env::var("TBK_THREADS").ok();
    let result = configure_threads(threads.as_deref())
        .and_then(|()| parse_command(std::env::args_os()))
        .and_then(|req| run_report(&req));
    match result {
        Ok(out) => match writeln!(std::io::stdout().lock(), "{}", out.stdout) {
            Ok(()) => ExitCode::from(out.status.code()),
            // A closed reader (e.g. `| head`) is not our failure.
            Err(e) if e.kind() == ErrorKind::BrokenPipe => ExitCode::from(out.status.code()),
            Err(e) => {
                eprintln!(
                    "{}",
                    CliError::Io {
                        path: "<stdout>".into(),
                        source: e
                    }
                    .to_json()
                );
                ExitCode::from(EXIT_ERROR)
            }
        },
        // Help and version go through clap's own printer and exit codes.
        Err(CliError::Clap(e)) => e.exit(),
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(EXIT_ERROR)
        }
    }
}
