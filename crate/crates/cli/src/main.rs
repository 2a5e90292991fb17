use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use rootloop_cli::args::{Cli, Command};

fn main() -> ExitCode {
    let argv: Vec<std::ffi::OsString> = std::env::args_os().collect();
    if let Ok(Cli {
        command: Command::Serve { addr },
        ..
    }) = Cli::try_parse_from(&argv)
    {
        let rt = tokio::runtime::Runtime::new().expect("tokio runtime");
        eprintln!("listening on http://{addr}/v1/");
        return match rt.block_on(rootloop_cli::service::serve(addr)) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        };
    }
    let out = rootloop_cli::run(argv);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
