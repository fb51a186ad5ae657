use std::process::ExitCode;

fn main() -> ExitCode {
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    let code = fntopo::cli::run(std::env::args(), &mut stdout, &mut stderr);
    ExitCode::from(code as u8)
}
