use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let (output, code) = regprod::cli::run_command(&argv);
    if code == 0 || code == 2 {
        print!("{output}");
        if !output.ends_with('\n') {
            println!();
        }
    } else {
        eprint!("{output}");
        if !output.ends_with('\n') {
            eprintln!();
        }
    }
    ExitCode::from(code as u8)
}
