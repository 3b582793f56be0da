use std::io::Write;

fn main() {
    let (code, output) = hurwitz_strata::cli::run(std::env::args());
    if code == hurwitz_strata::cli::EXIT_USAGE {
        let _ = write!(std::io::stderr(), "{output}");
    } else {
        let _ = write!(std::io::stdout(), "{output}");
    }
    std::process::exit(code);
}
