use std::io::Write;

fn main() {
    let out = gradedq_cli::run_cli(std::env::args());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
