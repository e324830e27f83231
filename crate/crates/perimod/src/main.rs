use std::io::Write;

fn main() {
    let (outcome, err) = perimod::cli::run(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{err}");
    let _ = std::io::stdout().flush();
    std::process::exit(outcome.code);
}
