use std::io::Write as _;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let result = shrinker_cli::dispatch(&argv);
    if !result.stdout.is_empty() {
        print!("{}", result.stdout);
    }
    if !result.stderr.is_empty() {
        let _ = write!(std::io::stderr(), "{}", result.stderr);
    }
    std::process::exit(result.code);
}
