use beatty::cli;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let (code, text) = cli::run(&argv);
    if !text.is_empty() {
        // reports go to stdout, usage problems to stderr
        if code == 2 {
            eprint!("{text}");
        } else {
            print!("{text}");
        }
    }
    std::process::exit(code);
}
