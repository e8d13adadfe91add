fn main() {
    let code = pgroupoid::cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(code);
}
