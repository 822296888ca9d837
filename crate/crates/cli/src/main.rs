fn main() {
    std::process::exit(symrep_cli::run(std::env::args_os()));
}
