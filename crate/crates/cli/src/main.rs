fn main() {
    std::process::exit(frobenius_cli::run(std::env::args_os()));
}
