fn main() {
    std::process::exit(jordan_cli::run(std::env::args_os()));
}
