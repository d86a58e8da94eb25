fn main() {
    std::process::exit(subcube::cli::run(std::env::args_os()));
}
