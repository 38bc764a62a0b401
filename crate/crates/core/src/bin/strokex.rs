fn main() {
    std::process::exit(strokex::cli::run(std::env::args_os()));
}
