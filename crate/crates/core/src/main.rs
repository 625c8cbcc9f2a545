fn main() {
    std::process::exit(widthlab::cli::run(std::env::args_os()));
}
