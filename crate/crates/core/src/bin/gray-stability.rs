fn main() {
    std::process::exit(gray_stability::cli::main_with_args(std::env::args_os()));
}
