fn main() {
    std::process::exit(tropical::cli::main_with(std::env::args_os()));
}
