fn main() {
    std::process::exit(semiprim::cli::main_with_args(std::env::args_os()));
}
