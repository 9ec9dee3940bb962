fn main() {
    std::process::exit(grassmirror::cli::main_with_args(std::env::args_os()));
}
