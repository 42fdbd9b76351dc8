fn main() {
    std::process::exit(moongrowth::cli::main_with_args(std::env::args_os()));
}
