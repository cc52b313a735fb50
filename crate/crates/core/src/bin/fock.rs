fn main() {
    std::process::exit(markov_fock::cli::main_with_args(std::env::args_os()));
}
