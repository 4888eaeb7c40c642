fn main() {
    std::process::exit(classical_pieri::cli::run(std::env::args_os(), &mut std::io::stdout()));
}
