fn main() {
    std::process::exit(paley_cycles::cli::run(std::env::args_os()));
}
