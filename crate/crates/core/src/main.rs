fn main() {
    std::process::exit(decorel::cli::run(std::env::args_os()));
}
