fn main() {
    std::process::exit(lagver_cli::run(std::env::args_os()));
}
