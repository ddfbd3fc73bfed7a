fn main() {
    std::process::exit(ecodom_core::cli::run(std::env::args_os()));
}
