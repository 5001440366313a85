fn main() {
    std::process::exit(fza::cli::run(std::env::args_os()));
}
