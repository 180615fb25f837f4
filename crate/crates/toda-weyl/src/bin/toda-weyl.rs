fn main() {
    std::process::exit(toda_weyl::cli::run(std::env::args_os()));
}
