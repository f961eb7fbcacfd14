fn main() {
    std::process::exit(menger::cli::run(std::env::args_os()));
}
