fn main() {
    std::process::exit(qes::cli::run(std::env::args_os()));
}
