fn main() {
    std::process::exit(nahopf::cli::run(std::env::args_os()));
}
