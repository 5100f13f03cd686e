fn main() {
    std::process::exit(hup::cli::run(std::env::args_os()));
}
