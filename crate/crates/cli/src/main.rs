fn main() {
    std::process::exit(penergy_cli::run(std::env::args_os()));
}
