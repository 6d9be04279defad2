fn main() {
    std::process::exit(chvlab::cli::run(std::env::args_os()));
}
