fn main() {
    std::process::exit(netsample::cli::run(std::env::args_os()));
}
