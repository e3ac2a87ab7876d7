fn main() {
    std::process::exit(altrun::cli::run(std::env::args()));
}
