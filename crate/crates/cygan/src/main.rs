fn main() {
    std::process::exit(cygan::cli::run());
}
