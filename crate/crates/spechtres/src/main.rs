fn main() {
    std::process::exit(spechtres::cli::run());
}
