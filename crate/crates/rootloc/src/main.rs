fn main() {
    std::process::exit(rootloc::cli::run());
}
