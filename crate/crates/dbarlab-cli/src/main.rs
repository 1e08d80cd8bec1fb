fn main() {
    std::process::exit(dbarlab_cli::run());
}
