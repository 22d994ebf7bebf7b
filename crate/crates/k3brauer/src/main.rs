fn main() {
    k3brauer::cli::run();
}
