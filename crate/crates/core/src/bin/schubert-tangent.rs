fn main() {
    std::process::exit(schubert_tangent::cli::run(std::env::args_os()));
}
