fn main() {
    std::process::exit(nlcseq::cli::run(std::env::args()));
}
