fn main() {
    std::process::exit(rlp_tools::cli::run());
}
