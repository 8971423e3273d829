fn main() {
    std::process::exit(matroid_decomp::cli::main())
}
